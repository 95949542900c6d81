#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "pierik/partition.hpp"
#include "pierik/skew.hpp"
#include "pierik/space.hpp"

namespace pierik::testing {

inline Partition pn(std::initializer_list<int> parts) {
    return Partition(std::vector<int>(parts));
}

inline SkewShape boxes(std::initializer_list<std::pair<int, int>> cells, bool shifted) {
    std::vector<Box> out;
    for (auto [r, c] : cells) {
        out.push_back({r, c});
    }
    return SkewShape::from_boxes(std::move(out), shifted);
}

inline std::vector<std::pair<int, int>> cells_of(const SkewShape& shape) {
    std::vector<std::pair<int, int>> out;
    for (const auto& b : shape.boxes()) {
        out.emplace_back(b.row, b.col);
    }
    return out;
}

}  // namespace pierik::testing
