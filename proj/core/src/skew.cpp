#include "pierik/skew.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pierik/errors.hpp"

namespace pierik {

SkewShape SkewShape::from_boxes(std::vector<Box> boxes, bool shifted) {
    std::sort(boxes.begin(), boxes.end());
    boxes.erase(std::unique(boxes.begin(), boxes.end()), boxes.end());
    SkewShape s;
    s.boxes_ = std::move(boxes);
    s.shifted_ = shifted;
    return s;
}

bool SkewShape::contains(const Box& b) const {
    return std::binary_search(boxes_.begin(), boxes_.end(), b);
}

SkewShape make_skew(const Partition& lambda, const Partition& nu, const Space& space) {
    if (!space.admits(lambda) || !space.admits(nu)) {
        throw OutOfBounds("partition does not index " + space.to_string());
    }
    if (!nu.contains(lambda)) {
        throw NotContained(lambda.to_string() + " is not contained in " + nu.to_string());
    }
    std::vector<Box> boxes;
    for (int i = 1; i <= nu.length(); ++i) {
        int shift = space.shifted() ? i : 1;
        for (int j = shift + lambda.part(i); j <= shift + nu.part(i) - 1; ++j) {
            boxes.push_back({i, j});
        }
    }
    return SkewShape::from_boxes(std::move(boxes), space.shifted());
}

DiagramStats diagram_stats(const SkewShape& theta) {
    DiagramStats st;
    const auto& boxes = theta.boxes();
    st.weight = theta.weight();
    if (boxes.empty()) {
        st.is_rim = true;
        st.is_horizontal_strip = true;
        st.is_vertical_strip = true;
        st.is_rook_strip = true;
        return st;
    }

    std::map<int, int> row_count, col_count;
    for (const auto& b : boxes) {
        ++row_count[b.row];
        ++col_count[b.col];
        if (theta.is_diagonal(b)) {
            st.meets_diagonal = true;
        }
    }
    st.nonempty_rows = static_cast<int>(row_count.size());
    st.nonempty_columns = static_cast<int>(col_count.size());
    st.is_horizontal_strip =
        std::all_of(col_count.begin(), col_count.end(), [](auto& e) { return e.second == 1; });
    st.is_vertical_strip =
        std::all_of(row_count.begin(), row_count.end(), [](auto& e) { return e.second == 1; });
    st.is_rook_strip = st.is_horizontal_strip && st.is_vertical_strip;

    // South-east rim: a box survives unless some box sits strictly south and
    // strictly east of it. max_col_below[r] = widest column used below row r.
    std::map<int, int> max_col_in_row;
    for (const auto& b : boxes) {
        max_col_in_row[b.row] = std::max(max_col_in_row[b.row], b.col);
    }
    std::map<int, int> max_col_below;
    int running = 0;
    for (auto it = max_col_in_row.rbegin(); it != max_col_in_row.rend(); ++it) {
        max_col_below[it->first] = running;
        running = std::max(running, it->second);
    }
    for (const auto& b : boxes) {
        if (max_col_below[b.row] <= b.col) {
            ++st.rim_size;
        }
    }
    st.is_rim = st.rim_size == st.weight;

    // Side-connected components by flood fill over the sorted box set.
    std::set<Box> unseen(boxes.begin(), boxes.end());
    while (!unseen.empty()) {
        ++st.components;
        bool has_diagonal = false;
        std::vector<Box> stack{*unseen.begin()};
        unseen.erase(unseen.begin());
        while (!stack.empty()) {
            Box b = stack.back();
            stack.pop_back();
            if (theta.is_diagonal(b)) {
                has_diagonal = true;
            }
            for (Box nb : {Box{b.row - 1, b.col}, Box{b.row + 1, b.col},
                           Box{b.row, b.col - 1}, Box{b.row, b.col + 1}}) {
                auto it = unseen.find(nb);
                if (it != unseen.end()) {
                    unseen.erase(it);
                    stack.push_back(nb);
                }
            }
        }
        if (!has_diagonal) {
            ++st.diagonal_free_components;
        }
    }
    return st;
}

std::vector<Box> southeast_corners(const SkewShape& theta) {
    std::vector<Box> corners;
    for (const auto& b : theta.boxes()) {
        if (!theta.contains({b.row + 1, b.col}) && !theta.contains({b.row, b.col + 1})) {
            corners.push_back(b);
        }
    }
    return corners;  // already in (row, col) order
}

std::vector<SkewShape> corner_subsets(const SkewShape& theta) {
    auto corners = southeast_corners(theta);
    std::vector<Box> base;
    for (const auto& b : theta.boxes()) {
        if (!std::binary_search(corners.begin(), corners.end(), b)) {
            base.push_back(b);
        }
    }
    std::vector<SkewShape> out;
    out.reserve(std::size_t(1) << corners.size());
    for (unsigned mask = 0; mask < (1u << corners.size()); ++mask) {
        std::vector<Box> boxes = base;
        for (std::size_t i = 0; i < corners.size(); ++i) {
            if (mask & (1u << i)) {
                boxes.push_back(corners[i]);
            }
        }
        out.push_back(SkewShape::from_boxes(std::move(boxes), theta.shifted()));
    }
    return out;
}

std::pair<SkewShape, int> remove_top_row(const SkewShape& theta) {
    if (theta.empty()) {
        throw EmptyShape("cannot remove the top row of an empty shape");
    }
    int top = theta.boxes().front().row;
    std::vector<Box> rest;
    int removed = 0;
    for (const auto& b : theta.boxes()) {
        if (b.row == top) {
            ++removed;
        } else {
            rest.push_back(b);
        }
    }
    return {SkewShape::from_boxes(std::move(rest), theta.shifted()), removed};
}

ArmDecomposition northeast_arm(const SkewShape& theta) {
    if (theta.empty()) {
        throw EmptyShape("the north-east arm of an empty shape is undefined");
    }
    const auto& boxes = theta.boxes();
    int top = boxes.front().row;
    Box anchor{top, 0};
    int max_row = top;
    int min_col = boxes.front().col;
    for (const auto& b : boxes) {
        if (b.row == top) {
            anchor.col = std::max(anchor.col, b.col);
        }
        max_row = std::max(max_row, b.row);
        min_col = std::min(min_col, b.col);
    }

    // Grow the square anchored at the upper-right box; intersections are
    // nested, so the last one that is a single row or column is the largest.
    std::vector<Box> best{anchor};
    bool best_is_row = true;
    int side_limit = std::max(max_row - top + 1, anchor.col - min_col + 1);
    for (int side = 2; side <= side_limit; ++side) {
        std::vector<Box> cut;
        for (const auto& b : boxes) {
            if (b.row >= top && b.row < top + side && b.col <= anchor.col &&
                b.col > anchor.col - side) {
                cut.push_back(b);
            }
        }
        bool one_row = std::all_of(cut.begin(), cut.end(),
                                   [&](const Box& b) { return b.row == cut.front().row; });
        bool one_col = std::all_of(cut.begin(), cut.end(),
                                   [&](const Box& b) { return b.col == cut.front().col; });
        if ((one_row || one_col) && cut.size() > best.size()) {
            best = std::move(cut);
            best_is_row = one_row;  // single boxes classify as rows
        }
    }

    ArmDecomposition arm;
    arm.arm = best;
    arm.size = static_cast<int>(best.size());
    arm.is_row = best_is_row;
    arm.is_column = !best_is_row;
    std::vector<Box> rest;
    for (const auto& b : boxes) {
        if (!std::binary_search(best.begin(), best.end(), b)) {
            rest.push_back(b);
        }
    }
    arm.rest = SkewShape::from_boxes(std::move(rest), theta.shifted());
    for (const auto& a : arm.arm) {
        for (Box nb : {Box{a.row - 1, a.col}, Box{a.row + 1, a.col}, Box{a.row, a.col - 1},
                       Box{a.row, a.col + 1}}) {
            if (arm.rest.contains(nb)) {
                arm.connected = true;
            }
        }
    }
    return arm;
}

}  // namespace pierik
