#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "pierik/partition.hpp"
#include "pierik/space.hpp"

namespace pierik {

struct Box {
    int row = 0;
    int col = 0;
    auto operator<=>(const Box&) const = default;
};

/// Skew diagram stored as an explicit box set, 1-indexed.
///
/// Ordinary coordinates (type A) put row i of a partition in columns 1..p_i.
/// Shifted coordinates (strict partitions) put row i in columns i..i+p_i-1,
/// so a box sits on the diagonal exactly when col == row. Sub-shapes produced
/// by corner removal, arm removal, or row removal keep the same coordinates
/// and therefore the same diagonal predicate.
class SkewShape {
public:
    SkewShape() = default;

    /// Any box set; sorts and deduplicates.
    static SkewShape from_boxes(std::vector<Box> boxes, bool shifted);

    bool shifted() const { return shifted_; }
    int weight() const { return static_cast<int>(boxes_.size()); }
    bool empty() const { return boxes_.empty(); }

    /// Boxes sorted by (row, col).
    const std::vector<Box>& boxes() const { return boxes_; }

    bool contains(const Box& b) const;
    bool is_diagonal(const Box& b) const { return shifted_ && b.row == b.col; }

    friend bool operator==(const SkewShape&, const SkewShape&) = default;

private:
    std::vector<Box> boxes_;
    bool shifted_ = false;
};

/// The diagram nu/lambda in the coordinates of the space. Throws NotContained
/// when lambda is not inside nu and OutOfBounds when either partition does
/// not index the space.
SkewShape make_skew(const Partition& lambda, const Partition& nu, const Space& space);

struct DiagramStats {
    int weight = 0;
    int nonempty_rows = 0;     // r
    int nonempty_columns = 0;  // c: drops the bottom box of each column
    int rim_size = 0;          // d: boxes with nothing strictly south-east of them
    int components = 0;        // N: side-connected components
    int diagonal_free_components = 0;  // N': components without a diagonal box
    bool is_rim = false;
    bool is_horizontal_strip = false;  // <= 1 box per column
    bool is_vertical_strip = false;    // <= 1 box per row
    bool is_rook_strip = false;
    bool meets_diagonal = false;

    /// max(N - 1, 0)
    int surplus_components() const { return components > 1 ? components - 1 : 0; }
};

DiagramStats diagram_stats(const SkewShape& theta);

/// Boxes of theta with no box of theta directly below or directly to the right.
std::vector<Box> southeast_corners(const SkewShape& theta);

/// All 2^#corners shapes phi with theta' <= phi <= theta, where theta' is
/// theta minus its south-east corners. Corners are ordered by (row, col) and
/// subsets enumerated in binary-counter order, so the first shape is theta'
/// and the last is theta.
std::vector<SkewShape> corner_subsets(const SkewShape& theta);

/// Removes the topmost non-empty row; returns the rest and the number of
/// removed boxes. Throws EmptyShape.
std::pair<SkewShape, int> remove_top_row(const SkewShape& theta);

struct ArmDecomposition {
    std::vector<Box> arm;
    SkewShape rest;
    int size = 0;
    bool is_row = false;  // a single box classifies as a row
    bool is_column = false;
    bool connected = false;  // some arm box shares a side with a box of rest
};

/// The north-east arm: the largest row or column cut out of theta by a square
/// whose upper-right cell is the rightmost box of the topmost non-empty row.
/// Throws EmptyShape.
ArmDecomposition northeast_arm(const SkewShape& theta);

}  // namespace pierik
