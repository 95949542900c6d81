#pragma once

#include <string>
#include <string_view>

namespace pierik {

class Partition;

/// Ambient space of a Schubert basis: the m x k rectangle of a type A
/// Grassmannian, or the staircase rho_n = (n, n-1, ..., 1) of a maximal
/// orthogonal (OG) or Lagrangian (LG) Grassmannian.
class Space {
public:
    enum class Kind { RectA, OG, LG };

    static Space rect_a(int m, int k);
    static Space og(int n);
    static Space lg(int n);

    /// Accepts "a:MxK", "og:N", or "lg:N".
    static Space parse(std::string_view text);

    Kind kind() const { return kind_; }

    /// True for the shifted (strict partition) families OG and LG.
    bool shifted() const { return kind_ != Kind::RectA; }

    /// Number of rows of the ambient diagram: m, or n.
    int rows() const { return rows_; }

    /// Largest allowed part, which is also the largest special class: k, or n.
    int cap() const { return cap_; }

    /// Whether the partition indexes a Schubert class of this space
    /// (fits inside the ambient diagram; strict for OG/LG).
    bool admits(const Partition& p) const;

    std::string to_string() const;

    friend bool operator==(const Space&, const Space&) = default;

private:
    Space(Kind kind, int rows, int cap) : kind_(kind), rows_(rows), cap_(cap) {}

    Kind kind_;
    int rows_;
    int cap_;
};

}  // namespace pierik
