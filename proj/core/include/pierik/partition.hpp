#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace pierik {

class Space;

/// Weakly decreasing sequence of positive parts. Zero parts are accepted on
/// input and normalized away, so equal diagrams have equal part vectors and
/// partitions can serve as canonical map keys.
class Partition {
public:
    Partition() = default;

    /// Validates weak decrease; throws MonotonicityError on disorder and
    /// DomainError on negative entries.
    explicit Partition(std::vector<int> parts);

    /// Parses "a,b,c" with the literal "-" for the empty partition. With
    /// strict = true, repeated positive parts raise StrictnessError.
    static Partition parse(std::string_view text, bool strict);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }

    /// 1-indexed part, zero beyond the length.
    int part(int i) const;

    bool is_strict() const;

    /// Componentwise containment: inner_i <= this_i for all i.
    bool contains(const Partition& inner) const;

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Orders partitions by (weight, lexicographic parts); the canonical order
/// for basis vectors and serialized terms.
struct WeightLexLess {
    bool operator()(const Partition& a, const Partition& b) const;
};

/// The Poincare dual: (k - p_m, ..., k - p_1) in the m x k rectangle, or the
/// parts of rho_n absent from the partition for OG/LG. An involution.
Partition dual_partition(const Partition& mu, const Space& space);

/// Every partition indexing a Schubert class of the space, sorted by
/// (weight, lexicographic parts).
std::vector<Partition> all_partitions(const Space& space);

/// The partitions of the space containing lambda, in the same order.
std::vector<Partition> partitions_containing(const Partition& lambda, const Space& space);

}  // namespace pierik
