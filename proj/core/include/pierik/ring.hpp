#pragma once

#include <map>
#include <string>
#include <vector>

#include "pierik/engines.hpp"
#include "pierik/integer.hpp"
#include "pierik/partition.hpp"
#include "pierik/space.hpp"

namespace pierik {

/// Sparse integer vector over the Schubert basis of a fixed space. Zero
/// coefficients are never stored; terms iterate in (weight, lex) order.
class KVector {
public:
    explicit KVector(const Space& space) : space_(space) {}

    static KVector unit(const Space& space);  // O^{empty}
    static KVector basis(const Space& space, const Partition& nu);  // throws OutOfBounds

    const Space& space() const { return space_; }
    const std::map<Partition, Integer, WeightLexLess>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }

    Integer coefficient_of(const Partition& nu) const;
    void add_term(const Partition& nu, const Integer& coeff);  // throws OutOfBounds

    KVector& operator+=(const KVector& other);  // throws WrongSpace on mixed spaces
    KVector& operator-=(const KVector& other);
    friend KVector operator+(KVector a, const KVector& b) { return a += b; }
    friend KVector operator-(KVector a, const KVector& b) { return a -= b; }
    friend bool operator==(const KVector&, const KVector&) = default;

    /// Canonical serialization:
    /// {"space":"...","terms":[{"nu":[..],"coeff":c},...]} with terms in
    /// (weight, lex) order and coefficients rendered by json_integer.
    std::string to_json() const;

private:
    Space space_;
    std::map<Partition, Integer, WeightLexLess> terms_;
};

/// Multiplication by the special class O^p, expanding each basis term through
/// the chosen engine. p = 0 is the identity. Throws OutOfRangeP when p is
/// outside 0..cap and WrongSpace when the engine does not apply.
KVector pieri_multiply(const KVector& v, int p, Engine engine);

/// The dual class of O^nu: the alternating sum of O^{tau-dual} over all tau
/// inside nu with nu/tau a rook strip.
KVector dual_class(const Partition& nu, const Space& space);

/// Left fold of pieri_multiply over ps starting from the unit.
KVector special_chain(const Space& space, const std::vector<int>& ps, Engine engine);

}  // namespace pierik
