#include "pierik/euler.hpp"

#include "pierik/errors.hpp"

namespace pierik {

namespace {

Integer chi_from_stats(const DiagramStats& st, int p, Space::Kind kind) {
    switch (kind) {
        case Space::Kind::RectA:
            // O^p acts as the identity for p <= 0, so this covers all of Z.
            return p <= st.nonempty_columns ? 1 : 0;
        case Space::Kind::OG:
            return quadric_chi(st.surplus_components(), st.rim_size - p);
        case Space::Kind::LG:
        default:
            return quadric_chi(st.diagonal_free_components, st.rim_size - p);
    }
}

void check_fits(const SkewShape& theta, const Space& space) {
    if (theta.shifted() != space.shifted()) {
        throw WrongSpace("shape coordinates do not match " + space.to_string());
    }
    for (const auto& b : theta.boxes()) {
        bool ok = space.shifted()
                      ? (b.row >= 1 && b.row <= b.col && b.col <= space.cap())
                      : (b.row >= 1 && b.row <= space.rows() && b.col >= 1 &&
                         b.col <= space.cap());
        if (!ok) {
            throw OutOfBounds("box outside " + space.to_string());
        }
    }
}

}  // namespace

Integer quadric_chi(int quadrics, int slack) {
    if (quadrics < 0) {
        throw DomainError("quadric count must be non-negative");
    }
    if (slack < 0) {
        return 0;
    }
    if (slack >= quadrics) {
        return 1;  // the full alternating expansion of (2-1)^quadrics
    }
    Integer sum = 0;
    for (int j = 0; j <= slack; ++j) {
        Integer term;
        mpz_bin_uiui(term.get_mpz_t(), quadrics, j);
        term <<= (quadrics - j);
        if (j % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

Integer chi(const SkewShape& theta, int p, const Space& space) {
    check_fits(theta, space);
    return chi_from_stats(diagram_stats(theta), p, space.kind());
}

Integer corner_sum(const SkewShape& theta, int p, Space::Kind kind) {
    Integer sum = 0;
    int weight = theta.weight();
    for (const auto& phi : corner_subsets(theta)) {
        Integer value = chi_from_stats(diagram_stats(phi), p, kind);
        if ((weight - phi.weight()) % 2 == 0) {
            sum += value;
        } else {
            sum -= value;
        }
    }
    return sum;
}

Integer direct_coefficient(const Partition& lambda, int p, const Partition& nu,
                           const Space& space) {
    return corner_sum(make_skew(lambda, nu, space), p, space.kind());
}

}  // namespace pierik
