#pragma once

#include "pierik/integer.hpp"
#include "pierik/skew.hpp"

namespace pierik {

/// Euler characteristic of t^(N-slack) * (2-t)^quadrics in Z[t]/(t^(N+1)),
/// N large: sum_{j=0}^{slack} (-1)^j 2^(quadrics-j) C(quadrics, j), with the
/// binomial vanishing outside 0 <= j <= quadrics. Zero when slack < 0, one
/// when slack >= quadrics. Satisfies the Pascal-type relation
///   f(q+1, s) + f(q, s-1) = 2 f(q, s).
/// Throws DomainError when quadrics < 0.
Integer quadric_chi(int quadrics, int slack);

/// Sheaf Euler characteristic chi(O_theta * O^p):
///   type A: 1 when p <= c(theta), else 0 (any integer p; O^p = 1 for p < 0);
///   OG:     quadric_chi(max(N-1,0), d - p);
///   LG:     quadric_chi(N', d - p).
/// Validates that theta lies inside the space.
Integer chi(const SkewShape& theta, int p, const Space& space);

/// Alternating inclusion-exclusion of chi over south-east corner subsets.
/// This is the brute-force evaluation every other engine is checked against;
/// it accepts any integer p and any shape of the right kind.
Integer corner_sum(const SkewShape& theta, int p, Space::Kind kind);

/// Pieri structure constant of O^nu in O^lambda * O^p, by the corner sum.
Integer direct_coefficient(const Partition& lambda, int p, const Partition& nu,
                           const Space& space);

}  // namespace pierik
