#pragma once

#include <cstddef>

#include "pierik/integer.hpp"
#include "pierik/skew.hpp"

namespace pierik {

/// Recursive Pieri evaluation on a raw shape; agrees with corner_sum on every
/// input. Memoized in a process-wide cache that is safe for concurrent use.
/// Type A keys are translation-normalized; shifted keys keep absolute
/// coordinates because diagonal contact changes the LG base cases.
Integer recursive_eval(const SkewShape& theta, int p, Space::Kind kind);

/// Same computation with the cache bypassed entirely.
Integer recursive_eval_uncached(const SkewShape& theta, int p, Space::Kind kind);

Integer recursive_coefficient(const Partition& lambda, int p, const Partition& nu,
                              const Space& space);

/// Closed form for type A: 0 unless nu/lambda is a horizontal strip, else
/// (-1)^(|nu/lambda|-p) C(r-1, |nu/lambda|-p) where r counts non-empty rows.
/// Throws WrongSpace off type A.
Integer lenart_coefficient(const Partition& lambda, int p, const Partition& nu,
                           const Space& space);

void clear_recursion_cache();
std::size_t recursion_cache_size();

}  // namespace pierik
