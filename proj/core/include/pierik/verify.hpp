#pragma once

#include <string>
#include <vector>

#include "pierik/space.hpp"

namespace pierik {

struct SuiteResult {
    std::string suite;
    bool passed = false;
    long long cases = 0;
    std::string failure;  // first (smallest) counterexample, empty when passed
    double elapsed_ms = 0.0;
};

/// Exhaustive cross-engine agreement on every lambda <= nu of the space,
/// 0 <= p <= max_p: direct vs recursive, plus lenart (type A) or the tableau
/// count (OG/LG).
SuiteResult check_engines(const Space& space, int max_p);

/// Sign alternation: (-1)^(|nu/lambda|-p) * c >= 0 over the same range.
SuiteResult check_signs(const Space& space, int max_p);

/// Vanishing: c = 0 whenever nu/lambda is not a horizontal strip (type A)
/// or not a rim (OG/LG).
SuiteResult check_vanishing(const Space& space, int max_p);

/// Kronecker pairing of dual classes against Schubert classes in all spaces;
/// for OG also the identity dual_class(nu) = (1 - O^1) * O^{nu-dual}.
SuiteResult check_duality(const Space& space);

/// Type A / OG: the symmetry c^nu_{lambda,p} = c^{(p)-dual}_{lambda,nu-dual}
/// for all single-part lambda. LG: reproduces the documented counterexample
/// in LG(2), where the symmetry fails; the suite passes when it does fail
/// with the recorded values.
SuiteResult check_symmetry(const Space& space, int max_p);

/// Permutation invariance of special_chain over all multisets of special
/// classes up to the given length, across every applicable engine.
SuiteResult check_associativity(const Space& space, int max_chain, int max_p);

const std::vector<std::string>& suite_names();

/// Runs one named suite with its standard parameters; throws ParseError for
/// unknown names.
SuiteResult run_suite(const std::string& name, const Space& space, int max_p);

}  // namespace pierik
