#include "pierik/verify.hpp"

#include <algorithm>
#include <chrono>
#include <utility>

#include "pierik/engines.hpp"
#include "pierik/errors.hpp"
#include "pierik/euler.hpp"
#include "pierik/recursion.hpp"
#include "pierik/ring.hpp"
#include "pierik/skew.hpp"
#include "pierik/tableaux.hpp"

namespace pierik {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string describe(const Partition& lambda, int p, const Partition& nu) {
    return "lambda=" + lambda.to_string() + " p=" + std::to_string(p) +
           " nu=" + nu.to_string();
}

/// Pieri coefficient with the containment convention: zero when lambda is
/// not inside nu.
Integer coeff_or_zero(const Partition& lambda, int p, const Partition& nu,
                      const Space& space, Engine engine) {
    if (!nu.contains(lambda)) {
        return 0;
    }
    return coefficient(lambda, p, nu, space, engine);
}

template <typename Fn>
SuiteResult scan_pairs(std::string name, const Space& space, int max_p, Fn&& fn) {
    SuiteResult result{std::move(name)};
    auto start = Clock::now();
    auto basis = all_partitions(space);
    for (const auto& lambda : basis) {
        for (const auto& nu : basis) {
            if (!nu.contains(lambda)) {
                continue;
            }
            for (int p = 0; p <= max_p && result.failure.empty(); ++p) {
                ++result.cases;
                fn(lambda, p, nu, result);
            }
            if (!result.failure.empty()) {
                break;
            }
        }
        if (!result.failure.empty()) {
            break;
        }
    }
    result.passed = result.failure.empty();
    result.elapsed_ms = ms_since(start);
    return result;
}

}  // namespace

SuiteResult check_engines(const Space& space, int max_p) {
    auto engines = applicable_engines(space.kind());
    return scan_pairs("engines", space, max_p,
                      [&](const Partition& lambda, int p, const Partition& nu,
                          SuiteResult& r) {
                          Integer reference = coefficient(lambda, p, nu, space, engines[0]);
                          for (std::size_t i = 1; i < engines.size(); ++i) {
                              Integer other = coefficient(lambda, p, nu, space, engines[i]);
                              if (other != reference) {
                                  r.failure = describe(lambda, p, nu) + " " +
                                              to_string(engines[0]) + "=" +
                                              reference.get_str() + " " +
                                              to_string(engines[i]) + "=" + other.get_str();
                                  return;
                              }
                          }
                      });
}

SuiteResult check_signs(const Space& space, int max_p) {
    return scan_pairs("signs", space, max_p,
                      [&](const Partition& lambda, int p, const Partition& nu,
                          SuiteResult& r) {
                          Integer c = direct_coefficient(lambda, p, nu, space);
                          int codim = nu.weight() - lambda.weight() - p;
                          bool ok = codim % 2 == 0 ? c >= 0 : c <= 0;
                          if (!ok) {
                              r.failure = describe(lambda, p, nu) + " c=" + c.get_str() +
                                          " violates sign alternation";
                          }
                      });
}

SuiteResult check_vanishing(const Space& space, int max_p) {
    return scan_pairs(
        "vanishing", space, max_p,
        [&](const Partition& lambda, int p, const Partition& nu, SuiteResult& r) {
            auto st = diagram_stats(make_skew(lambda, nu, space));
            bool admissible = space.kind() == Space::Kind::RectA ? st.is_horizontal_strip
                                                                 : st.is_rim;
            if (admissible) {
                return;
            }
            Integer c = direct_coefficient(lambda, p, nu, space);
            if (c != 0) {
                r.failure = describe(lambda, p, nu) + " c=" + c.get_str() +
                            " on an inadmissible shape";
            }
        });
}

SuiteResult check_duality(const Space& space) {
    SuiteResult result{"duality"};
    auto start = Clock::now();
    auto basis = all_partitions(space);

    for (const auto& nu : basis) {
        // Rook-strip expansion of the dual class, paired against every O^mu.
        // chi(O_tau * O^mu) is 1 exactly when mu fits inside tau, so the
        // pairing must come out as a Kronecker delta.
        std::vector<std::pair<Partition, int>> strips;
        for (const auto& tau : basis) {
            if (!nu.contains(tau)) {
                continue;
            }
            int removed = nu.weight() - tau.weight();
            if (removed <= space.rows() &&
                diagram_stats(make_skew(tau, nu, space)).is_rook_strip) {
                strips.emplace_back(tau, removed % 2 == 0 ? 1 : -1);
            }
        }
        for (const auto& mu : basis) {
            ++result.cases;
            long long pairing = 0;
            for (const auto& [tau, sign] : strips) {
                if (tau.contains(mu)) {
                    pairing += sign;
                }
            }
            if (pairing != (nu == mu ? 1 : 0)) {
                result.failure = "pairing of dual(" + nu.to_string() + ") with O^" +
                                 mu.to_string() + " is " + std::to_string(pairing);
                break;
            }
        }
        if (!result.failure.empty()) {
            break;
        }
        if (space.kind() == Space::Kind::OG) {
            ++result.cases;
            KVector expected = KVector::basis(space, dual_partition(nu, space));
            expected -= pieri_multiply(expected, 1, Engine::Direct);
            if (dual_class(nu, space) != expected) {
                result.failure = "dual_class(" + nu.to_string() +
                                 ") != (1 - O^1) * O^{nu-dual}";
                break;
            }
        }
    }
    result.passed = result.failure.empty();
    result.elapsed_ms = ms_since(start);
    return result;
}

SuiteResult check_symmetry(const Space& space, int max_p) {
    SuiteResult result{"symmetry"};
    auto start = Clock::now();

    if (space.kind() == Space::Kind::LG) {
        // The OG-style symmetry fails for Lagrangian Grassmannians; the suite
        // passes when the documented LG(2) counterexample reproduces.
        Space lg2 = Space::lg(2);
        Partition one({1}), two_one({2, 1}), two({2});
        ++result.cases;
        Integer lhs = direct_coefficient(one, 1, two_one, lg2);
        Integer rhs = pieri_multiply(KVector::basis(lg2, one), 0, Engine::Direct)
                          .coefficient_of(two);
        if (lhs != -1 || rhs != 0) {
            result.failure = "expected c=-1 against dual-side 0, got c=" + lhs.get_str() +
                             " and " + rhs.get_str();
        }
        result.passed = result.failure.empty();
        result.elapsed_ms = ms_since(start);
        return result;
    }

    for (int q = 1; q <= space.cap() && result.failure.empty(); ++q) {
        Partition lambda({q});
        for (const auto& nu : all_partitions(space)) {
            Partition nu_dual = dual_partition(nu, space);
            for (int p = 1; p <= max_p; ++p) {
                ++result.cases;
                Integer lhs = coeff_or_zero(lambda, p, nu, space, Engine::Direct);
                Integer rhs = coeff_or_zero(nu_dual, q, dual_partition(Partition({p}), space),
                                            space, Engine::Direct);
                if (lhs != rhs) {
                    result.failure = describe(lambda, p, nu) + " c=" + lhs.get_str() +
                                     " but dual-side gives " + rhs.get_str();
                    break;
                }
            }
            if (!result.failure.empty()) {
                break;
            }
        }
    }
    result.passed = result.failure.empty();
    result.elapsed_ms = ms_since(start);
    return result;
}

SuiteResult check_associativity(const Space& space, int max_chain, int max_p) {
    SuiteResult result{"associativity"};
    auto start = Clock::now();
    int cap = std::min(max_p, space.cap());
    auto engines = applicable_engines(space.kind());

    std::vector<std::vector<int>> multisets{{}};
    for (std::size_t i = 0; i < multisets.size(); ++i) {
        if (static_cast<int>(multisets[i].size()) >= max_chain) {
            continue;
        }
        int low = multisets[i].empty() ? 1 : multisets[i].back();
        for (int next = low; next <= cap; ++next) {
            auto extended = multisets[i];
            extended.push_back(next);
            multisets.push_back(std::move(extended));
        }
    }

    for (const auto& multiset : multisets) {
        KVector reference = special_chain(space, multiset, engines[0]);
        auto ps = multiset;
        do {
            for (Engine engine : engines) {
                ++result.cases;
                if (special_chain(space, ps, engine) != reference) {
                    std::string chain;
                    for (int p : ps) {
                        chain += (chain.empty() ? "" : ",") + std::to_string(p);
                    }
                    result.failure = "chain [" + chain + "] with engine " +
                                     to_string(engine) + " disagrees";
                    break;
                }
            }
            if (!result.failure.empty()) {
                break;
            }
        } while (std::next_permutation(ps.begin(), ps.end()));
        if (!result.failure.empty()) {
            break;
        }
    }
    result.passed = result.failure.empty();
    result.elapsed_ms = ms_since(start);
    return result;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"engines",  "signs",    "vanishing",
                                                "duality",  "symmetry", "associativity"};
    return names;
}

SuiteResult run_suite(const std::string& name, const Space& space, int max_p) {
    if (name == "engines") return check_engines(space, max_p);
    if (name == "signs") return check_signs(space, max_p);
    if (name == "vanishing") return check_vanishing(space, max_p);
    if (name == "duality") return check_duality(space);
    if (name == "symmetry") return check_symmetry(space, max_p);
    if (name == "associativity") return check_associativity(space, 3, max_p);
    throw ParseError("unknown suite '" + name + "'");
}

}  // namespace pierik
