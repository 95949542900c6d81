#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pierik/integer.hpp"
#include "pierik/partition.hpp"
#include "pierik/space.hpp"

namespace pierik {

/// The four ways to evaluate a Pieri coefficient. Direct is the corner-sum
/// oracle; Recursive is the memoized production path; Tableau counts
/// KOG/KLG tableaux (shifted spaces only); Lenart is the type A closed form.
enum class Engine { Direct, Recursive, Tableau, Lenart };

std::string to_string(Engine engine);
Engine parse_engine(std::string_view name);  // throws ParseError

bool engine_applicable(Engine engine, Space::Kind kind);
std::vector<Engine> applicable_engines(Space::Kind kind);

/// Dispatches to the chosen engine; throws WrongSpace when it does not apply.
Integer coefficient(const Partition& lambda, int p, const Partition& nu,
                    const Space& space, Engine engine);

}  // namespace pierik
