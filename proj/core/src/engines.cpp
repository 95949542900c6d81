#include "pierik/engines.hpp"

#include "pierik/errors.hpp"
#include "pierik/euler.hpp"
#include "pierik/recursion.hpp"
#include "pierik/tableaux.hpp"

namespace pierik {

std::string to_string(Engine engine) {
    switch (engine) {
        case Engine::Direct:
            return "direct";
        case Engine::Recursive:
            return "recursive";
        case Engine::Tableau:
            return "tableau";
        case Engine::Lenart:
        default:
            return "lenart";
    }
}

Engine parse_engine(std::string_view name) {
    if (name == "direct") return Engine::Direct;
    if (name == "recursive") return Engine::Recursive;
    if (name == "tableau") return Engine::Tableau;
    if (name == "lenart") return Engine::Lenart;
    throw ParseError("unknown engine '" + std::string(name) + "'");
}

bool engine_applicable(Engine engine, Space::Kind kind) {
    switch (engine) {
        case Engine::Direct:
        case Engine::Recursive:
            return true;
        case Engine::Tableau:
            return kind != Space::Kind::RectA;
        case Engine::Lenart:
        default:
            return kind == Space::Kind::RectA;
    }
}

std::vector<Engine> applicable_engines(Space::Kind kind) {
    std::vector<Engine> out{Engine::Direct, Engine::Recursive};
    if (engine_applicable(Engine::Tableau, kind)) {
        out.push_back(Engine::Tableau);
    }
    if (engine_applicable(Engine::Lenart, kind)) {
        out.push_back(Engine::Lenart);
    }
    return out;
}

Integer coefficient(const Partition& lambda, int p, const Partition& nu,
                    const Space& space, Engine engine) {
    switch (engine) {
        case Engine::Direct:
            return direct_coefficient(lambda, p, nu, space);
        case Engine::Recursive:
            return recursive_coefficient(lambda, p, nu, space);
        case Engine::Tableau:
            return tableau_coefficient(lambda, p, nu, space);
        case Engine::Lenart:
        default:
            return lenart_coefficient(lambda, p, nu, space);
    }
}

}  // namespace pierik
