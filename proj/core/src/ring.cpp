#include "pierik/ring.hpp"

#include "pierik/errors.hpp"
#include "pierik/euler.hpp"
#include "pierik/skew.hpp"

namespace pierik {

KVector KVector::unit(const Space& space) {
    return basis(space, Partition());
}

KVector KVector::basis(const Space& space, const Partition& nu) {
    KVector v(space);
    v.add_term(nu, 1);
    return v;
}

Integer KVector::coefficient_of(const Partition& nu) const {
    auto it = terms_.find(nu);
    return it == terms_.end() ? Integer(0) : it->second;
}

void KVector::add_term(const Partition& nu, const Integer& coeff) {
    if (!space_.admits(nu)) {
        throw OutOfBounds("partition " + nu.to_string() + " does not index " +
                          space_.to_string());
    }
    if (coeff == 0) {
        return;
    }
    auto [it, inserted] = terms_.emplace(nu, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

KVector& KVector::operator+=(const KVector& other) {
    if (space_ != other.space_) {
        throw WrongSpace("cannot combine vectors over different spaces");
    }
    for (const auto& [nu, coeff] : other.terms_) {
        add_term(nu, coeff);
    }
    return *this;
}

KVector& KVector::operator-=(const KVector& other) {
    if (space_ != other.space_) {
        throw WrongSpace("cannot combine vectors over different spaces");
    }
    for (const auto& [nu, coeff] : other.terms_) {
        add_term(nu, -coeff);
    }
    return *this;
}

std::string KVector::to_json() const {
    std::string out = "{\"space\":\"" + space_.to_string() + "\",\"terms\":[";
    bool first = true;
    for (const auto& [nu, coeff] : terms_) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += "{\"nu\":[";
        for (std::size_t i = 0; i < nu.parts().size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += std::to_string(nu.parts()[i]);
        }
        out += "],\"coeff\":" + json_integer(coeff) + "}";
    }
    out += "]}";
    return out;
}

KVector pieri_multiply(const KVector& v, int p, Engine engine) {
    const Space& space = v.space();
    if (p < 0 || p > space.cap()) {
        throw OutOfRangeP("special class exponent must lie in 0.." +
                          std::to_string(space.cap()));
    }
    if (!engine_applicable(engine, space.kind())) {
        throw WrongSpace("engine " + to_string(engine) + " does not apply to " +
                         space.to_string());
    }
    if (p == 0) {
        return v;
    }
    KVector out(space);
    for (const auto& [lambda, coeff] : v.terms()) {
        for (const auto& nu : partitions_containing(lambda, space)) {
            Integer c = coefficient(lambda, p, nu, space, engine);
            if (c != 0) {
                out.add_term(nu, coeff * c);
            }
        }
    }
    return out;
}

KVector dual_class(const Partition& nu, const Space& space) {
    if (!space.admits(nu)) {
        throw OutOfBounds("partition " + nu.to_string() + " does not index " +
                          space.to_string());
    }
    KVector out(space);
    for (const auto& tau : all_partitions(space)) {
        if (!nu.contains(tau)) {
            continue;
        }
        int removed = nu.weight() - tau.weight();
        if (removed > space.rows()) {
            continue;  // a rook strip has at most one box per row
        }
        if (!diagram_stats(make_skew(tau, nu, space)).is_rook_strip) {
            continue;
        }
        // Richardson classes expand through the opposite Schubert variety:
        // O_tau = O^{tau-dual}.
        out.add_term(dual_partition(tau, space), removed % 2 == 0 ? 1 : -1);
    }
    return out;
}

KVector special_chain(const Space& space, const std::vector<int>& ps, Engine engine) {
    KVector v = KVector::unit(space);
    for (int p : ps) {
        v = pieri_multiply(v, p, engine);
    }
    return v;
}

}  // namespace pierik
