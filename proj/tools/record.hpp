#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "pierik/engines.hpp"
#include "pierik/integer.hpp"
#include "pierik/partition.hpp"
#include "pierik/space.hpp"

namespace pierik::cli {

/// One computed coefficient, as it appears on the wire. elapsed_ms is a
/// runtime-only field and never serialized, keeping the JSON byte-stable.
struct CoefficientRecord {
    Space space;
    Partition lambda;
    int p = 0;
    Partition nu;
    Integer coefficient;
    Engine engine = Engine::Direct;
    double elapsed_ms = 0.0;

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["space"] = space.to_string();
        j["lambda"] = lambda.parts();
        j["p"] = p;
        j["nu"] = nu.parts();
        static const Integer limit = Integer(1) << 53;
        if (cmp(abs(coefficient), limit) < 0) {
            j["coefficient"] = coefficient.get_si();
        } else {
            j["coefficient"] = coefficient.get_str();
        }
        j["engine"] = to_string(engine);
        return j;
    }

    std::string to_line() const { return to_json().dump(); }

    /// Parses a serialized record; returns nothing for malformed or
    /// inconsistent lines (bad partitions, containment violations).
    static std::optional<CoefficientRecord> from_json(const nlohmann::json& j) {
        try {
            CoefficientRecord r{Space::parse(j.at("space").get<std::string>()),
                                Partition(j.at("lambda").get<std::vector<int>>()),
                                j.at("p").get<int>(),
                                Partition(j.at("nu").get<std::vector<int>>()),
                                Integer(0),
                                parse_engine(j.at("engine").get<std::string>()),
                                0.0};
            const auto& c = j.at("coefficient");
            if (c.is_string()) {
                r.coefficient = Integer(c.get<std::string>());
            } else {
                r.coefficient = Integer(c.get<long>());
            }
            if (!r.space.admits(r.lambda) || !r.space.admits(r.nu) ||
                !r.nu.contains(r.lambda)) {
                return std::nullopt;
            }
            return r;
        } catch (...) {
            return std::nullopt;
        }
    }
};

}  // namespace pierik::cli
