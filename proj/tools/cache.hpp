#pragma once

#include <optional>
#include <string>
#include <unordered_map>

#include "record.hpp"

namespace pierik::cli {

/// Advisory on-disk cache of coefficient records, one JSON Lines file per
/// space under the cache directory. Records are validated on load; anything
/// malformed or inconsistent is ignored and recomputed.
class CoefficientCache {
public:
    CoefficientCache(std::string directory, const Space& space);

    std::optional<Integer> lookup(const Partition& lambda, int p, const Partition& nu,
                                  Engine engine) const;

    /// Remembers the value and appends it to the cache file.
    void store(const CoefficientRecord& record);

private:
    static std::string key_of(const Partition& lambda, int p, const Partition& nu,
                              Engine engine);

    std::string path_;
    std::unordered_map<std::string, Integer> table_;
};

}  // namespace pierik::cli
