#include "cache.hpp"

#include <filesystem>
#include <fstream>

namespace pierik::cli {

namespace {

std::string sanitize(const std::string& name) {
    std::string out = name;
    for (char& c : out) {
        if (c == ':') {
            c = '_';
        }
    }
    return out;
}

}  // namespace

CoefficientCache::CoefficientCache(std::string directory, const Space& space) {
    std::filesystem::create_directories(directory);
    path_ = directory + "/" + sanitize(space.to_string()) + ".jsonl";
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        auto parsed = nlohmann::json::parse(line, nullptr, false);
        if (parsed.is_discarded()) {
            continue;
        }
        auto record = CoefficientRecord::from_json(parsed);
        if (!record || !(record->space == space)) {
            continue;
        }
        table_[key_of(record->lambda, record->p, record->nu, record->engine)] =
            record->coefficient;
    }
}

std::optional<Integer> CoefficientCache::lookup(const Partition& lambda, int p,
                                                const Partition& nu, Engine engine) const {
    auto it = table_.find(key_of(lambda, p, nu, engine));
    if (it == table_.end()) {
        return std::nullopt;
    }
    return it->second;
}

void CoefficientCache::store(const CoefficientRecord& record) {
    auto key = key_of(record.lambda, record.p, record.nu, record.engine);
    if (!table_.emplace(key, record.coefficient).second) {
        return;  // already on disk
    }
    std::ofstream out(path_, std::ios::app);
    out << record.to_line() << '\n';
}

std::string CoefficientCache::key_of(const Partition& lambda, int p, const Partition& nu,
                                     Engine engine) {
    return lambda.to_string() + "|" + std::to_string(p) + "|" + nu.to_string() + "|" +
           to_string(engine);
}

}  // namespace pierik::cli
