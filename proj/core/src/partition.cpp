#include "pierik/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "pierik/errors.hpp"
#include "pierik/space.hpp"

namespace pierik {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) {
            throw DomainError("negative part in partition");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw MonotonicityError("parts must be weakly decreasing");
        }
    }
    while (!parts_.empty() && parts_.back() == 0) {
        parts_.pop_back();
    }
}

Partition Partition::parse(std::string_view text, bool strict) {
    if (text == "-") {
        return Partition();
    }
    if (text.empty()) {
        throw ParseError("empty partition text; use '-' for the empty partition");
    }
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto token = text.substr(pos, comma == std::string_view::npos ? text.size() - pos
                                                                      : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || token.empty() || ptr != token.data() + token.size() ||
            value < 0) {
            throw ParseError("bad partition part '" + std::string(token) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    Partition result(std::move(parts));
    if (strict && !result.is_strict()) {
        throw StrictnessError("parts must be strictly decreasing");
    }
    return result;
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
}

bool Partition::is_strict() const {
    for (std::size_t i = 1; i < parts_.size(); ++i) {
        if (parts_[i] >= parts_[i - 1]) {
            return false;
        }
    }
    return true;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) {
        return false;
    }
    for (int i = 1; i <= inner.length(); ++i) {
        if (inner.part(i) > part(i)) {
            return false;
        }
    }
    return true;
}

std::string Partition::to_string() const {
    if (parts_.empty()) {
        return "-";
    }
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(parts_[i]);
    }
    return out;
}

bool WeightLexLess::operator()(const Partition& a, const Partition& b) const {
    if (a.weight() != b.weight()) {
        return a.weight() < b.weight();
    }
    return a.parts() < b.parts();
}

Partition dual_partition(const Partition& mu, const Space& space) {
    if (!space.admits(mu)) {
        throw OutOfBounds("partition " + mu.to_string() + " does not index " +
                          space.to_string());
    }
    std::vector<int> parts;
    if (space.kind() == Space::Kind::RectA) {
        for (int i = space.rows(); i >= 1; --i) {
            parts.push_back(space.cap() - mu.part(i));
        }
    } else {
        std::vector<bool> present(space.cap() + 1, false);
        for (int p : mu.parts()) {
            present[p] = true;
        }
        for (int p = space.cap(); p >= 1; --p) {
            if (!present[p]) {
                parts.push_back(p);
            }
        }
    }
    return Partition(std::move(parts));
}

namespace {

void collect_rect(int row, int rows, int bound, std::vector<int>& current,
                  std::vector<Partition>& out) {
    if (row == rows) {
        out.push_back(Partition(current));
        return;
    }
    for (int value = bound; value >= 0; --value) {
        current.push_back(value);
        collect_rect(row + 1, rows, value, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> all_partitions(const Space& space) {
    std::vector<Partition> out;
    if (space.kind() == Space::Kind::RectA) {
        std::vector<int> current;
        collect_rect(0, space.rows(), space.cap(), current, out);
        std::sort(out.begin(), out.end(), WeightLexLess());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    } else {
        // Strict partitions inside rho_n are the subsets of {1..n}.
        int n = space.cap();
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> parts;
            for (int p = n; p >= 1; --p) {
                if (mask & (1u << (p - 1))) {
                    parts.push_back(p);
                }
            }
            out.push_back(Partition(std::move(parts)));
        }
        std::sort(out.begin(), out.end(), WeightLexLess());
    }
    return out;
}

std::vector<Partition> partitions_containing(const Partition& lambda, const Space& space) {
    std::vector<Partition> out;
    for (auto& nu : all_partitions(space)) {
        if (nu.contains(lambda)) {
            out.push_back(nu);
        }
    }
    return out;
}

}  // namespace pierik
