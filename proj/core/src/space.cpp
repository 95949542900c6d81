#include "pierik/space.hpp"

#include <cctype>
#include <charconv>

#include "pierik/errors.hpp"
#include "pierik/partition.hpp"

namespace pierik {

namespace {

int parse_positive(std::string_view text, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
        throw ParseError(std::string(what) + " must be a positive integer, got '" +
                         std::string(text) + "'");
    }
    return value;
}

}  // namespace

Space Space::rect_a(int m, int k) {
    if (m < 1 || k < 1) {
        throw ParseError("rectangle dimensions must be at least 1");
    }
    return Space(Kind::RectA, m, k);
}

Space Space::og(int n) {
    if (n < 1) {
        throw ParseError("staircase size must be at least 1");
    }
    return Space(Kind::OG, n, n);
}

Space Space::lg(int n) {
    if (n < 1) {
        throw ParseError("staircase size must be at least 1");
    }
    return Space(Kind::LG, n, n);
}

Space Space::parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw ParseError("space must look like a:MxK, og:N, or lg:N, got '" +
                         std::string(text) + "'");
    }
    auto family = text.substr(0, colon);
    auto rest = text.substr(colon + 1);
    if (family == "a") {
        auto x = rest.find('x');
        if (x == std::string_view::npos) {
            throw ParseError("type A space must look like a:MxK, got '" +
                             std::string(text) + "'");
        }
        return rect_a(parse_positive(rest.substr(0, x), "m"),
                      parse_positive(rest.substr(x + 1), "k"));
    }
    if (family == "og") {
        return og(parse_positive(rest, "n"));
    }
    if (family == "lg") {
        return lg(parse_positive(rest, "n"));
    }
    throw ParseError("unknown space family '" + std::string(family) + "'");
}

bool Space::admits(const Partition& p) const {
    if (p.length() > rows_ || p.part(1) > cap_) {
        return false;
    }
    return !shifted() || p.is_strict();
}

std::string Space::to_string() const {
    switch (kind_) {
        case Kind::RectA:
            return "a:" + std::to_string(rows_) + "x" + std::to_string(cap_);
        case Kind::OG:
            return "og:" + std::to_string(cap_);
        case Kind::LG:
        default:
            return "lg:" + std::to_string(cap_);
    }
}

}  // namespace pierik
