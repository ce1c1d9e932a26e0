#include "ramsey/family.hpp"

#include <charconv>

namespace ramsey {

namespace {

int parse_int(std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw parameter_error("bad integer in family spec: '" + std::string(s) + "'");
    return value;
}

}  // namespace

std::string FamilyParams::str() const {
    switch (kind) {
        case FamilyKind::CompleteBipartite:
            return "K_{" + std::to_string(a) + "," + std::to_string(b) + "}";
        case FamilyKind::Book:
            return "B_" + std::to_string(b) + "^(" + std::to_string(a) + ")";
        case FamilyKind::Starburst:
            return "S_" + std::to_string(b) + "^(" + std::to_string(a) + ")";
        case FamilyKind::Clique: return "K_" + std::to_string(a);
        case FamilyKind::Path: return "P_" + std::to_string(a);
    }
    return "?";
}

FamilyParams FamilyParams::parse(std::string_view text) {
    auto colon = text.find(':');
    std::string_view name = text.substr(0, colon);
    std::string_view rest =
        colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    auto two = [&]() -> std::pair<int, int> {
        auto comma = rest.find(',');
        if (comma == std::string_view::npos)
            throw parameter_error("family '" + std::string(name) +
                                  "' needs two parameters, e.g. " +
                                  std::string(name) + ":2,3");
        return {parse_int(rest.substr(0, comma)), parse_int(rest.substr(comma + 1))};
    };
    auto one = [&]() -> int {
        if (rest.empty())
            throw parameter_error("family '" + std::string(name) +
                                  "' needs one parameter");
        return parse_int(rest);
    };
    if (name == "kst" || name == "biclique") {
        auto [s, t] = two();
        return complete_bipartite(s, t);
    }
    if (name == "book") {
        auto [k, n] = two();
        return book(k, n);
    }
    if (name == "starburst") {
        auto [k, n] = two();
        return starburst(k, n);
    }
    if (name == "clique") return clique(one());
    if (name == "path") return path(one());
    throw parameter_error("unknown family '" + std::string(name) +
                          "' (expected kst, book, starburst, clique, path)");
}

}  // namespace ramsey
