#pragma once

// Flat key/value spec files.
//
//   # GF(64) with F_4 subfield
//   field  = gf2:6:43:2
//   family = gbipp
//   a      = 2
//   L      = lin:1:1
//   checks = roundtrip,agreement
//
// Elements are lowercase hex, lists are comma-separated, '#' starts a
// comment.  The format carries exactly what the validating factories need;
// everything derived (u, partial sums, g) is recomputed on load so a file
// can never smuggle in an inconsistent value.

#include <istream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "element.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "linearized.hpp"
#include "perms.hpp"

namespace bipp {

struct SpecFile {
    std::string field;                          ///< FieldCtx descriptor
    std::string family;                         ///< "bipp" | "gbipp" | "tower"
    std::map<std::string, std::string> params;  ///< a, L, degrees, coeffs, c0, l
    std::vector<std::string> checks;            ///< requested verifications
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string tok = trim(comma == std::string::npos ? s.substr(start)
                                                          : s.substr(start, comma - start));
        if (!tok.empty())
            out.push_back(tok);
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

inline unsigned parse_small_uint(const std::string& s, const std::string& key) {
    if (s.empty())
        throw invalid_parameter("spec key '" + key + "' has an empty value");
    unsigned v = 0;
    for (char c : s) {
        if (c < '0' || c > '9')
            throw invalid_parameter("spec key '" + key + "' is not a number: '" + s + "'");
        v = v * 10 + static_cast<unsigned>(c - '0');
        if (v > 100000)
            throw invalid_parameter("spec key '" + key + "' is out of range: '" + s + "'");
    }
    return v;
}

}  // namespace detail

inline SpecFile parse_specfile(std::istream& is) {
    SpecFile sf;
    std::string line;
    unsigned lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = detail::trim(line);
        if (line.empty())
            continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw invalid_parameter("spec line " + std::to_string(lineno) +
                                    " is not 'key = value': '" + line + "'");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = detail::trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw invalid_parameter("spec line " + std::to_string(lineno) +
                                    " is missing a key or value");
        if (key == "field")
            sf.field = value;
        else if (key == "family")
            sf.family = value;
        else if (key == "checks")
            sf.checks = detail::split_list(value);
        else
            sf.params[key] = value;
    }
    return sf;
}

inline SpecFile parse_specfile(const std::string& text) {
    std::istringstream is(text);
    return parse_specfile(is);
}

inline std::string serialize_specfile(const SpecFile& sf) {
    std::string out;
    out += "field = " + sf.field + "\n";
    out += "family = " + sf.family + "\n";
    for (const auto& [key, value] : sf.params)
        out += key + " = " + value + "\n";
    if (!sf.checks.empty()) {
        out += "checks = ";
        for (std::size_t i = 0; i < sf.checks.size(); ++i)
            out += (i ? "," : "") + sf.checks[i];
        out += "\n";
    }
    return out;
}

/// A spec file realized into live objects; owns the field context the
/// PermSpec points into.
struct LoadedSpec {
    std::unique_ptr<FieldCtx> ctx;
    PermSpec perm;
    std::vector<std::string> checks;
};

inline const std::string& require_param(const SpecFile& sf, const std::string& key) {
    auto it = sf.params.find(key);
    if (it == sf.params.end())
        throw invalid_parameter("spec file is missing key '" + key +
                                "' required by family '" + sf.family + "'");
    return it->second;
}

inline LoadedSpec load_spec(const SpecFile& sf) {
    if (sf.field.empty())
        throw invalid_parameter("spec file is missing the 'field' key");
    LoadedSpec loaded;
    loaded.ctx = std::make_unique<FieldCtx>(FieldCtx::parse(sf.field));
    loaded.checks = sf.checks;
    const FieldCtx& ctx = *loaded.ctx;
    if (sf.family == "bipp") {
        loaded.perm = make_bipp(ctx, element_from_hex(require_param(sf, "a")));
    } else if (sf.family == "gbipp") {
        const Element a = element_from_hex(require_param(sf, "a"));
        LinearizedPoly L =
            sf.params.count("L")
                ? parse_lin(ctx, sf.params.at("L"))
                : make_lin(ctx, 1, {Element::one()});  // default L = identity
        loaded.perm = make_gbipp(ctx, a, std::move(L));
    } else if (sf.family == "tower") {
        std::vector<unsigned> degrees;
        for (const std::string& tok : detail::split_list(require_param(sf, "degrees")))
            degrees.push_back(detail::parse_small_uint(tok, "degrees"));
        std::vector<Element> coeffs;
        for (const std::string& tok : detail::split_list(require_param(sf, "coeffs")))
            coeffs.push_back(element_from_hex(tok));
        const Element c0 = element_from_hex(require_param(sf, "c0"));
        const unsigned l = detail::parse_small_uint(require_param(sf, "l"), "l");
        loaded.perm = make_tower_perm(make_tower(ctx, std::move(degrees),
                                                 std::move(coeffs), c0, l));
    } else {
        throw invalid_parameter("unknown family '" + sf.family +
                                "'; expected bipp, gbipp, or tower");
    }
    return loaded;
}

}  // namespace bipp
