#include "qgarnier/token.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "qgarnier/errors.hpp"

namespace qgarnier {

bool is_fundamental(Gen g) {
    switch (g) {
        case Gen::R:
        case Gen::S:
        case Gen::SPrime:
        case Gen::Pi:
        case Gen::PiPrime:
        case Gen::Rho:
            return true;
        default:
            return false;
    }
}

Token inverse(Token t) {
    t.inverse = !t.inverse;
    return t;
}

GroupWord inverse(const GroupWord& w) {
    GroupWord r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(inverse(*it));
    return r;
}

std::string to_string(const Token& t) {
    std::string s;
    switch (t.gen) {
        case Gen::R: s = "r" + std::to_string(t.i); break;
        case Gen::S: s = "s" + std::to_string(t.i); break;
        case Gen::SPrime: s = "s'" + std::to_string(t.i); break;
        case Gen::Pi: s = "pi"; break;
        case Gen::PiPrime: s = "pi'"; break;
        case Gen::Rho: s = "rho"; break;
        case Gen::P: s = "p" + std::to_string(t.i); break;
        case Gen::PPrime: s = "p'" + std::to_string(t.i); break;
        case Gen::Sigma: s = "sigma"; break;
        case Gen::SigmaPrime: s = "sigma'"; break;
        case Gen::Pi1: s = "pi1"; break;
        case Gen::Pi2: s = "pi2"; break;
        case Gen::TauC: s = "tau_c"; break;
        case Gen::TauI: s = "tau_" + std::to_string(t.i); break;
        case Gen::TauIJ: s = "tau_" + std::to_string(t.i) + "_" + std::to_string(t.j); break;
    }
    if (t.inverse) s += "^-1";
    return s;
}

std::string to_string(const GroupWord& w) {
    std::string s = "[";
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) s += " ";
        s += to_string(w[k]);
    }
    return s + "]";
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw ConfigError("bad token '" + std::string(whole) + "'");
    return v;
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

}  // namespace

Token parse_token(std::string_view text) {
    const std::string_view whole = text;
    Token t;
    if (text.size() >= 3 && text.substr(text.size() - 3) == "^-1") {
        t.inverse = true;
        text.remove_suffix(3);
    }
    if (text == "pi") { t.gen = Gen::Pi; return t; }
    if (text == "pi'") { t.gen = Gen::PiPrime; return t; }
    if (text == "rho") { t.gen = Gen::Rho; return t; }
    if (text == "sigma") { t.gen = Gen::Sigma; return t; }
    if (text == "sigma'") { t.gen = Gen::SigmaPrime; return t; }
    if (text == "pi1") { t.gen = Gen::Pi1; return t; }
    if (text == "pi2") { t.gen = Gen::Pi2; return t; }
    if (text == "tau_c") { t.gen = Gen::TauC; return t; }
    if (starts_with(text, "tau_")) {
        auto rest = text.substr(4);
        if (auto us = rest.find('_'); us != std::string_view::npos) {
            t.gen = Gen::TauIJ;
            t.i = parse_int(rest.substr(0, us), whole);
            t.j = parse_int(rest.substr(us + 1), whole);
        } else {
            t.gen = Gen::TauI;
            t.i = parse_int(rest, whole);
        }
        return t;
    }
    if (starts_with(text, "s'")) { t.gen = Gen::SPrime; t.i = parse_int(text.substr(2), whole); return t; }
    if (starts_with(text, "p'")) { t.gen = Gen::PPrime; t.i = parse_int(text.substr(2), whole); return t; }
    if (starts_with(text, "r")) { t.gen = Gen::R; t.i = parse_int(text.substr(1), whole); return t; }
    if (starts_with(text, "s")) { t.gen = Gen::S; t.i = parse_int(text.substr(1), whole); return t; }
    if (starts_with(text, "p")) { t.gen = Gen::P; t.i = parse_int(text.substr(1), whole); return t; }
    throw ConfigError("unknown token '" + std::string(whole) + "'");
}

GroupWord parse_word(std::string_view text) {
    GroupWord w;
    std::istringstream is{std::string(text)};
    std::string item;
    while (is >> item) w.push_back(parse_token(item));
    return w;
}

}  // namespace qgarnier
