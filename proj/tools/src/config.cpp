#include "qgarnier/verify/config.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "qgarnier/verify/suites.hpp"

namespace qgarnier::verify {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

long parse_long(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        const long x = std::stol(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("'" + key + "' expects an integer, got '" + v + "'");
    }
}

}  // namespace

void validate(const SuiteConfig& cfg) {
    if (cfg.n && *cfg.n < 1) throw ConfigError("n must be >= 1");
    if (cfg.trials && *cfg.trials < 1) throw ConfigError("trials must be >= 1");
    if (cfg.precision < 30) throw ConfigError("precision must be >= 30 digits");
    if (cfg.suites.empty()) throw ConfigError("no suite selected");
    for (const auto& s : cfg.suites)
        if (s != "all" && !is_suite_id(s)) throw ConfigError("unknown suite '" + s + "'");
    if (cfg.params_override && cfg.n && cfg.params_override->n != *cfg.n)
        throw ConfigError("explicit parameters have order " + std::to_string(cfg.params_override->n) +
                          " but n = " + std::to_string(*cfg.n));

    PrecisionScope scope(cfg.precision);
    BigReal tol;
    try {
        tol = BigReal(cfg.tol);
    } catch (const std::exception&) {
        throw ConfigError("malformed tolerance '" + cfg.tol + "'");
    }
    if (!(tol > 0)) throw ConfigError("tol must be > 0");
    const BigReal floor = pow(BigReal(10), -static_cast<int>(cfg.precision) + 10);
    if (tol < floor)
        throw ConfigError("tol " + cfg.tol + " is unreachable at " + std::to_string(cfg.precision) +
                          " digits (need tol >= 1e-" + std::to_string(cfg.precision - 10) + ")");
}

std::vector<ExactQ> parse_rational_list(const std::string& text) {
    std::vector<ExactQ> out;
    for (const auto& item : split(text, ',')) out.push_back(parse_rational(item));
    return out;
}

CParams<ExactQ> params_from_text(int n, const std::string& q, const std::string& a, const std::string& b,
                                 const std::string& c) {
    try {
        return CParams<ExactQ>::make(n, parse_rational_list(a), parse_rational_list(b), parse_rational(c),
                                     parse_rational(q));
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    } catch (const ConstraintViolated& e) {
        throw ConfigError(e.what());
    }
}

SuiteConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }

    SuiteConfig cfg;
    auto take = [&](const std::string& key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        if (v.size() >= 2 && v.front() == '"' && v.back() == '"') v = v.substr(1, v.size() - 2);
        return v;
    };
    if (auto v = take("n")) cfg.n = static_cast<int>(parse_long("n", *v));
    if (auto v = take("seed")) cfg.seed = static_cast<std::uint64_t>(parse_long("seed", *v));
    if (auto v = take("trials")) cfg.trials = static_cast<int>(parse_long("trials", *v));
    if (auto v = take("precision")) cfg.precision = static_cast<unsigned>(parse_long("precision", *v));
    if (auto v = take("threads")) cfg.threads = static_cast<unsigned>(parse_long("threads", *v));
    if (auto v = take("tol")) cfg.tol = *v;
    if (auto v = take("suites")) cfg.suites = split(*v, ',');
    if (auto v = take("experimental")) cfg.experimental = (*v == "true" || *v == "1");

    auto q = take("q"), a = take("a"), b = take("b"), c = take("c");
    const int given = !!q + !!a + !!b + !!c;
    if (given != 0 && given != 4) throw ConfigError(path + ": explicit parameters need all of q, a, b, c");
    if (given == 4) {
        const auto av = parse_rational_list(*a);
        if (av.size() < 2) throw ConfigError(path + ": 'a' needs n+1 >= 2 values");
        cfg.params_override = params_from_text(static_cast<int>(av.size()) - 1, *q, *a, *b, *c);
        if (!cfg.n) cfg.n = cfg.params_override->n;
    }
    if (!kv.empty()) throw ConfigError(path + ": unknown key '" + kv.begin()->first + "'");
    return cfg;
}

}  // namespace qgarnier::verify
