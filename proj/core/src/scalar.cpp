#include "qgarnier/scalar.hpp"

#include <cctype>
#include <sstream>

namespace qgarnier {

PrecisionScope::PrecisionScope(unsigned digits10) : saved_(BigReal::default_precision()) {
    BigReal::default_precision(digits10);
}

PrecisionScope::~PrecisionScope() { BigReal::default_precision(saved_); }

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
    if (s.empty()) throw ConfigError("malformed number '" + std::string(whole) + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw ConfigError("malformed number '" + std::string(whole) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ConfigError("malformed number '" + std::string(whole) + "'");
    }
    // strip leading zeros: the mpz string constructor reads "075" as octal
    std::string_view body = s.substr(start);
    while (body.size() > 1 && body.front() == '0') body.remove_prefix(1);
    BigInt v{std::string(body)};
    return s[0] == '-' ? BigInt(-v) : v;
}

ExactQ parse_decimal(std::string_view s, std::string_view whole) {
    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        exp10 = static_cast<long>(parse_integer(s.substr(e + 1), whole).convert_to<long>());
        s = s.substr(0, e);
    }
    std::string mant(s);
    if (auto dot = mant.find('.'); dot != std::string::npos) {
        exp10 -= static_cast<long>(mant.size() - dot - 1);
        mant.erase(dot, 1);
    }
    ExactQ v(parse_integer(mant, whole));
    return v * ipow(ExactQ(10), exp10);
}

}  // namespace

ExactQ parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt p = parse_integer(text.substr(0, slash), text);
        BigInt q = parse_integer(text.substr(slash + 1), text);
        if (q == 0) throw ConfigError("zero denominator in '" + std::string(text) + "'");
        return ExactQ(p) / ExactQ(q);
    }
    return parse_decimal(text, text);
}

std::string to_string(const ExactQ& x) { return x.str(); }

std::string to_string(const BigReal& x, int digits) {
    std::ostringstream os;
    os << std::scientific;
    os.precision(digits);
    os << x;
    return os.str();
}

BigReal to_big(const ExactQ& x) {
    BigReal num(boost::multiprecision::numerator(x));
    BigReal den(boost::multiprecision::denominator(x));
    return num / den;
}

}  // namespace qgarnier
