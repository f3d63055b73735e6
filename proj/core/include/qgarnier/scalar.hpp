#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <string_view>

#include "qgarnier/errors.hpp"

namespace qgarnier {

// Exact arbitrary-size rationals. Expression templates are off so that
// generic code can deduce the field type from any arithmetic expression.
using ExactQ = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                             boost::multiprecision::et_off>;

// Arbitrary-precision reals; precision in decimal digits is carried per value.
using BigReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                              boost::multiprecision::et_off>;

using BigInt = boost::multiprecision::mpz_int;

inline constexpr unsigned kDefaultPrecision = 60;

// Sets the default BigReal precision for values created while alive.
// The default is process wide, so set it before starting worker threads.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned digits10);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

inline bool is_zero(const ExactQ& x) { return x == 0; }
inline bool is_zero(const BigReal& x) { return x == 0; }

// Parses "p/q", an integer, or a finite decimal ("0.75", "-1.5e-2") exactly.
ExactQ parse_rational(std::string_view text);

std::string to_string(const ExactQ& x);
std::string to_string(const BigReal& x, int digits = 20);

BigReal to_big(const ExactQ& x);
inline BigReal to_big(const BigReal& x) { return x; }

// x^k for any integer k; throws DivisionByZero for 0^k with k < 0.
template <class F>
F ipow(const F& x, long k) {
    if (k < 0) {
        if (is_zero(x)) throw DivisionByZero("zero to a negative power");
        return F(1) / ipow(x, -k);
    }
    F r(1);
    F b = x;
    while (k > 0) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}

// num / den, throwing DivisionByZero(what) when den vanishes.
template <class F>
F checked_div(const F& num, const F& den, const std::string& what) {
    if (is_zero(den)) throw DivisionByZero(what);
    return num / den;
}

}  // namespace qgarnier
