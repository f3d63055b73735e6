#pragma once

#include <string>
#include <vector>

#include "qgarnier/scalar.hpp"

namespace qgarnier {

// Exact univariate rational function in a formal symbol eps over ExactQ.
//
// Stored as num/den with gcd(num, den) = 1 and den monic, so two values are
// equal iff their stored coefficients are equal.
class PerturbQ {
public:
    using Poly = std::vector<ExactQ>;  // coefficients, lowest degree first, no trailing zeros

    static constexpr int kDefaultDegreeCap = 64;

    PerturbQ() : den_{ExactQ(1)} {}
    PerturbQ(int c) : PerturbQ(ExactQ(c)) {}  // NOLINT(google-explicit-constructor)
    PerturbQ(const ExactQ& c);                // NOLINT(google-explicit-constructor)

    // eps itself.
    static PerturbQ eps();
    // c0 + c1 * eps.
    static PerturbQ linear(const ExactQ& c0, const ExactQ& c1);
    // num/den, normalized. Throws DivisionByZero when den is the zero polynomial.
    static PerturbQ from_polys(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.empty(); }
    int degree() const;  // max of numerator and denominator degree

    // Lowest power of eps with a nonzero coefficient; -1 for the zero polynomial.
    static int order(const Poly& p);

    PerturbQ& operator+=(const PerturbQ& o);
    PerturbQ& operator-=(const PerturbQ& o);
    PerturbQ& operator*=(const PerturbQ& o);
    PerturbQ& operator/=(const PerturbQ& o);

    friend PerturbQ operator+(PerturbQ a, const PerturbQ& b) { return a += b; }
    friend PerturbQ operator-(PerturbQ a, const PerturbQ& b) { return a -= b; }
    friend PerturbQ operator*(PerturbQ a, const PerturbQ& b) { return a *= b; }
    friend PerturbQ operator/(PerturbQ a, const PerturbQ& b) { return a /= b; }
    PerturbQ operator-() const;

    friend bool operator==(const PerturbQ& a, const PerturbQ& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const;

    // Degree cap shared by all values; exceeding it raises DegreeCapExceeded.
    static int degree_cap();
    static void set_degree_cap(int cap);

private:
    Poly num_;
    Poly den_;
    void normalize();
};

inline bool is_zero(const PerturbQ& x) { return x.is_zero(); }
inline std::string to_string(const PerturbQ& x) { return x.str(); }

// Value at eps = 0: the ratio of lowest-order coefficients when
// ord(num) >= ord(den). Throws PoleAtZero otherwise.
ExactQ limit_eps0(const PerturbQ& v);

}  // namespace qgarnier
