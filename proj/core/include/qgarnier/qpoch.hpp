#pragma once

#include "qgarnier/scalar.hpp"

namespace qgarnier {

// (a;q)_k = (1-a)(1-qa)...(1-q^{k-1}a), exact in any field.
template <class F>
F qpoch(const F& a, const F& q, long k) {
    F r(1);
    F t = a;
    for (long m = 0; m < k; ++m) {
        r *= F(1) - t;
        t *= q;
    }
    return r;
}

struct QPochConfig {
    BigReal q;
    BigReal tol;
    long max_terms = 100000;
};

struct QPochInfResult {
    BigReal value;
    long terms = 0;  // factors multiplied before the tail bound dropped below tol
};

// (a;q)_inf truncated once the tail product prod_{m>N}(1-q^m a) is within tol
// of 1, using |prod(1-x_m) - 1| <= s/(1-s) with s = sum_{m>N} |x_m|.
QPochInfResult qpoch_inf(const BigReal& a, const QPochConfig& cfg);

// ln b / ln q. Throws DomainError unless b > 0 and 0 < q < 1.
BigReal log_base_q(const BigReal& b, const BigReal& q);

}  // namespace qgarnier
