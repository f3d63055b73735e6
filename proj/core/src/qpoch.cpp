#include "qgarnier/qpoch.hpp"

namespace qgarnier {

QPochInfResult qpoch_inf(const BigReal& a, const QPochConfig& cfg) {
    if (!(cfg.q > 0 && cfg.q < 1)) throw DomainError("qpoch_inf needs 0 < q < 1");
    if (!(cfg.tol > 0) || cfg.max_terms < 1) throw ConfigError("qpoch_inf config");
    QPochInfResult res{BigReal(1), 0};
    if (a == 0) return res;
    const BigReal one_minus_q = 1 - cfg.q;
    BigReal t = a;
    for (long m = 0; m < cfg.max_terms; ++m) {
        res.value *= 1 - t;
        t *= cfg.q;
        res.terms = m + 1;
        if (res.value == 0) return res;
        // t is now q^{m+1} a, the first omitted factor.
        BigReal s = abs(t) / one_minus_q;
        if (s < 1 && s / (1 - s) < cfg.tol) return res;
    }
    throw NonConvergent("qpoch_inf reached max_terms=" + std::to_string(cfg.max_terms));
}

BigReal log_base_q(const BigReal& b, const BigReal& q) {
    if (!(b > 0)) throw DomainError("log_base_q needs b > 0");
    if (!(q > 0 && q < 1)) throw DomainError("log_base_q needs 0 < q < 1");
    return log(b) / log(q);
}

}  // namespace qgarnier
