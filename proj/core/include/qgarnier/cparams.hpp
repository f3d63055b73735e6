#pragma once

#include <string>
#include <vector>

#include "qgarnier/phi.hpp"

namespace qgarnier {

// The (2n+3)-tuple (a_1..a_{n+1}, b_1..b_{n+1}, c) together with q.
// b_{n+1} = q always. A(j), B(j) give the two-sided extension
// a_{j+n+1} = q a_j for every integer j, so a_0 = a_{n+1}/q and b_0 = 1.
template <class F>
struct CParams {
    int n = 1;
    std::vector<F> a;  // a[k-1] = a_k, k = 1..n+1
    std::vector<F> b;  // b[k-1] = b_k, b[n] = q
    F c{0};
    F q{1};

    // b_free holds b_1..b_n; b_{n+1} is set to q.
    static CParams make(int n, std::vector<F> a_vals, std::vector<F> b_free, F c, F q) {
        if (n < 1) throw DomainError("order n must be >= 1");
        if (a_vals.size() != static_cast<std::size_t>(n + 1))
            throw DomainError("expected n+1 values of a");
        if (b_free.size() == static_cast<std::size_t>(n + 1)) {
            if (!(b_free.back() == q)) throw ConstraintViolated("b_{n+1} must equal q");
            b_free.pop_back();
        }
        if (b_free.size() != static_cast<std::size_t>(n)) throw DomainError("expected n values of b");
        CParams p;
        p.n = n;
        p.a = std::move(a_vals);
        p.b = std::move(b_free);
        p.b.push_back(q);
        p.c = std::move(c);
        p.q = std::move(q);
        return p;
    }

    int m() const { return n + 1; }

    F A(long j) const { return extend(a, j); }
    F B(long j) const { return extend(b, j); }

    friend bool operator==(const CParams& x, const CParams& y) {
        return x.n == y.n && x.a == y.a && x.b == y.b && x.c == y.c && x.q == y.q;
    }

private:
    F extend(const std::vector<F>& v, long j) const {
        const long mm = n + 1;
        const long r = mod(j - 1, mm);
        const long k = (j - 1 - r) / mm;
        return v[static_cast<std::size_t>(r)] * ipow(q, k);
    }
};

inline CParams<BigReal> to_big(const CParams<ExactQ>& p) {
    CParams<BigReal> r;
    r.n = p.n;
    for (const auto& v : p.a) r.a.push_back(to_big(v));
    for (const auto& v : p.b) r.b.push_back(to_big(v));
    r.c = to_big(p.c);
    r.q = to_big(p.q);
    return r;
}

template <class F>
std::string to_string(const CParams<F>& p) {
    std::string s = "a=(";
    for (std::size_t k = 0; k < p.a.size(); ++k) s += (k ? ", " : "") + to_string(p.a[k]);
    s += ") b=(";
    for (std::size_t k = 0; k < p.b.size(); ++k) s += (k ? ", " : "") + to_string(p.b[k]);
    return s + ") c=" + to_string(p.c) + " q=" + to_string(p.q);
}

// prod_{l=lo}^{hi} alpha_l with the convention prod_{l=lo}^{lo-1} = 1 and,
// for hi < lo-1, prod_{l=lo}^{hi} = 1 / prod_{l=hi+1}^{lo-1}.
template <class F>
F alpha_range_product(const ObservableParams<F>& o, long lo, long hi) {
    F p(1);
    if (hi >= lo) {
        for (long l = lo; l <= hi; ++l) p *= o.a(l);
    } else if (hi < lo - 1) {
        for (long l = hi + 1; l < lo; ++l) p = checked_div(p, o.a(l), "alpha in reversed product");
    }
    return p;
}

// a_j = prod_{l=2n-2j+1}^{2n-1} alpha_l, b_j = prod_{l=2n-2j}^{2n-1} alpha_l,
// c = beta_0 / (q prod alpha_odd). Requires beta'_0 = beta_0 / prod alpha_odd.
template <class F>
CParams<F> cparams_from_observables(const ObservableParams<F>& o, int n) {
    if (static_cast<int>(o.alpha.size()) != 2 * n + 2) throw DomainError("observables have wrong order");
    F podd(1);
    for (long l = 0; l <= n; ++l) podd *= o.a(2 * l + 1);
    if (!(o.betap[0] == checked_div(o.beta[0], podd, "prod alpha_odd")))
        throw ConstraintViolated("beta'_0 != beta_0 / prod alpha_{2j+1}");
    std::vector<F> a, b;
    for (long j = 1; j <= n + 1; ++j) {
        a.push_back(alpha_range_product(o, 2L * n - 2 * j + 1, 2L * n - 1));
        if (j <= n) b.push_back(alpha_range_product(o, 2L * n - 2 * j, 2L * n - 1));
    }
    F c = checked_div(o.beta[0], o.qval * podd, "q prod alpha_odd");
    return CParams<F>::make(n, std::move(a), std::move(b), std::move(c), o.qval);
}

// Inverse of cparams_from_observables:
// alpha_{2j-2} = b_{n-j+1}/a_{n-j+1}, alpha_{2j-1} = a_{n-j+1}/b_{n-j},
// beta_0 = q c prod_l a_l / b_{l-1}.
template <class F>
ObservableParams<F> observables_from_cparams(const CParams<F>& p) {
    const long n = p.n;
    const long N = 2 * n + 2;
    ObservableParams<F> o;
    o.alpha.assign(static_cast<std::size_t>(N), F(1));
    auto slot = [&](long j) -> F& { return o.alpha[static_cast<std::size_t>(mod(j, N))]; };
    for (long j = 0; j <= n; ++j) {
        slot(2 * j - 2) = checked_div(p.B(n - j + 1), p.A(n - j + 1), "a_{n-j+1}");
        slot(2 * j - 1) = checked_div(p.A(n - j + 1), p.B(n - j), "b_{n-j}");
    }
    o.qval = p.q;
    F b0 = p.q * p.c;
    for (long l = 1; l <= n + 1; ++l) b0 *= checked_div(p.A(l), p.B(l - 1), "b_{l-1}");
    o.beta = {b0, checked_div(p.q, b0, "beta_0")};
    F podd(1);
    for (long l = 0; l <= n; ++l) podd *= o.a(2 * l + 1);
    F bp0 = checked_div(b0, podd, "prod alpha_odd");
    o.betap = {bp0, checked_div(p.q, bp0, "beta'_0")};
    return o;
}

}  // namespace qgarnier
