#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qgarnier/cparams.hpp"
#include "qgarnier/generators.hpp"
#include "qgarnier/perturb.hpp"

namespace qgarnier {

// Point of the specialization locus: even[j] = phi_{2j,0}, j = 0..n,
// with phi_{2j+1,0} = -alpha_{2j+1}, phi_{2j+1,1} = -1 implied, and
// prod even = (-1)^{n+1} beta_0 / prod alpha_{2j+1}.
template <class F>
struct SpecialState {
    std::vector<F> even;
    CParams<F> params;

    int n() const { return params.n; }
    const F& E(long j) const { return even[static_cast<std::size_t>(mod(j, params.n + 1))]; }

    friend bool operator==(const SpecialState& x, const SpecialState& y) {
        return x.even == y.even && x.params == y.params;
    }
};

// (-1)^{n+1} beta_0 / prod_j alpha_{2j+1}, the required product of even values.
template <class F>
F even_product_target(const CParams<F>& cp) {
    const auto o = observables_from_cparams(cp);
    F t = o.betap[0];  // beta_0 / prod alpha_odd
    return (cp.n % 2 == 0) ? F(-t) : t;
}

// Completes n free even values with the last one fixed by the product constraint.
template <class F>
SpecialState<F> make_special_state(const CParams<F>& cp, std::vector<F> free_even) {
    if (free_even.size() != static_cast<std::size_t>(cp.n)) throw DomainError("expected n free even values");
    F p(1);
    for (const auto& v : free_even) p *= v;
    free_even.push_back(checked_div(even_product_target(cp), p, "product of free even values"));
    return SpecialState<F>{std::move(free_even), cp};
}

template <class F>
bool satisfies_constraint(const SpecialState<F>& s) {
    F p(1);
    for (const auto& v : s.even) p *= v;
    return p == even_product_target(s.params);
}

// Full phi state on the locus (exact field only).
PhiState<ExactQ> phi_on_locus(const SpecialState<ExactQ>& s);

// True when phi_{2j+1,0} = -alpha_{2j+1} and phi_{2j+1,1} = -1 for all j.
bool on_locus(const PhiState<ExactQ>& phi);

// Reads (even values, c-parameters) back from a state on the locus.
// Throws ConstraintViolated when the state is off the locus.
SpecialState<ExactQ> special_from_phi(const PhiState<ExactQ>& phi);

// Perturbation directions t_j, u_j for the odd entries.
struct Directions {
    std::vector<ExactQ> t;
    std::vector<ExactQ> u;
};

Directions random_directions(int n, std::mt19937_64& rng);

// Random point on the locus over cp: free even values k/m with 1 <= k, m <= 9.
SpecialState<ExactQ> random_locus_point(const CParams<ExactQ>& cp, std::mt19937_64& rng);

// phi_{2j+1,0} = -alpha_{2j+1} + eps t_j, phi_{2j+1,1} = -1 + eps u_j;
// even entries taken from s unchanged.
PhiState<PerturbQ> specialize(const SpecialState<ExactQ>& s, const Directions& d);

struct LimitResult {
    PhiState<ExactQ> state;
    int max_degree = 0;  // largest eps-degree seen in the final perturbed state
};

// Applies w to the perturbed state and takes limit_eps0 of every entry.
LimitResult word_limit(const GroupWord& w, const SpecialState<ExactQ>& s, const Directions& d);

struct SpecializationReport {
    bool preserved = true;
    int trials = 0;
    int resamples = 0;
    int max_degree = 0;
    std::string detail;
};

// Applies g (a derived token, or any fundamental token as a control) to
// perturbed locus points and checks that the limit lies on the locus again.
// A pole that survives a second direction draw is rethrown: the locus point
// is degenerate for g.
SpecializationReport preserves_specialization(const Token& g, const CParams<ExactQ>& cp, int trials,
                                              std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// Parameter actions on c-parameters

namespace detail {

// Affine transposition exchanging the residues i0 and i0+1 mod m on Z.
inline long affine_swap(long i0, long j, long m) {
    if (mod(j - i0, m) == 0) return j + 1;
    if (mod(j - i0 - 1, m) == 0) return j - 1;
    return j;
}

template <class F, class Fa, class Fb>
CParams<F> rebuild(const CParams<F>& cp, Fa&& fa, Fb&& fb, F c) {
    CParams<F> r;
    r.n = cp.n;
    r.q = cp.q;
    for (long j = 1; j <= cp.n + 1; ++j) r.a.push_back(fa(j));
    for (long j = 1; j <= cp.n; ++j) r.b.push_back(fb(j));
    r.b.push_back(cp.q);
    r.c = std::move(c);
    return r;
}

}  // namespace detail

template <class F>
CParams<F> act_on_cparams(const Token& g, const CParams<F>& cp);

template <class F>
CParams<F> act_word_on_cparams(const GroupWord& w, const CParams<F>& cp) {
    CParams<F> cur = cp;
    for (const auto& t : w) cur = act_on_cparams(t, cur);
    return cur;
}

// Action of a derived generator on (a, b, c). Translations tau_i, tau_i_j act
// through their defining words; translation_on_cparams gives the diagonal form.
template <class F>
CParams<F> act_on_cparams(const Token& g, const CParams<F>& cp) {
    const long n = cp.n;
    const long m = n + 1;
    const F& q = cp.q;
    auto keepA = [&](long j) { return cp.A(j); };
    auto keepB = [&](long j) { return cp.B(j); };
    switch (g.gen) {
        case Gen::P: {
            const long i = mod(g.i, m);
            return detail::rebuild(cp, [&](long j) { return cp.A(detail::affine_swap(i, j, m)); }, keepB, cp.c);
        }
        case Gen::PPrime: {
            const long i = mod(g.i, m);
            if (i == 0) {
                const F b1 = cp.B(1);
                return detail::rebuild(
                    cp, [&](long j) { return checked_div(cp.A(j), b1, "b_1"); },
                    [&](long j) { return checked_div(cp.B(detail::affine_swap(0, j, m)), b1, "b_1"); }, cp.c);
            }
            if (i == n) {
                const F bn = cp.B(n);
                return detail::rebuild(
                    cp, [&](long j) { return checked_div(q * cp.A(j), bn, "b_n"); },
                    [&](long j) { return checked_div(q * cp.B(detail::affine_swap(n, j, m)), bn, "b_n"); }, cp.c);
            }
            return detail::rebuild(cp, keepA, [&](long j) { return cp.B(detail::affine_swap(i, j, m)); }, cp.c);
        }
        case Gen::Sigma: {
            const long d = g.inverse ? 1 : -1;
            return detail::rebuild(cp, [&](long j) { return cp.A(j + d); }, keepB, cp.c);
        }
        case Gen::SigmaPrime: {
            if (g.inverse) return detail::rebuild(cp, [&](long j) { return cp.A(j - 1); }, keepB, F(cp.c * q));
            return detail::rebuild(cp, [&](long j) { return cp.A(j + 1); }, keepB, checked_div(cp.c, q, "q"));
        }
        case Gen::Pi1: {
            if (g.inverse) {
                CParams<F> cur = cp;
                for (long k = 0; k < n; ++k) cur = act_on_cparams(tok::pi1(), cur);
                return cur;
            }
            const F bn = cp.B(n);
            return detail::rebuild(
                cp, [&](long j) { return checked_div(q * cp.A(j - 1), bn, "b_n"); },
                [&](long j) { return checked_div(q * cp.B(j - 1), bn, "b_n"); }, cp.c);
        }
        case Gen::Pi2: {
            const F qa = q * cp.A(n - 1);
            F pb(1), pa(1);
            for (long l = 1; l <= n; ++l) pb *= cp.B(l);
            for (long l = 1; l <= n + 1; ++l) pa *= cp.A(l);
            F c2 = checked_div(pb, q * cp.c * pa, "q c prod a");
            return detail::rebuild(
                cp, [&](long j) { return checked_div(qa, cp.B(2 * n - j), "b_{2n-j}"); },
                [&](long j) { return checked_div(qa, cp.A(2 * n - j), "a_{2n-j}"); }, std::move(c2));
        }
        case Gen::TauC: {
            F c2 = g.inverse ? F(cp.c * q) : checked_div(cp.c, q, "q");
            return detail::rebuild(cp, keepA, keepB, std::move(c2));
        }
        case Gen::TauI:
        case Gen::TauIJ:
            return act_word_on_cparams(derived_word(g, cp.n), cp);
        default:
            throw DomainError("no c-parameter action for " + to_string(g));
    }
}

// Diagonal q-shifts: tau_c(c) = c/q; tau_i(a_k) = q^{-delta_ik} a_k;
// tau_i_j(a_k) = q^{delta_{j,n+1} - delta_ik} a_k, tau_i_j(b_k) = q^{delta_{j,n+1} - delta_jk} b_k.
template <class F>
CParams<F> translation_on_cparams(const Token& t, const CParams<F>& cp) {
    const long n = cp.n;
    const long sgn = t.inverse ? -1 : 1;
    CParams<F> r = cp;
    switch (t.gen) {
        case Gen::TauC:
            r.c = cp.c * ipow(cp.q, -sgn);
            return r;
        case Gen::TauI:
            if (t.i < 1 || t.i > n + 1) throw DomainError("tau_i needs 1 <= i <= n+1");
            r.a[static_cast<std::size_t>(t.i - 1)] *= ipow(cp.q, -sgn);
            return r;
        case Gen::TauIJ: {
            if (t.i < 1 || t.i > n + 1 || t.j < 1 || t.j > n + 1) throw DomainError("tau_i_j needs 1 <= i, j <= n+1");
            const long up = (t.j == n + 1) ? 1 : 0;
            for (long k = 1; k <= n + 1; ++k) {
                const long ea = up - (k == t.i ? 1 : 0);
                const long eb = up - (k == t.j ? 1 : 0);
                r.a[static_cast<std::size_t>(k - 1)] *= ipow(cp.q, sgn * ea);
                if (k <= n) r.b[static_cast<std::size_t>(k - 1)] *= ipow(cp.q, sgn * eb);
            }
            return r;
        }
        default:
            throw DomainError("translation_on_cparams needs tau_c, tau_i or tau_i_j");
    }
}

// ---------------------------------------------------------------------------
// Closed-form actions on the even variables

namespace detail {

template <class F>
F alpha_of(const CParams<F>& cp, long j) {
    // alpha_{2k-2} = b_{n-k+1}/a_{n-k+1}, alpha_{2k-1} = a_{n-k+1}/b_{n-k}
    const long n = cp.n;
    const long N = 2 * n + 2;
    const long jj = mod(j, N);
    if (jj % 2 == 0) {
        const long k = mod(jj / 2 + 1, n + 1);
        return checked_div(cp.B(n - k + 1), cp.A(n - k + 1), "a in alpha_even");
    }
    const long k = mod((jj + 1) / 2, n + 1);
    return checked_div(cp.A(n - k + 1), cp.B(n - k), "b in alpha_odd");
}

}  // namespace detail

// T_j of the q-Riccati flow. The middle sum uses alpha_{2j+2l+1} and the
// j-shifted even entries; this is the form that reproduces the tau_c word.
template <class F>
F t_poly(long j, const SpecialState<F>& s) {
    const auto& cp = s.params;
    const long n = cp.n;
    auto al = [&](long k) { return detail::alpha_of(cp, k); };
    auto ph = [&](long k) -> const F& { return s.E(k); };  // phi_{2k,0}
    F t(1);
    for (long l = 0; l < n; ++l) t *= al(2 * j + 2 * l + 1);
    for (long l = 0; l <= n; ++l) t *= al(2 * l);
    for (long k = 1; k <= n; ++k) {
        F term = (k % 2 == 0 ? F(1) : F(-1)) * (F(1) - al(2 * j + 2 * k - 1));
        for (long l = k; l < n; ++l) term *= al(2 * j + 2 * l + 1);
        for (long l = 0; l < k; ++l) term *= ph(j + l);
        for (long l = k; l <= n; ++l) term *= al(2 * j + 2 * l);
        t += term;
    }
    F last = (n % 2 == 0) ? F(1) : F(-1);
    for (long l = 0; l <= n; ++l) last *= ph(l);
    return t + last;
}

// T_j read literally from the printed three-part sum: phi_{2j+2l+1,0}
// (= -alpha_{2j+2l+1} on the locus) and unshifted even products. Kept to
// document where it departs from t_poly (it agrees for n = 1, j = 0).
template <class F>
F t_poly_as_printed(long j, const SpecialState<F>& s) {
    const auto& cp = s.params;
    const long n = cp.n;
    auto al = [&](long k) { return detail::alpha_of(cp, k); };
    auto ph = [&](long k) -> const F& { return s.E(k); };
    F t(1);
    for (long l = 0; l < n; ++l) t *= al(2 * j + 2 * l + 1);
    for (long l = 0; l <= n; ++l) t *= al(2 * l);
    for (long k = 1; k <= n; ++k) {
        F term = (k % 2 == 0 ? F(1) : F(-1)) * (F(1) - al(2 * j + 2 * k - 1));
        for (long l = k; l < n; ++l) term *= -al(2 * j + 2 * l + 1);
        for (long l = 0; l < k; ++l) term *= ph(l);
        for (long l = k; l <= n; ++l) term *= al(2 * l);
        t += term;
    }
    F last = (n % 2 == 0) ? F(1) : F(-1);
    for (long l = 0; l <= n; ++l) last *= ph(l);
    return t + last;
}

// tau_c(phi_{2j,0}) = phi_{2j,0} T_{j+1} / (alpha_{2j-1} alpha_{2j} T_j), c -> c/q.
template <class F>
SpecialState<F> tau_c_step(const SpecialState<F>& s) {
    const long n = s.n();
    std::vector<F> T;
    for (long j = 0; j <= n; ++j) T.push_back(t_poly(j, s));
    SpecialState<F> r{s.even, translation_on_cparams(tok::tau_c(), s.params)};
    for (long j = 0; j <= n; ++j) {
        const F den = detail::alpha_of(s.params, 2 * j - 1) * detail::alpha_of(s.params, 2 * j) * T[static_cast<std::size_t>(j)];
        r.even[static_cast<std::size_t>(j)] =
            checked_div(s.E(j) * T[static_cast<std::size_t>(mod(j + 1, n + 1))], den, "T_" + std::to_string(j));
    }
    return r;
}

template <class F>
SpecialState<F> apply_derived_closed(const Token& g, const SpecialState<F>& s);

template <class F>
SpecialState<F> apply_closed_word(const GroupWord& w, const SpecialState<F>& s) {
    SpecialState<F> cur = s;
    for (const auto& t : w) cur = apply_derived_closed(t, cur);
    return cur;
}

// Closed-form action of a derived generator on a locus point.
// Inverses: p_i, p'_i, pi_2 are involutions, pi_1^-1 = pi_1^n, and
// sigma^-1 = pi_2 sigma' pi_2 pi_1^n, sigma'^-1 = pi_2 pi_1^n sigma pi_2 and
// tau_c^-1 = pi_2 tau_c pi_2.
template <class F>
SpecialState<F> apply_derived_closed(const Token& g, const SpecialState<F>& s) {
    const auto& cp = s.params;
    const long n = cp.n;
    const long m = n + 1;
    auto A = [&](long j) { return cp.A(j); };
    auto B = [&](long j) { return cp.B(j); };
    auto E = [&](long j) -> const F& { return s.E(j); };
    auto slot = [&](std::vector<F>& v, long j) -> F& { return v[static_cast<std::size_t>(mod(j, m))]; };
    std::vector<F> nw = s.even;

    if (g.inverse) {
        switch (g.gen) {
            case Gen::P:
            case Gen::PPrime:
            case Gen::Pi2:
                return apply_derived_closed(inverse(g), s);
            case Gen::Pi1:
                return apply_closed_word(GroupWord(static_cast<std::size_t>(n), tok::pi1()), s);
            case Gen::Sigma: {
                GroupWord w{tok::pi2(), tok::sigmap(), tok::pi2()};
                w.insert(w.end(), static_cast<std::size_t>(n), tok::pi1());
                return apply_closed_word(w, s);
            }
            case Gen::SigmaPrime: {
                GroupWord w{tok::pi2()};
                w.insert(w.end(), static_cast<std::size_t>(n), tok::pi1());
                w.push_back(tok::sigma());
                w.push_back(tok::pi2());
                return apply_closed_word(w, s);
            }
            case Gen::TauC:
                return apply_closed_word({tok::pi2(), tok::tau_c(), tok::pi2()}, s);
            case Gen::TauI:
            case Gen::TauIJ:
                return apply_closed_word(derived_word(g, static_cast<int>(n)), s);
            default:
                throw DomainError("no closed form for " + to_string(g));
        }
    }

    switch (g.gen) {
        case Gen::P: {
            const long i = mod(g.i, m);
            const F x = E(-i - 2), y = E(-i - 1);
            const F d = A(i + 1) - B(i) + (A(i + 1) - A(i)) * y;
            const F ab = A(i) - B(i);
            slot(nw, -i - 2) = checked_div(x * d, ab, "a_i - b_i");
            slot(nw, -i - 1) = checked_div(ab * y, d, "a_{i+1} - b_i + (a_{i+1} - a_i) phi");
            break;
        }
        case Gen::PPrime: {
            const long i = mod(g.i, m);
            const F x = E(-i - 2), y = E(-i - 1);
            const F d = B(i) - B(i + 1) + (B(i) - A(i + 1)) * x;
            const F ba = B(i + 1) - A(i + 1);
            slot(nw, -i - 2) = checked_div(d, ba, "b_{i+1} - a_{i+1}");
            slot(nw, -i - 1) = checked_div(ba * x * y, d, "b_i - b_{i+1} + (b_i - a_{i+1}) phi");
            break;
        }
        case Gen::Sigma: {
            for (long j = 0; j <= n; ++j) {
                const F num = (A(n - j) - B(n - j)) * E(j) * (B(n - j - 1) + A(n - j - 1) * E(j + 1));
                const F den = (A(n - j - 1) - B(n - j - 1)) * (B(n - j) + A(n - j) * E(j));
                slot(nw, j) = checked_div(num, den, "sigma denominator at j=" + std::to_string(j));
            }
            break;
        }
        case Gen::SigmaPrime: {
            for (long j = 0; j <= n; ++j) {
                F num(0), den(0), pn(1), pd(1);
                for (long k = 0; k <= n; ++k) {
                    if (k > 0) {
                        pn *= E(j + k);
                        pd *= E(j + k - 1);
                    }
                    const F sg = (k % 2 == 0) ? F(1) : F(-1);
                    num += sg * (B(n - j - k - 1) - A(n - j - k)) * pn;
                    den += sg * (B(n - j - k) - A(n - j - k + 1)) * pd;
                }
                slot(nw, j) = checked_div(E(j) * num, den, "sigma' alternating sum at j=" + std::to_string(j));
            }
            break;
        }
        case Gen::Pi1:
            for (long j = 0; j <= n; ++j) slot(nw, j) = E(j + 1);
            break;
        case Gen::Pi2:
            for (long j = 0; j <= n; ++j)
                slot(nw, j) = checked_div(B(j - 1), A(j - 1) * E(-j), "a_{j-1} phi_{-2j,0}");
            break;
        case Gen::TauC:
            return tau_c_step(s);
        case Gen::TauI:
        case Gen::TauIJ:
            return apply_closed_word(derived_word(g, static_cast<int>(n)), s);
        default:
            throw DomainError("no closed form for " + to_string(g));
    }
    return SpecialState<F>{std::move(nw), act_on_cparams(g, cp)};
}

}  // namespace qgarnier
