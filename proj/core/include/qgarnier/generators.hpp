#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "qgarnier/phi.hpp"
#include "qgarnier/token.hpp"
#include "qgarnier/words.hpp"

namespace qgarnier {

namespace detail {

inline std::string phi_name(long j, long i) {
    return "phi_{" + std::to_string(j) + "," + std::to_string(i) + "}";
}

template <class F>
PhiState<F> apply_r(long jj, const PhiState<F>& s) {
    PhiState<F> out = s;
    for (long i = 0; i < 2; ++i) {
        const F one(1);
        const F a = one + s(jj, i);
        const F b = one + s(jj, i + 1);
        const std::string nb = "1+" + phi_name(mod(jj, s.size()), mod(i + 1, 2));
        const std::string na = "1+" + phi_name(mod(jj, s.size()), mod(i, 2));
        out.at(jj - 1, i) = checked_div(s(jj - 1, i) * s(jj, i + 1) * a, b, nb);
        out.at(jj, i) = checked_div(one, s(jj, i + 1), phi_name(mod(jj, s.size()), mod(i + 1, 2)));
        out.at(jj + 1, i) = checked_div(s(jj, i) * s(jj + 1, i) * b, a, na);
    }
    return out;
}

// s_ii acting through an accessor get(j, i); writes through put(j, i, value).
template <class F, class Get, class Put>
void apply_s_core(long ii, long N, Get&& get, Put&& put) {
    std::vector<F> Q(static_cast<std::size_t>(N));
    for (long j = 0; j < N; ++j) Q[static_cast<std::size_t>(j)] = q_sum_of<F>(j, ii, N, get);
    auto Qj = [&](long j) -> const F& { return Q[static_cast<std::size_t>(mod(j, N))]; };
    for (long j = 0; j < N; ++j) {
        const std::string qname = "Q_{" + std::to_string(mod(j + 2, N)) + "," + std::to_string(mod(ii, 2)) + "}";
        const std::string qname0 = "Q_{" + std::to_string(j) + "," + std::to_string(mod(ii, 2)) + "}";
        F v0 = checked_div(checked_div(F(1), get(j + 1, ii), phi_name(mod(j + 1, N), mod(ii, 2))) * Qj(j),
                           Qj(j + 2), qname);
        F v1 = checked_div(get(j, ii) * get(j, ii + 1) * get(j + 1, ii) * Qj(j + 2), Qj(j), qname0);
        put(j, ii, std::move(v0));
        put(j, ii + 1, std::move(v1));
    }
}

template <class F>
PhiState<F> apply_s(long ii, const PhiState<F>& s) {
    PhiState<F> out = s;
    apply_s_core<F>(
        ii, s.size(), [&](long j, long i) -> const F& { return s(j, i); },
        [&](long j, long i, F v) { out.at(j, i) = std::move(v); });
    return out;
}

template <class F>
PhiState<F> apply_pi(const PhiState<F>& s) {
    return PhiState<F>::generate(s.n(), [&](long j, long i) { return s(j + 1, i + 1); });
}

template <class F>
PhiState<F> apply_rho(const PhiState<F>& s) {
    return PhiState<F>::generate(s.n(), [&](long j, long i) { return s(-j, i - j); });
}

}  // namespace detail

// s'_i computed directly from its primed-variable form instead of by conjugation.
template <class F>
PhiState<F> apply_s_prime_transcribed(long ii, const PhiState<F>& s) {
    PhiState<F> out = s;
    detail::apply_s_core<F>(
        ii, s.size(), [&](long j, long i) -> const F& { return s.primed(j, i); },
        [&](long j, long i, F v) { out.at(-j, i - j) = std::move(v); });
    return out;
}

// Applies one fundamental generator (r, s, s', pi, pi', rho, possibly inverted).
template <class F>
PhiState<F> apply_generator(const Token& t, const PhiState<F>& s) {
    switch (t.gen) {
        case Gen::R:
            return detail::apply_r(t.i, s);
        case Gen::S:
            return detail::apply_s(t.i, s);
        case Gen::SPrime:
            // s'_i = rho s_i rho
            return detail::apply_rho(detail::apply_s(t.i, detail::apply_rho(s)));
        case Gen::Pi: {
            if (!t.inverse) return detail::apply_pi(s);
            // pi has order 2n+2, so pi^-1 = pi^{2n+1}
            PhiState<F> out = s;
            for (long k = 0; k < s.size() - 1; ++k) out = detail::apply_pi(out);
            return out;
        }
        case Gen::PiPrime: {
            const long d = t.inverse ? -1 : 1;
            return PhiState<F>::generate(s.n(), [&](long j, long i) { return s(j + d, i); });
        }
        case Gen::Rho:
            return detail::apply_rho(s);
        default:
            throw DomainError("apply_generator needs a fundamental token, got " + to_string(t));
    }
}

// Applies a word; tokens act on points left to right (see GroupWord).
// Derived tokens are expanded through derived_word.
template <class F>
PhiState<F> apply_word(const GroupWord& w, const PhiState<F>& s) {
    PhiState<F> cur = s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        try {
            if (is_fundamental(w[k].gen))
                cur = apply_generator(w[k], cur);
            else
                cur = apply_word(derived_word(w[k], s.n()), cur);
        } catch (const DivisionByZero& e) {
            throw DivisionByZero("step " + std::to_string(k) + " (" + to_string(w[k]) + "): " + e.what());
        }
    }
    return cur;
}

// Parameter action of a fundamental generator on (alpha, beta, beta', q),
// taken from the displayed formulas rather than from the phi action.
template <class F>
ObservableParams<F> act_on_observables(const Token& t, const ObservableParams<F>& o) {
    ObservableParams<F> r = o;
    const long N = static_cast<long>(o.alpha.size());
    auto A = [&](long j) -> F& { return r.alpha[static_cast<std::size_t>(mod(j, N))]; };
    auto b = [](std::array<F, 2>& arr, long i) -> F& { return arr[static_cast<std::size_t>(mod(i, 2))]; };
    auto cb = [](const std::array<F, 2>& arr, long i) -> const F& { return arr[static_cast<std::size_t>(mod(i, 2))]; };
    switch (t.gen) {
        case Gen::R: {
            const F aj = o.a(t.i);
            A(t.i) = checked_div(F(1), aj, "alpha_j");
            A(t.i - 1) = o.a(t.i - 1) * aj;
            A(t.i + 1) = o.a(t.i + 1) * aj;
            break;
        }
        case Gen::S: {
            const F bi = cb(o.beta, t.i);
            b(r.beta, t.i) = checked_div(F(1), bi, "beta_i");
            b(r.beta, t.i + 1) = cb(o.beta, t.i + 1) * bi * bi;
            break;
        }
        case Gen::SPrime: {
            const F bi = cb(o.betap, t.i);
            b(r.betap, t.i) = checked_div(F(1), bi, "beta'_i");
            b(r.betap, t.i + 1) = cb(o.betap, t.i + 1) * bi * bi;
            break;
        }
        case Gen::Pi: {
            const long d = t.inverse ? -1 : 1;
            for (long j = 0; j < N; ++j) A(j) = o.a(j + d);
            for (long i = 0; i < 2; ++i) b(r.beta, i) = cb(o.beta, i + d);
            break;
        }
        case Gen::PiPrime: {
            const long d = t.inverse ? -1 : 1;
            for (long j = 0; j < N; ++j) A(j) = o.a(j + d);
            for (long i = 0; i < 2; ++i) b(r.betap, i) = cb(o.betap, i - d);
            break;
        }
        case Gen::Rho: {
            for (long j = 0; j < N; ++j) A(j) = o.a(-j);
            r.beta = o.betap;
            r.betap = o.beta;
            break;
        }
        default:
            throw DomainError("act_on_observables needs a fundamental token, got " + to_string(t));
    }
    return r;
}

// Random exact states with entries k/m, 1 <= k, m <= 20, rejecting
// degenerate draws (zero entries, 1+phi = 0, vanishing Q or Q' sums,
// alpha_i = beta_i).
class PhiSampler {
public:
    explicit PhiSampler(std::uint64_t seed) : rng_(seed) {}

    PhiState<ExactQ> operator()(int n);

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

struct RelationReport {
    bool holds = true;
    int trials = 0;
    int rejected = 0;            // samples discarded because a word hit a pole
    std::string counterexample;  // empty when holds
};

// Checks lhs == rhs as maps on trials random exact states.
RelationReport check_relation(const GroupWord& lhs, const GroupWord& rhs, int n, int trials,
                              PhiSampler& sampler);

}  // namespace qgarnier
