#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "qgarnier/scalar.hpp"

namespace qgarnier {

// Floor-style modulus: result in [0, m).
inline long mod(long x, long m) {
    long r = x % m;
    return r < 0 ? r + m : r;
}

// Dependent variables phi[j][i], j in Z_{2n+2}, i in Z_2.
// Any integer index is reduced modulo 2n+2 and 2.
template <class F>
class PhiState {
public:
    explicit PhiState(int n) : n_(n), data_(static_cast<std::size_t>(2 * (2 * n + 2)), F(1)) {
        if (n < 1) throw DomainError("order n must be >= 1");
    }

    template <class Fn>
    static PhiState generate(int n, Fn&& fn) {
        PhiState s(n);
        for (long j = 0; j < s.size(); ++j)
            for (long i = 0; i < 2; ++i) s.at(j, i) = fn(j, i);
        return s;
    }

    int n() const { return n_; }
    long size() const { return 2L * n_ + 2; }  // 2n+2

    const F& operator()(long j, long i) const { return data_[index(j, i)]; }
    F& at(long j, long i) { return data_[index(j, i)]; }

    // phi'_{j,i} = phi_{-j,i-j}
    const F& primed(long j, long i) const { return (*this)(-j, i - j); }

    friend bool operator==(const PhiState& a, const PhiState& b) {
        return a.n_ == b.n_ && a.data_ == b.data_;
    }

    // Throws DomainError if some entry is zero.
    void validate() const {
        for (long j = 0; j < size(); ++j)
            for (long i = 0; i < 2; ++i)
                if (is_zero((*this)(j, i)))
                    throw DomainError("phi[" + std::to_string(j) + "][" + std::to_string(i) +
                                      "] = 0");
    }

private:
    std::size_t index(long j, long i) const {
        return static_cast<std::size_t>(2 * mod(j, size()) + mod(i, 2));
    }

    int n_;
    std::vector<F> data_;
};

template <class F>
struct ObservableParams {
    std::vector<F> alpha;  // alpha[j], j in Z_{2n+2}
    std::array<F, 2> beta{F(1), F(1)};
    std::array<F, 2> betap{F(1), F(1)};
    F qval{1};

    int n() const { return static_cast<int>(alpha.size()) / 2 - 1; }
    const F& a(long j) const { return alpha[static_cast<std::size_t>(mod(j, static_cast<long>(alpha.size())))]; }

    friend bool operator==(const ObservableParams& x, const ObservableParams& y) {
        return x.alpha == y.alpha && x.beta == y.beta && x.betap == y.betap && x.qval == y.qval;
    }
};

template <class F>
ObservableParams<F> observables(const PhiState<F>& s) {
    ObservableParams<F> o;
    const long N = s.size();
    o.alpha.resize(static_cast<std::size_t>(N));
    o.qval = F(1);
    for (long j = 0; j < N; ++j) {
        o.alpha[static_cast<std::size_t>(j)] = s(j, 0) * s(j, 1);
        o.qval *= o.alpha[static_cast<std::size_t>(j)];
    }
    for (long i = 0; i < 2; ++i) {
        F b(1), bp(1);
        for (long j = 0; j < N; ++j) {
            b *= s(j, i);
            bp *= s(j, i + j);
        }
        o.beta[static_cast<std::size_t>(i)] = b;
        o.betap[static_cast<std::size_t>(i)] = bp;
    }
    return o;
}

// Q[j][i] = sum_{k=0}^{2n+1} prod_{l=0}^{k-1} phi_{j+l,i}; Qp likewise over phi'.
template <class F>
struct QSums {
    std::vector<std::array<F, 2>> Q;
    std::vector<std::array<F, 2>> Qp;

    const F& q(long j, long i) const {
        return Q[static_cast<std::size_t>(mod(j, static_cast<long>(Q.size())))][static_cast<std::size_t>(mod(i, 2))];
    }
    const F& qp(long j, long i) const {
        return Qp[static_cast<std::size_t>(mod(j, static_cast<long>(Qp.size())))][static_cast<std::size_t>(mod(i, 2))];
    }
};

template <class F, class Get>
F q_sum_of(long j, long i, long N, Get&& get) {
    F total(0), prod(1);
    for (long k = 0; k < N; ++k) {
        total += prod;
        prod *= get(j + k, i);
    }
    return total;
}

template <class F>
QSums<F> q_sums(const PhiState<F>& s) {
    const long N = s.size();
    QSums<F> r;
    r.Q.resize(static_cast<std::size_t>(N));
    r.Qp.resize(static_cast<std::size_t>(N));
    auto plain = [&](long j, long i) -> const F& { return s(j, i); };
    auto primed = [&](long j, long i) -> const F& { return s.primed(j, i); };
    for (long j = 0; j < N; ++j) {
        for (long i = 0; i < 2; ++i) {
            r.Q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = q_sum_of<F>(j, i, N, plain);
            r.Qp[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = q_sum_of<F>(j, i, N, primed);
        }
    }
    return r;
}

template <class F>
std::string to_string(const PhiState<F>& s) {
    std::string out = "{";
    for (long j = 0; j < s.size(); ++j) {
        if (j) out += ", ";
        out += "(" + to_string(s(j, 0)) + ", " + to_string(s(j, 1)) + ")";
    }
    return out + "}";
}

}  // namespace qgarnier
