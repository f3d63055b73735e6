#include "qgarnier/weyl_matrices.hpp"

#include <algorithm>

namespace qgarnier {

namespace {

using MQ = Matrix<ExactQ>;

QMatrix plain(MQ core, const CParams<ExactQ>& cp) { return QMatrix{std::move(core), {}, cp}; }

QMatrix with_power(MQ core, const CParams<ExactQ>& cp, ExactQ base) {
    return QMatrix{std::move(core), {PowerFactor{cp.c, std::move(base)}}, cp};
}

ExactQ div(const ExactQ& a, const ExactQ& b, const char* what) { return checked_div(a, b, what); }

MQ tau_c_core(const CParams<ExactQ>& cp) {
    const int n = cp.n;
    const ExactQ& c = cp.c;
    MQ M(n + 1);
    for (int j1 = 1; j1 <= n + 1; ++j1)
        for (int j2 = 1; j2 <= n + 1; ++j2) {
            if (j1 == j2)
                M(j1, j2) = cp.B(n - j1 + 1) - cp.A(n - j1 + 2) * c;
            else if (j2 > j1)
                M(j1, j2) = cp.B(n - j2 + 1) - cp.A(n - j2 + 2);
            else
                M(j1, j2) = (cp.B(n - j2 + 1) - cp.A(n - j2 + 2)) * c;
        }
    return M * div(ExactQ(1), ExactQ(1) - c, "1 - c");
}

QMatrix forward_matrix(const Token& g, const CParams<ExactQ>& cp) {
    const int n = cp.n;
    const long m = n + 1;
    const ExactQ& q = cp.q;
    const ExactQ& c = cp.c;
    auto A = [&](long j) { return cp.A(j); };
    auto B = [&](long j) { return cp.B(j); };
    switch (g.gen) {
        case Gen::TauC:
            return plain(tau_c_core(cp), cp);
        case Gen::P: {
            const long i = mod(g.i, m);
            MQ M = MQ::identity(n + 1);
            if (i == 0) {
                const ExactQ d = A(1) - B(0);
                for (int j = 1; j <= n; ++j) M(j, j) = div(A(0) - B(0), d, "a_1 - b_0");
                M(n + 1, 1) = div(A(0) - A(1), d, "a_1 - b_0") * q * c;
            } else {
                const ExactQ d = A(i) - B(i);
                const int r = static_cast<int>(n - i + 1);
                M(r, r) = div(A(i + 1) - B(i), d, "a_i - b_i");
                M(r, r + 1) = div(A(i) - A(i + 1), d, "a_i - b_i");
            }
            return plain(std::move(M), cp);
        }
        case Gen::PPrime: {
            const long i = mod(g.i, m);
            MQ M = MQ::identity(n + 1);
            if (i == 0) {
                const ExactQ d = B(1) - A(1);
                M(n + 1, n + 1) = div(B(0) - A(1), d, "b_1 - a_1");
                M(n + 1, n) = div(B(1) - B(0), d, "b_1 - a_1");
                return with_power(std::move(M), cp, B(1));
            }
            if (i == n) {
                const ExactQ d = B(n + 1) - A(n + 1);
                M(1, 1) = div(B(n) - A(n + 1), d, "b_{n+1} - a_{n+1}");
                M(1, n + 1) = div(div(B(n + 1) - B(n), d, "b_{n+1} - a_{n+1}"), q * c, "q c");
                return with_power(std::move(M), cp, div(B(n), q, "q"));
            }
            const ExactQ d = B(i + 1) - A(i + 1);
            const int r = static_cast<int>(n - i + 1);
            M(r, r) = div(B(i) - A(i + 1), d, "b_{i+1} - a_{i+1}");
            M(r, r - 1) = div(B(i + 1) - B(i), d, "b_{i+1} - a_{i+1}");
            return plain(std::move(M), cp);
        }
        case Gen::Sigma: {
            MQ M(n + 1);
            const ExactQ ab0 = A(0) - B(0);
            for (int j = 1; j <= n + 1; ++j) {
                const ExactQ d = A(n - j + 1) - B(n - j + 1);
                M(j, j) = div(B(n - j + 1) * ab0, d, "a_k - b_k in M_sigma");
                if (j <= n) M(j, j + 1) = div(-A(n - j + 1) * ab0, d, "a_k - b_k in M_sigma");
            }
            M(n + 1, 1) = -A(n + 1) * c;
            return plain(std::move(M), cp);
        }
        case Gen::SigmaPrime: {
            MQ M = sigma_prime_part0(cp);
            const MQ L = sigma_prime_part1(cp);
            for (int j1 = 1; j1 <= n + 1; ++j1)
                for (int j2 = 1; j2 < j1; ++j2) M(j1, j2) = L(j1, j2) * c;
            return plain(M * div(ExactQ(1), ExactQ(1) - c, "1 - c"), cp);
        }
        case Gen::Pi1: {
            MQ M(n + 1);
            for (int j = 1; j <= n; ++j) M(j, j + 1) = ExactQ(1);
            M(n + 1, 1) = q * c;
            return with_power(std::move(M), cp, div(B(n), q, "q"));
        }
        case Gen::Pi2: {
            MQ M(n + 1);
            M(1, 2) = ExactQ(1);
            M(2, 1) = div(B(n), A(n), "a_n");
            for (int j = 3; j <= n + 1; ++j) {
                ExactQ v = div(B(n), A(n) * A(n + 1), "a_n a_{n+1}");
                for (int l = 1; l <= j - 3; ++l) v *= div(B(l), A(l), "a_l");
                M(j, n + 4 - j) = div(v, c, "c");
            }
            return with_power(std::move(M), cp, q * A(n - 1));
        }
        case Gen::TauI:
            return tau_i_matrix(g.i, cp);
        case Gen::TauIJ:
            return tau_ij_matrix(g.i, g.j, cp);
        default:
            throw DomainError("no matrix for token " + to_string(g));
    }
}

// Ordered product of the factors of w, each built at its own parameter image.
QMatrix displayed_product(const GroupWord& w, const CParams<ExactQ>& cp) {
    QMatrix r{MQ::identity(cp.n + 1), {}, cp};
    for (std::size_t k = 0; k < w.size(); ++k) {
        const GroupWord prefix(w.begin(), w.begin() + static_cast<long>(k));
        const QMatrix f = gen_matrix(w[k], act_word_on_cparams(prefix, cp));
        r.core = f.core * r.core;
        r.prefactor.insert(r.prefactor.end(), f.prefactor.begin(), f.prefactor.end());
    }
    return r;
}

BigReal rel_diff(const std::vector<BigReal>& a, const std::vector<BigReal>& b) {
    std::vector<BigReal> d;
    for (std::size_t k = 0; k < a.size(); ++k) d.push_back(a[k] - b[k]);
    return norm_inf(d) / norm_inf(b);
}

}  // namespace

BigReal QMatrix::gamma() const {
    if (prefactor.empty()) return BigReal(0);
    if (params_at.c == 1 || params_at.c <= 0) throw DomainError("gamma needs c > 0, c != 1");
    const BigReal lq = log(to_big(params_at.q));
    const BigReal lc = log(to_big(params_at.c));
    BigReal g = 0;
    for (const auto& f : prefactor) g += log(to_big(f.base)) / lq * log(to_big(f.c));
    return g / lc;
}

BigReal QMatrix::prefactor_value() const {
    if (prefactor.empty()) return BigReal(1);
    const BigReal lq = log(to_big(params_at.q));
    BigReal e = 0;
    for (const auto& f : prefactor) {
        if (!(f.c > 0) || !(f.base > 0)) throw DomainError("prefactor needs positive c and base");
        e += log(to_big(f.base)) * log(to_big(f.c)) / lq;
    }
    return exp(e);
}

Matrix<BigReal> QMatrix::value() const { return to_big(core) * prefactor_value(); }

QMatrix gen_matrix(const Token& g, const CParams<ExactQ>& cp) {
    if (!g.inverse) return forward_matrix(g, cp);
    if (g.gen == Gen::TauI || g.gen == Gen::TauIJ) return word_matrix(derived_word(g, cp.n), cp);
    // M_{g^-1}(c) = (M_g(g^-1(c)))^-1
    const auto pre = act_on_cparams(g, cp);
    const QMatrix f = forward_matrix(inverse(g), pre);
    QMatrix r{qgarnier::inverse(f.core), {}, cp};
    for (const auto& pf : f.prefactor) r.prefactor.push_back(PowerFactor{pf.c, ExactQ(1) / pf.base});
    return r;
}

QMatrix act_on_matrix(const Token& g, const std::function<QMatrix(const CParams<ExactQ>&)>& builder,
                      const CParams<ExactQ>& cp) {
    return builder(act_on_cparams(g, cp));
}

QMatrix word_matrix(const GroupWord& w, const CParams<ExactQ>& cp) {
    QMatrix r{MQ::identity(cp.n + 1), {}, cp};
    CParams<ExactQ> cur = cp;
    for (std::size_t k = 0; k < w.size(); ++k) {
        try {
            const QMatrix f = gen_matrix(w[k], cur);
            r.core = f.core * r.core;
            r.prefactor.insert(r.prefactor.end(), f.prefactor.begin(), f.prefactor.end());
            cur = act_on_cparams(w[k], cur);
        } catch (const DivisionByZero& e) {
            throw DivisionByZero("step " + std::to_string(k) + " (" + to_string(w[k]) + "): " + e.what());
        }
    }
    return r;
}

ExactQ delta_ij(int i, int j, const CParams<ExactQ>& cp) {
    const int n = cp.n;
    const ExactQ& q = cp.q;
    if (j != n + 1) {
        const ExactQ den = (i == 1) ? ExactQ(1 - cp.A(1) / q) : ExactQ(1 - cp.A(1));
        return checked_div(ExactQ(1 - cp.B(j)), den, "Delta denominator");
    }
    ExactQ pr = q;
    for (int l = 1; l <= n; ++l) pr *= checked_div(ExactQ(1 - cp.A(l + 1)), ExactQ(1 - q * cp.B(l)), "1 - q b_l");
    if (i == 1) return pr;
    return pr * checked_div(ExactQ(1 - cp.A(i) / q), ExactQ(1 - cp.A(i)), "1 - a_i");
}

QMatrix tau_i_matrix(int i, const CParams<ExactQ>& cp) {
    return displayed_product(derived_word(tok::tau_i(i), cp.n), cp);
}

QMatrix tau_ij_matrix(int i, int j, const CParams<ExactQ>& cp) {
    QMatrix r = displayed_product(derived_word(tok::tau_ij(i, j), cp.n), cp);
    r.core *= checked_div(ExactQ(1), delta_ij(i, j, cp), "Delta_{i,j}");
    return r;
}

Matrix<ExactQ> sigma_prime_part0(const CParams<ExactQ>& cp) {
    const int n = cp.n;
    MQ M(n + 1);
    const ExactQ d = cp.A(1) - cp.B(0);
    for (int j1 = 1; j1 <= n + 1; ++j1)
        for (int j2 = j1; j2 <= n + 1; ++j2)
            M(j1, j2) = checked_div(ExactQ(cp.A(n - j2 + 2) - cp.B(n - j2 + 1)), d, "a_1 - b_0");
    return M;
}

Matrix<ExactQ> sigma_prime_part1(const CParams<ExactQ>& cp) {
    const int n = cp.n;
    MQ M(n + 1);
    const ExactQ d = cp.A(1) - cp.B(0);
    for (int j1 = 1; j1 <= n + 1; ++j1)
        for (int j2 = 1; j2 < j1; ++j2)
            M(j1, j2) = checked_div(ExactQ(cp.A(n - j2 + 2) - cp.B(n - j2 + 1)), d, "a_1 - b_0");
    return M;
}

std::vector<BigReal> apply_matrix(const QMatrix& M, const std::vector<BigReal>& x) { return M.value().apply(x); }

BigReal solution_residual(const QMatrix& M, const CParams<ExactQ>& target, const CParams<ExactQ>& cp,
                          const SeriesConfig& cfg) {
    const auto x = eval_x(cp, cfg).vals;
    const auto xt = eval_x(target, cfg).vals;
    const auto mx = apply_matrix(M, x);
    std::vector<BigReal> d;
    for (std::size_t k = 0; k < x.size(); ++k) d.push_back(xt[k] - mx[k]);
    return norm_inf(d) / norm_inf(x);
}

BigReal word_solution_residual(const GroupWord& w, const CParams<ExactQ>& cp, const SeriesConfig& cfg) {
    return solution_residual(word_matrix(w, cp), act_word_on_cparams(w, cp), cp, cfg);
}

SecondSolution second_solution(const Token& g, const CParams<ExactQ>& cp, const SeriesConfig& cfg) {
    const bool allowed = (g.gen == Gen::PPrime && (mod(g.i, cp.n + 1) == 0 || mod(g.i, cp.n + 1) == cp.n)) ||
                         g.gen == Gen::Pi1 || g.gen == Gen::Pi2;
    if (!allowed || g.inverse) throw DomainError("second_solution needs p'_0, p'_n, pi_1 or pi_2");
    if (g.gen == Gen::Pi2) {
        ExactQ pb(1), pa(1);
        for (int l = 1; l <= cp.n; ++l) pb *= cp.B(l);
        for (int l = 1; l <= cp.n + 1; ++l) pa *= cp.A(l);
        if (!(pb < pa)) throw DomainError("pi_2 needs b_1...b_n < a_1...a_{n+1}");
    }
    auto z_at = [&](const CParams<ExactQ>& p) {
        const auto pre = act_on_cparams(inverse(g), p);
        const QMatrix M = gen_matrix(g, pre);
        return apply_matrix(M, eval_x(pre, cfg).vals);
    };
    SecondSolution out;
    out.z = z_at(cp);
    const auto z1 = z_at(translation_on_cparams(tok::tau_c(), cp));
    const auto mz = gen_matrix(tok::tau_c(), cp).value().apply(out.z);
    out.residual = rel_diff(mz, z1);
    const auto x = eval_x(cp, cfg).vals;
    std::vector<BigReal> ratio;
    for (std::size_t k = 0; k < x.size(); ++k) ratio.push_back(out.z[k] / x[k]);
    for (const auto& r1 : ratio)
        for (const auto& r2 : ratio) out.gap = std::max(out.gap, BigReal(abs(r1 - r2)));
    return out;
}

BigReal lemma_pn_pi1_residual(const CParams<ExactQ>& cp, const SeriesConfig& cfg) {
    const GroupWord w{tok::pp(cp.n), tok::pi1()};
    QMatrix M = word_matrix(w, cp);
    M.core *= checked_div(ExactQ(1 - cp.A(0)), ExactQ(1 - cp.B(cp.n)), "1 - b_n");
    const auto lhs = eval_x(act_word_on_cparams(w, cp), cfg).vals;
    const auto rhs = apply_matrix(M, eval_x(cp, cfg).vals);
    return rel_diff(rhs, lhs);
}

ExactCheckReport tilde_identities(const CParams<ExactQ>& cp) {
    ExactCheckReport rep;
    const int n = cp.n;
    auto core = [](const Token& t, const CParams<ExactQ>& p) { return gen_matrix(t, p).core; };
    auto fail = [&](const std::string& what) {
        rep.holds = false;
        if (rep.detail.empty()) rep.detail = what;
    };

    const MQ P1 = core(tok::pi1(), cp);
    MQ pw = MQ::identity(n + 1);
    for (int k = 0; k <= n; ++k) pw = P1 * pw;
    ++rep.checked;
    if (!(pw == MQ::identity(n + 1) * (cp.q * cp.c))) fail("M~_{pi_1}^{n+1} != q c I");

    const auto cp_pi1 = act_on_cparams(tok::pi1(), cp);
    for (int i = 0; i <= n; ++i) {
        const MQ Mi = core(tok::pp(i), cp);
        const MQ back = core(tok::pp(i), act_on_cparams(tok::pp(i), cp));
        ++rep.checked;
        if (!(back * Mi == MQ::identity(n + 1))) fail("p'_" + std::to_string(i) + "(M~) M~ != I");
        const MQ next = core(tok::pp((i + 1) % (n + 1)), cp_pi1);
        ++rep.checked;
        if (!(P1 * Mi == next * P1)) fail("M~_{pi_1} M~_{p'_" + std::to_string(i) + "} relation fails");
    }
    return rep;
}

BigReal pi2_proof_identity_residual(const CParams<ExactQ>& cp) {
    const auto pinv = act_on_cparams(tok::inv(tok::tau_c()), cp);
    const auto lhs = inverse(gen_matrix(tok::tau_c(), pinv).value());
    const auto rhs = inverse(gen_matrix(tok::pi2(), pinv).value()) *
                     gen_matrix(tok::tau_c(), act_on_cparams(tok::pi2(), cp)).value() *
                     gen_matrix(tok::pi2(), cp).value();
    return norm_inf(lhs - rhs) / norm_inf(lhs);
}

}  // namespace qgarnier
