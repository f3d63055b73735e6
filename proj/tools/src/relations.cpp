#include "qgarnier/verify/relations.hpp"

#include "qgarnier/phi.hpp"

namespace qgarnier::verify {

namespace {

GroupWord repeat(const Token& t, int k) { return GroupWord(static_cast<std::size_t>(k), t); }

// Coxeter relations of type A^(1)_{m-1} on generators gen(0..m-1).
template <class Gen>
void affine_a(std::vector<Relation>& out, const std::string& name, int m, Gen&& gen) {
    for (int i = 0; i < m; ++i) out.push_back({name + "^2 = 1", {gen(i), gen(i)}, {}});
    if (m == 2) return;
    for (int i = 0; i < m; ++i) {
        const int j = static_cast<int>(mod(i + 1, m));
        out.push_back({"braid " + name, {gen(i), gen(j), gen(i)}, {gen(j), gen(i), gen(j)}});
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 2; j < m; ++j) {
            if (i == 0 && j == m - 1) continue;
            out.push_back({"commuting " + name, {gen(i), gen(j)}, {gen(j), gen(i)}});
        }
}

}  // namespace

std::vector<Relation> fundamental_relations(int n) {
    using namespace tok;
    const int N = 2 * n + 2;
    auto rr = [&](long j) { return r(static_cast<int>(mod(j, N))); };
    std::vector<Relation> out;

    affine_a(out, "r", N, [&](int j) { return rr(j); });
    affine_a(out, "s", 2, [](int i) { return s(i); });
    affine_a(out, "s'", 2, [](int i) { return sp(i); });

    for (int j = 0; j < N; ++j)
        for (int i = 0; i < 2; ++i) {
            out.push_back({"r s = s r", {rr(j), s(i)}, {s(i), rr(j)}});
            out.push_back({"r s' = s' r", {rr(j), sp(i)}, {sp(i), rr(j)}});
        }
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) out.push_back({"s s' = s' s", {s(i), sp(k)}, {sp(k), s(i)}});

    out.push_back({"pi^{2n+2} = 1", repeat(pi(), N), {}});
    out.push_back({"pi^2 = pi'^2", {pi(), pi()}, {pip(), pip()}});
    out.push_back({"pi pi' = pi' pi", {pi(), pip()}, {pip(), pi()}});
    out.push_back({"rho^2 = 1", {rho(), rho()}, {}});
    out.push_back({"pi rho = rho pi'^-1", {pi(), rho()}, {rho(), inv(pip())}});
    for (int j = 0; j < N; ++j) {
        out.push_back({"r_j pi = pi r_{j-1}", {rr(j), pi()}, {pi(), rr(j - 1)}});
        out.push_back({"r_j pi' = pi' r_{j-1}", {rr(j), pip()}, {pip(), rr(j - 1)}});
        out.push_back({"r_j rho = rho r_{-j}", {rr(j), rho()}, {rho(), rr(-j)}});
    }
    for (int i = 0; i < 2; ++i) {
        const int prev = 1 - i;
        out.push_back({"s_i pi = pi s_{i-1}", {s(i), pi()}, {pi(), s(prev)}});
        out.push_back({"s'_i pi = pi s'_i", {sp(i), pi()}, {pi(), sp(i)}});
        out.push_back({"s_i pi' = pi' s_i", {s(i), pip()}, {pip(), s(i)}});
        out.push_back({"s'_i pi' = pi' s'_{i+1}", {sp(i), pip()}, {pip(), sp(prev)}});
        out.push_back({"s_i rho = rho s'_i", {s(i), rho()}, {rho(), sp(i)}});
    }
    return out;
}

std::vector<Relation> derived_relations(int n) {
    using namespace tok;
    const int m = n + 1;
    auto P = [&](long i) { return p(static_cast<int>(mod(i, m))); };
    auto PP = [&](long i) { return pp(static_cast<int>(mod(i, m))); };
    std::vector<Relation> out;

    affine_a(out, "p", m, [&](int i) { return P(i); });
    affine_a(out, "p'", m, [&](int i) { return PP(i); });
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) out.push_back({"p p' = p' p", {P(i), PP(k)}, {PP(k), P(i)}});

    for (int i = 0; i < m; ++i) {
        out.push_back({"p_i sigma = sigma p_{i+1}", {P(i), sigma()}, {sigma(), P(i + 1)}});
        out.push_back({"p'_i sigma = sigma p'_i", {PP(i), sigma()}, {sigma(), PP(i)}});
        out.push_back({"p_i sigma' = sigma' p_{i-1}", {P(i), sigmap()}, {sigmap(), P(i - 1)}});
        out.push_back({"p'_i sigma' = sigma' p'_i", {PP(i), sigmap()}, {sigmap(), PP(i)}});
        out.push_back({"p_i pi_1 = pi_1 p_{i+1}", {P(i), pi1()}, {pi1(), P(i + 1)}});
        out.push_back({"p'_i pi_1 = pi_1 p'_{i+1}", {PP(i), pi1()}, {pi1(), PP(i + 1)}});
        out.push_back({"p_i pi_2 = pi_2 p'_{-i-3}", {P(i), pi2()}, {pi2(), PP(-i - 3)}});
    }
    out.push_back({"sigma sigma' = sigma' sigma", {sigma(), sigmap()}, {sigmap(), sigma()}});
    out.push_back({"sigma pi_1 = pi_1 sigma", {sigma(), pi1()}, {pi1(), sigma()}});
    out.push_back({"sigma' pi_1 = pi_1 sigma'", {sigmap(), pi1()}, {pi1(), sigmap()}});
    // sigma pi_2 = pi_1 pi_2 sigma'^-1 with the leftmost token acting first
    out.push_back({"sigma pi_2 sigma' = pi_1 pi_2", {sigma(), pi2(), sigmap()}, {pi1(), pi2()}});
    out.push_back({"pi_1^{n+1} = 1", repeat(pi1(), m), {}});
    out.push_back({"pi_2^2 = 1", {pi2(), pi2()}, {}});
    // pi_1 pi_2 = pi_2 pi_1^-1
    out.push_back({"pi_1 pi_2 pi_1 = pi_2", {pi1(), pi2(), pi1()}, {pi2()}});

    for (int i = 0; i < m; ++i) {
        out.push_back({"p_i tau_c = tau_c p_i", {P(i), tau_c()}, {tau_c(), P(i)}});
        out.push_back({"p'_i tau_c = tau_c p'_i", {PP(i), tau_c()}, {tau_c(), PP(i)}});
    }
    out.push_back({"sigma tau_c = tau_c sigma", {sigma(), tau_c()}, {tau_c(), sigma()}});
    out.push_back({"sigma' tau_c = tau_c sigma'", {sigmap(), tau_c()}, {tau_c(), sigmap()}});
    out.push_back({"pi_1 tau_c = tau_c pi_1", {pi1(), tau_c()}, {tau_c(), pi1()}});
    // pi_2 tau_c = tau_c^-1 pi_2
    out.push_back({"tau_c pi_2 tau_c = pi_2", {tau_c(), pi2(), tau_c()}, {pi2()}});
    out.push_back({"tau_c = sigma' sigma", {tau_c()}, {sigmap(), sigma()}});
    return out;
}

}  // namespace qgarnier::verify
