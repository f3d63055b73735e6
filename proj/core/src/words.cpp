#include "qgarnier/words.hpp"

#include "qgarnier/errors.hpp"
#include "qgarnier/phi.hpp"

namespace qgarnier {

namespace {

GroupWord forward_word(const Token& g, int n) {
    const long N = 2L * n + 2;
    const long m = n + 1;
    auto r = [&](long j) { return tok::r(static_cast<int>(mod(j, N))); };
    auto pidx = [&](long i) { return static_cast<int>(mod(i, m)); };
    switch (g.gen) {
        case Gen::P: {
            const long i = pidx(g.i);
            return {r(-2 * i - 3), r(-2 * i - 2), r(-2 * i - 3)};
        }
        case Gen::PPrime: {
            const long i = pidx(g.i);
            return {r(-2 * i - 4), r(-2 * i - 3), r(-2 * i - 4)};
        }
        case Gen::Sigma: {
            GroupWord w{tok::pi(), tok::s(0)};
            for (int k = 0; k <= n; ++k) w.push_back(r(2 * k + 1));
            return w;
        }
        case Gen::SigmaPrime: {
            GroupWord w{tok::inv(tok::pip()), tok::sp(0)};
            for (int k = 0; k <= n; ++k) w.push_back(r(2 * k));
            return w;
        }
        case Gen::Pi1:
            return {tok::pi(), tok::pi()};
        case Gen::Pi2:
            return {tok::rho(), tok::inv(tok::pip()), tok::pi()};
        case Gen::TauC:
            return {tok::inv(tok::pip()), tok::pi(), tok::sp(0), tok::s(0)};
        case Gen::TauI: {
            if (g.i < 1 || g.i > n + 1) throw DomainError("tau_i needs 1 <= i <= n+1");
            GroupWord w;
            for (int k = 0; k < n; ++k) w.push_back(tok::p(pidx(g.i + k)));
            w.push_back(tok::sigma());
            return w;
        }
        case Gen::TauIJ: {
            if (g.i < 1 || g.i > n + 1 || g.j < 1 || g.j > n + 1)
                throw DomainError("tau_i_j needs 1 <= i, j <= n+1");
            GroupWord w;
            for (int k = 0; k < n; ++k) w.push_back(tok::p(pidx(g.i + k)));
            for (int k = g.j; k <= n; ++k) w.push_back(tok::pp(k));
            w.push_back(tok::pi1());
            for (int k = 1; k < g.j; ++k) w.push_back(tok::pp(k));
            return w;
        }
        default:
            throw DomainError("derived_word called on fundamental token " + to_string(g));
    }
}

}  // namespace

GroupWord derived_word(const Token& g, int n) {
    Token fwd = g;
    fwd.inverse = false;
    GroupWord w = forward_word(fwd, n);
    return g.inverse ? inverse(w) : w;
}

GroupWord expand_fundamental(const GroupWord& w, int n) {
    GroupWord out;
    for (const Token& t : w) {
        if (is_fundamental(t.gen)) {
            out.push_back(t);
        } else {
            GroupWord sub = expand_fundamental(derived_word(t, n), n);
            out.insert(out.end(), sub.begin(), sub.end());
        }
    }
    return out;
}

}  // namespace qgarnier
