#include "qgarnier/specialization.hpp"

namespace qgarnier {

PhiState<ExactQ> phi_on_locus(const SpecialState<ExactQ>& s) {
    const auto o = observables_from_cparams(s.params);
    PhiState<ExactQ> phi(s.n());
    for (long j = 0; j <= s.n(); ++j) {
        phi.at(2 * j + 1, 0) = -o.a(2 * j + 1);
        phi.at(2 * j + 1, 1) = ExactQ(-1);
        phi.at(2 * j, 0) = s.E(j);
        phi.at(2 * j, 1) = checked_div(o.a(2 * j), s.E(j), "phi_{2j,0}");
    }
    return phi;
}

bool on_locus(const PhiState<ExactQ>& phi) {
    for (long j = 0; j <= phi.n(); ++j) {
        if (phi(2 * j + 1, 1) != -1) return false;
        // with phi_{2j+1,1} = -1 the value alpha_{2j+1} = -phi_{2j+1,0} holds identically
    }
    return true;
}

SpecialState<ExactQ> special_from_phi(const PhiState<ExactQ>& phi) {
    if (!on_locus(phi)) throw ConstraintViolated("state is off the specialization locus");
    const auto o = observables(phi);
    SpecialState<ExactQ> s;
    s.params = cparams_from_observables(o, phi.n());
    for (long j = 0; j <= phi.n(); ++j) s.even.push_back(phi(2 * j, 0));
    if (!satisfies_constraint(s)) throw ConstraintViolated("even product constraint fails");
    return s;
}

Directions random_directions(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(1, 9);
    Directions d;
    for (int j = 0; j <= n; ++j) {
        d.t.emplace_back(dist(rng));
        d.u.emplace_back(dist(rng));
    }
    return d;
}

PhiState<PerturbQ> specialize(const SpecialState<ExactQ>& s, const Directions& d) {
    const auto exact = phi_on_locus(s);
    const auto o = observables_from_cparams(s.params);
    PhiState<PerturbQ> phi(s.n());
    for (long j = 0; j <= s.n(); ++j) {
        const auto k = static_cast<std::size_t>(j);
        phi.at(2 * j + 1, 0) = PerturbQ::linear(-o.a(2 * j + 1), d.t.at(k));
        phi.at(2 * j + 1, 1) = PerturbQ::linear(ExactQ(-1), d.u.at(k));
        phi.at(2 * j, 0) = PerturbQ(exact(2 * j, 0));
        phi.at(2 * j, 1) = PerturbQ(exact(2 * j, 1));
    }
    return phi;
}

LimitResult word_limit(const GroupWord& w, const SpecialState<ExactQ>& s, const Directions& d) {
    const auto out = apply_word(w, specialize(s, d));
    LimitResult r{PhiState<ExactQ>(s.n()), 0};
    for (long j = 0; j < out.size(); ++j) {
        for (long i = 0; i < 2; ++i) {
            r.max_degree = std::max(r.max_degree, out(j, i).degree());
            r.state.at(j, i) = limit_eps0(out(j, i));
        }
    }
    return r;
}

SpecialState<ExactQ> random_locus_point(const CParams<ExactQ>& cp, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(1, 9);
    std::vector<ExactQ> free;
    for (int j = 0; j < cp.n; ++j) free.push_back(ExactQ(dist(rng)) / ExactQ(dist(rng)));
    return make_special_state(cp, std::move(free));
}

SpecializationReport preserves_specialization(const Token& g, const CParams<ExactQ>& cp, int trials,
                                              std::mt19937_64& rng) {
    SpecializationReport rep;
    const GroupWord w = is_fundamental(g.gen) ? GroupWord{g} : derived_word(g, cp.n);
    for (int t = 0; t < trials; ++t) {
        const auto s = random_locus_point(cp, rng);
        LimitResult lim{PhiState<ExactQ>(cp.n), 0};
        bool ok = false;
        for (int attempt = 0; !ok; ++attempt) {
            try {
                lim = word_limit(w, s, random_directions(cp.n, rng));
                ok = true;
            } catch (const PoleAtZero&) {
                // a second pole means the point itself is degenerate
                if (attempt == 1) throw;
                ++rep.resamples;
            } catch (const DivisionByZero&) {
                if (attempt == 1) throw;
                ++rep.resamples;
            }
        }
        ++rep.trials;
        rep.max_degree = std::max(rep.max_degree, lim.max_degree);
        const auto o = observables(lim.state);
        for (long j = 0; j <= cp.n; ++j) {
            const bool odd0 = lim.state(2 * j + 1, 0) == -o.a(2 * j + 1);
            const bool odd1 = lim.state(2 * j + 1, 1) == -1;
            if (!odd0 || !odd1) {
                rep.preserved = false;
                rep.detail = "phi_{" + std::to_string(2 * j + 1) + "," + (odd1 ? "0" : "1") +
                             "} leaves the locus: " + to_string(lim.state);
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace qgarnier
