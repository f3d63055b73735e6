#include "qgarnier/generators.hpp"

namespace qgarnier {

namespace {
constexpr int kMaxRejections = 1000;
}

PhiState<ExactQ> PhiSampler::operator()(int n) {
    std::uniform_int_distribution<int> dist(1, 20);
    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
        auto s = PhiState<ExactQ>::generate(n, [&](long, long) {
            const int k = dist(rng_);
            const int m = dist(rng_);
            return ExactQ(k) / ExactQ(m);
        });
        bool ok = true;
        for (long j = 0; j < s.size() && ok; ++j)
            for (long i = 0; i < 2 && ok; ++i)
                ok = s(j, i) != 0 && s(j, i) != -1;
        if (!ok) continue;
        const auto qs = q_sums(s);
        for (long j = 0; j < s.size() && ok; ++j)
            for (long i = 0; i < 2 && ok; ++i)
                ok = qs.q(j, i) != 0 && qs.qp(j, i) != 0;
        if (!ok) continue;
        const auto o = observables(s);
        if (o.a(0) == o.beta[0] || o.a(1) == o.beta[1]) continue;
        return s;
    }
    throw SamplerExhausted("no admissible phi state after " + std::to_string(kMaxRejections) + " draws");
}

RelationReport check_relation(const GroupWord& lhs, const GroupWord& rhs, int n, int trials,
                              PhiSampler& sampler) {
    RelationReport rep;
    while (rep.trials < trials) {
        auto s = sampler(n);
        PhiState<ExactQ> l(n), r(n);
        try {
            l = apply_word(lhs, s);
            r = apply_word(rhs, s);
        } catch (const DivisionByZero&) {
            if (++rep.rejected > kMaxRejections)
                throw SamplerExhausted("relation " + to_string(lhs) + " = " + to_string(rhs) +
                                       " keeps hitting poles");
            continue;
        }
        ++rep.trials;
        if (!(l == r)) {
            rep.holds = false;
            rep.counterexample = to_string(s);
            return rep;
        }
    }
    return rep;
}

}  // namespace qgarnier
