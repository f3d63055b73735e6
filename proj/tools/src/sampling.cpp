#include "qgarnier/verify/sampling.hpp"

#include <numeric>
#include <random>
#include <vector>

namespace qgarnier::verify {

namespace {

constexpr int kMaxDraws = 1000;

ExactQ frac(long k, long d) { return ExactQ(k) / ExactQ(d); }

// k/d with lo <= k <= hi, skipping values that are powers of q = 1/2.
ExactQ draw(std::mt19937_64& rng, long lo, long hi, long d) {
    std::uniform_int_distribution<long> dist(lo, hi);
    for (;;) {
        const long k = dist(rng);
        long r = d / std::gcd(k, d);
        const long kk = k / std::gcd(k, d);
        if (kk == 1 && (r & (r - 1)) == 0) continue;
        return frac(k, d);
    }
}

bool coincident(const std::vector<ExactQ>& vals, const ExactQ& q) {
    std::vector<ExactQ> qp;
    for (long m = -3; m <= 3; ++m) qp.push_back(ipow(q, m));
    for (std::size_t i = 0; i < vals.size(); ++i)
        for (std::size_t j = i + 1; j < vals.size(); ++j)
            for (const auto& f : qp)
                if (vals[i] * f == vals[j]) return true;
    return false;
}

}  // namespace

CParams<ExactQ> sample_cparams(std::uint64_t seed, int n, Domain domain) {
    if (n < 1) throw DomainError("order n must be >= 1");
    std::mt19937_64 rng(seed);
    const ExactQ q = frac(1, 2);
    std::uniform_int_distribution<int> cpick(1, 3);
    // n >= 3 needs more q-inequivalent values than the 1/16 grid holds
    const long g = n >= 3 ? 2 : 1;
    for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
        std::vector<ExactQ> a, b;
        for (int l = 1; l <= n + 1; ++l) {
            const bool small = domain == Domain::Lauricella && l <= n;
            a.push_back(small ? draw(rng, 3 * g, 11 * g, 32 * g) : draw(rng, 3 * g, 13 * g, 16 * g));
        }
        for (int l = 1; l <= n; ++l) b.push_back(draw(rng, 3 * g, 13 * g, 16 * g));

        std::vector<ExactQ> all{ExactQ(1)};
        all.insert(all.end(), a.begin(), a.end());
        all.insert(all.end(), b.begin(), b.end());
        if (coincident(all, q)) continue;

        ExactQ c = frac(cpick(rng), 8);
        if (domain == Domain::Pi2) {
            ExactQ pb(1), pa(1);
            for (const auto& v : b) pb *= v;
            for (const auto& v : a) pa *= v;
            const ExactQ ratio = pb / pa;
            if (!(q * ratio < frac(1, 2))) continue;
            // c in (1.5 ratio, 1.6) on a 1/32 grid, away from 1 and from the
            // fixed point c^2 = ratio/q of c -> ratio/(q c)
            std::vector<ExactQ> grid;
            for (long k = 1; k < 52; ++k) {
                const ExactQ v = frac(k, 32);
                if (!(v > frac(3, 2) * ratio)) continue;
                if (abs(v - 1) < frac(1, 20)) continue;
                const ExactQ sq = v * v * q;
                if (abs(sq - ratio) < ratio / 10) continue;
                grid.push_back(v);
            }
            if (grid.empty()) continue;
            std::uniform_int_distribution<std::size_t> gpick(0, grid.size() - 1);
            c = grid[gpick(rng)];
        }
        return CParams<ExactQ>::make(n, std::move(a), std::move(b), std::move(c), q);
    }
    throw SamplerExhausted("no admissible parameter point after " + std::to_string(kMaxDraws) + " draws");
}

std::uint64_t derive_seed(std::uint64_t base, std::string_view label, std::uint64_t a, std::uint64_t b) {
    // splitmix64 over the inputs; FNV-1a for the label
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : label) h = (h ^ ch) * 1099511628211ULL;
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    std::uint64_t s = mix(base);
    s = mix(s ^ h);
    s = mix(s ^ a);
    return mix(s ^ b);
}

}  // namespace qgarnier::verify
