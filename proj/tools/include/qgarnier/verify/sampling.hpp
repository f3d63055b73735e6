#pragma once

#include <cstdint>
#include <string_view>

#include "qgarnier/cparams.hpp"

namespace qgarnier::verify {

enum class Domain {
    Generic,     // a, b in {k/16} ({k/32} for n >= 3), c in {1/8, 1/4, 3/8}
    Lauricella,  // additionally a_1..a_n < q so the multi-sum converges after tau shifts
    Pi2,         // b_1...b_n < a_1...a_{n+1} with c inside pi_2's convergence window
};

// Deterministic point in the numeric domain with q = 1/2. Rejects every
// coincidence v q^m = w, |m| <= 3, among {1, a_1..a_{n+1}, b_1..b_n}
// (covers a_i = b_j, a_1 = b_0 and q-power poles), and c = 1.
// Throws SamplerExhausted after 1000 rejected draws.
CParams<ExactQ> sample_cparams(std::uint64_t seed, int n, Domain domain = Domain::Generic);

// Mixes a base seed with labels so that each (suite, n, trial, attempt) draws
// an independent stream.
std::uint64_t derive_seed(std::uint64_t base, std::string_view label, std::uint64_t a = 0, std::uint64_t b = 0);

}  // namespace qgarnier::verify
