#pragma once

#include "qgarnier/token.hpp"

namespace qgarnier {

// Defining word of a derived generator, one level deep, for order n.
// r-subscripts are reduced mod 2n+2 and p, p' subscripts mod n+1:
//   p_i     = r_{-2i-3} r_{-2i-2} r_{-2i-3}
//   p'_i    = r_{-2i-4} r_{-2i-3} r_{-2i-4}
//   sigma   = pi s_0 r_1 r_3 ... r_{2n+1}
//   sigma'  = pi'^-1 s'_0 r_0 r_2 ... r_{2n}
//   pi_1    = pi pi,   pi_2 = rho pi'^-1 pi
//   tau_c   = pi'^-1 pi s'_0 s_0
//   tau_i   = p_i ... p_{i+n-1} sigma
//   tau_i_j = p_i ... p_{i+n-1} p'_j ... p'_n pi_1 p'_1 ... p'_{j-1}
// An inverse token yields the inverse word.
GroupWord derived_word(const Token& g, int n);

// Recursively expands every derived token into fundamental generators.
GroupWord expand_fundamental(const GroupWord& w, int n);

}  // namespace qgarnier
