#pragma once

#include <string>
#include <vector>

#include "qgarnier/token.hpp"

namespace qgarnier::verify {

struct Relation {
    std::string family;  // e.g. "braid r", "r_j pi = pi r_{j-1}"
    GroupWord lhs;
    GroupWord rhs;
};

// Involutions, braid and commutation relations of r, s, s', mutual
// commutativity of the three groups, and the diagram-automorphism relations.
std::vector<Relation> fundamental_relations(int n);

// Relations among p_i, p'_i, sigma, sigma', pi_1, pi_2 (A_n^(1) x A_n^(1) and
// the diagram part) plus commutation with tau_c and the tau_c decomposition.
// Relations with an inverse are stated in inverse-free equivalent form.
std::vector<Relation> derived_relations(int n);

}  // namespace qgarnier::verify
