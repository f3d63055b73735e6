#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qgarnier {

enum class Gen {
    // fundamental generators acting on phi
    R,        // r_j
    S,        // s_i
    SPrime,   // s'_i
    Pi,       // pi
    PiPrime,  // pi'
    Rho,      // rho
    // derived generators, defined as words
    P,           // p_i
    PPrime,      // p'_i
    Sigma,       // sigma
    SigmaPrime,  // sigma'
    Pi1,
    Pi2,
    TauC,
    TauI,   // tau_i
    TauIJ,  // tau_{i,j}
};

struct Token {
    Gen gen = Gen::R;
    int i = 0;
    int j = 0;
    bool inverse = false;

    friend bool operator==(const Token&, const Token&) = default;
};

// A word g_1 g_2 ... g_m read as a composition of field automorphisms.
// On points the leftmost token acts first, e.g. r_0 r_1 maps alpha_0 to alpha_1.
using GroupWord = std::vector<Token>;

bool is_fundamental(Gen g);
inline bool is_derived(Gen g) { return !is_fundamental(g); }

Token inverse(Token t);
GroupWord inverse(const GroupWord& w);

// Textual forms: r3, s0, s'1, pi, pi', rho, p2, p'0, sigma, sigma', pi1, pi2,
// tau_c, tau_2, tau_1_3; a trailing "^-1" marks an inverse.
std::string to_string(const Token& t);
std::string to_string(const GroupWord& w);
Token parse_token(std::string_view text);
// Whitespace-separated tokens.
GroupWord parse_word(std::string_view text);

namespace tok {
inline Token r(int j) { return {Gen::R, j, 0, false}; }
inline Token s(int i) { return {Gen::S, i, 0, false}; }
inline Token sp(int i) { return {Gen::SPrime, i, 0, false}; }
inline Token pi() { return {Gen::Pi, 0, 0, false}; }
inline Token pip() { return {Gen::PiPrime, 0, 0, false}; }
inline Token rho() { return {Gen::Rho, 0, 0, false}; }
inline Token p(int i) { return {Gen::P, i, 0, false}; }
inline Token pp(int i) { return {Gen::PPrime, i, 0, false}; }
inline Token sigma() { return {Gen::Sigma, 0, 0, false}; }
inline Token sigmap() { return {Gen::SigmaPrime, 0, 0, false}; }
inline Token pi1() { return {Gen::Pi1, 0, 0, false}; }
inline Token pi2() { return {Gen::Pi2, 0, 0, false}; }
inline Token tau_c() { return {Gen::TauC, 0, 0, false}; }
inline Token tau_i(int i) { return {Gen::TauI, i, 0, false}; }
inline Token tau_ij(int i, int j) { return {Gen::TauIJ, i, j, false}; }
inline Token inv(Token t) { return inverse(t); }
}  // namespace tok

}  // namespace qgarnier
