#pragma once

#include <map>
#include <vector>

#include "asmlab/gyration.hpp"

// Integer-coefficient vector spaces over link patterns and over FPLs, and the
// operators the enumeration identities live in: the matchmaker e_j, the
// rotation R, linear lifts, Sym, the Hamiltonian, the projection Pi and the
// N_alpha weighting.

namespace asmlab {

// e_j: pairs {j, j+1} (cyclically, 2n wraps to 1); if already paired the
// pattern is fixed, otherwise {j,u},{j+1,v} rewire to {j,j+1},{u,v}.
LinkPattern matchmaker(int j, const LinkPattern& mu);

// R shifts every label down by one (label 0 wraps to 2n); R^{2n} = id.
LinkPattern rotate(const LinkPattern& mu);
LinkPattern rotate_inv(const LinkPattern& mu);

struct LinkVector {
    int n = 0;
    std::map<LinkPattern, long long> coeff;  // zero coefficients never stored

    bool operator==(const LinkVector&) const = default;
    bool zero() const { return coeff.empty(); }
};

struct FplVector {
    int n = 0;
    std::string word;  // shared boundary word of all keys
    std::map<Fpl, long long> coeff;

    bool operator==(const FplVector&) const = default;
};

LinkVector basis_vector(const LinkPattern& mu);
LinkVector add(const LinkVector& a, const LinkVector& b);
LinkVector scale(long long s, const LinkVector& a);

// Pushforward of coefficients along a key map, merging equal images.
template <typename Map>
LinkVector lift_linear(const Map& op, const LinkVector& v) {
    LinkVector out;
    out.n = v.n;
    for (const auto& [mu, c] : v.coeff) {
        LinkPattern img = op(mu);
        auto it = out.coeff.find(img);
        long long s = (it == out.coeff.end() ? 0 : it->second) + c;
        if (s == 0) {
            if (it != out.coeff.end()) out.coeff.erase(it);
        } else {
            out.coeff[img] = s;
        }
    }
    return out;
}

template <typename Map>
FplVector lift_linear_fpl(const Map& op, const FplVector& v) {
    FplVector out;
    out.n = v.n;
    out.word = v.word;
    for (const auto& [f, c] : v.coeff) {
        Fpl img = op(f);
        long long s = out.coeff[img] + c;
        if (s == 0)
            out.coeff.erase(img);
        else
            out.coeff[img] = s;
    }
    return out;
}

// Sym = sum of all 2n rotation powers; output is R-invariant.
LinkVector sym(const LinkVector& v);

// H_n = sum of the 2n matchmakers.
LinkVector hamiltonian(const LinkVector& v);

// Pi_-/Pi_+: push an FPL vector to its black link patterns.
LinkVector project_pi(const FplVector& v, Boundary boundary);

// Coefficientwise scaling by N_alpha; keys with N_alpha = 0 drop out.
FplVector nalpha_weight(const FplVector& v, const Plaquette& alpha);

// The all-ones FPL vector ||s_{n,tau-}>> and its projection |s_n>.
std::pair<FplVector, LinkVector> build_s_vectors(int n);

// Sym Pi_- N_alpha ||s>> == 0 for every interior plaquette.
bool sym_pi_nalpha_check(int n);

// Orbits of F(2n) under R, each led by its lex-least member.
std::vector<std::vector<LinkPattern>> rotation_classes(int n);

// Dense matrix of a pattern map over the ordered F(2n) basis:
// M[row][col] = multiplicity of basis[row] in op(basis[col]).
std::vector<std::vector<long long>> operator_matrix(
    int n, const std::function<LinkPattern(const LinkPattern&)>& op);

}  // namespace asmlab
