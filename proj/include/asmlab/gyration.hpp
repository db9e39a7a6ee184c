#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "asmlab/fpl.hpp"

// Plaquette operators on edge colorings of L_n: the plaquette state N_alpha,
// the flips G_alpha / C_alpha / H_alpha, the half-sweeps G_0, G_1 and
// H_0, H_1, and the gyration G = G_0 G_1 = H_0 H_1 acting on fpl(n,tau_minus).

namespace asmlab {

struct BoundaryPlaquette : std::runtime_error {
    BoundaryPlaquette()
        : std::runtime_error("operation requires an interior plaquette") {}
};

// +1 when eta1,eta3 are white and eta2,eta4 black; -1 when reversed; else 0.
int n_alpha(const EdgeColoring& c, const Plaquette& alpha);
int n_alpha(const EdgeColoring& c, int i, int j);

// Reverses the colors of alpha's edges when alpha is interior with
// N_alpha != 0; identity otherwise.
EdgeColoring g_alpha(const EdgeColoring& c, const Plaquette& alpha);

// Reverses the colors of alpha's edges unconditionally.
EdgeColoring c_alpha(const EdgeColoring& c, const Plaquette& alpha);

// H_alpha = G_alpha C_alpha.
EdgeColoring h_alpha(const EdgeColoring& c, const Plaquette& alpha);

// Product of G_alpha over all plaquettes of one parity (edge-disjoint, so
// order independent). Defined on arbitrary colorings.
EdgeColoring g_sweep(const EdgeColoring& c, bool odd);

// G_0 (even) / G_1 (odd) restricted to fpl(n, tau_minus).
Fpl g_half(const Fpl& f, bool odd);

// G = G_0 G_1 (G_1 applied first) and its inverse G_1 G_0.
Fpl gyration(const Fpl& f);
Fpl gyration_inverse(const Fpl& f);

// Product of H_alpha over one parity, on arbitrary colorings.
EdgeColoring h_sweep(const EdgeColoring& c, bool odd);

// H_1: fpl(n,tau_minus) -> fpl(n,tau_plus) (odd sweep);
// H_0: fpl(n,tau_plus) -> fpl(n,tau_minus) (even sweep).
Fpl h_half(const Fpl& f, bool odd);

// Interior vertices whose two black edges lie in distinct plaquettes of the
// given parity among the two containing the vertex.
std::set<VertexId> fixed_vertices(const Fpl& f, bool odd);

struct Orbit {
    int period = 0;
    std::vector<Fpl> members;  // G^0 f .. G^{period-1} f
};

Orbit orbit(const Fpl& f);

// Sum of N_alpha over the orbit of f; always zero.
long long orbit_nalpha_sum(const Fpl& f, const Plaquette& alpha);

// Orbit decomposition of fpl(n, tau_minus): seeds in enumeration order, each
// orbit re-based at its lexicographically least member.
std::vector<Orbit> orbit_decomposition(int n);

struct WielandReport {
    int n = 0;
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks Psi(mu_b, mu_w; l) == Psi(R^-1 mu_b, R mu_w; l) over the full
// refined table for tau_minus.
WielandReport wieland_check(int n);

}  // namespace asmlab
