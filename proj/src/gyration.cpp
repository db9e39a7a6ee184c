#include "asmlab/gyration.hpp"

#include <algorithm>
#include <cassert>

#include "asmlab/tl.hpp"

namespace asmlab {

int n_alpha(const EdgeColoring& c, const Plaquette& alpha) {
    if (!alpha.interior) throw BoundaryPlaquette();
    auto [e1, e2, e3, e4] = alpha.eta();
    bool b1 = c.is_black(e1), b2 = c.is_black(e2), b3 = c.is_black(e3), b4 = c.is_black(e4);
    if (!b1 && !b3 && b2 && b4) return 1;
    if (b1 && b3 && !b2 && !b4) return -1;
    return 0;
}

int n_alpha(const EdgeColoring& c, int i, int j) { return n_alpha(c, plaquette(c.n, i, j)); }

EdgeColoring c_alpha(const EdgeColoring& c, const Plaquette& alpha) {
    EdgeColoring out = c;
    for (EdgeKey e : alpha.edges) out.flip(e);
    return out;
}

EdgeColoring g_alpha(const EdgeColoring& c, const Plaquette& alpha) {
    if (!alpha.interior || n_alpha(c, alpha) == 0) return c;
    return c_alpha(c, alpha);
}

EdgeColoring h_alpha(const EdgeColoring& c, const Plaquette& alpha) {
    return g_alpha(c_alpha(c, alpha), alpha);
}

EdgeColoring g_sweep(const EdgeColoring& c, bool odd) {
    EdgeColoring out = c;
    for (const Plaquette& alpha : plaquettes_of_parity(c.n, odd))
        if (alpha.interior && n_alpha(c, alpha) != 0)
            for (EdgeKey e : alpha.edges) out.flip(e);
    return out;
}

Fpl g_half(const Fpl& f, bool odd) { return validate_fpl(g_sweep(f, odd)); }

Fpl gyration(const Fpl& f) { return g_half(g_half(f, true), false); }

Fpl gyration_inverse(const Fpl& f) { return g_half(g_half(f, false), true); }

EdgeColoring h_sweep(const EdgeColoring& c, bool odd) {
    // H_alpha flips alpha's edges unless alpha is interior with N_alpha != 0;
    // same-parity plaquettes are edge-disjoint, so one pass suffices.
    EdgeColoring out = c;
    for (const Plaquette& alpha : plaquettes_of_parity(c.n, odd))
        if (!(alpha.interior && n_alpha(c, alpha) != 0))
            for (EdgeKey e : alpha.edges) out.flip(e);
    return out;
}

Fpl h_half(const Fpl& f, bool odd) {
    const std::string want = odd ? tau_minus(f.n) : tau_plus(f.n);
    if (boundary_word(f) != want)
        throw WrongBoundary(odd ? "h_half: H_1 needs boundary tau_minus"
                                : "h_half: H_0 needs boundary tau_plus");
    return validate_fpl(h_sweep(f, odd));
}

std::set<VertexId> fixed_vertices(const Fpl& f, bool odd) {
    std::set<VertexId> out;
    int n = f.n;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            VertexId v{i, j};
            // The two parity-matching plaquettes at v split its edges into
            // diagonal pairs: {N,W}|{E,S} when the vertex parity matches the
            // plaquette parity, {N,E}|{S,W} otherwise.
            bool nb = f.is_black(north_edge(v)), eb = f.is_black(east_edge(v));
            bool sb = f.is_black(south_edge(v)), wb = f.is_black(west_edge(v));
            bool fixed;
            if (((i + j) % 2 != 0) == odd)
                fixed = (nb + wb == 1) && (eb + sb == 1);
            else
                fixed = (nb + eb == 1) && (sb + wb == 1);
            if (fixed) out.insert(v);
        }
    return out;
}

Orbit orbit(const Fpl& f) {
    Orbit o;
    Fpl cur = f;
    do {
        o.members.push_back(cur);
        cur = gyration(cur);
    } while (!(cur == f));
    o.period = static_cast<int>(o.members.size());
    return o;
}

long long orbit_nalpha_sum(const Fpl& f, const Plaquette& alpha) {
    if (!alpha.interior) throw BoundaryPlaquette();
    long long sum = 0;
    for (const Fpl& g : orbit(f).members) sum += n_alpha(g, alpha);
    return sum;
}

std::vector<Orbit> orbit_decomposition(int n) {
    std::vector<Orbit> out;
    std::set<Fpl> seen;
    for (const Fpl& f : enumerate_fpls_minus(n)) {
        if (seen.count(f)) continue;
        Orbit o = orbit(f);
        for (const Fpl& g : o.members) seen.insert(g);
        auto least = std::min_element(o.members.begin(), o.members.end());
        std::rotate(o.members.begin(), least, o.members.end());
        out.push_back(std::move(o));
    }
    return out;
}

WielandReport wieland_check(int n) {
    WielandReport rep;
    rep.n = n;
    auto table = psi_refined_joint(n, Boundary::Minus);
    for (const auto& [key, count] : table) {
        const auto& [mb, mw, l] = key;
        auto it = table.find({rotate_inv(mb), rotate(mw), l});
        long long other = it == table.end() ? 0 : it->second;
        if (other != count) {
            rep.ok = false;
            rep.violations.push_back("Psi(" + mb.str() + "," + mw.str() + ";" + std::to_string(l) +
                                     ")=" + std::to_string(count) + " vs rotated " +
                                     std::to_string(other));
        }
    }
    return rep;
}

}  // namespace asmlab
