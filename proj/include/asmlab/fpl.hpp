#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "asmlab/sixvertex.hpp"

// Edge 2-colorings of L_n. An FPL has exactly two black and two white edges
// at every interior vertex; its boundary word tau reads the colors at
// e_1..e_4n. Monochromatic boundary-to-boundary paths induce link patterns.

namespace asmlab {

struct EdgeColoring {
    int n = 0;
    std::vector<uint8_t> black;  // one bit per edge of L_n, edge order

    GridSpec grid() const { return square_grid(n); }
    bool is_black(EdgeKey e) const { return black[edge_index(grid(), e)] != 0; }
    void set_black(EdgeKey e, bool v) { black[edge_index(grid(), e)] = v ? 1 : 0; }
    void flip(EdgeKey e) { black[edge_index(grid(), e)] ^= 1; }

    auto operator<=>(const EdgeColoring&) const = default;
};

inline EdgeColoring blank_coloring(int n) {
    return EdgeColoring{n, std::vector<uint8_t>(square_grid(n).edge_count(), 0)};
}

struct ColorRuleViolation : std::runtime_error {
    int i, j;
    ColorRuleViolation(int i_, int j_)
        : std::runtime_error("vertex (" + std::to_string(i_) + "," + std::to_string(j_) +
                             ") is not 2-2-colored"),
          i(i_), j(j_) {}
};

struct WrongBoundary : std::runtime_error {
    explicit WrongBoundary(const std::string& what) : std::runtime_error(what) {}
};

struct Fpl : EdgeColoring {};

Fpl validate_fpl(const EdgeColoring& c);

// Boundary word as a string over 'b'/'w' read at e_1..e_4n.
std::string boundary_word(const EdgeColoring& c);
std::string tau_minus(int n);  // (w,b,w,b,...)
std::string tau_plus(int n);   // (b,w,b,w,...)

// Parity bijection: an edge is black iff it is directed out of its odd
// endpoint. Open-boundary states map onto fpl(n, tau_minus).
Fpl sixvertex_to_fpl(const IceState& s);
IceState fpl_to_sixvertex(const Fpl& f);

struct MonoComponent {
    bool black = false;
    bool cycle = false;
    std::vector<VertexId> vertices;  // cycle: closed walk, first == last
};

// The color-induced subgraph split into boundary-to-boundary paths and
// interior cycles. Paths are listed in boundary-position order of their
// first endpoint, then cycles by least vertex.
std::vector<MonoComponent> monochromatic_components(const Fpl& f, bool black);

int cycle_count(const Fpl& f, bool black);

struct LinkPattern {
    int n = 0;
    std::vector<std::pair<int, int>> pairs;  // u < v, sorted by u

    auto operator<=>(const LinkPattern&) const = default;
    int partner(int u) const;
    std::string str() const;
};

// Canonical form from an arbitrary pair list; checks shape only.
LinkPattern make_link_pattern(int n, std::vector<std::pair<int, int>> pairs);

enum class Boundary : uint8_t { Minus, Plus };

// pi_{b,-} pairs the even boundary positions e_{2i}, pi_{w,-} the odd ones;
// under tau_plus the parities swap.
LinkPattern link_pattern(const Fpl& f, bool black, Boundary boundary);

// Neither crossing pattern u1 < u2 < v1 < v2 nor an arc over a single vertex.
bool is_noncrossing_matching(int n, const std::vector<std::pair<int, int>>& pairs,
                             bool singles_allowed);

// All C_n link patterns of size n, lexicographic in canonical form.
std::vector<LinkPattern> enumerate_link_patterns(int n);
long long catalan(int n);

// fpl(n, tau_minus) via the ASM route, in ASM enumeration order.
std::vector<Fpl> enumerate_fpls_minus(int n);

// Independent enumeration of all FPLs with the given boundary word
// (vertex-major DFS over colors).
void enumerate_fpls(int n, const std::string& word, const std::function<void(const Fpl&)>& fn);
std::vector<Fpl> enumerate_fpls(int n, const std::string& word);

// Psi_{n,+-}(mu): FPL counts keyed by black link pattern.
std::map<LinkPattern, long long> psi_table(int n, Boundary boundary);

struct RefinedKey {
    LinkPattern black;
    LinkPattern white;
    int cycles_black = 0;
    int cycles_white = 0;

    int cycles() const { return cycles_black + cycles_white; }
    auto operator<=>(const RefinedKey&) const = default;
};

// Psi_{n,+-}(mu_b, mu_w; l) with the cycle counts kept per color; the joint
// count l is their sum.
std::map<RefinedKey, long long> psi_refined(int n, Boundary boundary);

// Aggregation onto (mu_b, mu_w, l) with joint l.
std::map<std::tuple<LinkPattern, LinkPattern, int>, long long> psi_refined_joint(
    int n, Boundary boundary);

}  // namespace asmlab
