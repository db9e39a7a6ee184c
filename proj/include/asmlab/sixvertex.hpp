#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "asmlab/asm_matrix.hpp"
#include "asmlab/lattice.hpp"

// Ice states on L_{m,n}: one direction bit per edge, 2-in-2-out at every
// interior vertex. Direction bit 1 means "toward the increasing coordinate":
// east for H(i,j), south for V(i,j).

namespace asmlab {

struct IceState {
    GridSpec spec;
    std::vector<uint8_t> dir;  // edge_count() bits in edge order

    bool bit(EdgeKey e) const { return dir[edge_index(spec, e)] != 0; }
    void set(EdgeKey e, bool v) { dir[edge_index(spec, e)] = v ? 1 : 0; }

    // True iff the edge is directed into vertex v (one of its endpoints).
    bool comes_in(EdgeKey e, VertexId v) const {
        bool fwd = bit(e);  // a() -> b()
        if (v == e.b()) return fwd;
        if (v == e.a()) return !fwd;
        throw std::invalid_argument("comes_in: vertex not an endpoint of " + e.str());
    }
    bool goes_out(EdgeKey e, VertexId v) const { return !comes_in(e, v); }

    auto operator<=>(const IceState&) const = default;
};

struct IceRuleViolation : std::runtime_error {
    int i, j;
    IceRuleViolation(int i_, int j_)
        : std::runtime_error("ice rule violated at vertex (" + std::to_string(i_) + "," + std::to_string(j_) + ")"),
          i(i_), j(j_) {}
};

struct NotOpenBoundary : std::runtime_error {
    NotOpenBoundary() : std::runtime_error("state does not have the open boundary condition") {}
};

// The four edges incident to an interior vertex, named by compass direction
// (N is toward row 0).
inline EdgeKey north_edge(VertexId v) { return V(v.i - 1, v.j); }
inline EdgeKey south_edge(VertexId v) { return V(v.i, v.j); }
inline EdgeKey west_edge(VertexId v) { return H(v.i, v.j - 1); }
inline EdgeKey east_edge(VertexId v) { return H(v.i, v.j); }

IceState validate_ice(const GridSpec& spec, const std::vector<uint8_t>& bits);

// Open boundary condition: horizontal boundary edges directed toward their
// interior endpoint, vertical boundary edges toward their boundary endpoint.
bool is_open_boundary(const IceState& s);
IceState open_boundary_shell(int n);  // boundary bits fixed, interior zeroed

enum class VertexType : uint8_t { NE, NS, NW, ES, EW, SW };
std::string to_string(VertexType t);

// The pair of outgoing directions at interior vertex (i,j).
VertexType vertex_type(const IceState& s, int i, int j);

// NS -> 1, EW -> -1, others 0. Requires a square open-boundary state.
Asm sixvertex_to_asm(const IceState& s);

// Edge directions from the partial-sum triplets: H(i,j) east iff r_{i,j}=0,
// V(i,j) south iff c_{i,j}=1 (empty prefixes count as 0).
IceState asm_to_sixvertex(const Asm& a);

// Number of boundary edges directed toward their boundary vertex. Equals
// m+n for every ice state.
int boundary_indegree(const IceState& s);

struct BoundaryCounts {
    int k0 = 0;  // H(i,0) into (i,0)
    int k1 = 0;  // H(i,n) into (i,n+1)
    int l0 = 0;  // V(0,j) into (0,j)
    int l1 = 0;  // V(m,j) into (m+1,j)

    int sum() const { return k0 + k1 + l0 + l1; }
    bool operator==(const BoundaryCounts&) const = default;
};

BoundaryCounts boundary_counts(const IceState& s);

// For an open square state: how many V(i,*) point south into the row below,
// and how many H(*,i) point east into the column to the right.
std::pair<int, int> row_col_crossings(const IceState& s, int i);

// All ice states on the grid, boundary edges free (or fixed to the open
// condition when open_only is set; square grids only in that case).
// Deterministic vertex-major DFS order.
void enumerate_ice_states(const GridSpec& spec, bool open_only,
                          const std::function<void(const IceState&)>& fn);
std::vector<IceState> enumerate_ice_states(const GridSpec& spec, bool open_only);

}  // namespace asmlab
