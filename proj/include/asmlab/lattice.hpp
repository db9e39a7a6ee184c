#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Model of the grid graph L_{m,n}: interior vertices (i,j) with 1<=i<=m,
// 1<=j<=n, boundary vertices one step outside, and the edges between them.
// Horizontal edge H(i,j) = {(i,j),(i,j+1)} with 1<=i<=m, 0<=j<=n.
// Vertical   edge V(i,j) = {(i,j),(i+1,j)} with 0<=i<=m, 1<=j<=n.

namespace asmlab {

struct GridSpec {
    int m = 0;
    int n = 0;

    GridSpec() = default;
    GridSpec(int m_, int n_) : m(m_), n(n_) {
        if (m < 1 || n < 1) throw std::invalid_argument("GridSpec: m, n must be >= 1");
    }

    int edge_count() const { return m * (n + 1) + n * (m + 1); }
    int boundary_edge_count() const { return 2 * m + 2 * n; }
    bool square() const { return m == n; }

    auto operator<=>(const GridSpec&) const = default;
};

inline GridSpec square_grid(int n) { return GridSpec(n, n); }

struct VertexId {
    int i = 0;
    int j = 0;

    auto operator<=>(const VertexId&) const = default;
    bool odd() const { return (i + j) % 2 != 0; }
};

inline bool is_interior_vertex(const GridSpec& g, VertexId v) {
    return 1 <= v.i && v.i <= g.m && 1 <= v.j && v.j <= g.n;
}

inline bool is_boundary_vertex(const GridSpec& g, VertexId v) {
    bool row_out = (v.i == 0 || v.i == g.m + 1) && 1 <= v.j && v.j <= g.n;
    bool col_out = (v.j == 0 || v.j == g.n + 1) && 1 <= v.i && v.i <= g.m;
    return row_out != col_out && (row_out || col_out);
}

inline bool is_vertex(const GridSpec& g, VertexId v) {
    return is_interior_vertex(g, v) || is_boundary_vertex(g, v);
}

enum class EdgeKind : uint8_t { H, V };

struct EdgeKey {
    EdgeKind kind = EdgeKind::H;
    int i = 0;
    int j = 0;

    auto operator<=>(const EdgeKey&) const = default;

    VertexId a() const { return {i, j}; }
    VertexId b() const { return kind == EdgeKind::H ? VertexId{i, j + 1} : VertexId{i + 1, j}; }
    // Every edge joins one odd and one even vertex.
    VertexId odd_end() const { return a().odd() ? a() : b(); }

    std::string str() const {
        return (kind == EdgeKind::H ? "H:" : "V:") + std::to_string(i) + ":" + std::to_string(j);
    }
};

inline EdgeKey H(int i, int j) { return {EdgeKind::H, i, j}; }
inline EdgeKey V(int i, int j) { return {EdgeKind::V, i, j}; }

inline bool is_edge(const GridSpec& g, EdgeKey e) {
    if (e.kind == EdgeKind::H) return 1 <= e.i && e.i <= g.m && 0 <= e.j && e.j <= g.n;
    return 0 <= e.i && e.i <= g.m && 1 <= e.j && e.j <= g.n;
}

inline bool is_boundary_edge(const GridSpec& g, EdgeKey e) {
    if (e.kind == EdgeKind::H) return e.j == 0 || e.j == g.n;
    return e.i == 0 || e.i == g.m;
}

// Fixed edge order: all H row-major, then all V row-major. States and
// colorings pack one value per edge in this order.
inline int edge_index(const GridSpec& g, EdgeKey e) {
    if (!is_edge(g, e)) throw std::out_of_range("edge_index: not an edge of L_{m,n}: " + e.str());
    if (e.kind == EdgeKind::H) return (e.i - 1) * (g.n + 1) + e.j;
    return g.m * (g.n + 1) + e.i * g.n + (e.j - 1);
}

inline EdgeKey edge_at(const GridSpec& g, int idx) {
    int h = g.m * (g.n + 1);
    if (idx < 0 || idx >= g.edge_count()) throw std::out_of_range("edge_at: bad index");
    if (idx < h) return H(idx / (g.n + 1) + 1, idx % (g.n + 1));
    idx -= h;
    return V(idx / g.n, idx % g.n + 1);
}

std::vector<EdgeKey> edge_set(const GridSpec& g);

// Boundary edges of L_n labeled e_1..e_4n counterclockwise:
// e_1 = V(0,1), down the left side, along the bottom, up the right side,
// back along the top. k is 1-based.
EdgeKey boundary_edge_label(int n, int k);

// Same, with k reduced mod 4n (e_{4n+1} means e_1).
EdgeKey boundary_edge_label_cyclic(int n, long long k);

// Inverse of boundary_edge_label.
int boundary_edge_position(int n, EdgeKey e);

// Unit face alpha_{i,j} of L_n, 0 <= i,j <= n. Interior iff 1 <= i,j <= n-1;
// interior plaquettes carry the edge labels eta1..eta4 =
// V(i,j), H(i+1,j), V(i,j+1), H(i,j).
struct Plaquette {
    int n = 0;
    int i = 0;
    int j = 0;
    bool interior = false;
    std::vector<VertexId> vertices;
    std::vector<EdgeKey> edges;

    bool odd() const { return (i + j) % 2 != 0; }
    std::array<EdgeKey, 4> eta() const {
        if (!interior) throw std::logic_error("eta labels exist only for interior plaquettes");
        return {V(i, j), H(i + 1, j), V(i, j + 1), H(i, j)};
    }
};

Plaquette plaquette(int n, int i, int j);

std::vector<Plaquette> plaquettes_of_parity(int n, bool odd);

// True iff the edge sets of all plaquettes of the given parity partition E(L_n).
bool edge_partition_check(int n, bool odd);

}  // namespace asmlab
