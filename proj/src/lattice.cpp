#include "asmlab/lattice.hpp"

#include <algorithm>

namespace asmlab {

std::vector<EdgeKey> edge_set(const GridSpec& g) {
    std::vector<EdgeKey> out;
    out.reserve(g.edge_count());
    for (int i = 1; i <= g.m; ++i)
        for (int j = 0; j <= g.n; ++j) out.push_back(H(i, j));
    for (int i = 0; i <= g.m; ++i)
        for (int j = 1; j <= g.n; ++j) out.push_back(V(i, j));
    return out;
}

EdgeKey boundary_edge_label(int n, int k) {
    if (n < 1) throw std::invalid_argument("boundary_edge_label: n must be >= 1");
    if (k < 1 || k > 4 * n) throw std::out_of_range("boundary_edge_label: k out of 1..4n");
    if (k == 1) return V(0, 1);
    if (k <= n + 1) return H(k - 1, 0);            // left side, going down
    if (k <= 2 * n + 1) return V(n, k - n - 1);    // bottom, left to right
    if (k <= 3 * n + 1) return H(3 * n + 2 - k, n);  // right side, going up
    return V(0, 4 * n + 2 - k);                    // top, right to left
}

EdgeKey boundary_edge_label_cyclic(int n, long long k) {
    long long r = ((k - 1) % (4LL * n) + 4LL * n) % (4LL * n);
    return boundary_edge_label(n, static_cast<int>(r) + 1);
}

int boundary_edge_position(int n, EdgeKey e) {
    GridSpec g = square_grid(n);
    if (!is_edge(g, e) || !is_boundary_edge(g, e))
        throw std::invalid_argument("boundary_edge_position: not a boundary edge: " + e.str());
    if (e.kind == EdgeKind::H && e.j == 0) return e.i + 1;
    if (e.kind == EdgeKind::V && e.i == n) return n + 1 + e.j;
    if (e.kind == EdgeKind::H && e.j == n) return 3 * n + 2 - e.i;
    // e.kind == V && e.i == 0
    return e.j == 1 ? 1 : 4 * n + 2 - e.j;
}

Plaquette plaquette(int n, int i, int j) {
    if (n < 1) throw std::invalid_argument("plaquette: n must be >= 1");
    if (i < 0 || i > n || j < 0 || j > n) throw std::out_of_range("plaquette: (i,j) out of 0..n");
    GridSpec g = square_grid(n);
    Plaquette p;
    p.n = n;
    p.i = i;
    p.j = j;
    p.interior = 1 <= i && i <= n - 1 && 1 <= j && j <= n - 1;
    for (VertexId v : {VertexId{i, j}, VertexId{i, j + 1}, VertexId{i + 1, j}, VertexId{i + 1, j + 1}})
        if (is_vertex(g, v)) p.vertices.push_back(v);
    for (EdgeKey e : {V(i, j), H(i + 1, j), V(i, j + 1), H(i, j)})
        if (is_edge(g, e)) p.edges.push_back(e);
    std::sort(p.edges.begin(), p.edges.end());
    return p;
}

std::vector<Plaquette> plaquettes_of_parity(int n, bool odd) {
    std::vector<Plaquette> out;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if (((i + j) % 2 != 0) == odd) out.push_back(plaquette(n, i, j));
    return out;
}

bool edge_partition_check(int n, bool odd) {
    GridSpec g = square_grid(n);
    std::vector<int> cover(g.edge_count(), 0);
    for (const Plaquette& p : plaquettes_of_parity(n, odd))
        for (EdgeKey e : p.edges) cover[edge_index(g, e)] += 1;
    return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

}  // namespace asmlab
