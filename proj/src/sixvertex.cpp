#include "asmlab/sixvertex.hpp"

#include <algorithm>

namespace asmlab {

namespace {

int indegree(const IceState& s, VertexId v) {
    int d = 0;
    for (EdgeKey e : {north_edge(v), east_edge(v), south_edge(v), west_edge(v)})
        d += s.comes_in(e, v) ? 1 : 0;
    return d;
}

}  // namespace

IceState validate_ice(const GridSpec& spec, const std::vector<uint8_t>& bits) {
    if (static_cast<int>(bits.size()) != spec.edge_count())
        throw std::invalid_argument("validate_ice: bit vector length != edge count");
    IceState s{spec, bits};
    for (auto& b : s.dir) b = b ? 1 : 0;
    for (int i = 1; i <= spec.m; ++i)
        for (int j = 1; j <= spec.n; ++j)
            if (indegree(s, {i, j}) != 2) throw IceRuleViolation(i, j);
    return s;
}

IceState open_boundary_shell(int n) {
    GridSpec g = square_grid(n);
    IceState s{g, std::vector<uint8_t>(g.edge_count(), 0)};
    for (int i = 1; i <= n; ++i) {
        s.set(H(i, 0), true);   // east, into the interior
        s.set(H(i, n), false);  // west, into the interior
    }
    for (int j = 1; j <= n; ++j) {
        s.set(V(0, j), false);  // north, out to the boundary
        s.set(V(n, j), true);   // south, out to the boundary
    }
    return s;
}

bool is_open_boundary(const IceState& s) {
    if (!s.spec.square()) return false;
    int n = s.spec.n;
    for (int i = 1; i <= n; ++i)
        if (!s.bit(H(i, 0)) || s.bit(H(i, n))) return false;
    for (int j = 1; j <= n; ++j)
        if (s.bit(V(0, j)) || !s.bit(V(n, j))) return false;
    return true;
}

std::string to_string(VertexType t) {
    switch (t) {
        case VertexType::NE: return "NE";
        case VertexType::NS: return "NS";
        case VertexType::NW: return "NW";
        case VertexType::ES: return "ES";
        case VertexType::EW: return "EW";
        case VertexType::SW: return "SW";
    }
    return "?";
}

VertexType vertex_type(const IceState& s, int i, int j) {
    VertexId v{i, j};
    if (!is_interior_vertex(s.spec, v))
        throw std::invalid_argument("vertex_type: vertex not interior");
    bool n_out = s.goes_out(north_edge(v), v);
    bool e_out = s.goes_out(east_edge(v), v);
    bool s_out = s.goes_out(south_edge(v), v);
    bool w_out = s.goes_out(west_edge(v), v);
    if (n_out + e_out + s_out + w_out != 2) throw IceRuleViolation(i, j);
    if (n_out && e_out) return VertexType::NE;
    if (n_out && s_out) return VertexType::NS;
    if (n_out && w_out) return VertexType::NW;
    if (e_out && s_out) return VertexType::ES;
    if (e_out && w_out) return VertexType::EW;
    return VertexType::SW;
}

Asm sixvertex_to_asm(const IceState& s) {
    if (!is_open_boundary(s)) throw NotOpenBoundary();
    int n = s.spec.n;
    std::vector<int8_t> flat(static_cast<size_t>(n) * n, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            VertexType t = vertex_type(s, i, j);
            flat[(i - 1) * n + (j - 1)] =
                t == VertexType::NS ? 1 : (t == VertexType::EW ? int8_t{-1} : int8_t{0});
        }
    return validate_asm_flat(n, flat);
}

IceState asm_to_sixvertex(const Asm& a) {
    int n = a.n;
    PartialSums ps = partial_sums(a);
    GridSpec g = square_grid(n);
    IceState s{g, std::vector<uint8_t>(g.edge_count(), 0)};
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j <= n; ++j) s.set(H(i, j), ps.row(i, j) == 0);
    for (int i = 0; i <= n; ++i)
        for (int j = 1; j <= n; ++j) s.set(V(i, j), ps.col(i, j) == 1);
    return s;
}

int boundary_indegree(const IceState& s) {
    int count = 0;
    GridSpec g = s.spec;
    for (EdgeKey e : edge_set(g)) {
        if (!is_boundary_edge(g, e)) continue;
        VertexId bv = is_boundary_vertex(g, e.a()) ? e.a() : e.b();
        count += s.comes_in(e, bv) ? 1 : 0;
    }
    return count;
}

BoundaryCounts boundary_counts(const IceState& s) {
    BoundaryCounts b;
    const GridSpec& g = s.spec;
    for (int i = 1; i <= g.m; ++i) {
        b.k0 += s.bit(H(i, 0)) ? 0 : 1;
        b.k1 += s.bit(H(i, g.n)) ? 1 : 0;
    }
    for (int j = 1; j <= g.n; ++j) {
        b.l0 += s.bit(V(0, j)) ? 0 : 1;
        b.l1 += s.bit(V(g.m, j)) ? 1 : 0;
    }
    return b;
}

std::pair<int, int> row_col_crossings(const IceState& s, int i) {
    if (!s.spec.square()) throw std::invalid_argument("row_col_crossings: square states only");
    int n = s.spec.n;
    if (i < 1 || i > n) throw std::out_of_range("row_col_crossings: i out of 1..n");
    int vin = 0, hin = 0;
    for (int j = 1; j <= n; ++j) vin += s.bit(V(i, j)) ? 1 : 0;      // into (i+1,j)
    for (int j = 1; j <= n; ++j) hin += s.bit(H(j, i)) ? 1 : 0;      // into (j,i+1)
    return {vin, hin};
}

namespace {

// Vertex-major DFS. At vertex (i,j) the N and W edges are already decided
// (by earlier vertices, the fixed boundary, or a branch taken here when the
// vertex sits on the first row/column with free boundary); E and S are
// chosen now under the 2-in-2-out constraint.
struct IceDfs {
    GridSpec g;
    bool open_only;
    IceState state;
    const std::function<void(const IceState&)>& fn;

    IceDfs(const GridSpec& g_, bool open, const std::function<void(const IceState&)>& fn_)
        : g(g_), open_only(open),
          state{g_, std::vector<uint8_t>(g_.edge_count(), 0)}, fn(fn_) {
        if (open_only) {
            if (!g.square()) throw std::invalid_argument("open boundary requires a square grid");
            state = open_boundary_shell(g.n);
        }
    }

    void vertex(int i, int j) {
        if (j > g.n) {
            if (i == g.m)
                fn(state);
            else
                vertex(i + 1, 1);
            return;
        }
        VertexId v{i, j};
        // Edges still free at this vertex, in N,W,E,S order.
        std::vector<EdgeKey> free;
        if (i == 1 && !open_only) free.push_back(north_edge(v));
        if (j == 1 && !open_only) free.push_back(west_edge(v));
        if (j < g.n || !open_only) free.push_back(east_edge(v));
        if (i < g.m || !open_only) free.push_back(south_edge(v));
        int fixed_in = 0;
        if (!(i == 1 && !open_only)) fixed_in += state.comes_in(north_edge(v), v);
        if (!(j == 1 && !open_only)) fixed_in += state.comes_in(west_edge(v), v);
        if (open_only && j == g.n) fixed_in += state.comes_in(east_edge(v), v);
        if (open_only && i == g.m) fixed_in += state.comes_in(south_edge(v), v);

        int k = static_cast<int>(free.size());
        for (int mask = 0; mask < (1 << k); ++mask) {
            int in = fixed_in;
            for (int t = 0; t < k; ++t) {
                bool bit = (mask >> t) & 1;
                state.set(free[t], bit);
                in += state.comes_in(free[t], v) ? 1 : 0;
            }
            if (in == 2) vertex(i, j + 1);
        }
    }
};

}  // namespace

void enumerate_ice_states(const GridSpec& spec, bool open_only,
                          const std::function<void(const IceState&)>& fn) {
    IceDfs dfs(spec, open_only, fn);
    dfs.vertex(1, 1);
}

std::vector<IceState> enumerate_ice_states(const GridSpec& spec, bool open_only) {
    std::vector<IceState> out;
    enumerate_ice_states(spec, open_only, [&](const IceState& s) { out.push_back(s); });
    return out;
}

}  // namespace asmlab
