#include "asmlab/fpl.hpp"

#include <algorithm>
#include <cassert>

namespace asmlab {

namespace {

int black_degree(const EdgeColoring& c, VertexId v) {
    int d = 0;
    for (EdgeKey e : {north_edge(v), east_edge(v), south_edge(v), west_edge(v)})
        d += c.is_black(e) ? 1 : 0;
    return d;
}

}  // namespace

Fpl validate_fpl(const EdgeColoring& c) {
    if (c.n < 1 || static_cast<int>(c.black.size()) != c.grid().edge_count())
        throw std::invalid_argument("validate_fpl: bad coloring shape");
    for (int i = 1; i <= c.n; ++i)
        for (int j = 1; j <= c.n; ++j)
            if (black_degree(c, {i, j}) != 2) throw ColorRuleViolation(i, j);
    Fpl f;
    f.n = c.n;
    f.black = c.black;
    for (auto& b : f.black) b = b ? 1 : 0;
    return f;
}

std::string boundary_word(const EdgeColoring& c) {
    std::string w;
    w.reserve(4 * c.n);
    for (int k = 1; k <= 4 * c.n; ++k)
        w.push_back(c.is_black(boundary_edge_label(c.n, k)) ? 'b' : 'w');
    return w;
}

std::string tau_minus(int n) {
    std::string w;
    for (int k = 1; k <= 4 * n; ++k) w.push_back(k % 2 ? 'w' : 'b');
    return w;
}

std::string tau_plus(int n) {
    std::string w;
    for (int k = 1; k <= 4 * n; ++k) w.push_back(k % 2 ? 'b' : 'w');
    return w;
}

Fpl sixvertex_to_fpl(const IceState& s) {
    if (!is_open_boundary(s)) throw NotOpenBoundary();
    int n = s.spec.n;
    EdgeColoring c = blank_coloring(n);
    for (EdgeKey e : edge_set(s.spec)) c.set_black(e, s.goes_out(e, e.odd_end()));
    Fpl f = validate_fpl(c);
    assert(boundary_word(f) == tau_minus(n));
    return f;
}

IceState fpl_to_sixvertex(const Fpl& f) {
    if (boundary_word(f) != tau_minus(f.n))
        throw WrongBoundary("fpl_to_sixvertex: boundary word is not tau_minus");
    GridSpec g = f.grid();
    IceState s{g, std::vector<uint8_t>(g.edge_count(), 0)};
    for (EdgeKey e : edge_set(g)) {
        // Direct the edge out of its odd endpoint iff black.
        bool out_of_a = (e.odd_end() == e.a()) == f.is_black(e);
        s.set(e, out_of_a);
    }
    s = validate_ice(g, s.dir);
    if (!is_open_boundary(s)) throw WrongBoundary("fpl_to_sixvertex: recovered state not open");
    return s;
}

namespace {

std::vector<EdgeKey> incident_same_color(const Fpl& f, VertexId v, bool black) {
    std::vector<EdgeKey> out;
    GridSpec g = f.grid();
    for (EdgeKey e : {north_edge(v), east_edge(v), south_edge(v), west_edge(v)})
        if (is_edge(g, e) && f.is_black(e) == black) out.push_back(e);
    return out;
}

VertexId other_end(EdgeKey e, VertexId v) { return e.a() == v ? e.b() : e.a(); }

}  // namespace

std::vector<MonoComponent> monochromatic_components(const Fpl& f, bool black) {
    GridSpec g = f.grid();
    int n = f.n;
    std::vector<uint8_t> used(g.edge_count(), 0);
    std::vector<MonoComponent> out;

    // Paths, seeded from boundary edges of the color in label order.
    for (int k = 1; k <= 4 * n; ++k) {
        EdgeKey start = boundary_edge_label(n, k);
        if (f.is_black(start) != black || used[edge_index(g, start)]) continue;
        MonoComponent comp;
        comp.black = black;
        VertexId v = is_boundary_vertex(g, start.a()) ? start.a() : start.b();
        comp.vertices.push_back(v);
        EdgeKey e = start;
        while (true) {
            used[edge_index(g, e)] = 1;
            v = other_end(e, v);
            comp.vertices.push_back(v);
            if (is_boundary_vertex(g, v)) break;
            auto inc = incident_same_color(f, v, black);
            assert(inc.size() == 2);
            e = inc[0] == e ? inc[1] : inc[0];
            assert(!used[edge_index(g, e)]);
        }
        out.push_back(std::move(comp));
    }

    // Remaining edges of the color close up into cycles.
    for (EdgeKey seed : edge_set(g)) {
        if (f.is_black(seed) != black || used[edge_index(g, seed)]) continue;
        std::vector<VertexId> cyc;
        VertexId least = std::min(seed.a(), seed.b());
        // Walk once around; start from the least vertex once located.
        VertexId v = seed.a();
        EdgeKey e = seed;
        std::vector<VertexId> walk{v};
        while (true) {
            used[edge_index(g, e)] = 1;
            v = other_end(e, v);
            if (v == walk.front()) break;
            walk.push_back(v);
            least = std::min(least, v);
            auto inc = incident_same_color(f, v, black);
            assert(inc.size() == 2);
            e = inc[0] == e ? inc[1] : inc[0];
        }
        // Canonical form: least vertex first, then its smaller neighbor.
        size_t pos = std::find(walk.begin(), walk.end(), least) - walk.begin();
        size_t len = walk.size();
        VertexId nxt = walk[(pos + 1) % len];
        VertexId prv = walk[(pos + len - 1) % len];
        bool forward = nxt < prv;
        cyc.push_back(least);
        for (size_t t = 1; t <= len; ++t)
            cyc.push_back(forward ? walk[(pos + t) % len] : walk[(pos + len - t) % len]);
        MonoComponent comp;
        comp.black = black;
        comp.cycle = true;
        comp.vertices = std::move(cyc);
        assert(comp.vertices.size() >= 5);  // length-4 cycle lists 5 vertices
        out.push_back(std::move(comp));
    }
    return out;
}

int cycle_count(const Fpl& f, bool black) {
    int c = 0;
    for (const auto& comp : monochromatic_components(f, black)) c += comp.cycle ? 1 : 0;
    return c;
}

int LinkPattern::partner(int u) const {
    for (auto [a, b] : pairs) {
        if (a == u) return b;
        if (b == u) return a;
    }
    throw std::out_of_range("LinkPattern::partner: label not matched");
}

std::string LinkPattern::str() const {
    std::string s = "{";
    for (size_t t = 0; t < pairs.size(); ++t) {
        if (t) s += ",";
        s += "{" + std::to_string(pairs[t].first) + "," + std::to_string(pairs[t].second) + "}";
    }
    return s + "}";
}

LinkPattern make_link_pattern(int n, std::vector<std::pair<int, int>> pairs) {
    if (static_cast<int>(pairs.size()) != n)
        throw std::invalid_argument("make_link_pattern: need n pairs");
    std::vector<uint8_t> seen(2 * n + 1, 0);
    for (auto& [u, v] : pairs) {
        if (u > v) std::swap(u, v);
        if (u < 1 || v > 2 * n || u == v) throw std::invalid_argument("make_link_pattern: bad labels");
        if (seen[u]++ || seen[v]++) throw std::invalid_argument("make_link_pattern: repeated label");
    }
    std::sort(pairs.begin(), pairs.end());
    return LinkPattern{n, std::move(pairs)};
}

LinkPattern link_pattern(const Fpl& f, bool black, Boundary boundary) {
    int n = f.n;
    const std::string want = boundary == Boundary::Minus ? tau_minus(n) : tau_plus(n);
    if (boundary_word(f) != want)
        throw WrongBoundary("link_pattern: boundary word does not match declared boundary");
    // Positions used by this color: even for (black,-) and (white,+), odd otherwise.
    bool even_positions = (boundary == Boundary::Minus) == black;
    auto label_of = [&](EdgeKey e) {
        int p = boundary_edge_position(n, e);
        if (even_positions != (p % 2 == 0))
            throw WrongBoundary("link_pattern: path ends on a wrong-parity position");
        return even_positions ? p / 2 : (p + 1) / 2;
    };
    std::vector<std::pair<int, int>> pairs;
    for (const MonoComponent& comp : monochromatic_components(f, black)) {
        if (comp.cycle) continue;
        VertexId va = comp.vertices.front();
        VertexId vb = comp.vertices.back();
        EdgeKey ea = va.i == 0 || va.i == n + 1 ? V(std::min(va.i, n), va.j) : H(va.i, std::min(va.j, n));
        EdgeKey eb = vb.i == 0 || vb.i == n + 1 ? V(std::min(vb.i, n), vb.j) : H(vb.i, std::min(vb.j, n));
        pairs.emplace_back(label_of(ea), label_of(eb));
    }
    LinkPattern mu = make_link_pattern(n, std::move(pairs));
    if (!is_noncrossing_matching(2 * n, mu.pairs, false))
        throw std::logic_error("link_pattern: produced a crossing matching");
    return mu;
}

bool is_noncrossing_matching(int n, const std::vector<std::pair<int, int>>& pairs,
                             bool singles_allowed) {
    std::vector<uint8_t> matched(n + 1, 0);
    std::vector<std::pair<int, int>> ps = pairs;
    for (auto& [u, v] : ps) {
        if (u > v) std::swap(u, v);
        if (u < 1 || v > n || u == v) throw std::invalid_argument("is_noncrossing_matching: bad labels");
        if (matched[u]++ || matched[v]++)
            throw std::invalid_argument("is_noncrossing_matching: repeated label");
    }
    for (size_t a = 0; a < ps.size(); ++a)
        for (size_t b = 0; b < ps.size(); ++b) {
            if (a == b) continue;
            if (ps[a].first < ps[b].first && ps[b].first < ps[a].second && ps[a].second < ps[b].second)
                return false;
        }
    for (int j = 1; j <= n; ++j) {
        if (matched[j]) continue;
        if (!singles_allowed) return false;
        for (auto [u, v] : ps)
            if (u < j && j < v) return false;
    }
    return true;
}

namespace {

void gen_patterns(int two_n, std::vector<uint8_t>& taken, std::vector<std::pair<int, int>>& acc,
                  const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
    int u = 0;
    for (int t = 1; t <= two_n; ++t)
        if (!taken[t]) {
            u = t;
            break;
        }
    if (u == 0) {
        emit(acc);
        return;
    }
    taken[u] = 1;
    for (int v = u + 1; v <= two_n; ++v) {
        if (taken[v]) continue;
        int between = 0;
        for (int t = u + 1; t < v; ++t) between += taken[t] ? 0 : 1;
        if (between % 2) continue;
        bool crossing = false;
        for (auto [a, b] : acc)
            if ((a < u && u < b && b < v) || (u < a && a < v && v < b)) crossing = true;
        if (crossing) continue;
        taken[v] = 1;
        acc.emplace_back(u, v);
        gen_patterns(two_n, taken, acc, emit);
        acc.pop_back();
        taken[v] = 0;
    }
    taken[u] = 0;
}

}  // namespace

std::vector<LinkPattern> enumerate_link_patterns(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_link_patterns: n must be >= 1");
    std::vector<LinkPattern> out;
    std::vector<uint8_t> taken(2 * n + 1, 0);
    std::vector<std::pair<int, int>> acc;
    gen_patterns(2 * n, taken, acc, [&](const std::vector<std::pair<int, int>>& ps) {
        out.push_back(make_link_pattern(n, ps));
    });
    return out;
}

long long catalan(int n) {
    long long c = 1;
    for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

std::vector<Fpl> enumerate_fpls_minus(int n) {
    std::vector<Fpl> out;
    enumerate_asms(n, [&](const Asm& a) { out.push_back(sixvertex_to_fpl(asm_to_sixvertex(a))); });
    return out;
}

namespace {

struct FplDfs {
    int n;
    EdgeColoring col;
    const std::function<void(const Fpl&)>& fn;

    FplDfs(int n_, const std::string& word, const std::function<void(const Fpl&)>& fn_)
        : n(n_), col(blank_coloring(n_)), fn(fn_) {
        if (static_cast<int>(word.size()) != 4 * n)
            throw std::invalid_argument("enumerate_fpls: boundary word length != 4n");
        for (int k = 1; k <= 4 * n; ++k) col.set_black(boundary_edge_label(n, k), word[k - 1] == 'b');
    }

    void vertex(int i, int j) {
        if (j > n) {
            if (i == n) {
                Fpl f;
                f.n = n;
                f.black = col.black;
                fn(f);
            } else {
                vertex(i + 1, 1);
            }
            return;
        }
        VertexId v{i, j};
        std::vector<EdgeKey> free;
        if (j < n) free.push_back(east_edge(v));
        if (i < n) free.push_back(south_edge(v));
        int fixed = black_degree(col, v);
        for (EdgeKey e : free) fixed -= col.is_black(e) ? 1 : 0;
        int k = static_cast<int>(free.size());
        for (int mask = 0; mask < (1 << k); ++mask) {
            int blacks = fixed;
            for (int t = 0; t < k; ++t) {
                bool b = (mask >> t) & 1;
                col.set_black(free[t], b);
                blacks += b ? 1 : 0;
            }
            if (blacks == 2) vertex(i, j + 1);
        }
        for (EdgeKey e : free) col.set_black(e, false);
    }
};

}  // namespace

void enumerate_fpls(int n, const std::string& word, const std::function<void(const Fpl&)>& fn) {
    FplDfs dfs(n, word, fn);
    dfs.vertex(1, 1);
}

std::vector<Fpl> enumerate_fpls(int n, const std::string& word) {
    std::vector<Fpl> out;
    enumerate_fpls(n, word, [&](const Fpl& f) { out.push_back(f); });
    return out;
}

namespace {

std::vector<Fpl> fpls_for(int n, Boundary boundary) {
    return boundary == Boundary::Minus ? enumerate_fpls_minus(n)
                                       : enumerate_fpls(n, tau_plus(n));
}

}  // namespace

std::map<LinkPattern, long long> psi_table(int n, Boundary boundary) {
    std::map<LinkPattern, long long> table;
    for (const Fpl& f : fpls_for(n, boundary)) table[link_pattern(f, true, boundary)] += 1;
    return table;
}

std::map<RefinedKey, long long> psi_refined(int n, Boundary boundary) {
    std::map<RefinedKey, long long> table;
    for (const Fpl& f : fpls_for(n, boundary)) {
        RefinedKey key{link_pattern(f, true, boundary), link_pattern(f, false, boundary),
                       cycle_count(f, true), cycle_count(f, false)};
        table[key] += 1;
    }
    return table;
}

std::map<std::tuple<LinkPattern, LinkPattern, int>, long long> psi_refined_joint(int n,
                                                                                 Boundary boundary) {
    std::map<std::tuple<LinkPattern, LinkPattern, int>, long long> out;
    for (const auto& [key, count] : psi_refined(n, boundary))
        out[{key.black, key.white, key.cycles()}] += count;
    return out;
}

}  // namespace asmlab
