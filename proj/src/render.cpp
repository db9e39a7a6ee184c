#include "asmlab/render.hpp"

#include <algorithm>
#include <sstream>

namespace asmlab {

namespace {

struct Canvas {
    int rows, cols;
    std::vector<std::string> grid;

    Canvas(int r, int c) : rows(r), cols(c), grid(r, std::string(c, ' ')) {}

    void put(int r, int c, char ch) { grid[r][c] = ch; }

    std::string str() const {
        std::string out;
        for (const auto& line : grid) {
            size_t end = line.find_last_not_of(' ');
            out += end == std::string::npos ? "" : line.substr(0, end + 1);
            out += '\n';
        }
        return out;
    }
};

// Vertex (i,j) sits at canvas cell (2i, 2j); edges at the midpoints.
template <typename EdgeChar>
std::string render_grid(const GridSpec& g, EdgeChar edge_char) {
    Canvas cv(2 * (g.m + 1) + 1, 2 * (g.n + 1) + 1);
    for (int i = 0; i <= g.m + 1; ++i)
        for (int j = 0; j <= g.n + 1; ++j) {
            VertexId v{i, j};
            if (is_interior_vertex(g, v)) cv.put(2 * i, 2 * j, '+');
            if (is_boundary_vertex(g, v)) cv.put(2 * i, 2 * j, 'o');
        }
    for (EdgeKey e : edge_set(g)) {
        if (e.kind == EdgeKind::H)
            cv.put(2 * e.i, 2 * e.j + 1, edge_char(e));
        else
            cv.put(2 * e.i + 1, 2 * e.j, edge_char(e));
    }
    return cv.str();
}

}  // namespace

std::string render_ice_ascii(const IceState& s) {
    return render_grid(s.spec, [&](EdgeKey e) {
        if (e.kind == EdgeKind::H) return s.bit(e) ? '>' : '<';
        return s.bit(e) ? 'v' : '^';
    });
}

std::string render_fpl_ascii(const Fpl& f) {
    return render_grid(f.grid(), [&](EdgeKey e) { return f.is_black(e) ? '#' : '.'; });
}

std::string render_fpl_svg(const Fpl& f) {
    const int unit = 40, margin = 30;
    int size = 2 * margin + unit * (f.n + 1);
    auto x = [&](int j) { return margin + unit * j; };
    auto y = [&](int i) { return margin + unit * i; };
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
        << "\">\n";
    for (EdgeKey e : edge_set(f.grid())) {
        int x1 = x(e.a().j), y1 = y(e.a().i), x2 = x(e.b().j), y2 = y(e.b().i);
        out << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
            << "\" stroke-width=\"2\" stroke=\"" << (f.is_black(e) ? "black" : "gray") << "\"";
        if (!f.is_black(e)) out << " stroke-dasharray=\"6,4\"";
        out << "/>\n";
    }
    for (int i = 0; i <= f.n + 1; ++i)
        for (int j = 0; j <= f.n + 1; ++j) {
            VertexId v{i, j};
            if (!is_vertex(f.grid(), v)) continue;
            out << "  <circle cx=\"" << x(j) << "\" cy=\"" << y(i) << "\" r=\"3\" fill=\""
                << (is_interior_vertex(f.grid(), v) ? "black" : "white") << "\" stroke=\"black\"/>\n";
        }
    out << "</svg>\n";
    return out.str();
}

std::string render_link_pattern_ascii(const LinkPattern& mu) {
    int two_n = 2 * mu.n;
    // Arc rows above a label row; nesting depth decides the height.
    std::vector<int> depth(two_n + 1, 0);
    int maxd = 1;
    for (auto [u, v] : mu.pairs) {
        int d = 1;
        for (auto [a, b] : mu.pairs)
            if (a < u && v < b) ++d;
        for (int t = u; t <= v; ++t) depth[t] = std::max(depth[t], d);
        maxd = std::max(maxd, d);
    }
    Canvas cv(maxd + 1, 2 * two_n);
    for (auto [u, v] : mu.pairs) {
        int d = 1;
        for (auto [a, b] : mu.pairs)
            if (a < u && v < b) ++d;
        int row = maxd - d;
        cv.put(row, 2 * (u - 1), '/');
        cv.put(row, 2 * (v - 1), '\\');
        for (int t = 2 * (u - 1) + 1; t < 2 * (v - 1); ++t) cv.put(row, t, '_');
    }
    for (int t = 1; t <= two_n; ++t) cv.put(maxd, 2 * (t - 1), static_cast<char>('0' + t % 10));
    return cv.str();
}

std::string render_link_pattern_svg(const LinkPattern& mu) {
    const int unit = 40, margin = 30, baseline = 160;
    int two_n = 2 * mu.n;
    int width = 2 * margin + unit * (two_n - 1);
    auto x = [&](int t) { return margin + unit * (t - 1); };
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << baseline + 40 << "\">\n";
    for (auto [u, v] : mu.pairs) {
        double r = (x(v) - x(u)) / 2.0;
        out << "  <path d=\"M " << x(u) << " " << baseline << " A " << r << " " << r
            << " 0 0 1 " << x(v) << " " << baseline << "\" fill=\"none\" stroke=\"black\""
            << " stroke-width=\"2\"/>\n";
    }
    for (int t = 1; t <= two_n; ++t) {
        out << "  <circle cx=\"" << x(t) << "\" cy=\"" << baseline << "\" r=\"3\"/>\n";
        out << "  <text x=\"" << x(t) << "\" y=\"" << baseline + 20
            << "\" text-anchor=\"middle\" font-size=\"12\">" << t << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_poset_dot(int n) {
    std::vector<PosetElement> elems = poset_elements(n);
    std::ostringstream out;
    out << "digraph P" << n << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    for (const PosetElement& e : elems) out << "  \"" << e.str() << "\";\n";
    for (const PosetElement& x : elems)
        for (const PosetElement& y : elems)
            if (covers(n, x, y)) out << "  \"" << y.str() << "\" -> \"" << x.str() << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace asmlab
