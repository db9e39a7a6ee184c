#include "asmlab/height.hpp"

#include <algorithm>
#include <cstdlib>

namespace asmlab {

void check_height_fn(const HeightMatrix& hm) {
    if (hm.m != hm.n) throw InvalidHeight("height function must be square");
    int n = hm.n;
    for (int i = 0; i <= n; ++i) {
        if (hm.at(i, 0) != i || hm.at(0, i) != i || hm.at(n - i, n) != i || hm.at(n, n - i) != i)
            throw InvalidHeight("boundary condition violated at index " + std::to_string(i));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= n; ++j)
            if (std::abs(hm.at(i + 1, j) - hm.at(i, j)) != 1)
                throw InvalidHeight("row adjacency violated at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(hm.at(i, j + 1) - hm.at(i, j)) != 1)
                throw InvalidHeight("column adjacency violated at (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

HeightFn validate_height_fn(int n, const std::vector<std::vector<int>>& rows) {
    if (n < 1) throw InvalidHeight("degree must be >= 1");
    if (static_cast<int>(rows.size()) != n + 1) throw InvalidHeight("need n+1 rows");
    HeightMatrix hm;
    hm.m = hm.n = n;
    hm.h.reserve(static_cast<size_t>(n + 1) * (n + 1));
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n + 1) throw InvalidHeight("need n+1 columns");
        hm.h.insert(hm.h.end(), row.begin(), row.end());
    }
    check_height_fn(hm);
    return hm;
}

bool height_leq(const HeightFn& a, const HeightFn& b) {
    if (a.n != b.n) throw std::invalid_argument("height_leq: degree mismatch");
    for (int i = 1; i < a.n; ++i)
        for (int j = 1; j < a.n; ++j)
            if (a.at(i, j) > b.at(i, j)) return false;
    return true;
}

HeightMatrix height_matrix_unchecked(const GridSpec& spec, const std::vector<uint8_t>& bits) {
    if (static_cast<int>(bits.size()) != spec.edge_count())
        throw std::invalid_argument("height_matrix_unchecked: bit vector length != edge count");
    IceState s{spec, bits};
    HeightMatrix hm;
    hm.m = spec.m;
    hm.n = spec.n;
    hm.h.assign(static_cast<size_t>(spec.m + 1) * (spec.n + 1), 0);
    for (int j = 1; j <= spec.n; ++j) hm.at(0, j) = hm.at(0, j - 1) + east_step(s, 0, j);
    for (int i = 1; i <= spec.m; ++i) {
        hm.at(i, 0) = hm.at(i - 1, 0) + south_step(s, i, 0);
        for (int j = 1; j <= spec.n; ++j) hm.at(i, j) = hm.at(i, j - 1) + east_step(s, i, j);
    }
    // The column rule must agree with the row-first accumulation everywhere.
    for (int i = 1; i <= spec.m; ++i)
        for (int j = 0; j <= spec.n; ++j)
            if (hm.at(i, j) - hm.at(i - 1, j) != south_step(s, i, j)) throw PathInconsistent(i, j);
    return hm;
}

HeightMatrix state_to_height(const IceState& s) { return height_matrix_unchecked(s.spec, s.dir); }

int height_along_path(const IceState& s, int i, int j, const std::string& moves) {
    if (static_cast<int>(moves.size()) != i + j)
        throw std::invalid_argument("height_along_path: path length != i+j");
    int ci = 0, cj = 0, h = 0;
    for (char c : moves) {
        if (c == 'E') {
            ++cj;
            h += east_step(s, ci, cj);
        } else if (c == 'S') {
            ++ci;
            h += south_step(s, ci, cj);
        } else {
            throw std::invalid_argument("height_along_path: moves must be 'E'/'S'");
        }
    }
    if (ci != i || cj != j) throw std::invalid_argument("height_along_path: path does not end at (i,j)");
    return h;
}

IceState height_to_state(const HeightFn& hm) {
    check_height_fn(hm);
    int n = hm.n;
    GridSpec g = square_grid(n);
    IceState s{g, std::vector<uint8_t>(g.edge_count(), 0)};
    // Invert the unit-step rules: V(i,j) points north iff the east step is +1,
    // H(i,j) points east iff the south step is +1.
    for (int i = 0; i <= n; ++i)
        for (int j = 1; j <= n; ++j) s.set(V(i, j), hm.at(i, j) - hm.at(i, j - 1) != 1);
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j <= n; ++j) s.set(H(i, j), hm.at(i, j) - hm.at(i - 1, j) == 1);
    s = validate_ice(g, s.dir);
    if (!is_open_boundary(s)) throw InvalidHeight("recovered state is not open-boundary");
    return s;
}

HeightFn asm_to_height(const Asm& a) {
    int n = a.n;
    PartialSums ps = partial_sums(a);
    HeightMatrix hm;
    hm.m = hm.n = n;
    hm.h.assign(static_cast<size_t>(n + 1) * (n + 1), 0);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) hm.at(i, j) = i + j - 2 * ps.corner(i, j);
    check_height_fn(hm);
    return hm;
}

Asm height_to_asm(const HeightFn& hm) {
    check_height_fn(hm);
    int n = hm.n;
    std::vector<int8_t> flat(static_cast<size_t>(n) * n, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int d = hm.at(i - 1, j - 1) - hm.at(i - 1, j) + hm.at(i, j) - hm.at(i, j - 1);
            flat[(i - 1) * n + (j - 1)] = static_cast<int8_t>(-d / 2);
        }
    return validate_asm_flat(n, flat);
}

int track(int n, int i, int j) {
    if (i < 1 || i >= n || j < 1 || j >= n) throw std::out_of_range("track: need 1 <= i,j < n");
    return std::min(std::min(i, n - i), std::min(j, n - j));
}

std::vector<int> height_value_set(int n, int i, int j) {
    int l = track(n, i, j);
    std::vector<int> out;
    for (int k = 0; k <= l; ++k) out.push_back(std::abs(i - j) + 2 * k);
    return out;
}

std::vector<PosetElement> poset_elements(int n) {
    std::vector<PosetElement> out;
    if (n <= 1) return out;
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            for (int k = 1; k <= track(n, i, j); ++k) out.push_back({i, j, k});
    return out;
}

bool covers(int n, const PosetElement& x, const PosetElement& y) {
    auto in_poset = [n](const PosetElement& e) {
        return 1 <= e.i && e.i < n && 1 <= e.j && e.j < n && 1 <= e.k && e.k <= track(n, e.i, e.j);
    };
    if (!in_poset(x) || !in_poset(y)) throw std::invalid_argument("covers: element outside P_n");
    return std::abs(x.i - x.j) + 2 * x.k == std::abs(y.i - y.j) + 2 * y.k + 1 &&
           std::abs(x.i - y.i) + std::abs(x.j - y.j) == 1;
}

std::vector<long long> rank_polynomial(int n) {
    std::vector<long long> out;
    for (int r = 0; r <= n - 2; ++r) out.push_back(static_cast<long long>(n - r - 1) * (r + 1));
    return out;
}

OrderIdeal iota(const HeightFn& hm) {
    check_height_fn(hm);
    OrderIdeal s;
    for (const PosetElement& e : poset_elements(hm.n))
        if (hm.at(e.i, e.j) >= std::abs(e.i - e.j) + 2 * e.k) s.insert(e);
    return s;
}

bool is_order_ideal(int n, const OrderIdeal& s) {
    std::vector<PosetElement> all = poset_elements(n);
    for (const PosetElement& x : s) {
        for (const PosetElement& y : all)
            if (covers(n, x, y) && !s.count(y)) return false;
    }
    return true;
}

void enumerate_order_ideals(int n, const std::function<void(const OrderIdeal&)>& fn) {
    std::vector<PosetElement> elems = poset_elements(n);
    // Process in rank order (a linear extension), so everything an element
    // covers is already decided when the element is reached.
    std::vector<int> order(elems.size());
    for (size_t t = 0; t < order.size(); ++t) order[t] = static_cast<int>(t);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return elems[a].rank() < elems[b].rank(); });
    std::vector<std::vector<int>> covered(elems.size());
    for (size_t a = 0; a < elems.size(); ++a)
        for (size_t b = 0; b < elems.size(); ++b)
            if (covers(n, elems[a], elems[b])) covered[a].push_back(static_cast<int>(b));
    std::vector<uint8_t> chosen(elems.size(), 0);

    std::function<void(size_t)> step = [&](size_t pos) {
        if (pos == order.size()) {
            OrderIdeal s;
            for (size_t t = 0; t < elems.size(); ++t)
                if (chosen[t]) s.insert(elems[t]);
            fn(s);
            return;
        }
        int idx = order[pos];
        chosen[idx] = 0;
        step(pos + 1);
        bool ok = true;
        for (int b : covered[idx])
            if (!chosen[b]) ok = false;
        if (ok) {
            chosen[idx] = 1;
            step(pos + 1);
            chosen[idx] = 0;
        }
    };
    step(0);
}

long long count_order_ideals(int n) {
    long long c = 0;
    enumerate_order_ideals(n, [&](const OrderIdeal&) { ++c; });
    return c;
}

namespace {

struct HeightDfs {
    int n;
    HeightMatrix hm;
    const std::function<void(const HeightFn&)>& fn;

    HeightDfs(int n_, const std::function<void(const HeightFn&)>& fn_) : n(n_), fn(fn_) {
        hm.m = hm.n = n;
        hm.h.assign(static_cast<size_t>(n + 1) * (n + 1), 0);
        for (int i = 0; i <= n; ++i) {
            hm.at(i, 0) = i;
            hm.at(0, i) = i;
            hm.at(n - i, n) = i;
            hm.at(n, n - i) = i;
        }
    }

    void cell(int i, int j) {
        if (j == n) {
            if (std::abs(hm.at(i, n) - hm.at(i, n - 1)) != 1) return;
            if (i == n - 1) {
                for (int jj = 1; jj < n; ++jj)
                    if (std::abs(hm.at(n, jj) - hm.at(n - 1, jj)) != 1) return;
                fn(hm);
            } else {
                cell(i + 1, 1);
            }
            return;
        }
        int left = hm.at(i, j - 1);
        int up = hm.at(i - 1, j);
        for (int v : {left - 1, left + 1}) {
            if (std::abs(v - up) != 1) continue;
            hm.at(i, j) = v;
            cell(i, j + 1);
        }
    }
};

}  // namespace

void enumerate_height_fns(int n, const std::function<void(const HeightFn&)>& fn) {
    if (n < 1) throw std::invalid_argument("enumerate_height_fns: n must be >= 1");
    if (n == 1) {
        fn(validate_height_fn(1, {{0, 1}, {1, 0}}));
        return;
    }
    HeightDfs dfs(n, fn);
    dfs.cell(1, 1);
}

std::vector<HeightFn> enumerate_height_fns(int n) {
    std::vector<HeightFn> out;
    enumerate_height_fns(n, [&](const HeightFn& h) { out.push_back(h); });
    return out;
}

}  // namespace asmlab
