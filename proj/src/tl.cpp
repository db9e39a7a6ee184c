#include "asmlab/tl.hpp"

#include <algorithm>

namespace asmlab {

LinkPattern matchmaker(int j, const LinkPattern& mu) {
    int two_n = 2 * mu.n;
    if (j < 1 || j > two_n) throw std::out_of_range("matchmaker: j out of 1..2n");
    int jp = j % two_n + 1;
    if (mu.partner(j) == jp) return mu;
    int u = mu.partner(j);
    int v = mu.partner(jp);
    std::vector<std::pair<int, int>> pairs;
    for (auto [a, b] : mu.pairs) {
        if (a == j || b == j || a == jp || b == jp) continue;
        pairs.emplace_back(a, b);
    }
    pairs.emplace_back(j, jp);
    pairs.emplace_back(u, v);
    LinkPattern out = make_link_pattern(mu.n, std::move(pairs));
    if (!is_noncrossing_matching(two_n, out.pairs, false))
        throw std::logic_error("matchmaker: produced a crossing matching");
    return out;
}

LinkPattern rotate(const LinkPattern& mu) {
    int two_n = 2 * mu.n;
    std::vector<std::pair<int, int>> pairs;
    for (auto [u, v] : mu.pairs)
        pairs.emplace_back(u == 1 ? two_n : u - 1, v == 1 ? two_n : v - 1);
    return make_link_pattern(mu.n, std::move(pairs));
}

LinkPattern rotate_inv(const LinkPattern& mu) {
    int two_n = 2 * mu.n;
    std::vector<std::pair<int, int>> pairs;
    for (auto [u, v] : mu.pairs)
        pairs.emplace_back(u == two_n ? 1 : u + 1, v == two_n ? 1 : v + 1);
    return make_link_pattern(mu.n, std::move(pairs));
}

LinkVector basis_vector(const LinkPattern& mu) {
    LinkVector v;
    v.n = mu.n;
    v.coeff[mu] = 1;
    return v;
}

LinkVector add(const LinkVector& a, const LinkVector& b) {
    LinkVector out = a;
    out.n = a.n ? a.n : b.n;
    for (const auto& [mu, c] : b.coeff) {
        long long s = out.coeff[mu] + c;
        if (s == 0)
            out.coeff.erase(mu);
        else
            out.coeff[mu] = s;
    }
    return out;
}

LinkVector scale(long long s, const LinkVector& a) {
    LinkVector out;
    out.n = a.n;
    if (s == 0) return out;
    for (const auto& [mu, c] : a.coeff) out.coeff[mu] = s * c;
    return out;
}

LinkVector sym(const LinkVector& v) {
    LinkVector out;
    out.n = v.n;
    LinkVector cur = v;
    for (int k = 0; k < 2 * v.n; ++k) {
        out = add(out, cur);
        cur = lift_linear([](const LinkPattern& mu) { return rotate(mu); }, cur);
    }
    return out;
}

LinkVector hamiltonian(const LinkVector& v) {
    LinkVector out;
    out.n = v.n;
    for (int k = 1; k <= 2 * v.n; ++k)
        out = add(out, lift_linear([k](const LinkPattern& mu) { return matchmaker(k, mu); }, v));
    return out;
}

LinkVector project_pi(const FplVector& v, Boundary boundary) {
    const std::string want = boundary == Boundary::Minus ? tau_minus(v.n) : tau_plus(v.n);
    if (v.word != want) throw WrongBoundary("project_pi: vector boundary word mismatch");
    LinkVector out;
    out.n = v.n;
    for (const auto& [f, c] : v.coeff) {
        LinkPattern mu = link_pattern(f, true, boundary);
        long long s = out.coeff[mu] + c;
        if (s == 0)
            out.coeff.erase(mu);
        else
            out.coeff[mu] = s;
    }
    return out;
}

FplVector nalpha_weight(const FplVector& v, const Plaquette& alpha) {
    if (!alpha.interior) throw BoundaryPlaquette();
    FplVector out;
    out.n = v.n;
    out.word = v.word;
    for (const auto& [f, c] : v.coeff) {
        int w = n_alpha(f, alpha);
        if (w != 0 && c != 0) out.coeff[f] = w * c;
    }
    return out;
}

std::pair<FplVector, LinkVector> build_s_vectors(int n) {
    FplVector s;
    s.n = n;
    s.word = tau_minus(n);
    for (const Fpl& f : enumerate_fpls_minus(n)) s.coeff[f] = 1;
    return {s, project_pi(s, Boundary::Minus)};
}

bool sym_pi_nalpha_check(int n) {
    FplVector s = build_s_vectors(n).first;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j)
            if (!sym(project_pi(nalpha_weight(s, plaquette(n, i, j)), Boundary::Minus)).zero())
                return false;
    return true;
}

std::vector<std::vector<LinkPattern>> rotation_classes(int n) {
    std::vector<std::vector<LinkPattern>> out;
    std::set<LinkPattern> seen;
    for (const LinkPattern& mu : enumerate_link_patterns(n)) {
        if (seen.count(mu)) continue;
        std::vector<LinkPattern> cls;
        LinkPattern cur = mu;
        do {
            cls.push_back(cur);
            seen.insert(cur);
            cur = rotate(cur);
        } while (!(cur == mu));
        // Led by the lex-least member (the seed, since patterns are visited
        // in lex order), followed by its successive rotations.
        out.push_back(std::move(cls));
    }
    return out;
}

std::vector<std::vector<long long>> operator_matrix(
    int n, const std::function<LinkPattern(const LinkPattern&)>& op) {
    std::vector<LinkPattern> basis = enumerate_link_patterns(n);
    std::map<LinkPattern, int> index;
    for (size_t t = 0; t < basis.size(); ++t) index[basis[t]] = static_cast<int>(t);
    std::vector<std::vector<long long>> mat(basis.size(), std::vector<long long>(basis.size(), 0));
    for (size_t col = 0; col < basis.size(); ++col) mat[index.at(op(basis[col]))][col] += 1;
    return mat;
}

}  // namespace asmlab
