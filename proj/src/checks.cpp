#include "asmlab/checks.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "asmlab/height.hpp"
#include "asmlab/tl.hpp"

namespace asmlab::checks {

namespace {

const long long kAsmCounts[] = {0, 1, 2, 7, 42, 429, 7436, 218348};

Result ok(const std::string& name, const std::string& detail = "") { return {name, true, detail}; }

Result fail(const std::string& name, const std::string& detail) { return {name, false, detail}; }

std::string fmt_counts(const std::vector<long long>& v) {
    std::string s;
    for (size_t t = 0; t < v.size(); ++t) s += (t ? "," : "") + std::to_string(v[t]);
    return s;
}

}  // namespace

Result counts_and_routes(int n_asm, int n_fpl) {
    const std::string name = "enumeration counts and route agreement";
    n_asm = std::min(n_asm, 7);
    std::vector<long long> got;
    for (int n = 1; n <= n_asm; ++n) {
        std::vector<Asm> asms = enumerate_asms(n);
        if (static_cast<long long>(asms.size()) != kAsmCounts[n])
            return fail(name, "ASM count at n=" + std::to_string(n));
        got.push_back(asms.size());

        // Independent six-vertex route.
        std::set<IceState> sv_direct;
        for (const IceState& s : enumerate_ice_states(square_grid(n), true)) sv_direct.insert(s);
        std::set<IceState> sv_from_asm;
        for (const Asm& a : asms) sv_from_asm.insert(asm_to_sixvertex(a));
        if (sv_direct != sv_from_asm || sv_direct.size() != asms.size())
            return fail(name, "SV route mismatch at n=" + std::to_string(n));

        // Independent height route.
        std::set<HeightFn> h_direct;
        for (const HeightFn& h : enumerate_height_fns(n)) h_direct.insert(h);
        std::set<HeightFn> h_from_asm;
        for (const Asm& a : asms) h_from_asm.insert(asm_to_height(a));
        if (h_direct != h_from_asm || h_direct.size() != asms.size())
            return fail(name, "height route mismatch at n=" + std::to_string(n));

        // Independent FPL route (coloring DFS), capped separately.
        if (n <= n_fpl) {
            std::set<Fpl> f_direct;
            for (const Fpl& f : enumerate_fpls(n, tau_minus(n))) f_direct.insert(f);
            std::set<Fpl> f_from_asm;
            for (const Asm& a : asms) f_from_asm.insert(sixvertex_to_fpl(asm_to_sixvertex(a)));
            if (f_direct != f_from_asm || f_direct.size() != asms.size())
                return fail(name, "FPL route mismatch at n=" + std::to_string(n));
        }
    }
    return ok(name, "|A_n| = " + fmt_counts(got) + " across asm/sv/height" +
                        (n_fpl > 0 ? "/fpl" : ""));
}

Result roundtrips(int n_max) {
    const std::string name = "bijection roundtrips";
    for (int n = 1; n <= n_max; ++n) {
        for (const Asm& a : enumerate_asms(n)) {
            IceState s = asm_to_sixvertex(a);
            if (!(sixvertex_to_asm(s) == a)) return fail(name, "asm->sv->asm at n=" + std::to_string(n));
            HeightFn h = asm_to_height(a);
            if (!(height_to_asm(h) == a)) return fail(name, "asm->h->asm at n=" + std::to_string(n));
            HeightMatrix hs = state_to_height(s);
            if (!(hs == h)) return fail(name, "state height != asm height at n=" + std::to_string(n));
            if (!(height_to_state(h) == s)) return fail(name, "h->sv mismatch at n=" + std::to_string(n));
            Fpl f = sixvertex_to_fpl(s);
            if (!(fpl_to_sixvertex(f) == s)) return fail(name, "sv->fpl->sv at n=" + std::to_string(n));
        }
        for (const IceState& s : enumerate_ice_states(square_grid(n), true))
            if (!(asm_to_sixvertex(sixvertex_to_asm(s)) == s))
                return fail(name, "sv->asm->sv at n=" + std::to_string(n));
        for (const HeightFn& h : enumerate_height_fns(n))
            if (!(state_to_height(height_to_state(h)) == h))
                return fail(name, "h->sv->h at n=" + std::to_string(n));
    }
    return ok(name, "asm<->sv<->height<->fpl identities, n<=" + std::to_string(n_max));
}

Result lemma_boundary(int mn_max) {
    const std::string name = "boundary in-degree lemma";
    long long states = 0;
    for (int m = 1; m <= mn_max; ++m)
        for (int n = 1; n <= mn_max; ++n) {
            bool bad = false;
            enumerate_ice_states(GridSpec(m, n), false, [&](const IceState& s) {
                ++states;
                if (boundary_indegree(s) != m + n) bad = true;
                if (boundary_counts(s).sum() != m + n) bad = true;
            });
            if (bad) return fail(name, "violated on L_{" + std::to_string(m) + "," + std::to_string(n) + "}");
        }
    return ok(name, std::to_string(states) + " ice states, all m,n<=" + std::to_string(mn_max));
}

Result corollary_rowcol(int n_max) {
    const std::string name = "row/column crossing corollary";
    for (int n = 1; n <= n_max; ++n)
        for (const IceState& s : enumerate_ice_states(square_grid(n), true))
            for (int i = 1; i <= n; ++i)
                if (row_col_crossings(s, i) != std::pair<int, int>{i, n - i})
                    return fail(name, "n=" + std::to_string(n) + ", i=" + std::to_string(i));
    return ok(name, "all SV(n), n<=" + std::to_string(n_max));
}

Result path_independence(int n, int random_paths, unsigned seed) {
    const std::string name = "height path independence";
    std::mt19937 rng(seed);
    for (const IceState& s : enumerate_ice_states(square_grid(n), true)) {
        HeightMatrix h = state_to_height(s);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                std::string row_first(j, 'E');
                row_first += std::string(i, 'S');
                std::string col_first(i, 'S');
                col_first += std::string(j, 'E');
                // state_to_height fills row 0 east then rows downward, so the
                // column-first route is the independent one here.
                if (height_along_path(s, i, j, col_first) != h.at(i, j))
                    return fail(name, "column-first differs at (" + std::to_string(i) + "," + std::to_string(j) + ")");
                if (height_along_path(s, i, j, row_first) != h.at(i, j))
                    return fail(name, "row-first differs at (" + std::to_string(i) + "," + std::to_string(j) + ")");
                for (int t = 0; t < random_paths; ++t) {
                    std::string moves = row_first;
                    std::shuffle(moves.begin(), moves.end(), rng);
                    if (height_along_path(s, i, j, moves) != h.at(i, j))
                        return fail(name, "random path differs at (" + std::to_string(i) + "," + std::to_string(j) + ")");
                }
            }
    }
    return ok(name, "n=" + std::to_string(n) + ", " + std::to_string(random_paths) + " random paths per cell");
}

Result height_range(int n_max) {
    const std::string name = "height value range";
    for (int n = 2; n <= n_max; ++n) {
        std::map<std::pair<int, int>, std::set<int>> observed;
        for (const HeightFn& h : enumerate_height_fns(n))
            for (int i = 1; i < n; ++i)
                for (int j = 1; j < n; ++j) observed[{i, j}].insert(h.at(i, j));
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j) {
                std::vector<int> want = height_value_set(n, i, j);
                std::set<int> want_set(want.begin(), want.end());
                if (observed[{i, j}] != want_set)
                    return fail(name, "cell (" + std::to_string(i) + "," + std::to_string(j) +
                                          ") at n=" + std::to_string(n));
            }
    }
    return ok(name, "observed = predicted at every interior cell, n<=" + std::to_string(n_max));
}

Result poset_rank(int n_max) {
    const std::string name = "poset rank census";
    for (int n = 2; n <= n_max; ++n) {
        std::vector<long long> census(std::max(0, n - 1), 0);
        for (const PosetElement& e : poset_elements(n)) {
            if (e.rank() < 0 || e.rank() > n - 2) return fail(name, "rank out of range at n=" + std::to_string(n));
            census[e.rank()] += 1;
        }
        if (census != rank_polynomial(n)) return fail(name, "census != polynomial at n=" + std::to_string(n));
    }
    return ok(name, "matches (n-r-1)(r+1), n<=" + std::to_string(n_max));
}

Result iota_ideals(int n_max) {
    const std::string name = "iota into order ideals";
    for (int n = 1; n <= n_max; ++n) {
        std::set<OrderIdeal> images;
        std::vector<HeightFn> hs = enumerate_height_fns(n);
        for (const HeightFn& h : hs) {
            OrderIdeal id = iota(h);
            if (!is_order_ideal(n, id)) return fail(name, "image not an ideal at n=" + std::to_string(n));
            images.insert(id);
        }
        if (images.size() != hs.size()) return fail(name, "iota not injective at n=" + std::to_string(n));
        // Monotonicity on comparable pairs.
        for (const HeightFn& a : hs)
            for (const HeightFn& b : hs)
                if (height_leq(a, b)) {
                    OrderIdeal ia = iota(a), ib = iota(b);
                    if (!std::includes(ib.begin(), ib.end(), ia.begin(), ia.end()))
                        return fail(name, "iota not monotone at n=" + std::to_string(n));
                }
    }
    return ok(name, "ideal-valued, injective and monotone, n<=" + std::to_string(n_max));
}

Result ideal_counts(int n_max) {
    const std::string name = "order ideal counts";
    n_max = std::min(n_max, 7);
    std::string report;
    for (int n = 1; n <= n_max; ++n) {
        long long ideals = count_order_ideals(n);
        long long images = static_cast<long long>(enumerate_height_fns(n).size());
        if (ideals != kAsmCounts[n])
            return fail(name, "|ideals(P_" + std::to_string(n) + ")| = " + std::to_string(ideals));
        report += (n > 1 ? "," : "") + std::to_string(ideals);
        if (images != ideals)
            report += "(image " + std::to_string(images) + ")";
    }
    return ok(name, "|ideals| = " + report + " = |A_n|; iota image size equal (observed)");
}

Result catalan_counts(int n_max) {
    const std::string name = "link pattern counts";
    std::vector<long long> got;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<LinkPattern> pats = enumerate_link_patterns(n);
        if (static_cast<long long>(pats.size()) != catalan(n))
            return fail(name, "|F(2n)| != Catalan at n=" + std::to_string(n));
        for (const LinkPattern& mu : pats)
            if (!is_noncrossing_matching(2 * n, mu.pairs, false))
                return fail(name, "crossing pattern emitted at n=" + std::to_string(n));
        got.push_back(pats.size());
    }
    return ok(name, "|F(2n)| = " + fmt_counts(got));
}

Result involutions(int n_max) {
    const std::string name = "plaquette involutions";
    for (int n = 1; n <= n_max; ++n)
        for (const Fpl& f : enumerate_fpls_minus(n)) {
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= n; ++j) {
                    Plaquette alpha = plaquette(n, i, j);
                    if (!(g_alpha(g_alpha(f, alpha), alpha) == static_cast<const EdgeColoring&>(f)))
                        return fail(name, "G_alpha^2 != id");
                    if (!(c_alpha(c_alpha(f, alpha), alpha) == static_cast<const EdgeColoring&>(f)))
                        return fail(name, "C_alpha^2 != id");
                    if (!(h_alpha(h_alpha(f, alpha), alpha) == static_cast<const EdgeColoring&>(f)))
                        return fail(name, "H_alpha^2 != id");
                }
            for (bool odd : {false, true})
                if (!(g_half(g_half(f, odd), odd) == f))
                    return fail(name, odd ? "G_1^2 != id" : "G_0^2 != id");
            Fpl via_h = h_half(h_half(f, true), false);
            if (!(via_h == gyration(f))) return fail(name, "H_0 H_1 != G_0 G_1 at n=" + std::to_string(n));
            if (!(gyration_inverse(gyration(f)) == f)) return fail(name, "G^-1 G != id");
        }
    return ok(name, "G_a, C_a, H_a, G_0, G_1 involutions; H_0 H_1 = G, n<=" + std::to_string(n_max));
}

Result h_sweep_link_patterns(int n_max) {
    const std::string name = "half-sweep link pattern equations";
    for (int n = 1; n <= n_max; ++n)
        for (const Fpl& f : enumerate_fpls_minus(n)) {
            Fpl h1 = h_half(f, true);
            if (!(link_pattern(h1, true, Boundary::Plus) == rotate_inv(link_pattern(f, true, Boundary::Minus))))
                return fail(name, "pi_b H_1 equation at n=" + std::to_string(n));
            if (!(link_pattern(h1, false, Boundary::Plus) == rotate(link_pattern(f, false, Boundary::Minus))))
                return fail(name, "pi_w H_1 equation at n=" + std::to_string(n));
            Fpl g = h_half(h1, false);
            if (!(link_pattern(g, true, Boundary::Minus) == link_pattern(h1, true, Boundary::Plus)))
                return fail(name, "pi_b H_0 equation at n=" + std::to_string(n));
            if (!(link_pattern(g, false, Boundary::Minus) == link_pattern(h1, false, Boundary::Plus)))
                return fail(name, "pi_w H_0 equation at n=" + std::to_string(n));
            // Composite: gyration rotates the two patterns opposite ways.
            Fpl gy = gyration(f);
            if (!(link_pattern(gy, true, Boundary::Minus) == rotate_inv(link_pattern(f, true, Boundary::Minus))))
                return fail(name, "pi_b G equation at n=" + std::to_string(n));
            if (!(link_pattern(gy, false, Boundary::Minus) == rotate(link_pattern(f, false, Boundary::Minus))))
                return fail(name, "pi_w G equation at n=" + std::to_string(n));
        }
    return ok(name, "pi_b/pi_w under H_1, H_0 and G, n<=" + std::to_string(n_max));
}

Result cycle_preservation(int n_max) {
    const std::string name = "cycle count preservation";
    for (int n = 1; n <= n_max; ++n)
        for (const Fpl& f : enumerate_fpls_minus(n)) {
            int before = cycle_count(f, true) + cycle_count(f, false);
            Fpl h1 = h_half(f, true);
            if (cycle_count(h1, true) + cycle_count(h1, false) != before)
                return fail(name, "H_1 changed cycle count at n=" + std::to_string(n));
            Fpl g = h_half(h1, false);
            if (cycle_count(g, true) + cycle_count(g, false) != before)
                return fail(name, "H_0 changed cycle count at n=" + std::to_string(n));
        }
    return ok(name, "H_0, H_1 preserve monochromatic cycle counts, n<=" + std::to_string(n_max));
}

Result wieland(int n_max) {
    const std::string name = "Wieland dihedral symmetry";
    for (int n = 1; n <= n_max; ++n) {
        WielandReport rep = wieland_check(n);
        if (!rep.ok) return fail(name, "n=" + std::to_string(n) + ": " + rep.violations.front());
    }
    return ok(name, "refined Psi table symmetric, n<=" + std::to_string(n_max));
}

Result orbit_sums(int n_max) {
    const std::string name = "orbit sums of N_alpha";
    for (int n = 2; n <= n_max; ++n) {
        std::vector<Orbit> orbits = orbit_decomposition(n);
        for (const Orbit& o : orbits)
            for (int i = 1; i <= n - 1; ++i)
                for (int j = 1; j <= n - 1; ++j) {
                    long long sum = 0;
                    for (const Fpl& f : o.members) sum += n_alpha(f, i, j);
                    if (sum != 0)
                        return fail(name, "orbit sum != 0 at n=" + std::to_string(n) + ", alpha=(" +
                                              std::to_string(i) + "," + std::to_string(j) + ")");
                }
        // Paired cancellation for edge-sharing odd/even interior plaquettes.
        for (const Fpl& f : enumerate_fpls_minus(n)) {
            long long m = orbit(f).period;
            for (int i = 1; i <= n - 1; ++i)
                for (int j = 1; j <= n - 1; ++j) {
                    if ((i + j) % 2 == 0) continue;  // alpha odd
                    Plaquette alpha = plaquette(n, i, j);
                    for (auto [bi, bj] : {std::pair{i - 1, j}, {i + 1, j}, {i, j - 1}, {i, j + 1}}) {
                        if (bi < 1 || bi > n - 1 || bj < 1 || bj > n - 1) continue;
                        Plaquette beta = plaquette(n, bi, bj);
                        long long sum = 0;
                        Fpl cur = f;
                        for (long long k = 0; k < m; ++k) {
                            sum += n_alpha(cur, alpha);
                            cur = gyration(cur);
                        }
                        Fpl cur2 = g_half(f, true);
                        for (long long k = 0; k < m; ++k) {
                            sum += n_alpha(cur2, beta);
                            cur2 = gyration_inverse(cur2);
                        }
                        if (sum != 0)
                            return fail(name, "paired odd/even sum != 0 at n=" + std::to_string(n));
                    }
                }
        }
    }
    return ok(name, "zero over every orbit and interior plaquette, n<=" + std::to_string(n_max));
}

Result orbit_periods_report(int n_max) {
    const std::string name = "orbit periods vs n-step return claim";
    n_max = std::min(n_max, 5);
    std::string report;
    bool within = true;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Orbit> orbits = orbit_decomposition(n);
        std::map<int, int> hist;
        long long total = 0;
        for (const Orbit& o : orbits) {
            hist[o.period] += 1;
            total += o.period;
            if (o.period > n) within = false;
        }
        if (total != kAsmCounts[n]) return fail(name, "orbits do not partition fpl at n=" + std::to_string(n));
        report += "n=" + std::to_string(n) + ":";
        for (auto [p, c] : hist) report += " " + std::to_string(c) + "x" + std::to_string(p);
        if (n < n_max) report += "; ";
    }
    report += within ? " (all periods <= n)" : " (period exceeding n observed)";
    return ok(name, report);
}

Result tl_suite(int n_max) {
    const std::string name = "link pattern operator identities";
    for (int n = 1; n <= n_max; ++n) {
        std::vector<LinkPattern> pats = enumerate_link_patterns(n);
        for (const LinkPattern& mu : pats) {
            for (int j = 1; j <= 2 * n; ++j) {
                LinkPattern once = matchmaker(j, mu);
                if (!(matchmaker(j, once) == once)) return fail(name, "e_j not idempotent");
                if (!is_noncrossing_matching(2 * n, once.pairs, false))
                    return fail(name, "e_j broke non-crossing");
            }
            LinkPattern r = mu;
            for (int k = 0; k < 2 * n; ++k) r = rotate(r);
            if (!(r == mu)) return fail(name, "R^{2n} != id");
            if (!(rotate_inv(rotate(mu)) == mu)) return fail(name, "R^-1 R != id");
        }
        // R^{2n} = id; the permutation order divides 2n and reaches it once
        // F(2n) is rich enough (n >= 3; at n <= 2 every orbit is short).
        {
            int order = 0;
            std::vector<LinkPattern> cur = pats;
            for (int k = 1; k <= 2 * n; ++k) {
                for (LinkPattern& mu : cur) mu = rotate(mu);
                if (cur == pats) {
                    order = k;
                    break;
                }
            }
            if (order == 0 || 2 * n % order != 0)
                return fail(name, "R order does not divide 2n at n=" + std::to_string(n));
            if (n >= 3 && order != 2 * n)
                return fail(name, "R order " + std::to_string(order) + " at n=" + std::to_string(n));
        }
        // Sym output is R-invariant and Sym R = Sym.
        for (const LinkPattern& mu : pats) {
            LinkVector sv = sym(basis_vector(mu));
            LinkVector rot = lift_linear([](const LinkPattern& p) { return rotate(p); }, sv);
            if (!(rot == sv)) return fail(name, "Sym output not R-fixed");
            LinkVector sym_after_r =
                sym(lift_linear([](const LinkPattern& p) { return rotate(p); }, basis_vector(mu)));
            if (!(sym_after_r == sv)) return fail(name, "Sym R != Sym");
        }
        if (!sym_pi_nalpha_check(n)) return fail(name, "Sym Pi N ||s>> != 0 at n=" + std::to_string(n));
        // Pi_- ||s>> matches the Psi table and is R-invariant; mass preserved.
        auto [s, sn] = build_s_vectors(n);
        auto table = psi_table(n, Boundary::Minus);
        if (std::map<LinkPattern, long long>(sn.coeff) != table)
            return fail(name, "Pi ||s>> != Psi table at n=" + std::to_string(n));
        long long mass = 0;
        for (const auto& [mu, c] : sn.coeff) mass += c;
        if (mass != static_cast<long long>(s.coeff.size()))
            return fail(name, "Pi does not preserve mass at n=" + std::to_string(n));
        LinkVector rsn = lift_linear([](const LinkPattern& p) { return rotate(p); }, sn);
        if (!(rsn == sn)) return fail(name, "R |s_n> != |s_n> at n=" + std::to_string(n));
    }
    return ok(name, "e_j, R, Sym, Sym Pi N ||s>> = 0, Pi ||s>> = Psi, R|s_n>=|s_n>, n<=" + std::to_string(n_max));
}

std::vector<std::string> suite_names() {
    return {"lemma-boundary", "roundtrips", "height-range", "ideal",
            "wieland",        "orbit-sums", "sym-pi",       "involutions",
            "all"};
}

std::vector<Result> run_suite(const std::string& suite, int n) {
    std::vector<Result> out;
    auto want = [&](const char* s) { return suite == s || suite == "all"; };
    if (want("lemma-boundary")) {
        out.push_back(lemma_boundary(std::min(n, 3)));
        out.push_back(corollary_rowcol(n));
    }
    if (want("roundtrips")) {
        out.push_back(counts_and_routes(n, std::min(n, 4)));
        out.push_back(roundtrips(n));
    }
    if (want("height-range")) {
        out.push_back(height_range(n));
        out.push_back(path_independence(std::min(n, 4), 50, 20260809u));
    }
    if (want("ideal")) {
        out.push_back(poset_rank(std::max(n, 8)));
        out.push_back(iota_ideals(n));
        out.push_back(ideal_counts(n));
        out.push_back(catalan_counts(std::max(n, 7)));
    }
    if (want("wieland")) {
        out.push_back(wieland(n));
        out.push_back(h_sweep_link_patterns(n));
        out.push_back(cycle_preservation(n));
    }
    if (want("orbit-sums")) {
        out.push_back(orbit_sums(n));
        out.push_back(orbit_periods_report(n));
    }
    if (want("sym-pi")) out.push_back(tl_suite(n));
    if (want("involutions")) out.push_back(involutions(n));
    if (out.empty()) throw std::invalid_argument("unknown verify suite: " + suite);
    return out;
}

}  // namespace asmlab::checks
