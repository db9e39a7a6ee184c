#include <doctest.h>

#include <set>

#include "asmlab/tl.hpp"

using namespace asmlab;

namespace {

LinkPattern lp(int n, std::vector<std::pair<int, int>> pairs) {
    return make_link_pattern(n, std::move(pairs));
}

}  // namespace

TEST_CASE("matchmaker") {
    LinkPattern mu = lp(4, {{1, 8}, {2, 5}, {3, 4}, {6, 7}});
    CHECK(matchmaker(2, mu) == lp(4, {{1, 8}, {2, 3}, {4, 5}, {6, 7}}));
    CHECK(matchmaker(1, lp(2, {{1, 2}, {3, 4}})) == lp(2, {{1, 2}, {3, 4}}));

    // e_{2n} pairs {2n, 1}.
    CHECK(matchmaker(4, lp(2, {{1, 2}, {3, 4}})) == lp(2, {{1, 4}, {2, 3}}));

    for (const LinkPattern& p : enumerate_link_patterns(4))
        for (int j = 1; j <= 8; ++j) {
            LinkPattern once = matchmaker(j, p);
            CHECK(matchmaker(j, once) == once);
            CHECK(is_noncrossing_matching(8, once.pairs, false));
        }
}

TEST_CASE("rotation") {
    LinkPattern mu = lp(4, {{1, 8}, {2, 5}, {3, 4}, {6, 7}});
    CHECK(rotate(mu) == lp(4, {{7, 8}, {1, 4}, {2, 3}, {5, 6}}));
    CHECK(rotate(lp(1, {{1, 2}})) == lp(1, {{1, 2}}));
    CHECK(rotate_inv(rotate(mu)) == mu);

    for (const LinkPattern& p : enumerate_link_patterns(4)) {
        LinkPattern r = p;
        for (int k = 0; k < 8; ++k) r = rotate(r);
        CHECK(r == p);
    }
}

TEST_CASE("linear lifts merge coefficients") {
    auto id = [](const LinkPattern& p) { return p; };
    LinkVector v = add(basis_vector(lp(2, {{1, 2}, {3, 4}})), basis_vector(lp(2, {{1, 4}, {2, 3}})));
    CHECK(lift_linear(id, v) == v);

    auto rot = [](const LinkPattern& p) { return rotate(p); };
    LinkVector rv = lift_linear(rot, v);
    CHECK(rv.coeff.size() == 2);

    // An F(8) instance where e_2 merges two distinct basis patterns.
    LinkPattern a = lp(4, {{1, 8}, {2, 5}, {3, 4}, {6, 7}});
    LinkPattern b = lp(4, {{1, 8}, {2, 3}, {4, 5}, {6, 7}});
    REQUIRE(matchmaker(2, a) == matchmaker(2, b));
    REQUIRE(!(a == b));
    auto e2 = [](const LinkPattern& p) { return matchmaker(2, p); };
    LinkVector merged = lift_linear(e2, add(basis_vector(a), basis_vector(b)));
    CHECK(merged.coeff.size() == 1);
    CHECK(merged.coeff.at(matchmaker(2, a)) == 2);

    // Cancelling coefficients vanish from the support.
    LinkVector diff = add(basis_vector(a), scale(-1, basis_vector(a)));
    CHECK(diff.zero());
}

TEST_CASE("sym") {
    LinkVector s1 = sym(basis_vector(lp(1, {{1, 2}})));
    CHECK(s1.coeff.at(lp(1, {{1, 2}})) == 2);

    LinkVector s2 = sym(basis_vector(lp(2, {{1, 2}, {3, 4}})));
    CHECK(s2.coeff.at(lp(2, {{1, 2}, {3, 4}})) == 2);
    CHECK(s2.coeff.at(lp(2, {{1, 4}, {2, 3}})) == 2);

    auto rot = [](const LinkPattern& p) { return rotate(p); };
    for (const LinkPattern& mu : enumerate_link_patterns(3)) {
        LinkVector sv = sym(basis_vector(mu));
        CHECK(lift_linear(rot, sv) == sv);
        CHECK(sym(lift_linear(rot, basis_vector(mu))) == sv);
    }
}

TEST_CASE("hamiltonian") {
    LinkVector h1 = hamiltonian(basis_vector(lp(1, {{1, 2}})));
    CHECK(h1.coeff.at(lp(1, {{1, 2}})) == 2);

    LinkVector h2 = hamiltonian(basis_vector(lp(2, {{1, 2}, {3, 4}})));
    CHECK(h2.coeff.at(lp(2, {{1, 2}, {3, 4}})) == 2);
    CHECK(h2.coeff.at(lp(2, {{1, 4}, {2, 3}})) == 2);

    // Column sums of the matrix on F(6) all equal 2n = 6.
    std::vector<LinkPattern> basis = enumerate_link_patterns(3);
    for (const LinkPattern& mu : basis) {
        LinkVector out = hamiltonian(basis_vector(mu));
        long long mass = 0;
        for (const auto& [nu, c] : out.coeff) mass += c;
        CHECK(mass == 6);
    }
}

TEST_CASE("projection and s vectors") {
    auto [s1, sn1] = build_s_vectors(1);
    CHECK(s1.coeff.size() == 1);
    CHECK(sn1.coeff.size() == 1);
    CHECK(sn1.coeff.at(lp(1, {{1, 2}})) == 1);

    auto [s2, sn2] = build_s_vectors(2);
    CHECK(s2.coeff.size() == 2);
    CHECK(sn2.coeff.at(lp(2, {{1, 2}, {3, 4}})) == 1);
    CHECK(sn2.coeff.at(lp(2, {{1, 4}, {2, 3}})) == 1);

    auto [s3, sn3] = build_s_vectors(3);
    std::map<LinkPattern, long long> table(psi_table(3, Boundary::Minus));
    CHECK(sn3.coeff == table);

    // Pi preserves total mass.
    long long mass = 0;
    for (const auto& [mu, c] : sn3.coeff) mass += c;
    CHECK(mass == 7);

    // R fixes |s_n> for n <= 4.
    auto rot = [](const LinkPattern& p) { return rotate(p); };
    for (int n = 1; n <= 4; ++n) {
        LinkVector sn = build_s_vectors(n).second;
        CHECK(lift_linear(rot, sn) == sn);
    }

    FplVector wrong;
    wrong.n = 2;
    wrong.word = tau_plus(2);
    CHECK_THROWS_AS(project_pi(wrong, Boundary::Minus), WrongBoundary);
}

TEST_CASE("nalpha weighting") {
    auto [s2, sn2] = build_s_vectors(2);
    Plaquette alpha = plaquette(2, 1, 1);
    FplVector weighted = nalpha_weight(s2, alpha);
    REQUIRE(weighted.coeff.size() == 2);
    std::multiset<long long> coeffs;
    for (const auto& [f, c] : weighted.coeff) {
        coeffs.insert(c);
        CHECK(n_alpha(f, alpha) == c);
    }
    CHECK(coeffs == std::multiset<long long>{-1, 1});

    // Twice = the 0/1 mask of N^2.
    FplVector twice = nalpha_weight(weighted, alpha);
    for (const auto& [f, c] : twice.coeff) CHECK(c == 1 * (n_alpha(f, alpha) != 0));

    CHECK_THROWS_AS(nalpha_weight(s2, plaquette(2, 0, 1)), BoundaryPlaquette);

    // Terms with N = 0 vanish from the support at n=3.
    auto [s3, sn3] = build_s_vectors(3);
    FplVector w3 = nalpha_weight(s3, plaquette(3, 1, 1));
    for (const auto& [f, c] : w3.coeff) CHECK(n_alpha(f, 1, 1) != 0);
    CHECK(w3.coeff.size() < s3.coeff.size());
}

TEST_CASE("annihilation identity") {
    for (int n = 2; n <= 4; ++n) CHECK(sym_pi_nalpha_check(n));

    // Spelled out at n=2: N ||s>> = ||psi+>> - ||psi->>, projected and
    // symmetrised the rotation orbit cancels.
    auto [s2, sn2] = build_s_vectors(2);
    LinkVector projected = project_pi(nalpha_weight(s2, plaquette(2, 1, 1)), Boundary::Minus);
    CHECK(projected.coeff.size() == 2);
    CHECK(sym(projected).zero());
}

TEST_CASE("rotation classes") {
    auto classes1 = rotation_classes(1);
    REQUIRE(classes1.size() == 1);
    CHECK(classes1[0].size() == 1);

    auto classes2 = rotation_classes(2);
    REQUIRE(classes2.size() == 1);
    CHECK(classes2[0].size() == 2);

    auto classes3 = rotation_classes(3);
    std::multiset<size_t> sizes;
    size_t total = 0;
    for (const auto& cls : classes3) {
        sizes.insert(cls.size());
        total += cls.size();
        for (const LinkPattern& mu : cls) CHECK(!(mu < cls.front()));
        // Closed under R.
        std::set<LinkPattern> in_class(cls.begin(), cls.end());
        for (const LinkPattern& mu : cls) CHECK(in_class.count(rotate(mu)) == 1);
    }
    CHECK(total == 5);
    CHECK(sizes == std::multiset<size_t>{2, 3});
}

TEST_CASE("operator matrices") {
    auto rot_mat = operator_matrix(2, [](const LinkPattern& p) { return rotate(p); });
    // F(4) = {{{1,2},{3,4}}, {{1,4},{2,3}}}; R swaps them.
    CHECK(rot_mat == std::vector<std::vector<long long>>{{0, 1}, {1, 0}});

    auto e1_mat = operator_matrix(2, [](const LinkPattern& p) { return matchmaker(1, p); });
    // e_1 fixes {{1,2},{3,4}} and sends {{1,4},{2,3}} to it.
    CHECK(e1_mat == std::vector<std::vector<long long>>{{1, 1}, {0, 0}});
}
