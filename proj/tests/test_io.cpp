#include <doctest.h>

#include <algorithm>
#include <random>

#include "asmlab/json_io.hpp"
#include "asmlab/render.hpp"

using namespace asmlab;
using nlohmann::json;

TEST_CASE("base64 and bit packing") {
    CHECK(base64_encode({}) == "");
    CHECK(base64_encode({'M', 'a', 'n'}) == "TWFu");
    CHECK(base64_encode({'M', 'a'}) == "TWE=");
    CHECK(base64_encode({'M'}) == "TQ==");
    CHECK(base64_decode("TWFu") == std::vector<uint8_t>{'M', 'a', 'n'});
    CHECK_THROWS_AS(base64_decode("T"), BadPayload);
    CHECK_THROWS_AS(base64_decode("T!=="), BadPayload);

    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        int count = static_cast<int>(rng() % 70);
        std::vector<uint8_t> bits(count);
        for (auto& b : bits) b = rng() & 1;
        CHECK(unpack_bits(base64_decode(base64_encode(pack_bits(bits))), count) == bits);
    }
}

TEST_CASE("edge strings") {
    CHECK(edge_to_string(H(1, 0)) == "H:1:0");
    CHECK(edge_to_string(V(0, 2)) == "V:0:2");
    CHECK(edge_from_string("H:1:0") == H(1, 0));
    CHECK(edge_from_string("V:10:2") == V(10, 2));
    CHECK_THROWS_AS(edge_from_string("X:1:0"), BadPayload);
    CHECK_THROWS_AS(edge_from_string("H:1"), BadPayload);
}

TEST_CASE("json roundtrips carry the schema tag") {
    Asm a = validate_asm(4, {{0, 1, 0, 0}, {1, -1, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
    json ja = to_json(a);
    CHECK(ja.at("schema") == "asmlab/1");
    CHECK(asm_from_json(ja) == a);

    IceState s = asm_to_sixvertex(a);
    CHECK(ice_from_json(to_json(s)) == s);

    HeightFn h = asm_to_height(a);
    CHECK(height_from_json(to_json(h)) == h);

    Fpl f = sixvertex_to_fpl(s);
    CHECK(fpl_from_json(to_json(f)) == f);

    LinkPattern mu = link_pattern(f, true, Boundary::Minus);
    CHECK(link_pattern_from_json(to_json(mu)) == mu);

    CHECK_THROWS_AS(asm_from_json(json{{"kind", "fpl"}}), BadPayload);
    CHECK_THROWS_AS(asm_from_json(json::parse("[1,2]")), BadPayload);
}

TEST_CASE("vectors serialize as arrays of key/coeff terms") {
    auto [s, sn] = build_s_vectors(2);
    json jv = to_json(sn);
    CHECK(jv.at("schema") == "asmlab/1");
    REQUIRE(jv.at("terms").size() == 2);
    for (const auto& term : jv.at("terms")) {
        CHECK(term.at("coeff") == 1);
        CHECK(term.at("key").at("kind") == "linkpattern");
    }
    json jf = to_json(s);
    CHECK(jf.at("boundary") == tau_minus(2));
    CHECK(jf.at("terms").size() == 2);
}

TEST_CASE("json rejects invalid payloads with module errors") {
    json bad = json{{"schema", kSchema}, {"kind", "asm"}, {"n", 2}, {"rows", {{1, 1}, {0, -1}}}};
    CHECK_THROWS_AS(asm_from_json(bad), AsmError);
    json badh = json{{"schema", kSchema}, {"kind", "height"}, {"n", 1}, {"h", {{0, 5}, {1, 0}}}};
    CHECK_THROWS_AS(height_from_json(badh), InvalidHeight);
}

TEST_CASE("ascii renders") {
    Fpl f1 = sixvertex_to_fpl(open_boundary_shell(1));
    std::string art = render_fpl_ascii(f1);
    CHECK(std::count(art.begin(), art.end(), '#') == 2);
    CHECK(std::count(art.begin(), art.end(), '.') == 2);
    CHECK(std::count(art.begin(), art.end(), '+') == 1);
    CHECK(std::count(art.begin(), art.end(), 'o') == 4);

    std::string ice = render_ice_ascii(open_boundary_shell(1));
    CHECK(std::count(ice.begin(), ice.end(), '>') == 1);
    CHECK(std::count(ice.begin(), ice.end(), '<') == 1);
    CHECK(std::count(ice.begin(), ice.end(), '^') == 1);
    CHECK(std::count(ice.begin(), ice.end(), 'v') == 1);

    std::string out_edges = ice_out_edges(open_boundary_shell(1));
    CHECK(out_edges == "(1,1): N S\n");
}

TEST_CASE("svg and dot renders") {
    LinkPattern mu = make_link_pattern(2, {{1, 2}, {3, 4}});
    std::string svg = render_link_pattern_svg(mu);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(std::count(svg.begin(), svg.end(), 'A') == 2);  // two arcs

    std::string dot = render_poset_dot(4);
    CHECK(dot.rfind("digraph", 0) == 0);
    // 10 node declarations and 16 cover arrows.
    size_t arrows = 0, pos = 0;
    while ((pos = dot.find("->", pos)) != std::string::npos) {
        ++arrows;
        pos += 2;
    }
    CHECK(arrows == 16);
    CHECK(dot.find("\"(2,2,2)\"") != std::string::npos);

    std::string fsvg = render_fpl_svg(sixvertex_to_fpl(open_boundary_shell(1)));
    CHECK(fsvg.rfind("<svg", 0) == 0);
    CHECK(std::count(fsvg.begin(), fsvg.end(), '\n') > 4);
}
