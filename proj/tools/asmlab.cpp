// Command-line surface for the ASM / six-vertex / height / FPL toolkit:
// enumeration, conversion between the four representations, verification
// suites, gyration orbit reports, Psi tables, poset export and rendering.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "asmlab/checks.hpp"
#include "asmlab/json_io.hpp"
#include "asmlab/render.hpp"

using nlohmann::json;
using namespace asmlab;

namespace {

constexpr int kDefaultCap = 7;
constexpr int kLinkPatternCap = 12;

int size_cap(bool allow_large, int fallback) {
    if (allow_large) return 1 << 20;
    if (const char* env = std::getenv("ASMLAB_MAX_N")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("ASMLAB_MAX_N is not an integer");
        }
    }
    return fallback;
}

struct Output {
    std::string path;  // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file " + path);
        f << text;
    }
};

json read_payload(const std::string& in_path) {
    std::string text;
    if (in_path.empty()) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(in_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open input file " + in_path);
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw BadPayload("input is not valid JSON");
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int cmd_enumerate(const std::string& kind, int n, const std::string& format, bool allow_large,
                  const Output& out) {
    int cap = size_cap(allow_large, kind == "linkpattern" ? kLinkPatternCap : kDefaultCap);
    if (n < 1 || n > cap) {
        std::cerr << "error: n out of range (cap " << cap << "; use --allow-large or ASMLAB_MAX_N)\n";
        return 2;
    }
    json items = json::array();
    long long count = 0;
    bool want_items = format == "json";
    if (kind == "asm") {
        enumerate_asms(n, [&](const Asm& a) {
            ++count;
            if (want_items) items.push_back(to_json(a));
        });
    } else if (kind == "sixvertex") {
        enumerate_asms(n, [&](const Asm& a) {
            ++count;
            if (want_items) items.push_back(to_json(asm_to_sixvertex(a)));
        });
    } else if (kind == "height") {
        enumerate_asms(n, [&](const Asm& a) {
            ++count;
            if (want_items) items.push_back(to_json(asm_to_height(a)));
        });
    } else if (kind == "fpl") {
        enumerate_asms(n, [&](const Asm& a) {
            ++count;
            if (want_items) items.push_back(to_json(sixvertex_to_fpl(asm_to_sixvertex(a))));
        });
    } else if (kind == "linkpattern") {
        for (const LinkPattern& mu : enumerate_link_patterns(n)) {
            ++count;
            if (want_items) items.push_back(to_json(mu));
        }
    } else {
        std::cerr << "error: unknown kind " << kind << "\n";
        return 2;
    }
    if (format == "count") {
        out.write(std::to_string(count) + "\n");
    } else {
        json doc{{"schema", kSchema}, {"kind", "enumeration"}, {"object", kind}, {"n", n},
                 {"count", count},    {"items", items}};
        out.write(dump(doc));
    }
    return 0;
}

// Conversions hub: parse the input representation, pass through the ice
// state, emit the target representation.
int cmd_convert(const std::string& from, const std::string& to, const std::string& in_path,
                const Output& out) {
    json payload = read_payload(in_path);
    IceState state{GridSpec(1, 1), {0, 0, 0, 0}};
    if (from == "asm")
        state = asm_to_sixvertex(asm_from_json(payload));
    else if (from == "sixvertex")
        state = ice_from_json(payload);
    else if (from == "height")
        state = height_to_state(height_from_json(payload));
    else if (from == "fpl")
        state = fpl_to_sixvertex(fpl_from_json(payload));
    else {
        std::cerr << "error: unknown --from " << from << "\n";
        return 2;
    }
    json doc;
    if (to == "asm")
        doc = to_json(sixvertex_to_asm(state));
    else if (to == "sixvertex")
        doc = to_json(state);
    else if (to == "height")
        doc = to_json(state_to_height(state));
    else if (to == "fpl")
        doc = to_json(sixvertex_to_fpl(state));
    else {
        std::cerr << "error: unknown --to " << to << "\n";
        return 2;
    }
    out.write(dump(doc));
    return 0;
}

int cmd_verify(const std::string& suite, int n, const Output& out) {
    std::vector<checks::Result> results = checks::run_suite(suite, n);
    bool all_pass = true;
    json items = json::array();
    for (const checks::Result& r : results) {
        all_pass = all_pass && r.pass;
        items.push_back(json{{"name", r.name}, {"status", r.pass ? "pass" : "fail"}, {"detail", r.detail}});
    }
    json doc{{"schema", kSchema}, {"kind", "verify"}, {"suite", suite}, {"n", n},
             {"ok", all_pass},    {"checks", items}};
    out.write(dump(doc));
    return all_pass ? 0 : 1;
}

int cmd_orbit(int n, bool allow_large, const Output& out) {
    int cap = size_cap(allow_large, kDefaultCap);
    if (n < 1 || n > cap) {
        std::cerr << "error: n out of range (cap " << cap << ")\n";
        return 2;
    }
    json orbits = json::array();
    for (const Orbit& o : orbit_decomposition(n)) {
        json members = json::array();
        for (const Fpl& f : o.members) members.push_back(to_json(f));
        json sums = json::object();
        for (int i = 1; i <= n - 1; ++i)
            for (int j = 1; j <= n - 1; ++j) {
                long long sum = 0;
                for (const Fpl& f : o.members) sum += n_alpha(f, i, j);
                sums[std::to_string(i) + "," + std::to_string(j)] = sum;
            }
        orbits.push_back(json{{"period", o.period}, {"members", members}, {"nalpha_sums", sums}});
    }
    json doc{{"schema", kSchema}, {"kind", "orbits"}, {"n", n}, {"orbits", orbits}};
    out.write(dump(doc));
    return 0;
}

int cmd_psi(int n, bool refined, const std::string& boundary, const std::string& cycles,
            bool allow_large, const Output& out) {
    int cap = size_cap(allow_large, kDefaultCap);
    if (n < 1 || n > cap) {
        std::cerr << "error: n out of range (cap " << cap << ")\n";
        return 2;
    }
    Boundary b = boundary == "plus" ? Boundary::Plus : Boundary::Minus;
    json entries = json::array();
    if (refined) {
        for (const auto& [key, count] : psi_refined(n, b)) {
            json e{{"black", to_json(key.black)["pairs"]}, {"white", to_json(key.white)["pairs"]},
                   {"count", count}};
            if (cycles == "per-color") {
                e["cycles_black"] = key.cycles_black;
                e["cycles_white"] = key.cycles_white;
            } else {
                e["cycles"] = key.cycles();
            }
            entries.push_back(e);
        }
    } else {
        for (const auto& [mu, count] : psi_table(n, b))
            entries.push_back(json{{"pattern", to_json(mu)["pairs"]}, {"count", count}});
    }
    json doc{{"schema", kSchema}, {"kind", "psi"},      {"n", n},
             {"boundary", boundary}, {"refined", refined}, {"entries", entries}};
    out.write(dump(doc));
    return 0;
}

int cmd_poset(int n, const std::string& format, const Output& out) {
    if (n < 1) {
        std::cerr << "error: n must be >= 1\n";
        return 2;
    }
    if (format == "dot") {
        out.write(render_poset_dot(n));
        return 0;
    }
    json elems = json::array();
    for (const PosetElement& e : poset_elements(n))
        elems.push_back(json{{"i", e.i}, {"j", e.j}, {"k", e.k}, {"rank", e.rank()}});
    json covers_arr = json::array();
    auto all = poset_elements(n);
    for (const PosetElement& x : all)
        for (const PosetElement& y : all)
            if (covers(n, x, y)) covers_arr.push_back(json{{"upper", x.str()}, {"lower", y.str()}});
    json doc{{"schema", kSchema},    {"kind", "poset"},
             {"n", n},               {"elements", elems},
             {"covers", covers_arr}, {"rank_polynomial", rank_polynomial(n)}};
    out.write(dump(doc));
    return 0;
}

int cmd_tl(int n, const std::string& op, int j, const Output& out) {
    if (n < 1 || n > kLinkPatternCap) {
        std::cerr << "error: n out of range\n";
        return 2;
    }
    std::vector<std::vector<long long>> mat;
    if (op == "rotation") {
        mat = operator_matrix(n, [](const LinkPattern& mu) { return rotate(mu); });
    } else if (op == "matchmaker") {
        if (j < 1 || j > 2 * n) {
            std::cerr << "error: --j out of 1..2n\n";
            return 2;
        }
        mat = operator_matrix(n, [j](const LinkPattern& mu) { return matchmaker(j, mu); });
    } else if (op == "hamiltonian" || op == "sym") {
        std::vector<LinkPattern> basis = enumerate_link_patterns(n);
        std::map<LinkPattern, int> index;
        for (size_t t = 0; t < basis.size(); ++t) index[basis[t]] = static_cast<int>(t);
        mat.assign(basis.size(), std::vector<long long>(basis.size(), 0));
        for (size_t col = 0; col < basis.size(); ++col) {
            LinkVector v = op == "hamiltonian" ? hamiltonian(basis_vector(basis[col]))
                                               : sym(basis_vector(basis[col]));
            for (const auto& [mu, c] : v.coeff) mat[index.at(mu)][col] = c;
        }
    } else {
        std::cerr << "error: unknown --op " << op << "\n";
        return 2;
    }
    json basis = json::array();
    for (const LinkPattern& mu : enumerate_link_patterns(n)) basis.push_back(to_json(mu)["pairs"]);
    json doc{{"schema", kSchema}, {"kind", "tl-operator"}, {"n", n},
             {"op", op},          {"basis", basis},        {"matrix", mat}};
    if (op == "matchmaker") doc["j"] = j;
    out.write(dump(doc));
    return 0;
}

int cmd_render(const std::string& kind, const std::string& format, const std::string& in_path,
               const Output& out) {
    if (kind == "poset") {
        json payload = read_payload(in_path);
        if (!payload.contains("n")) throw BadPayload("poset render needs {\"n\":...}");
        if (format != "dot") throw BadPayload("poset renders as dot only");
        out.write(render_poset_dot(payload.at("n").get<int>()));
        return 0;
    }
    json payload = read_payload(in_path);
    if (kind == "sixvertex") {
        if (format == "ascii")
            out.write(render_ice_ascii(ice_from_json(payload)));
        else if (format == "outedges")
            out.write(ice_out_edges(ice_from_json(payload)));
        else
            throw BadPayload("sixvertex renders as ascii or outedges");
    } else if (kind == "fpl") {
        if (format == "ascii")
            out.write(render_fpl_ascii(fpl_from_json(payload)));
        else if (format == "svg")
            out.write(render_fpl_svg(fpl_from_json(payload)));
        else
            throw BadPayload("fpl renders as ascii or svg");
    } else if (kind == "linkpattern") {
        if (format == "ascii")
            out.write(render_link_pattern_ascii(link_pattern_from_json(payload)));
        else if (format == "svg")
            out.write(render_link_pattern_svg(link_pattern_from_json(payload)));
        else
            throw BadPayload("linkpattern renders as ascii or svg");
    } else {
        throw BadPayload("unknown render kind " + kind);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ASM / six-vertex / height-function / FPL toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_path;
    app.add_option("--out", out_path, "write output to FILE instead of stdout");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "list or count objects of one kind");
    std::string enum_kind = "asm", enum_format = "json";
    int enum_n = 1;
    bool enum_large = false;
    enumerate->add_option("kind", enum_kind, "asm|sixvertex|height|fpl|linkpattern")->required();
    enumerate->add_option("-n", enum_n, "size")->required();
    enumerate->add_option("--format", enum_format, "json|count")
        ->check(CLI::IsMember({"json", "count"}));
    enumerate->add_flag("--allow-large", enum_large, "disable the size cap");

    // convert
    auto* convert = app.add_subcommand("convert", "convert between representations");
    std::string conv_from, conv_to, conv_in;
    convert->add_option("--from", conv_from, "asm|sixvertex|height|fpl")->required();
    convert->add_option("--to", conv_to, "asm|sixvertex|height|fpl")->required();
    convert->add_option("--in", conv_in, "input file (default: stdin)");

    // verify
    auto* verify = app.add_subcommand("verify", "run an exhaustive verification suite");
    std::string verify_suite;
    int verify_n = 4;
    verify->add_option("suite", verify_suite, "suite name or 'all'")
        ->required()
        ->check(CLI::IsMember(checks::suite_names()));
    verify->add_option("-n", verify_n, "size bound (default 4)");

    // orbit
    auto* orbi = app.add_subcommand("orbit", "gyration orbit report for fpl(n,tau-)");
    int orbit_n = 3;
    bool orbit_large = false;
    orbi->add_option("-n", orbit_n, "size")->required();
    orbi->add_flag("--allow-large", orbit_large, "disable the size cap");

    // psi
    auto* psi = app.add_subcommand("psi", "FPL counts by link pattern");
    int psi_n = 3;
    bool psi_refined_flag = false, psi_large = false;
    std::string psi_boundary = "minus", psi_cycles = "joint";
    psi->add_option("-n", psi_n, "size")->required();
    psi->add_flag("--refined", psi_refined_flag, "refine by both patterns and cycle count");
    psi->add_option("--boundary", psi_boundary, "minus|plus")
        ->check(CLI::IsMember({"minus", "plus"}));
    psi->add_option("--cycles", psi_cycles, "joint|per-color")
        ->check(CLI::IsMember({"joint", "per-color"}));
    psi->add_flag("--allow-large", psi_large, "disable the size cap");

    // poset
    auto* poset = app.add_subcommand("poset", "the graded poset P_n");
    int poset_n = 4;
    std::string poset_format = "json";
    poset->add_option("-n", poset_n, "size")->required();
    poset->add_option("--format", poset_format, "json|dot")->check(CLI::IsMember({"json", "dot"}));

    // tl
    auto* tl = app.add_subcommand("tl", "operator matrices over the F(2n) basis");
    int tl_n = 2, tl_j = 1;
    std::string tl_op = "rotation";
    tl->add_option("-n", tl_n, "size")->required();
    tl->add_option("--op", tl_op, "rotation|matchmaker|hamiltonian|sym")
        ->check(CLI::IsMember({"rotation", "matchmaker", "hamiltonian", "sym"}));
    tl->add_option("--j", tl_j, "matchmaker index");

    // render
    auto* render = app.add_subcommand("render", "draw an object");
    std::string render_kind, render_format = "ascii", render_in;
    render->add_option("kind", render_kind, "sixvertex|fpl|linkpattern|poset")->required();
    render->add_option("--format", render_format, "ascii|svg|dot|outedges");
    render->add_option("--in", render_in, "input file (default: stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Output out{out_path};
    try {
        if (*enumerate) return cmd_enumerate(enum_kind, enum_n, enum_format, enum_large, out);
        if (*convert) return cmd_convert(conv_from, conv_to, conv_in, out);
        if (*verify) return cmd_verify(verify_suite, verify_n, out);
        if (*orbi) return cmd_orbit(orbit_n, orbit_large, out);
        if (*psi) return cmd_psi(psi_n, psi_refined_flag, psi_boundary, psi_cycles, psi_large, out);
        if (*poset) return cmd_poset(poset_n, poset_format, out);
        if (*tl) return cmd_tl(tl_n, tl_op, tl_j, out);
        if (*render) return cmd_render(render_kind, render_format, render_in, out);
    } catch (const BadPayload& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
