#include "asmlab/json_io.hpp"

#include <algorithm>

using nlohmann::json;

namespace asmlab {

namespace {

constexpr char kB64[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

int b64_value(char c) {
    if ('A' <= c && c <= 'Z') return c - 'A';
    if ('a' <= c && c <= 'z') return c - 'a' + 26;
    if ('0' <= c && c <= '9') return c - '0' + 52;
    if (c == '+') return 62;
    if (c == '/') return 63;
    throw BadPayload("base64: bad character");
}

}  // namespace

std::string base64_encode(const std::vector<uint8_t>& bytes) {
    std::string out;
    size_t i = 0;
    for (; i + 2 < bytes.size(); i += 3) {
        uint32_t v = (bytes[i] << 16) | (bytes[i + 1] << 8) | bytes[i + 2];
        out += kB64[(v >> 18) & 63];
        out += kB64[(v >> 12) & 63];
        out += kB64[(v >> 6) & 63];
        out += kB64[v & 63];
    }
    if (i + 1 == bytes.size()) {
        uint32_t v = bytes[i] << 16;
        out += kB64[(v >> 18) & 63];
        out += kB64[(v >> 12) & 63];
        out += "==";
    } else if (i + 2 == bytes.size()) {
        uint32_t v = (bytes[i] << 16) | (bytes[i + 1] << 8);
        out += kB64[(v >> 18) & 63];
        out += kB64[(v >> 12) & 63];
        out += kB64[(v >> 6) & 63];
        out += '=';
    }
    return out;
}

std::vector<uint8_t> base64_decode(const std::string& text) {
    if (text.size() % 4 != 0) throw BadPayload("base64: length not a multiple of 4");
    std::vector<uint8_t> out;
    for (size_t i = 0; i < text.size(); i += 4) {
        int pad = 0;
        uint32_t v = 0;
        for (int t = 0; t < 4; ++t) {
            char c = text[i + t];
            if (c == '=') {
                ++pad;
                v <<= 6;
            } else {
                if (pad) throw BadPayload("base64: data after padding");
                v = (v << 6) | b64_value(c);
            }
        }
        out.push_back((v >> 16) & 255);
        if (pad < 2) out.push_back((v >> 8) & 255);
        if (pad < 1) out.push_back(v & 255);
    }
    return out;
}

std::vector<uint8_t> pack_bits(const std::vector<uint8_t>& bits) {
    std::vector<uint8_t> bytes((bits.size() + 7) / 8, 0);
    for (size_t k = 0; k < bits.size(); ++k)
        if (bits[k]) bytes[k >> 3] |= static_cast<uint8_t>(1u << (k & 7));
    return bytes;
}

std::vector<uint8_t> unpack_bits(const std::vector<uint8_t>& bytes, int count) {
    if (static_cast<size_t>(count + 7) / 8 != bytes.size()) throw BadPayload("bits: wrong byte count");
    std::vector<uint8_t> bits(count, 0);
    for (int k = 0; k < count; ++k) bits[k] = (bytes[k >> 3] >> (k & 7)) & 1;
    return bits;
}

std::string edge_to_string(const EdgeKey& e) { return e.str(); }

EdgeKey edge_from_string(const std::string& s) {
    if (s.size() < 5 || (s[0] != 'H' && s[0] != 'V') || s[1] != ':')
        throw BadPayload("edge: expected \"H:i:j\" or \"V:i:j\"");
    size_t sep = s.find(':', 2);
    if (sep == std::string::npos) throw BadPayload("edge: expected two indices");
    int i, j;
    try {
        i = std::stoi(s.substr(2, sep - 2));
        j = std::stoi(s.substr(sep + 1));
    } catch (const std::exception&) {
        throw BadPayload("edge: bad indices in " + s);
    }
    return s[0] == 'H' ? H(i, j) : V(i, j);
}

namespace {

json base(const char* kind) { return json{{"schema", kSchema}, {"kind", kind}}; }

void expect(const json& j, const char* kind) {
    if (!j.is_object()) throw BadPayload("payload must be a JSON object");
    if (j.contains("kind") && j.at("kind") != kind)
        throw BadPayload(std::string("payload kind is not \"") + kind + "\"");
}

}  // namespace

json to_json(const GridSpec& g) {
    json j = base("grid");
    j["m"] = g.m;
    j["n"] = g.n;
    return j;
}

json to_json(const Asm& a) {
    json rows = json::array();
    for (int i = 1; i <= a.n; ++i) {
        json row = json::array();
        for (int j = 1; j <= a.n; ++j) row.push_back(a.at(i, j));
        rows.push_back(row);
    }
    json j = base("asm");
    j["n"] = a.n;
    j["rows"] = rows;
    return j;
}

json to_json(const IceState& s) {
    json j = base("sixvertex");
    j["m"] = s.spec.m;
    j["n"] = s.spec.n;
    j["bits"] = base64_encode(pack_bits(s.dir));
    return j;
}

json to_json(const HeightFn& h) {
    json rows = json::array();
    for (int i = 0; i <= h.m; ++i) {
        json row = json::array();
        for (int j = 0; j <= h.n; ++j) row.push_back(h.at(i, j));
        rows.push_back(row);
    }
    json j = base("height");
    j["n"] = h.n;
    j["h"] = rows;
    return j;
}

json to_json(const Fpl& f) {
    json blacks = json::array();
    for (EdgeKey e : edge_set(f.grid()))
        if (f.is_black(e)) blacks.push_back(e.str());
    json j = base("fpl");
    j["n"] = f.n;
    j["black"] = blacks;
    return j;
}

json to_json(const LinkPattern& mu) {
    json pairs = json::array();
    for (auto [u, v] : mu.pairs) pairs.push_back(json::array({u, v}));
    json j = base("linkpattern");
    j["n"] = mu.n;
    j["pairs"] = pairs;
    return j;
}

json to_json(const LinkVector& v) {
    json terms = json::array();
    for (const auto& [mu, c] : v.coeff)
        terms.push_back(json{{"key", to_json(mu)}, {"coeff", c}});
    json j = base("linkvector");
    j["n"] = v.n;
    j["terms"] = terms;
    return j;
}

json to_json(const FplVector& v) {
    json terms = json::array();
    for (const auto& [f, c] : v.coeff)
        terms.push_back(json{{"key", to_json(f)}, {"coeff", c}});
    json j = base("fplvector");
    j["n"] = v.n;
    j["boundary"] = v.word;
    j["terms"] = terms;
    return j;
}

GridSpec grid_from_json(const json& j) {
    expect(j, "grid");
    try {
        return GridSpec(j.at("m").get<int>(), j.at("n").get<int>());
    } catch (const json::exception& e) {
        throw BadPayload(std::string("grid: ") + e.what());
    }
}

Asm asm_from_json(const json& j) {
    expect(j, "asm");
    try {
        int n = j.at("n").get<int>();
        auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
        return validate_asm(n, rows);
    } catch (const json::exception& e) {
        throw BadPayload(std::string("asm: ") + e.what());
    }
}

IceState ice_from_json(const json& j) {
    expect(j, "sixvertex");
    try {
        GridSpec g(j.at("m").get<int>(), j.at("n").get<int>());
        auto bits = unpack_bits(base64_decode(j.at("bits").get<std::string>()), g.edge_count());
        return validate_ice(g, bits);
    } catch (const json::exception& e) {
        throw BadPayload(std::string("sixvertex: ") + e.what());
    }
}

HeightFn height_from_json(const json& j) {
    expect(j, "height");
    try {
        int n = j.at("n").get<int>();
        auto rows = j.at("h").get<std::vector<std::vector<int>>>();
        return validate_height_fn(n, rows);
    } catch (const json::exception& e) {
        throw BadPayload(std::string("height: ") + e.what());
    }
}

Fpl fpl_from_json(const json& j) {
    expect(j, "fpl");
    try {
        int n = j.at("n").get<int>();
        EdgeColoring c = blank_coloring(n);
        for (const auto& item : j.at("black")) {
            EdgeKey e = edge_from_string(item.get<std::string>());
            if (!is_edge(c.grid(), e)) throw BadPayload("fpl: edge outside L_n: " + e.str());
            c.set_black(e, true);
        }
        return validate_fpl(c);
    } catch (const json::exception& e) {
        throw BadPayload(std::string("fpl: ") + e.what());
    }
}

LinkPattern link_pattern_from_json(const json& j) {
    expect(j, "linkpattern");
    try {
        int n = j.at("n").get<int>();
        std::vector<std::pair<int, int>> pairs;
        for (const auto& item : j.at("pairs"))
            pairs.emplace_back(item.at(0).get<int>(), item.at(1).get<int>());
        return make_link_pattern(n, std::move(pairs));
    } catch (const json::exception& e) {
        throw BadPayload(std::string("linkpattern: ") + e.what());
    }
}

std::string ice_out_edges(const IceState& s) {
    std::string out;
    for (int i = 1; i <= s.spec.m; ++i)
        for (int j = 1; j <= s.spec.n; ++j) {
            VertexId v{i, j};
            out += "(" + std::to_string(i) + "," + std::to_string(j) + "):";
            const char* names[4] = {" N", " E", " S", " W"};
            EdgeKey edges[4] = {north_edge(v), east_edge(v), south_edge(v), west_edge(v)};
            for (int t = 0; t < 4; ++t)
                if (s.goes_out(edges[t], v)) out += names[t];
            out += "\n";
        }
    return out;
}

}  // namespace asmlab
