#pragma once

#include <string>

#include <json.hpp>

#include "asmlab/gyration.hpp"
#include "asmlab/height.hpp"
#include "asmlab/tl.hpp"

// JSON forms of every object, all carrying "schema":"asmlab/1". Ice states
// pack their direction bits in edge order, LSB-first per byte, base64 coded.

namespace asmlab {

inline constexpr const char* kSchema = "asmlab/1";

std::string base64_encode(const std::vector<uint8_t>& bytes);
std::vector<uint8_t> base64_decode(const std::string& text);

std::vector<uint8_t> pack_bits(const std::vector<uint8_t>& bits);
std::vector<uint8_t> unpack_bits(const std::vector<uint8_t>& bytes, int count);

nlohmann::json to_json(const GridSpec& g);
nlohmann::json to_json(const Asm& a);
nlohmann::json to_json(const IceState& s);
nlohmann::json to_json(const HeightFn& h);
nlohmann::json to_json(const Fpl& f);
nlohmann::json to_json(const LinkPattern& mu);
nlohmann::json to_json(const LinkVector& v);
nlohmann::json to_json(const FplVector& v);

std::string edge_to_string(const EdgeKey& e);
EdgeKey edge_from_string(const std::string& s);

struct BadPayload : std::runtime_error {
    explicit BadPayload(const std::string& what) : std::runtime_error(what) {}
};

GridSpec grid_from_json(const nlohmann::json& j);
Asm asm_from_json(const nlohmann::json& j);
IceState ice_from_json(const nlohmann::json& j);
HeightFn height_from_json(const nlohmann::json& j);
Fpl fpl_from_json(const nlohmann::json& j);
LinkPattern link_pattern_from_json(const nlohmann::json& j);

// Out-edges per vertex, one line each; the human-readable ice form.
std::string ice_out_edges(const IceState& s);

}  // namespace asmlab
