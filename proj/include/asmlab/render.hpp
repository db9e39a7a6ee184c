#pragma once

#include <string>

#include "asmlab/fpl.hpp"
#include "asmlab/height.hpp"

// Drawing helpers: arrows for ice states, solid/dashed marks for FPL
// colors, arc diagrams for link patterns and a Hasse diagram for P_n.

namespace asmlab {

// Grid sketch with '>' 'v' '<' '^' on edges; '+' interior, 'o' boundary.
std::string render_ice_ascii(const IceState& s);

// Grid sketch with '#' for black edges and '.' for white ones.
std::string render_fpl_ascii(const Fpl& f);

std::string render_fpl_svg(const Fpl& f);

// 2n points on a line with the n arcs above them.
std::string render_link_pattern_ascii(const LinkPattern& mu);
std::string render_link_pattern_svg(const LinkPattern& mu);

// DOT digraph of P_n with the cover edges only, drawn upward.
std::string render_poset_dot(int n);

}  // namespace asmlab
