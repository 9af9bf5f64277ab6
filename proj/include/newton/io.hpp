#ifndef NEWTON_IO_HPP
#define NEWTON_IO_HPP

#include <json.hpp>
#include <ostream>
#include <string>

#include "newton/polyhedron.hpp"

namespace newton {

// All rationals serialize as "p/q" (or "p") strings, never floats.
nlohmann::json rational_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json polyhedron_json(const StaircasePolyhedron& p);

// Round trip: reconstructs the canonical polyhedron from its vertex list,
// so a serialized computed polyhedron reads back structurally equal.
StaircasePolyhedron polyhedron_from_json(const nlohmann::json& j);

nlohmann::json face_json(const CompactFace& face);

// Plain-text description "conv{(a,b),(c,d)}" used in human-readable reports.
std::string face_label(const CompactFace& face);

// Deterministic d = 2 staircase plot: axes, the bounded complement of the
// polyhedron shaded, vertices marked and labeled with exact coordinates.
// Throws UnsupportedDimensionError unless d = 2.
void write_staircase_svg(const StaircasePolyhedron& p, std::ostream& out);

}  // namespace newton

#endif
