#pragma once

#include <string>

#include <json.hpp>

#include "vlink/gauss.hpp"
#include "vlink/laurent.hpp"
#include "vlink/moves.hpp"

namespace vlink::cli {

// {"<exponent>": coefficient, ...}; coefficients beyond 64 bits are strings.
nlohmann::json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

std::string not_applicable(const std::string& reason);

// n, writhe, determinant, alexander {coeffs, mode, text}, alternating_poly,
// checkerboard, almost_classical_diagram, vlk, split, jones. Fields whose
// preconditions fail hold a "not-applicable: <reason>" string.
nlohmann::json invariant_report(const GaussDiagram& d);

struct CheckFlags {
  bool alternating = false;
  bool split = false;
  bool checkerboard = false;
  bool almost_classical = false;
  bool cheng = false;
  bool split_certified = false;
  bool any() const { return alternating || split || checkerboard || almost_classical || cheng || split_certified; }
};

nlohmann::json check_report(const GaussDiagram& d, const CheckFlags& flags);

nlohmann::json bracket_report(const GaussDiagram& d);

nlohmann::json move_to_json(const MoveInstance& m);
// Throws std::invalid_argument (or a json exception) for a malformed record.
MoveInstance move_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const SearchVerdict& v);

// Aligned "key  value" lines; nested objects become dotted keys.
std::string render_text(const nlohmann::json& report);

}  // namespace vlink::cli
