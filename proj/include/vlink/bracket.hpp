#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "vlink/gauss.hpp"
#include "vlink/laurent.hpp"

namespace vlink {

inline constexpr std::size_t kBracketChordBound = 20;

// Kauffman bracket in A, normalized so a chordless circle gives 1. At a
// positive chord the A-smoothing is the oriented one, at a negative chord the
// B-smoothing is. Throws BoundExceeded beyond kBracketChordBound chords.
LaurentPoly bracket_state_sum(const GaussDiagram& d);
LaurentPoly bracket_state_sum_serial(const GaussDiagram& d);

// Number of loops after smoothing every chord; bit i of `oriented_mask`
// selects the oriented smoothing at d.chords()[i].
std::size_t state_loop_count(const GaussDiagram& d, unsigned long oriented_mask);

// Jones polynomial in q = t^(1/4): (-A^3)^(-writhe) <D> with A = q^-1.
LaurentPoly jones_polynomial(const GaussDiagram& d);

// A polynomial in q = t^(1/4) written in t with fractional exponents,
// highest first, e.g. "-t^(-1/2) + 3t^(-3/2)".
std::string format_quarter_powers(const LaurentPoly& q_poly);

// Inverse of format_quarter_powers. Also accepts braces, "t^{-3/2}", and
// plain integer exponents. Throws ParseError on malformed input or an
// exponent that is not a multiple of 1/4.
LaurentPoly parse_quarter_powers(std::string_view text);

// Polynomial in t^(1/4) obtained from a polynomial in t.
LaurentPoly t_to_q(const LaurentPoly& t_poly);

}  // namespace vlink
