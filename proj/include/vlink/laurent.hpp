#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vlink {

using Integer = boost::multiprecision::cpp_int;

// Integer-coefficient Laurent polynomial in one variable.
//
// Stored densely: coeffs_[i] is the coefficient of t^(low_ + i). The
// representation is kept trimmed, so the first and last stored coefficients
// are nonzero and the zero polynomial has no coefficients at all.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(Integer constant);

  static LaurentPoly monomial(Integer coefficient, int exponent);
  static LaurentPoly variable(int exponent = 1) { return monomial(1, exponent); }
  static LaurentPoly from_terms(const std::map<int, Integer>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  // Both require a nonzero polynomial.
  int min_exponent() const { return low_; }
  int max_exponent() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }

  Integer coefficient(int exponent) const;
  std::map<int, Integer> terms() const;
  std::size_t term_count() const;

  LaurentPoly shifted(int k) const;  // multiply by t^k
  LaurentPoly inverted_variable() const;  // t -> t^-1
  // Substitute t -> t^k for k != 0.
  LaurentPoly dilated(int k) const;
  LaurentPoly leading_unit_normalized() const;

  Integer evaluate_at_one() const;
  Integer evaluate_at_minus_one() const;
  Integer content() const;  // nonnegative gcd of coefficients; 0 for zero

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  // Multiply every coefficient by an integer / divide exactly by one.
  LaurentPoly scaled(const Integer& factor) const;
  LaurentPoly divided_exactly(const Integer& divisor) const;

  // Human-readable form, highest exponent first: "t^2 - t + 1".
  std::string to_string(std::string_view var = "t") const;

 private:
  void trim();

  int low_ = 0;
  std::vector<Integer> coeffs_;
};

// Canonical representative of the class {+-t^k p}: minimum exponent 0 and a
// positive lowest-degree coefficient. Zero maps to zero.
LaurentPoly canonicalize(const LaurentPoly& p);

bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b);

// True iff (-1)^(i+j) c_i c_j >= 0 for every pair of exponents.
bool is_alternating_poly(const LaurentPoly& p);

// |p(-1)|.
Integer eval_at_minus_one(const LaurentPoly& p);

// Quotient a / b in Z[t, t^-1] when b divides a exactly; nullopt otherwise.
// Throws std::domain_error on division by zero.
std::optional<LaurentPoly> exact_quotient(const LaurentPoly& a, const LaurentPoly& b);

// Generator of the smallest principal ideal containing (a, b), canonicalized.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

// Parse the output format of to_string back (used by fixtures and tests).
// Accepts terms like "-3t^-2", "+ t", "5", and "t^{1/2}" is rejected.
LaurentPoly parse_laurent(std::string_view text, char var = 't');

}  // namespace vlink
