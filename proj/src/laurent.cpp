#include "vlink/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace vlink {

namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

Integer integer_gcd(Integer a, Integer b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Dense polynomial helpers on coefficient vectors (index = exponent).
using Dense = std::vector<Integer>;

void trim_dense(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Pseudo-remainder of a by b (b nonzero), both with index = exponent.
Dense pseudo_remainder(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lead = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const Integer top = a.back();
    for (auto& c : a) c *= lead;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= top * b[i];
    trim_dense(a);
  }
  return a;
}

Integer dense_content(const Dense& p) {
  Integer g = 0;
  for (const auto& c : p) {
    g = integer_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

Dense primitive_part(Dense p) {
  const Integer c = dense_content(p);
  if (c > 1)
    for (auto& x : p) x /= c;
  return p;
}

}  // namespace

LaurentPoly::LaurentPoly(long long constant) : LaurentPoly(Integer(constant)) {}

LaurentPoly::LaurentPoly(Integer constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

LaurentPoly LaurentPoly::monomial(Integer coefficient, int exponent) {
  LaurentPoly p;
  if (coefficient != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(std::move(coefficient));
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, Integer>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(c, e);
  return p;
}

Integer LaurentPoly::coefficient(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > max_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::map<int, Integer> LaurentPoly::terms() const {
  std::map<int, Integer> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; }));
}

void LaurentPoly::trim() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  if (first > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<int>(first);
  }
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPoly LaurentPoly::inverted_variable() const { return dilated(-1); }

LaurentPoly LaurentPoly::dilated(int k) const {
  if (k == 0) throw std::invalid_argument("dilation by zero");
  LaurentPoly out;
  for (const auto& [e, c] : terms()) out += monomial(c, e * k);
  return out;
}

LaurentPoly LaurentPoly::leading_unit_normalized() const {
  return canonicalize(*this);
}

Integer LaurentPoly::evaluate_at_one() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

Integer LaurentPoly::evaluate_at_minus_one() const {
  Integer s = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int e = low_ + static_cast<int>(i);
    if (e % 2 == 0)
      s += coeffs_[i];
    else
      s -= coeffs_[i];
  }
  return s;
}

Integer LaurentPoly::content() const { return dense_content(coeffs_); }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const int lo = std::min(low_, other.low_);
  const int hi = std::max(max_exponent(), other.max_exponent());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Integer(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), Integer(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    coeffs_[static_cast<std::size_t>(other.low_ - low_) + i] += other.coeffs_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.low_ = a.low_ + b.low_;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  out.trim();
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly LaurentPoly::scaled(const Integer& factor) const {
  if (factor == 0) return {};
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c *= factor;
  return p;
}

LaurentPoly LaurentPoly::divided_exactly(const Integer& divisor) const {
  if (divisor == 0) throw std::domain_error("division by zero");
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) {
    if (c % divisor != 0) throw std::domain_error("inexact integer division of a Laurent polynomial");
    c /= divisor;
  }
  return p;
}

std::string LaurentPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int e = max_exponent(); e >= low_; --e) {
    const Integer c = coefficient(e);
    if (c == 0) continue;
    const Integer mag = abs_value(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << var;
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

LaurentPoly canonicalize(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly q = p.shifted(-p.min_exponent());
  if (q.coefficient(0) < 0) q = -q;
  return q;
}

bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b) {
  return canonicalize(a) == canonicalize(b);
}

bool is_alternating_poly(const LaurentPoly& p) {
  // The condition holds iff c_i * (-1)^i has constant sign over nonzero terms.
  int seen = 0;
  for (const auto& [e, c] : p.terms()) {
    int s = c > 0 ? 1 : -1;
    if (e % 2 != 0) s = -s;
    if (seen == 0)
      seen = s;
    else if (seen != s)
      return false;
  }
  return true;
}

Integer eval_at_minus_one(const LaurentPoly& p) { return abs_value(p.evaluate_at_minus_one()); }

std::optional<LaurentPoly> exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
  if (a.is_zero()) return LaurentPoly{};
  // Reduce to ordinary polynomials with nonzero constant terms; a unit
  // factor t^k is all the shift can contribute.
  const int shift = a.min_exponent() - b.min_exponent();
  Dense num;
  Dense den;
  for (int e = a.min_exponent(); e <= a.max_exponent(); ++e) num.push_back(a.coefficient(e));
  for (int e = b.min_exponent(); e <= b.max_exponent(); ++e) den.push_back(b.coefficient(e));
  if (num.size() < den.size()) return std::nullopt;
  Dense quot(num.size() - den.size() + 1, Integer(0));
  const Integer& lead = den.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Integer& top = num[k + den.size() - 1];
    if (top % lead != 0) return std::nullopt;
    quot[k] = top / lead;
    if (quot[k] == 0) continue;
    for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= quot[k] * den[i];
  }
  for (const auto& r : num)
    if (r != 0) return std::nullopt;
  LaurentPoly q;
  for (std::size_t i = 0; i < quot.size(); ++i) q += LaurentPoly::monomial(quot[i], static_cast<int>(i));
  return q.shifted(shift);
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return canonicalize(b);
  if (b.is_zero()) return canonicalize(a);
  auto to_dense = [](const LaurentPoly& p) {
    Dense d;
    for (int e = p.min_exponent(); e <= p.max_exponent(); ++e) d.push_back(p.coefficient(e));
    return d;
  };
  Dense x = to_dense(a);
  Dense y = to_dense(b);
  const Integer content = integer_gcd(dense_content(x), dense_content(y));
  x = primitive_part(std::move(x));
  y = primitive_part(std::move(y));
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    Dense r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.empty() ? Dense{} : primitive_part(std::move(r));
  }
  LaurentPoly g;
  for (std::size_t i = 0; i < x.size(); ++i) g += LaurentPoly::monomial(x[i], static_cast<int>(i));
  return canonicalize(g.scaled(content));
}

LaurentPoly parse_laurent(std::string_view text, char var) {
  LaurentPoly out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&](bool allow_sign) -> std::optional<Integer> {
    std::size_t start = i;
    if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (digits == i) {
      i = start;
      return std::nullopt;
    }
    return Integer(std::string(text.substr(start, i - start)));
  };
  skip_ws();
  if (text.substr(i) == "0") return out;
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' between terms");
    }
    first = false;
    Integer coeff = 1;
    bool has_coeff = false;
    if (auto c = read_int(false)) {
      coeff = *c;
      has_coeff = true;
    }
    skip_ws();
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip_ws();
    }
    int exponent = 0;
    if (i < text.size() && text[i] == var) {
      ++i;
      exponent = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        bool braced = i < text.size() && text[i] == '{';
        if (braced) ++i;
        auto e = read_int(true);
        if (!e) throw std::invalid_argument("bad exponent in polynomial");
        exponent = static_cast<int>(*e);
        if (braced) {
          if (i >= text.size() || text[i] != '}') throw std::invalid_argument("unterminated exponent");
          ++i;
        }
      }
    } else if (!has_coeff) {
      throw std::invalid_argument("empty term in polynomial");
    }
    out += LaurentPoly::monomial(coeff * sign, exponent);
  }
  return out;
}

}  // namespace vlink
