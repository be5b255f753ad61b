#include "vlink/bracket.hpp"

#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <vector>

#include "vlink/error.hpp"
#include "vlink/numbering.hpp"

#ifdef VLINK_HAVE_OPENMP
#include <omp.h>
#endif

namespace vlink {

namespace {

// Segment s has start node 2s and end node 2s+1. Each chord glues four
// nodes in one of two ways.
struct ChordGluing {
  std::size_t tail_in_end;
  std::size_t tail_out_start;
  std::size_t head_in_end;
  std::size_t head_out_start;
  bool positive;
};

struct StateModel {
  std::size_t nodes = 0;
  std::vector<ChordGluing> chords;
};

StateModel state_model(const GaussDiagram& d) {
  StateModel m;
  m.nodes = 2 * short_arc_count(d);
  for (const Chord& c : d.chords()) {
    const ChordArcs a = chord_short_arcs(d, c);
    m.chords.push_back(ChordGluing{2 * a.over_in + 1, 2 * a.over_out, 2 * a.under_in + 1, 2 * a.under_out,
                                   c.sign == ChordSign::positive});
  }
  return m;
}

std::size_t count_loops(const StateModel& m, unsigned long oriented_mask, std::vector<std::size_t>& parent) {
  parent.resize(m.nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t loops = m.nodes;
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      --loops;
    }
  };
  for (std::size_t s = 0; 2 * s < m.nodes; ++s) unite(2 * s, 2 * s + 1);
  for (std::size_t i = 0; i < m.chords.size(); ++i) {
    const ChordGluing& g = m.chords[i];
    if ((oriented_mask >> i) & 1UL) {
      unite(g.tail_in_end, g.head_out_start);
      unite(g.head_in_end, g.tail_out_start);
    } else {
      unite(g.tail_in_end, g.head_in_end);
      unite(g.tail_out_start, g.head_out_start);
    }
  }
  return loops;
}

// counts[(a - b) + n][loops] over all states.
using StateCounts = std::vector<std::vector<long long>>;

void tally(const StateModel& m, unsigned long mask, StateCounts& counts, std::vector<std::size_t>& scratch) {
  const std::size_t n = m.chords.size();
  int a_minus_b = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const bool oriented = (mask >> i) & 1UL;
    a_minus_b += oriented == m.chords[i].positive ? 1 : -1;
  }
  ++counts[static_cast<std::size_t>(a_minus_b + static_cast<int>(n))][count_loops(m, mask, scratch)];
}

LaurentPoly assemble(const StateCounts& counts, std::size_t n) {
  const LaurentPoly loop_value = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
  std::vector<LaurentPoly> powers{LaurentPoly(1)};
  LaurentPoly result;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    for (std::size_t loops = 1; loops < counts[k].size(); ++loops) {
      if (counts[k][loops] == 0) continue;
      while (powers.size() < loops) powers.push_back(powers.back() * loop_value);
      result += LaurentPoly::monomial(counts[k][loops], static_cast<int>(k) - static_cast<int>(n)) *
                powers[loops - 1];
    }
  }
  return result;
}

void check_bound(const GaussDiagram& d) {
  if (d.crossing_count() > kBracketChordBound)
    throw BoundExceeded("bracket state sum is limited to " + std::to_string(kBracketChordBound) + " chords");
}

}  // namespace

std::size_t state_loop_count(const GaussDiagram& d, unsigned long oriented_mask) {
  std::vector<std::size_t> scratch;
  return count_loops(state_model(d), oriented_mask, scratch);
}

LaurentPoly bracket_state_sum_serial(const GaussDiagram& d) {
  check_bound(d);
  const StateModel m = state_model(d);
  const std::size_t n = m.chords.size();
  StateCounts counts(2 * n + 1, std::vector<long long>(m.nodes / 2 + 2, 0));
  std::vector<std::size_t> scratch;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) tally(m, mask, counts, scratch);
  return assemble(counts, n);
}

LaurentPoly bracket_state_sum(const GaussDiagram& d) {
#ifdef VLINK_HAVE_OPENMP
  check_bound(d);
  const StateModel m = state_model(d);
  const std::size_t n = m.chords.size();
  const std::size_t width = m.nodes / 2 + 2;
  StateCounts total(2 * n + 1, std::vector<long long>(width, 0));
#pragma omp parallel
  {
    StateCounts local(2 * n + 1, std::vector<long long>(width, 0));
    std::vector<std::size_t> scratch;
#pragma omp for schedule(static)
    for (long long mask = 0; mask < (1LL << n); ++mask) tally(m, static_cast<unsigned long>(mask), local, scratch);
#pragma omp critical
    for (std::size_t i = 0; i < total.size(); ++i)
      for (std::size_t j = 0; j < width; ++j) total[i][j] += local[i][j];
  }
  return assemble(total, n);
#else
  return bracket_state_sum_serial(d);
#endif
}

LaurentPoly jones_polynomial(const GaussDiagram& d) {
  const int w = stats(d).writhe;
  LaurentPoly v = bracket_state_sum(d).inverted_variable().shifted(3 * w);
  return w % 2 == 0 ? v : -v;
}

std::string format_quarter_powers(const LaurentPoly& q_poly) {
  if (q_poly.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int e = q_poly.max_exponent(); e >= q_poly.min_exponent(); --e) {
    const Integer c = q_poly.coefficient(e);
    if (c == 0) continue;
    const Integer mag = c < 0 ? Integer(-c) : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    const int g = std::gcd(std::abs(e), 4);
    const int num = e / g;
    const int den = 4 / g;
    if (den == 1) {
      out << 't';
      if (num != 1) out << '^' << num;
    } else {
      out << "t^(" << num << '/' << den << ')';
    }
  }
  return out.str();
}

LaurentPoly parse_quarter_powers(std::string_view text) {
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&]() -> long long {
    skip_space();
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw ParseError("expected an integer", i);
    const long long v = std::stoll(std::string(text.substr(start, i - start)));
    return negative ? -v : v;
  };
  std::map<int, Integer> terms;
  bool first = true;
  skip_space();
  if (text.substr(i) == "0") return LaurentPoly{};
  while (true) {
    skip_space();
    if (i >= text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_space();
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", i);
    }
    first = false;
    Integer coefficient = 1;
    bool has_digits = false;
    const std::size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i > digits) {
      coefficient = Integer(std::string(text.substr(digits, i - digits)));
      has_digits = true;
    }
    long long quarters = 0;
    if (i < text.size() && text[i] == 't') {
      ++i;
      quarters = 4;
      if (i < text.size() && text[i] == '^') {
        ++i;
        const char open = i < text.size() ? text[i] : '\0';
        const char close = open == '(' ? ')' : open == '{' ? '}' : '\0';
        if (close != '\0') ++i;
        const long long num = read_int();
        long long den = 1;
        skip_space();
        if (i < text.size() && text[i] == '/') {
          ++i;
          den = read_int();
        }
        if (close != '\0') {
          skip_space();
          if (i >= text.size() || text[i] != close) throw ParseError("unclosed exponent", i);
          ++i;
        }
        if (den <= 0 || (4 * num) % den != 0) throw ParseError("exponent is not a multiple of 1/4", i);
        quarters = 4 * num / den;
      }
    } else if (!has_digits) {
      throw ParseError("expected a term", i);
    }
    terms[static_cast<int>(quarters)] += sign * coefficient;
  }
  if (first) throw ParseError("empty polynomial", 0);
  return LaurentPoly::from_terms(terms);
}

LaurentPoly t_to_q(const LaurentPoly& t_poly) { return t_poly.dilated(4); }

}  // namespace vlink
