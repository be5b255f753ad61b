#include "vlink/alexander.hpp"

#include <algorithm>
#include <functional>

#include "vlink/error.hpp"
#include "vlink/numbering.hpp"

#ifdef VLINK_HAVE_OPENMP
#include <omp.h>
#endif

namespace vlink {

LongArcStructure long_arcs(const GaussDiagram& d) {
  LongArcStructure s;
  std::vector<std::size_t> arc_of_segment(short_arc_count(d), 0);
  for (std::size_t c = 0; c < d.circle_count(); ++c) {
    const Circle& circle = d.circles()[c];
    const std::size_t slots = circle.size();
    std::vector<std::size_t> heads;
    for (std::size_t p = 0; p < slots; ++p)
      if (circle[p].kind == EndpointKind::head) heads.push_back(p);
    if (heads.empty()) {
      LongArc arc{c, std::nullopt, {}};
      if (slots == 0) arc.segments.push_back(short_arc(d, c, 0));
      for (std::size_t r = 0; r < slots; ++r) arc.segments.push_back(short_arc(d, c, r));
      for (std::size_t seg : arc.segments) arc_of_segment[seg] = s.arcs.size();
      s.arcs.push_back(std::move(arc));
      continue;
    }
    for (std::size_t i = 0; i < heads.size(); ++i) {
      LongArc arc{c, heads[i], {}};
      std::size_t r = heads[i];
      do {
        arc.segments.push_back(short_arc(d, c, r));
        r = (r + 1) % slots;
      } while (circle[r].kind != EndpointKind::head);
      for (std::size_t seg : arc.segments) arc_of_segment[seg] = s.arcs.size();
      s.arcs.push_back(std::move(arc));
    }
  }
  for (const Chord& chord : d.chords()) {
    const ChordArcs a = chord_short_arcs(d, chord);
    s.incidence.push_back(ArcIncidence{arc_of_segment[a.over_out], arc_of_segment[a.under_in],
                                       arc_of_segment[a.under_out]});
  }
  return s;
}

WirtingerPresentation wirtinger(const GaussDiagram& d) {
  const LongArcStructure arcs = long_arcs(d);
  WirtingerPresentation p;
  p.generator_count = arcs.arc_count();
  for (std::size_t i = 0; i < d.chords().size(); ++i) {
    const ArcIncidence& a = arcs.incidence[i];
    const int e = to_int(d.chords()[i].sign);
    p.relations.push_back(Word{{a.in, 1}, {a.over, e}, {a.out, -1}, {a.over, -e}});
  }
  return p;
}

LaurentMatrix fox_jacobian(const WirtingerPresentation& p) {
  LaurentMatrix a(p.relations.size(), p.generator_count);
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    int prefix = 0;
    for (const Letter& letter : p.relations[i]) {
      if (letter.exponent > 0) {
        a(i, letter.generator) += LaurentPoly::variable(prefix);
        prefix += 1;
      } else {
        a(i, letter.generator) -= LaurentPoly::variable(prefix - 1);
        prefix -= 1;
      }
    }
  }
  return a;
}

IntegerMatrix coloring_matrix(const GaussDiagram& d) {
  const LongArcStructure arcs = long_arcs(d);
  IntegerMatrix b(d.crossing_count(), arcs.arc_count());
  for (std::size_t i = 0; i < arcs.incidence.size(); ++i) {
    const ArcIncidence& a = arcs.incidence[i];
    b(i, a.over) += 2;
    b(i, a.in) -= 1;
    b(i, a.out) -= 1;
  }
  return b;
}

Integer determinant(const GaussDiagram& d) {
  if (!is_checkerboard_colorable(d)) throw PreconditionError("determinant needs a checkerboard colorable diagram");
  const std::size_t n = d.crossing_count();
  if (n == 0) return d.circle_count() == 1 ? 1 : 0;
  const IntegerMatrix b = coloring_matrix(d);
  if (b.cols() > n) return 0;
  Integer det = vlink::determinant(b.without(n - 1, 0));
  return det < 0 ? Integer(-det) : det;
}

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    out.push_back(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace

LaurentPoly elementary_ideal_gcd(const GaussDiagram& d, std::size_t k) {
  const std::size_t n = d.crossing_count();
  if (k < 1 || k > n) throw PreconditionError("elementary ideal index must lie in 1..n");
  const LaurentMatrix a = fox_jacobian(wirtinger(d));
  const std::size_t m = a.cols();
  const std::size_t size = m - k;
  if (size > n) return LaurentPoly{};
  if (size == 0) return LaurentPoly(1);
  const auto row_sets = subsets(n, size);
  const auto col_sets = subsets(m, size);
  const std::size_t total = row_sets.size() * col_sets.size();
  std::vector<LaurentPoly> minors(total);
#pragma omp parallel for schedule(dynamic)
  for (long long idx = 0; idx < static_cast<long long>(total); ++idx) {
    const auto i = static_cast<std::size_t>(idx);
    minors[i] = vlink::determinant(a.select(row_sets[i / col_sets.size()], col_sets[i % col_sets.size()]));
  }
  LaurentPoly g;
  for (const LaurentPoly& minor : minors) {
    g = gcd(g, minor);
    if (g == LaurentPoly(1)) break;
  }
  return canonicalize(g);
}

LaurentPoly alexander_polynomial(const GaussDiagram& d, AlexanderMode mode) {
  const std::size_t n = d.crossing_count();
  if (mode == AlexanderMode::almost_classical && !is_almost_classical_diagram(d))
    throw PreconditionError("diagram admits no integer Alexander numbering");
  if (n == 0) return d.circle_count() == 1 ? LaurentPoly(1) : LaurentPoly{};
  if (mode == AlexanderMode::gcd) return elementary_ideal_gcd(d, 1);
  const LaurentMatrix a = fox_jacobian(wirtinger(d));
  if (a.cols() > n) return LaurentPoly{};
  return canonicalize(vlink::determinant(a.without(n - 1, a.cols() - 1)));
}

std::optional<std::vector<long long>> mod_p_labeling(const GaussDiagram& d, long long p) {
  if (!is_prime(p)) throw PreconditionError("mod p labeling needs a prime p");
  if (!is_checkerboard_colorable(d)) throw PreconditionError("mod p labeling needs a checkerboard colorable diagram");
  const IntegerMatrix b = coloring_matrix(d);
  const std::size_t rows = b.rows();
  const std::size_t cols = b.cols();
  auto mod = [p](long long x) { return ((x % p) + p) % p; };
  auto inverse = [&](long long x) {
    long long result = 1;
    long long base = mod(x);
    for (long long e = p - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
    }
    return result;
  };
  std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = mod(static_cast<long long>(b(r, c)));
  // Reduced row echelon form over Z/p.
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const long long inv = inverse(m[rank][c]);
    for (auto& x : m[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const long long f = m[r][c];
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = mod(m[r][j] - f * m[rank][j]);
    }
    pivot_cols.push_back(c);
    ++rank;
  }
  if (cols - rank < 2) return std::nullopt;
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<long long> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < rank; ++r) v[pivot_cols[r]] = mod(-m[r][free]);
    if (std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) != v.end()) return v;
  }
  return std::nullopt;
}

}  // namespace vlink
