#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "vlink/alexander.hpp"
#include "vlink/arborescence.hpp"
#include "vlink/error.hpp"
#include "vlink/gauss.hpp"
#include "vlink/numbering.hpp"

using namespace vlink;

namespace {

Digraph two_cycle() {
  Digraph g(2);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  return g;
}

bool same_trees(const std::vector<Arborescence>& a, const std::vector<Arborescence>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].root != b[i].root || a[i].edges != b[i].edges) return false;
  return true;
}

bool is_signed_monomial(const LaurentPoly& p) {
  if (p.term_count() != 1) return false;
  const int l = p.min_exponent();
  return p.coefficient(l) == (l % 2 == 0 ? 1 : -1);
}

}  // namespace

TEST_SUITE("arborescence") {

TEST_CASE("graph matrix") {
  const LaurentMatrix h = graph_matrix(two_cycle());
  CHECK(h(0, 0) == 1);
  CHECK(h(0, 1) == -1);
  CHECK(h(1, 0) == -1);
  CHECK(h(1, 1) == 1);
  Digraph loop(2);
  loop.add_edge(0, 0);
  CHECK_THROWS_AS(graph_matrix(loop), PreconditionError);
  CHECK_THROWS_AS(count_rooted_trees(loop, 0), PreconditionError);
  Digraph valued(2);
  valued.add_edge(0, 1, 1);
  valued.add_edge(1, 0, LaurentPoly::monomial(-1, 1));
  CHECK(graph_matrix(valued)(0, 0) == LaurentPoly::monomial(-1, 1));
  CHECK(graph_matrix(valued)(1, 0) == LaurentPoly::monomial(1, 1));
}

TEST_CASE("rooted tree counts") {
  CHECK(count_rooted_trees(two_cycle(), 0) == 1);
  Digraph g(2);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  CHECK(count_rooted_trees(g, 0) == 2);
  CHECK(enumerate_arborescences(g, 0).size() == 2);
  const Digraph t = source_sink_graph(parse_gauss_code("O1+U2+O3+U1+O2+U3+"));
  for (std::size_t r = 0; r < 3; ++r) CHECK(count_rooted_trees(t, r) == 3);
}

TEST_CASE("enumeration examples") {
  const auto a = enumerate_arborescences(two_cycle(), 0);
  REQUIRE(a.size() == 1);
  CHECK(a[0].edges == std::vector<std::size_t>{0});
  Digraph triangle(3);
  triangle.add_edge(0, 1);
  triangle.add_edge(1, 2);
  triangle.add_edge(2, 0);
  const auto b = enumerate_arborescences(triangle, 0);
  REQUIRE(b.size() == 1);
  CHECK(b[0].edges == std::vector<std::size_t>{0, 1});
  Digraph big(2);
  for (int i = 0; i < 25; ++i) big.add_edge(0, 1);
  CHECK_THROWS_AS(enumerate_arborescences(big, 0), BoundExceeded);
}

TEST_CASE("matrix-tree theorem against subset enumeration") {
  gen::Rng rng(41);
  for (int i = 0; i < 300; ++i) {
    const Digraph g = gen::random_digraph(rng, 6, 12, false);
    const std::size_t root = gen::uniform(rng, 0, g.vertex_count() - 1);
    const oracle::TreeCount o = oracle::brute_force_trees(g, root);
    const auto trees = enumerate_arborescences(g, root);
    CHECK(count_rooted_trees(g, root) == LaurentPoly(static_cast<long long>(o.count)));
    CHECK(trees.size() == o.count);
    CHECK(same_trees(trees, enumerate_arborescences_serial(g, root)));
  }
}

TEST_CASE("valuated matrix-tree theorem") {
  gen::Rng rng(42);
  for (int i = 0; i < 300; ++i) {
    const Digraph g = gen::random_digraph(rng, 6, 12, true);
    const std::size_t root = gen::uniform(rng, 0, g.vertex_count() - 1);
    LaurentPoly sum;
    for (const Arborescence& a : enumerate_arborescences(g, root)) sum += weight(g, a);
    CHECK(count_rooted_trees(g, root) == sum);
    CHECK(sum == oracle::brute_force_trees(g, root).weighted);
  }
}

TEST_CASE("Eulerian circuits") {
  CHECK(count_eulerian_circuits(two_cycle(), EulerianMode::best) == 1);
  CHECK(count_eulerian_circuits(two_cycle(), EulerianMode::enumerate) == 1);
  Digraph doubled(2);
  doubled.add_edge(0, 1);
  doubled.add_edge(0, 1);
  doubled.add_edge(1, 0);
  doubled.add_edge(1, 0);
  CHECK(count_eulerian_circuits(doubled, EulerianMode::best) == 2);
  CHECK(count_eulerian_circuits(doubled, EulerianMode::enumerate) == 2);
  const Digraph t = source_sink_graph(parse_gauss_code("O1+U2+O3+U1+O2+U3+"));
  CHECK(count_eulerian_circuits(t, EulerianMode::best) == 3);
  CHECK(count_eulerian_circuits(t, EulerianMode::enumerate) == 3);
  Digraph path(2);
  path.add_edge(0, 1);
  CHECK_THROWS_AS(count_eulerian_circuits(path, EulerianMode::best), PreconditionError);
  Digraph apart(4);
  apart.add_edge(0, 1);
  apart.add_edge(1, 0);
  apart.add_edge(2, 3);
  apart.add_edge(3, 2);
  CHECK_THROWS_AS(count_eulerian_circuits(apart, EulerianMode::enumerate), PreconditionError);
}

TEST_CASE("BEST theorem against exhaustive counts") {
  gen::Rng rng(43);
  std::size_t tested = 0;
  for (int i = 0; i < 2000 && tested < 300; ++i) {
    const Digraph g = gen::random_balanced(rng, 6, 12);
    if (g.edge_count() == 0 || !g.is_weakly_connected()) continue;
    ++tested;
    const Integer best = count_eulerian_circuits(g, EulerianMode::best);
    CHECK(best == count_eulerian_circuits(g, EulerianMode::enumerate));
    CHECK(best == oracle::brute_force_eulerian(g));
  }
  CHECK(tested == 300);
}

TEST_CASE("articulation vertices") {
  Digraph bowtie(5);
  for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}})
    bowtie.add_edge(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  CHECK(has_articulation_vertex(bowtie));
  CHECK_FALSE(has_articulation_vertex(source_sink_graph(parse_gauss_code("O1+U2+O3+U1+O2+U3+"))));
}

TEST_CASE("2-in 2-out graphs without cut vertices have at least n Eulerian circuits") {
  gen::Rng rng(44);
  std::size_t tested = 0;
  for (int i = 0; i < 5000 && tested < 200; ++i) {
    const Digraph g = gen::random_two_in_two_out(rng, gen::uniform(rng, 2, 6));
    if (!g.is_weakly_connected() || has_articulation_vertex(g)) continue;
    ++tested;
    CHECK(count_eulerian_circuits(g, EulerianMode::best) >= Integer(g.vertex_count()));
  }
  CHECK(tested == 200);
}

TEST_CASE("Alexander polynomial from trees") {
  CHECK(alexander_via_trees(parse_gauss_code("O1+U2+O3+U1+O2+U3+")) == parse_laurent("t^2 - t + 1"));
  CHECK(alexander_via_trees(parse_gauss_code("O1-U2-O3+U4+O2-U1-O4+U3+")) == parse_laurent("t^2 - 3t + 1"));
  CHECK(alexander_via_trees(GaussDiagram()) == 1);
  CHECK_THROWS_AS(alexander_via_trees(parse_gauss_code("O1+O2+U1+U2+")), PreconditionError);
}

TEST_CASE("tree weights are signed monomials and the sum matches the Fox minor") {
  gen::Rng rng(45);
  std::size_t tested = 0;
  for (int i = 0; i < 20000 && tested < 100; ++i) {
    const GaussDiagram d = gen::random_alternating(rng, gen::uniform(rng, 2, 7), gen::uniform(rng, 1, 2));
    if (!is_reduced(d) || is_visibly_split(d) || !is_almost_classical_diagram(d)) continue;
    ++tested;
    const Digraph g = source_sink_graph(d, true);
    for (const Arborescence& a : enumerate_arborescences(g, 0)) CHECK(is_signed_monomial(weight(g, a)));
    const LaurentPoly delta = alexander_polynomial(d, AlexanderMode::almost_classical);
    CHECK(alexander_via_trees(d) == delta);
    CHECK(is_alternating_poly(delta));
  }
  CHECK(tested == 100);
}

}
