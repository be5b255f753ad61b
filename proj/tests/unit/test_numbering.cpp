#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "vlink/error.hpp"
#include "vlink/gauss.hpp"
#include "vlink/numbering.hpp"

using namespace vlink;

TEST_SUITE("numbering") {

TEST_CASE("virtual linking numbers") {
  const GaussDiagram hopf = parse_gauss_code("O1+;U1+");
  CHECK(vlk(hopf, {0}, {1}) == 1);
  CHECK(vlk(hopf, {1}, {0}) == 0);
  const GaussDiagram b = parse_gauss_code("U1+O3-;O1+U2+;O2+U3-");
  const std::size_t I = 0, J = 1, K = 2;
  CHECK(vlk(b, {I}, {J}) == 0);
  CHECK(vlk(b, {J}, {K}) == 0);
  CHECK(vlk(b, {K}, {I}) == 0);
  CHECK(vlk(b, {J}, {I}) == 1);
  CHECK(vlk(b, {K}, {J}) == 1);
  CHECK(vlk(b, {I}, {K}) == -1);
  CHECK(vlk_table(parse_gauss_code("O1+U2+O3+U1+O2+U3+"), {{0}}).entries == std::vector<std::vector<int>>{{0}});
  CHECK_THROWS_AS(vlk(hopf, {0}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(vlk(hopf, {}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(vlk(hopf, {0}, {2}), std::invalid_argument);
}

TEST_CASE("vlk is additive in both arguments") {
  gen::Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const GaussDiagram d = gen::random_diagram(rng, gen::uniform(rng, 0, 8), 4);
    CHECK(vlk(d, {0, 1}, {2}) == vlk(d, {0}, {2}) + vlk(d, {1}, {2}));
    CHECK(vlk(d, {3}, {0, 2}) == vlk(d, {3}, {0}) + vlk(d, {3}, {2}));
  }
}

TEST_CASE("Cheng colorability") {
  CHECK_FALSE(is_cheng_colorable(parse_gauss_code("O1+;U1+")));
  CHECK(is_cheng_colorable(parse_gauss_code("O1+O2+U1+U2+")));
  CHECK_FALSE(is_cheng_colorable(parse_gauss_code("U1+O3-;O1+U2+;O2+U3-")));
  // Classical Hopf link: equal linking numbers in both directions.
  CHECK(is_cheng_colorable(parse_gauss_code("O1+U2+;U1+O2+")));
  // Grouping both circles into one component makes it a knot-like partition.
  CHECK(is_cheng_colorable(parse_gauss_code("O1+;U1+"), {{0, 1}}));
  CHECK_THROWS_AS(is_cheng_colorable(parse_gauss_code("O1+;U1+"), {{0}}), std::invalid_argument);
}

TEST_CASE("numbering examples") {
  const GaussDiagram trefoil = parse_gauss_code("O1+U2+O3+U1+O2+U3+");
  const auto l = numbering(trefoil, 0);
  REQUIRE(l.has_value());
  CHECK(satisfies_local_rules(trefoil, *l));
  CHECK_FALSE(numbering(parse_gauss_code("O1+O2+U1+U2+"), 2).has_value());
  for (long long p : {0LL, 2LL, 3LL}) CHECK(numbering(GaussDiagram(), p).has_value());
  CHECK_THROWS_AS(numbering(trefoil, 4), PreconditionError);
  CHECK(is_checkerboard_colorable(trefoil));
  CHECK_FALSE(is_checkerboard_colorable(parse_gauss_code("O1+;U1+")));
  CHECK(is_almost_classical_diagram(trefoil));
}

TEST_CASE("numbering agrees with elimination oracle") {
  gen::Rng rng(22);
  for (int i = 0; i < 400; ++i) {
    const GaussDiagram d = gen::random_diagram(rng, gen::uniform(rng, 0, 7), gen::uniform(rng, 1, 3));
    for (long long p : {0LL, 2LL, 3LL, 5LL}) {
      const auto l = numbering(d, p);
      CHECK(l.has_value() == oracle::has_numbering(d, p));
      if (l) CHECK(satisfies_local_rules(d, *l));
    }
  }
}

TEST_CASE("integer numbering implies numberings mod p and Cheng colorability") {
  gen::Rng rng(23);
  std::size_t numbered = 0;
  for (int i = 0; i < 600; ++i) {
    const GaussDiagram d = gen::random_diagram(rng, gen::uniform(rng, 1, 6), gen::uniform(rng, 1, 3));
    if (!numbering(d, 0)) continue;
    ++numbered;
    for (long long p : {2LL, 3LL, 5LL, 7LL}) CHECK(numbering(d, p).has_value());
    CHECK(is_cheng_colorable(d));
  }
  CHECK(numbered > 20);
}

TEST_CASE("source-sink graph") {
  const Digraph g = source_sink_graph(parse_gauss_code("O1+U2+O3+U1+O2+U3+"));
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 6);
  for (std::size_t v = 0; v < 3; ++v) {
    CHECK(g.in_degree(v) == 2);
    CHECK(g.out_degree(v) == 2);
  }
  CHECK_THROWS_AS(source_sink_graph(parse_gauss_code("O1+;U1+")), PreconditionError);
  CHECK_THROWS_AS(source_sink_graph(parse_gauss_code("O1+U1+"), true), PreconditionError);
}

TEST_CASE("source-sink graphs of alternating diagrams are 2-in 2-out") {
  gen::Rng rng(24);
  for (int i = 0; i < 200; ++i) {
    const GaussDiagram d = gen::random_alternating(rng, gen::uniform(rng, 1, 7), gen::uniform(rng, 1, 2));
    REQUIRE(is_checkerboard_colorable(d));
    const Digraph g = source_sink_graph(d);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      CHECK(g.in_degree(v) == 2);
      CHECK(g.out_degree(v) == 2);
    }
  }
}

TEST_CASE("non-alternating checkerboard diagrams get a source-sink orientation") {
  gen::Rng rng(25);
  std::size_t seen = 0;
  for (int i = 0; i < 2000 && seen < 50; ++i) {
    const GaussDiagram d = gen::random_diagram(rng, gen::uniform(rng, 2, 6), 1);
    if (is_alternating(d) || !is_checkerboard_colorable(d)) continue;
    ++seen;
    const Digraph g = source_sink_graph(d);
    CHECK(g.edge_count() == 2 * d.crossing_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      CHECK(g.in_degree(v) == 2);
      CHECK(g.out_degree(v) == 2);
    }
  }
  CHECK(seen == 50);
}

}
