#include <doctest.h>

#include <algorithm>
#include <random>

#include "generators.hpp"
#include "vlink/error.hpp"
#include "vlink/gauss.hpp"

using namespace vlink;

namespace {

const char* const kTrefoil = "O1+U2+O3+U1+O2+U3+";

// Random rotation of each circle, random circle order, random relabeling.
GaussDiagram scrambled(const GaussDiagram& d, gen::Rng& rng) {
  std::vector<int> labels;
  for (const Chord& c : d.chords()) labels.push_back(c.label);
  std::vector<int> image = labels;
  for (int& l : image) l = l * 7 + 3;
  std::shuffle(image.begin(), image.end(), rng);
  std::vector<Circle> circles = d.circles();
  for (Circle& c : circles) {
    for (Token& t : c) t.label = image[static_cast<std::size_t>(std::find(labels.begin(), labels.end(), t.label) - labels.begin())];
    if (!c.empty()) std::rotate(c.begin(), c.begin() + static_cast<long>(gen::uniform(rng, 0, c.size() - 1)), c.end());
  }
  std::shuffle(circles.begin(), circles.end(), rng);
  return GaussDiagram::from_circles(circles);
}

}  // namespace

TEST_SUITE("gauss") {

TEST_CASE("parsing") {
  const GaussDiagram t = parse_gauss_code(kTrefoil);
  CHECK(t.circle_count() == 1);
  CHECK(t.crossing_count() == 3);
  const GaussDiagram hopf = parse_gauss_code("O1+;U1+");
  CHECK(hopf.circle_count() == 2);
  CHECK(hopf.crossing_count() == 1);
  CHECK(parse_gauss_code("O1+ U2+, O3+ U1+ O2+ U3+") == t);
  CHECK(parse_gauss_code("O1+U2+O3+U1+O2+U3+|*").circle_count() == 2);
  CHECK(parse_gauss_code("*").crossing_count() == 0);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_WITH_AS(parse_gauss_code("O1+U1-"), doctest::Contains("sign mismatch on label 1"), DiagramError);
  CHECK_THROWS_AS(parse_gauss_code("O1+O1+"), DiagramError);
  CHECK_THROWS_AS(parse_gauss_code("O1+U2+"), DiagramError);
  CHECK_THROWS_AS(parse_gauss_code("O1+U1+O1+"), DiagramError);
  CHECK_THROWS_AS(parse_gauss_code(""), ParseError);
  CHECK_THROWS_AS(parse_gauss_code("X1+U1+"), ParseError);
  try {
    parse_gauss_code("O1+U1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("serialization round trip") {
  gen::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const GaussDiagram d = gen::random_diagram(rng, gen::uniform(rng, 0, 7), gen::uniform(rng, 1, 3));
    CHECK(parse_gauss_code(serialize(d)) == d);
  }
}

TEST_CASE("canonical code") {
  // A rotation of the same circle.
  CHECK(canonical_code(parse_gauss_code("U2+O1+U1+O2+")) == canonical_code(parse_gauss_code("O1+U1+O2+U2+")));
  CHECK(canonical_code(parse_gauss_code("O1+U2+;U1+O2+")) == canonical_code(parse_gauss_code("U1+O2+;O1+U2+")));
  CHECK(canonical_code(GaussDiagram()) == "*");
  CHECK(canonical_code(parse_gauss_code("*;*")) == "*|*");
  // Reversing a circle's direction is not a symmetry.
  CHECK(canonical_code(parse_gauss_code("O1+U1+O2+U2+")) != canonical_code(parse_gauss_code("O1+U2+O2+U1+")));
}

TEST_CASE("canonical code is invariant under rotation, circle order and relabeling") {
  gen::Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    const GaussDiagram d = gen::random_diagram(rng, gen::uniform(rng, 0, 7), gen::uniform(rng, 1, 3));
    const std::string code = canonical_code(d);
    CHECK(canonical_code(scrambled(d, rng)) == code);
    CHECK(canonical_code(canonical_diagram(d)) == code);
    CHECK(is_visibly_split(d) == (code.find('|') != std::string::npos));
  }
}

TEST_CASE("stats") {
  const DiagramStats s = stats(parse_gauss_code(kTrefoil));
  CHECK(s.n == 3);
  CHECK(s.k == 1);
  CHECK(s.writhe == 3);
  CHECK(stats(parse_gauss_code("O1+U2-O3-U1+O4-U3-O2-U4-")).writhe == -2);
  const DiagramStats e = stats(parse_gauss_code("*;*"));
  CHECK(e.n == 0);
  CHECK(e.k == 2);
  CHECK(e.components.size() == 2);
}

TEST_CASE("alternating") {
  CHECK(is_alternating(parse_gauss_code(kTrefoil)));
  CHECK_FALSE(is_alternating(parse_gauss_code("O1+;U1+")));
  CHECK(is_alternating(parse_gauss_code("U1+O3-;O1+U2+;O2+U3-")));
  CHECK_FALSE(is_alternating(parse_gauss_code("O1+O2+U1+U2+")));
  CHECK(is_alternating(GaussDiagram()));
}

TEST_CASE("visibly split") {
  CHECK(is_visibly_split(parse_gauss_code("O1+U1+;*")));
  CHECK_FALSE(is_visibly_split(parse_gauss_code("O1+;U1+")));
  CHECK(is_visibly_split(parse_gauss_code("O1+U2+O3+U1+O2+U3+;O4+U5+O6+U4+O5+U6+")));
}

TEST_CASE("oriented smoothing") {
  const GaussDiagram merged = oriented_smoothing(parse_gauss_code("O1+;U1+"), 1);
  CHECK(canonical_code(merged) == "*");
  const GaussDiagram split = oriented_smoothing(parse_gauss_code("O1+U1+"), 1);
  CHECK(canonical_code(split) == "*|*");
  const GaussDiagram t = oriented_smoothing(parse_gauss_code(kTrefoil), 1);
  CHECK(t.circle_count() == 2);
  CHECK(t.crossing_count() == 2);
  CHECK_FALSE(is_visibly_split(t));
  CHECK_THROWS(oriented_smoothing(parse_gauss_code(kTrefoil), 9));
}

TEST_CASE("smoothing changes circle count by one") {
  gen::Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    const GaussDiagram d = gen::random_diagram(rng, gen::uniform(rng, 1, 6), gen::uniform(rng, 1, 3));
    const Chord& c = d.chords()[gen::uniform(rng, 0, d.crossing_count() - 1)];
    const GaussDiagram s = oriented_smoothing(d, c.label);
    CHECK(s.crossing_count() == d.crossing_count() - 1);
    CHECK(s.circle_count() == (c.is_self_chord() ? d.circle_count() + 1 : d.circle_count() - 1));
  }
}

TEST_CASE("nugatory crossings") {
  // A kink spliced into the trefoil.
  const GaussDiagram kinked = parse_gauss_code("O4+U4+O1+U2+O3+U1+O2+U3+");
  CHECK(find_nugatory(kinked) == std::vector<int>{4});
  CHECK(canonical_code(reduce(kinked)) == canonical_code(parse_gauss_code(kTrefoil)));
  CHECK(find_nugatory(parse_gauss_code(kTrefoil)).empty());
  CHECK(find_nugatory(parse_gauss_code("O1+;U1+")).empty());
  CHECK(reduce(parse_gauss_code(kTrefoil)) == parse_gauss_code(kTrefoil));
  // Every chord of this diagram is nugatory: it is a chain of kinks.
  CHECK(find_nugatory(parse_gauss_code("O1+U1+O2+U3+O3+U2+")) == std::vector<int>{1, 2, 3});
}

TEST_CASE("reduce removes every nugatory chord") {
  gen::Rng rng(14);
  for (int i = 0; i < 200; ++i) {
    const GaussDiagram d = gen::random_diagram(rng, gen::uniform(rng, 0, 6), 1);
    const GaussDiagram r = reduce(d);
    CHECK(find_nugatory(r).empty());
    CHECK(r.crossing_count() <= d.crossing_count());
  }
}

TEST_CASE("connected sum") {
  const GaussDiagram t = parse_gauss_code(kTrefoil);
  CHECK(canonical_code(connected_sum(GaussDiagram(), {0, 0}, t, {0, 3})) == canonical_code(t));
  const GaussDiagram tt = connected_sum(t, {0, 0}, t, {0, 0});
  CHECK(tt.crossing_count() == 6);
  CHECK(tt.circle_count() == 1);
  CHECK(is_semi_alternating(tt));
  CHECK(connected_summands(tt).size() == 2);
  const GaussDiagram th = connected_sum(t, {0, 2}, parse_gauss_code("O1+;U1+"), {0, 0});
  CHECK(th.crossing_count() == 4);
  CHECK(th.circle_count() == 2);
  CHECK(stats(th).writhe == 4);
  CHECK_THROWS_AS(connected_sum(t, {0, 9}, t, {0, 0}), std::out_of_range);
  CHECK_THROWS_AS(connected_sum(t, {1, 0}, t, {0, 0}), std::out_of_range);
}

TEST_CASE("connected sum adds crossings and writhe") {
  gen::Rng rng(15);
  for (int i = 0; i < 200; ++i) {
    const GaussDiagram a = gen::random_diagram(rng, gen::uniform(rng, 0, 4), gen::uniform(rng, 1, 2));
    const GaussDiagram b = gen::random_diagram(rng, gen::uniform(rng, 0, 4), gen::uniform(rng, 1, 2));
    const std::size_t ca = gen::uniform(rng, 0, a.circle_count() - 1);
    const std::size_t cb = gen::uniform(rng, 0, b.circle_count() - 1);
    const Gap ga{ca, gen::uniform(rng, 0, std::max<std::size_t>(a.slot_count(ca), 1) - 1)};
    const Gap gb{cb, gen::uniform(rng, 0, std::max<std::size_t>(b.slot_count(cb), 1) - 1)};
    const GaussDiagram s = connected_sum(a, ga, b, gb);
    CHECK(s.crossing_count() == a.crossing_count() + b.crossing_count());
    CHECK(s.circle_count() == a.circle_count() + b.circle_count() - 1);
    CHECK(stats(s).writhe == stats(a).writhe + stats(b).writhe);
  }
}

TEST_CASE("alternating summands can give an alternating sum") {
  const GaussDiagram t = parse_gauss_code(kTrefoil);
  const GaussDiagram f = parse_gauss_code("O1-U2-O3+U4+O2-U1-O4+U3+");
  // Both gaps sit between a U and the following O.
  CHECK(is_alternating(connected_sum(t, {0, 0}, f, {0, 0})));
  // Here an O endpoint of t meets an O endpoint of f.
  CHECK_FALSE(is_alternating(connected_sum(t, {0, 1}, f, {0, 0})));
}

}
