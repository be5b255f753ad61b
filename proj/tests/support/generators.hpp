#pragma once

#include <cstddef>
#include <functional>
#include <random>

#include "vlink/digraph.hpp"
#include "vlink/gauss.hpp"

namespace gen {

using Rng = std::mt19937_64;

// n chords with endpoints shuffled over k circles (k >= 1). Circles may be
// chordless when 2n < k or by chance.
vlink::GaussDiagram random_diagram(Rng& rng, std::size_t n, std::size_t k);

// Every circle alternates tail, head; n >= k so no circle is chordless.
vlink::GaussDiagram random_alternating(Rng& rng, std::size_t n, std::size_t k);

// Draws until `accept` holds, giving up (and returning false) after
// `attempts` tries.
bool draw_until(Rng& rng, const std::function<vlink::GaussDiagram(Rng&)>& make,
                const std::function<bool(const vlink::GaussDiagram&)>& accept, vlink::GaussDiagram& out,
                std::size_t attempts = 100000);

// Loop-free digraph with up to `max_vertices` vertices and `max_edges` edges.
// Valuations are drawn from {1, -t, t^2, -1} when `valuated`.
vlink::Digraph random_digraph(Rng& rng, std::size_t max_vertices, std::size_t max_edges, bool valuated);

// Union of random closed walks: balanced, loop-free, at most max_edges edges.
vlink::Digraph random_balanced(Rng& rng, std::size_t max_vertices, std::size_t max_edges);

// v vertices, edges i -> s(i) and i -> r(i) for two random derangements.
vlink::Digraph random_two_in_two_out(Rng& rng, std::size_t v);

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive

}  // namespace gen
