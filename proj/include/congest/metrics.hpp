#pragma once

#include "congest/fraction.hpp"
#include "congest/graph.hpp"
#include "congest/sim.hpp"

namespace congest {

// Scale-guessed (1+eps) approximations of the weighted diameter, radius and
// all-pairs distances. Each op first fixes a 2-approximate range D' from one
// exact sweep out of node 0, rescales every weight to ceil(2n*w / (eps*D')),
// and finishes with distance-capped searches of depth K = ceil((1+2/eps)*n).

// D' = 2 * ecc(0). Guarantee: diameter <= result <= (1+eps) * diameter.
Fraction approx_diameter(Simulator& sim, const WeightedGraph& g, Fraction eps);

// D' = ecc(0). Guarantee: radius <= result <= (1+eps) * radius.
Fraction approx_radius(Simulator& sim, const WeightedGraph& g, Fraction eps);

// Guessed ranges D'_i = 2^i, one capped all-sources sweep per guess, combined
// by the per-pair minimum. dist <= value <= (1+eps) * dist for every pair.
FractionTable approx_apsp_scales(Simulator& sim, const WeightedGraph& g, Fraction eps);

// All-pairs via the multi-source bounded-hop machinery with h = n and every
// node as a source. Same sandwich as above, rounds near-linear in n.
FractionTable apsp_linear(Simulator& sim, const WeightedGraph& g, Fraction eps,
                          std::uint64_t seed);

}  // namespace congest
