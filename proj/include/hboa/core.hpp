#pragma once

#include <cstddef>
#include <vector>

#include "hboa/rng.hpp"
#include "hboa/solution.hpp"

namespace hboa {

/// Binary tournament selection without replacement. Each pass shuffles the
/// population and pits disjoint pairs against each other; members re-enter
/// the pool between passes. Higher fitness wins, ties fall to a fair coin.
std::vector<Solution> binary_tournament_select(const Population& pop, std::size_t count,
                                               RngStream& rng);

/// Restricted tournament replacement. Draws `window` members without
/// replacement, finds the one closest to `cand` in Hamming distance (ties go
/// to the first drawn) and replaces it iff `cand` is strictly fitter.
/// Returns whether a replacement happened.
bool rts_incorporate(Population& pop, const Solution& cand, std::size_t window, RngStream& rng);

} // namespace hboa
