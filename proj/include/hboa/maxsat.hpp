#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hboa/adf.hpp"
#include "hboa/rng.hpp"

namespace hboa {

/// CNF literal: 0-based variable index plus sign.
struct Literal {
    int var = 0;
    bool negated = false;
};

struct MaxSatInstance {
    int nv = 0;
    std::vector<std::vector<Literal>> clauses;
    double origin_p = 0.0; // morphing parameter, 0 when loaded from plain CNF

    void validate() const;
    bool clause_satisfied(std::size_t clause, const std::vector<std::uint8_t>& bits) const;
    int count_satisfied(const std::vector<std::uint8_t>& bits) const;
};

/// Graph-coloring MAXSAT over a morphed graph: a degree-4 ring lattice
/// (neighbors at offsets 1 and 2) on nv/3 nodes, each edge independently
/// replaced by a uniformly random non-edge with probability p. The CNF uses
/// 3 one-hot color propositions per node: an at-least-one-color clause per
/// node plus a not-both clause per edge and color.
MaxSatInstance gen_maxsat_morph(int nv, double p, RngStream& rng);

/// The morphed graph's edges (node indices, u < v), recoverable from the
/// encoding; exposed for colorability checks.
std::vector<std::pair<int, int>> maxsat_graph_edges(const MaxSatInstance& inst);

/// Backtracking 3-colorability of a node graph; nullopt when the step budget
/// runs out before an answer.
std::optional<bool> three_colorable(int nodes, const std::vector<std::pair<int, int>>& edges,
                                    long long step_budget = 20'000'000);

/// One subfunction per clause, valued 1 when satisfied.
AdfSpec maxsat_adf(const MaxSatInstance& inst);

} // namespace hboa
