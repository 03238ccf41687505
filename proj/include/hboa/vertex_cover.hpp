#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hboa/adf.hpp"
#include "hboa/rng.hpp"
#include "hboa/solution.hpp"

namespace hboa {

/// Random-graph minimum vertex cover instance with a fixed edge/vertex ratio.
struct VertexCoverInstance {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // u < v, sorted, duplicate-free
    double c = 0.0;

    void validate() const;
};

/// round(c*n) distinct edges drawn uniformly without replacement.
VertexCoverInstance gen_mvc(int n, double c, RngStream& rng);

/// Two-phase repair: add endpoints of uncovered edges until feasible, then
/// drop redundant vertices in random order. The result is a feasible,
/// inclusion-minimal cover with fitness -(cover size).
Solution repair_cover(const VertexCoverInstance& inst, Solution s, RngStream& rng);

/// Exact minimum cover size by branch and bound (reductions + matching bound).
std::size_t min_vertex_cover_bnb(const VertexCoverInstance& inst);

/// ADF view: -1 per selected vertex plus a -2 penalty per uncovered edge, so
/// feasible solutions score exactly -(cover size) and the interaction graph
/// is the instance graph itself.
AdfSpec vertex_cover_adf(const VertexCoverInstance& inst);

} // namespace hboa
