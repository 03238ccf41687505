#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hboa/adf.hpp"

namespace hboa {

/// Undirected graph over problem variables with an edge wherever two
/// variables share a subfunction subset.
class InteractionGraph {
public:
    explicit InteractionGraph(const AdfSpec& adf);

    std::size_t n() const { return adjacency_.size(); }
    const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }
    const std::vector<int>& neighbors(std::size_t v) const { return adjacency_[v]; }
    bool has_edge(int i, int j) const;

private:
    std::vector<std::vector<int>> adjacency_; // sorted, deduplicated
};

inline InteractionGraph build_interaction_graph(const AdfSpec& adf) {
    return InteractionGraph(adf);
}

/// Pairwise variable distances: shortest-path edge counts in the interaction
/// graph, with n standing in for "no path". Symmetric, zero diagonal.
class DistanceMatrix {
public:
    static DistanceMatrix from_graph(const InteractionGraph& graph);
    static DistanceMatrix from_adf(const AdfSpec& adf) {
        return from_graph(InteractionGraph(adf));
    }

    std::size_t n() const { return n_; }

    std::uint16_t operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }

    /// Lower-triangular text listing, one `i j d` row per pair. Debug aid.
    std::string to_text() const;

private:
    DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0) {}

    std::size_t n_;
    std::vector<std::uint16_t> d_;
};

inline DistanceMatrix compute_distance_matrix(const AdfSpec& adf) {
    return DistanceMatrix::from_adf(adf);
}

} // namespace hboa
