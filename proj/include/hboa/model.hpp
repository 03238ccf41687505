#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "hboa/bias.hpp"
#include "hboa/distance.hpp"
#include "hboa/model_dump.hpp"
#include "hboa/rng.hpp"
#include "hboa/solution.hpp"

namespace hboa {

/// Scoring context for structure learning: training-set size and the
/// complexity penalty it implies. Dirichlet pseudo-counts are fixed at one
/// per leaf outcome.
struct ScoreParams {
    std::size_t training_size = 0;

    /// Penalty per added leaf parameter, in natural-log units. Each leaf
    /// costs 0.5*log2(N) bits; a split adds one net parameter.
    double penalty_nats() const {
        return training_size <= 1 ? 0.0 : 0.5 * std::log(static_cast<double>(training_size));
    }
};

/// Log marginal likelihood of one leaf holding m0 zeros and m1 ones of its
/// target, under (1,1) pseudo-counts:
/// log[ G(2)/G(2+m0+m1) * G(1+m0)/G(1) * G(1+m1)/G(1) ].
double bde_leaf_logscore(std::uint64_t m0, std::uint64_t m1);

struct TreeNode {
    int split_var = -1; // -1 marks a leaf
    int child0 = -1;
    int child1 = -1;
    std::uint32_t m0 = 0; // target-value counts of rows routed here (leaves only)
    std::uint32_t m1 = 0;

    bool is_leaf() const { return split_var < 0; }
};

/// Binary decision tree for one variable. Internal nodes test a split
/// variable; leaves hold target counts from the training rows that reach
/// them. No variable repeats on a root-to-leaf path.
class DecisionTree {
public:
    explicit DecisionTree(int target) : target_(target), nodes_(1) {}

    int target() const { return target_; }
    const std::vector<TreeNode>& nodes() const { return nodes_; }
    const TreeNode& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
    int root() const { return 0; }

    int num_splits() const;

    /// Leaf a bit string is routed to.
    int route(const std::vector<std::uint8_t>& bits) const;

    /// Laplace-smoothed probability of target = 1 at a leaf: (m1+1)/(m0+m1+2).
    double leaf_p1(int id) const {
        const TreeNode& nd = nodes_[static_cast<std::size_t>(id)];
        return (nd.m1 + 1.0) / (nd.m0 + nd.m1 + 2.0);
    }

    /// Turns leaf `id` into an internal node splitting on `var`; returns the
    /// two fresh leaf ids (bit = 0, bit = 1).
    std::pair<int, int> add_split(int id, int var);

    void set_leaf_counts(int id, std::uint32_t m0, std::uint32_t m1);
    void clear_counts();

private:
    int target_;
    std::vector<TreeNode> nodes_;
};

/// Bayesian network with one decision tree per variable. The implied parent
/// digraph (X_i -> X_j whenever X_i splits in tree j) stays acyclic.
class BayesNet {
public:
    explicit BayesNet(std::size_t n);
    BayesNet(std::vector<DecisionTree> trees, std::vector<SplitRecord> creation_order);

    std::size_t n() const { return trees_.size(); }
    const DecisionTree& tree(std::size_t j) const { return trees_[j]; }
    DecisionTree& tree(std::size_t j) { return trees_[j]; }

    const std::vector<SplitRecord>& creation_order() const { return creation_order_; }
    std::size_t total_splits() const;

    /// Variables splitting anywhere in tree j.
    std::vector<int> parents(std::size_t j) const;

    /// Kahn order of the parent digraph, lowest index first among ready
    /// variables. Throws invalid_state if the digraph has a cycle.
    std::vector<int> topological_order() const;

    ModelDump dump() const { return ModelDump{static_cast<int>(n()), creation_order_}; }

private:
    std::vector<DecisionTree> trees_;
    std::vector<SplitRecord> creation_order_;
};

/// Knobs for biased structure learning. With kappa = 0 or no table the
/// prior term vanishes and learning is exactly the unbiased procedure.
struct LearnOptions {
    double kappa = 0.0;
    const BiasTable* bias = nullptr;
    const DistanceMatrix* distances = nullptr;
};

struct PlannedSplit {
    int target = -1;
    int node = -1;
    int var = -1;
    double gain = 0.0;
};

/// Greedy network construction: single-leaf trees grow by repeatedly taking
/// the globally best positive-gain legal split. Gains combine the BDe delta,
/// the complexity penalty and, when configured, the distance-based prior
/// increment kappa * log P_k(d, j). Exposed stepwise so tests can audit each
/// decision against an exhaustive re-scoring oracle.
class GreedyLearner {
public:
    GreedyLearner(const std::vector<Solution>& selected, ScoreParams params,
                  LearnOptions options = {});
    ~GreedyLearner();

    GreedyLearner(const GreedyLearner&) = delete;
    GreedyLearner& operator=(const GreedyLearner&) = delete;

    /// Best legal split right now, or nullopt when no positive gain remains.
    std::optional<PlannedSplit> next_split();

    /// Applies the best split. Returns false when learning is finished.
    bool step();

    BayesNet finish();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

BayesNet learn_network(const std::vector<Solution>& selected, ScoreParams params,
                       LearnOptions options = {});

/// Ancestral sampling: variables drawn in topological order, each from its
/// leaf's smoothed Bernoulli given already-sampled parents.
std::vector<Solution> sample_network(const BayesNet& net, std::size_t count, RngStream& rng);

/// Keeps every tree's structure, recounts the leaves from `selected`.
void refit_parameters(BayesNet& net, const std::vector<Solution>& selected);

/// Split counts by (distance to target, target): the raw material of the
/// transfer-learning statistics.
SplitHistogram model_split_histogram(const BayesNet& net, const DistanceMatrix& distances);

} // namespace hboa
