#include "hboa/model.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <deque>

#include "hboa/errors.hpp"

namespace hboa {

double bde_leaf_logscore(std::uint64_t m0, std::uint64_t m1) {
    // G(2) = G(1) = 1; the ratio collapses to m0! * m1! / (m0+m1+1)!
    return std::lgamma(static_cast<double>(m0) + 1.0) + std::lgamma(static_cast<double>(m1) + 1.0) -
           std::lgamma(static_cast<double>(m0 + m1) + 2.0);
}

int DecisionTree::num_splits() const {
    int count = 0;
    for (const TreeNode& nd : nodes_)
        if (!nd.is_leaf()) ++count;
    return count;
}

int DecisionTree::route(const std::vector<std::uint8_t>& bits) const {
    int id = 0;
    while (!nodes_[static_cast<std::size_t>(id)].is_leaf()) {
        const TreeNode& nd = nodes_[static_cast<std::size_t>(id)];
        id = bits[static_cast<std::size_t>(nd.split_var)] ? nd.child1 : nd.child0;
    }
    return id;
}

std::pair<int, int> DecisionTree::add_split(int id, int var) {
    TreeNode& nd = nodes_[static_cast<std::size_t>(id)];
    if (!nd.is_leaf()) throw invalid_state("split target is not a leaf");
    if (var == target_) throw invalid_input("tree cannot split on its own target");
    const int c0 = static_cast<int>(nodes_.size());
    const int c1 = c0 + 1;
    nd.split_var = var;
    nd.child0 = c0;
    nd.child1 = c1;
    nd.m0 = nd.m1 = 0;
    nodes_.emplace_back();
    nodes_.emplace_back();
    return {c0, c1};
}

void DecisionTree::set_leaf_counts(int id, std::uint32_t m0, std::uint32_t m1) {
    TreeNode& nd = nodes_[static_cast<std::size_t>(id)];
    if (!nd.is_leaf()) throw invalid_state("counts live on leaves");
    nd.m0 = m0;
    nd.m1 = m1;
}

void DecisionTree::clear_counts() {
    for (TreeNode& nd : nodes_)
        if (nd.is_leaf()) nd.m0 = nd.m1 = 0;
}

BayesNet::BayesNet(std::size_t n) {
    if (n == 0) throw invalid_input("network needs at least one variable");
    trees_.reserve(n);
    for (std::size_t j = 0; j < n; ++j) trees_.emplace_back(static_cast<int>(j));
}

BayesNet::BayesNet(std::vector<DecisionTree> trees, std::vector<SplitRecord> creation_order)
    : trees_(std::move(trees)), creation_order_(std::move(creation_order)) {}

std::size_t BayesNet::total_splits() const {
    std::size_t count = 0;
    for (const DecisionTree& t : trees_) count += static_cast<std::size_t>(t.num_splits());
    return count;
}

std::vector<int> BayesNet::parents(std::size_t j) const {
    std::vector<int> vars;
    for (const TreeNode& nd : trees_[j].nodes())
        if (!nd.is_leaf()) vars.push_back(nd.split_var);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

std::vector<int> BayesNet::topological_order() const {
    const std::size_t n = trees_.size();
    std::vector<std::vector<int>> out(n); // parent -> dependents
    std::vector<int> indegree(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (int p : parents(j)) {
            out[static_cast<std::size_t>(p)].push_back(static_cast<int>(j));
            ++indegree[j];
        }
    std::vector<int> order;
    order.reserve(n);
    std::vector<bool> placed(n, false);
    for (;;) {
        int pick = -1;
        for (std::size_t v = 0; v < n; ++v)
            if (!placed[v] && indegree[v] == 0) {
                pick = static_cast<int>(v);
                break;
            }
        if (pick < 0) break;
        placed[static_cast<std::size_t>(pick)] = true;
        order.push_back(pick);
        for (int w : out[static_cast<std::size_t>(pick)]) --indegree[static_cast<std::size_t>(w)];
    }
    if (order.size() != n) throw invalid_state("parent digraph has a cycle");
    return order;
}

// ---------------------------------------------------------------------------
// Greedy learner
// ---------------------------------------------------------------------------

namespace {

using Words = std::vector<std::uint64_t>;

std::size_t popcount_and(const Words& a, const Words& b) {
    std::size_t total = 0;
    for (std::size_t w = 0; w < a.size(); ++w) total += std::popcount(a[w] & b[w]);
    return total;
}

std::size_t popcount_and3(const Words& a, const Words& b, const Words& c) {
    std::size_t total = 0;
    for (std::size_t w = 0; w < a.size(); ++w) total += std::popcount(a[w] & b[w] & c[w]);
    return total;
}

std::size_t popcount_words(const Words& a) {
    std::size_t total = 0;
    for (std::uint64_t w : a) total += std::popcount(w);
    return total;
}

} // namespace

struct GreedyLearner::Impl {
    std::size_t n = 0;
    std::size_t rows = 0;
    std::size_t words = 0;
    ScoreParams params;
    LearnOptions options;
    bool biased = false;

    std::vector<Words> cols;      // per-variable membership over training rows
    std::vector<double> log_fact; // log k!, k = 0 .. rows+1

    struct Leaf {
        int node = 0;
        int depth = 0;
        bool active = true;
        Words member;
        std::uint32_t m0 = 0, m1 = 0;
        std::vector<int> path; // split vars from root to here
        double best_gain = 0.0;
        int best_var = -1;
    };

    std::vector<DecisionTree> trees;
    std::vector<std::vector<Leaf>> leaves;            // per tree, append-only
    std::vector<std::vector<bool>> excluded;          // [tree][var]: known illegal
    std::vector<std::vector<int>> splits_at_distance; // [tree][d]: current n_s(d, j)
    std::vector<std::vector<bool>> is_parent;         // [tree][var]
    std::vector<std::vector<int>> dependents;         // var -> trees it splits in
    std::vector<SplitRecord> creation_order;

    double leaf_score(std::uint32_t m0, std::uint32_t m1) const {
        return log_fact[m0] + log_fact[m1] - log_fact[m0 + m1 + 1];
    }

    double candidate_gain(std::size_t j, const Leaf& leaf, int var) const {
        const Words& ci = cols[static_cast<std::size_t>(var)];
        const Words& cj = cols[j];
        const std::uint32_t c1 = static_cast<std::uint32_t>(popcount_and(leaf.member, ci));
        const std::uint32_t c1m1 =
            static_cast<std::uint32_t>(popcount_and3(leaf.member, ci, cj));
        const std::uint32_t child1_m1 = c1m1;
        const std::uint32_t child1_m0 = c1 - c1m1;
        const std::uint32_t child0_m1 = leaf.m1 - c1m1;
        const std::uint32_t child0_m0 = leaf.m0 - child1_m0;
        double gain = leaf_score(child0_m0, child0_m1) + leaf_score(child1_m0, child1_m1) -
                      leaf_score(leaf.m0, leaf.m1) - params.penalty_nats();
        if (biased) {
            const int d = static_cast<int>((*options.distances)(static_cast<std::size_t>(var), j));
            gain += options.kappa *
                    options.bias->log_prior_delta(static_cast<int>(j), d,
                                                  splits_at_distance[j][static_cast<std::size_t>(d)]);
        }
        return gain;
    }

    void refresh_leaf(std::size_t j, Leaf& leaf) {
        leaf.best_var = -1;
        leaf.best_gain = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == j || excluded[j][i]) continue;
            if (std::find(leaf.path.begin(), leaf.path.end(), static_cast<int>(i)) !=
                leaf.path.end())
                continue;
            const double gain = candidate_gain(j, leaf, static_cast<int>(i));
            if (leaf.best_var < 0 || gain > leaf.best_gain) {
                leaf.best_gain = gain;
                leaf.best_var = static_cast<int>(i);
            }
        }
    }

    void refresh_tree(std::size_t j) {
        for (Leaf& leaf : leaves[j])
            if (leaf.active) refresh_leaf(j, leaf);
    }

    /// Would the edge var -> target close a cycle in the parent digraph?
    bool creates_cycle(int var, int target) const {
        if (var == target) return true;
        // cycle iff target already (transitively) feeds var
        std::deque<int> queue{target};
        std::vector<bool> seen(n, false);
        seen[static_cast<std::size_t>(target)] = true;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int w : dependents[static_cast<std::size_t>(v)]) {
                if (w == var) return true;
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    queue.push_back(w);
                }
            }
        }
        return false;
    }

    struct Best {
        std::size_t tree = 0;
        std::size_t leaf_index = 0;
        double gain = 0.0;
        int var = -1;
    };

    std::optional<Best> scan_best() const {
        std::optional<Best> best;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < leaves[j].size(); ++l) {
                const Leaf& leaf = leaves[j][l];
                if (!leaf.active || leaf.best_var < 0 || leaf.best_gain <= 0.0) continue;
                // ties resolve to the lowest (target, var, node): the scan
                // order makes strict > sufficient for target and node, but
                // var needs the explicit comparison
                if (!best || leaf.best_gain > best->gain ||
                    (leaf.best_gain == best->gain && best->tree == j &&
                     leaf.best_var < best->var))
                    best = Best{j, l, leaf.best_gain, leaf.best_var};
            }
        return best;
    }

    void apply(const Best& b) {
        const std::size_t j = b.tree;
        Leaf& parent = leaves[j][b.leaf_index];
        const auto [c0, c1] = trees[j].add_split(parent.node, b.var);

        Leaf leaf0, leaf1;
        leaf0.node = c0;
        leaf1.node = c1;
        leaf0.depth = leaf1.depth = parent.depth + 1;
        leaf0.path = leaf1.path = parent.path;
        leaf0.path.push_back(b.var);
        leaf1.path.push_back(b.var);

        const Words& ci = cols[static_cast<std::size_t>(b.var)];
        leaf1.member.resize(words);
        leaf0.member.resize(words);
        for (std::size_t w = 0; w < words; ++w) {
            leaf1.member[w] = parent.member[w] & ci[w];
            leaf0.member[w] = parent.member[w] & ~ci[w];
        }
        const Words& cj = cols[j];
        leaf1.m1 = static_cast<std::uint32_t>(popcount_and(leaf1.member, cj));
        leaf0.m1 = parent.m1 - leaf1.m1;
        const std::uint32_t size1 = static_cast<std::uint32_t>(popcount_words(leaf1.member));
        leaf1.m0 = size1 - leaf1.m1;
        leaf0.m0 = (parent.m0 + parent.m1 - size1) - leaf0.m1;
        trees[j].set_leaf_counts(c0, leaf0.m0, leaf0.m1);
        trees[j].set_leaf_counts(c1, leaf1.m0, leaf1.m1);

        parent.active = false;
        parent.member.clear();
        parent.member.shrink_to_fit();

        creation_order.push_back(SplitRecord{static_cast<int>(j), b.var, parent.depth});
        if (options.distances) {
            const int d =
                static_cast<int>((*options.distances)(static_cast<std::size_t>(b.var), j));
            ++splits_at_distance[j][static_cast<std::size_t>(d)];
        }
        if (!is_parent[j][static_cast<std::size_t>(b.var)]) {
            is_parent[j][static_cast<std::size_t>(b.var)] = true;
            dependents[static_cast<std::size_t>(b.var)].push_back(static_cast<int>(j));
        }

        leaves[j].push_back(std::move(leaf0));
        leaves[j].push_back(std::move(leaf1));
        if (biased) {
            // the prior ordinal k changed for this tree's distance class
            refresh_tree(j);
        } else {
            const std::size_t back = leaves[j].size();
            refresh_leaf(j, leaves[j][back - 2]);
            refresh_leaf(j, leaves[j][back - 1]);
        }
    }
};

GreedyLearner::GreedyLearner(const std::vector<Solution>& selected, ScoreParams params,
                             LearnOptions options)
    : impl_(std::make_unique<Impl>()) {
    if (selected.empty()) throw invalid_input("structure learning needs a non-empty training set");
    Impl& im = *impl_;
    im.n = selected[0].size();
    im.rows = selected.size();
    if (im.n == 0) throw invalid_input("zero-length training rows");
    for (const Solution& s : selected)
        if (s.size() != im.n) throw invalid_input("training rows of mixed length");
    im.params = params;
    im.options = options;
    im.biased = options.kappa > 0.0 && options.bias != nullptr;
    if (im.biased && options.distances == nullptr)
        throw config_error("biased learning requires a distance matrix");
    if (im.biased && options.bias->mode() == BiasMode::per_target &&
        options.bias->source_n() != static_cast<int>(im.n))
        throw config_error("per-target bias table built for a different n");
    if (options.distances && options.distances->n() != im.n)
        throw config_error("distance matrix built for a different n");

    im.words = (im.rows + 63) / 64;
    im.cols.assign(im.n, Words(im.words, 0));
    for (std::size_t r = 0; r < im.rows; ++r)
        for (std::size_t i = 0; i < im.n; ++i)
            if (selected[r].bits[i]) im.cols[i][r >> 6] |= std::uint64_t{1} << (r & 63);

    im.log_fact.resize(im.rows + 2);
    im.log_fact[0] = 0.0;
    for (std::size_t k = 1; k < im.log_fact.size(); ++k)
        im.log_fact[k] = std::lgamma(static_cast<double>(k) + 1.0);

    im.trees.reserve(im.n);
    for (std::size_t j = 0; j < im.n; ++j) im.trees.emplace_back(static_cast<int>(j));
    im.leaves.assign(im.n, {});
    im.excluded.assign(im.n, std::vector<bool>(im.n, false));
    im.splits_at_distance.assign(im.n, std::vector<int>(im.n + 1, 0));
    im.is_parent.assign(im.n, std::vector<bool>(im.n, false));
    im.dependents.assign(im.n, {});

    Words all(im.words, ~std::uint64_t{0});
    if (im.rows & 63) all[im.words - 1] = (std::uint64_t{1} << (im.rows & 63)) - 1;
    for (std::size_t j = 0; j < im.n; ++j) {
        Impl::Leaf root;
        root.node = 0;
        root.member = all;
        root.m1 = static_cast<std::uint32_t>(popcount_and(root.member, im.cols[j]));
        root.m0 = static_cast<std::uint32_t>(im.rows) - root.m1;
        im.trees[j].set_leaf_counts(0, root.m0, root.m1);
        im.leaves[j].push_back(std::move(root));
        im.refresh_leaf(j, im.leaves[j][0]);
    }
}

GreedyLearner::~GreedyLearner() = default;

std::optional<PlannedSplit> GreedyLearner::next_split() {
    Impl& im = *impl_;
    for (;;) {
        auto best = im.scan_best();
        if (!best) return std::nullopt;
        Impl::Leaf& leaf = im.leaves[best->tree][best->leaf_index];
        if (im.excluded[best->tree][static_cast<std::size_t>(best->var)]) {
            im.refresh_leaf(best->tree, leaf);
            continue;
        }
        if (im.creates_cycle(best->var, static_cast<int>(best->tree))) {
            im.excluded[best->tree][static_cast<std::size_t>(best->var)] = true;
            // every cached best in this tree pointing at the var is now stale
            for (Impl::Leaf& l : im.leaves[best->tree])
                if (l.active && l.best_var == best->var) im.refresh_leaf(best->tree, l);
            continue;
        }
        return PlannedSplit{static_cast<int>(best->tree), leaf.node, best->var, best->gain};
    }
}

bool GreedyLearner::step() {
    Impl& im = *impl_;
    const auto planned = next_split();
    if (!planned) return false;
    // next_split resolved legality; locate the cached entry and apply it
    for (std::size_t l = 0; l < im.leaves[static_cast<std::size_t>(planned->target)].size(); ++l) {
        Impl::Leaf& leaf = im.leaves[static_cast<std::size_t>(planned->target)][l];
        if (leaf.active && leaf.node == planned->node) {
            im.apply(Impl::Best{static_cast<std::size_t>(planned->target), l, planned->gain,
                                planned->var});
            return true;
        }
    }
    throw invalid_state("planned split lost its leaf");
}

BayesNet GreedyLearner::finish() {
    Impl& im = *impl_;
    return BayesNet(std::move(im.trees), std::move(im.creation_order));
}

BayesNet learn_network(const std::vector<Solution>& selected, ScoreParams params,
                       LearnOptions options) {
    GreedyLearner learner(selected, params, options);
    while (learner.step()) {
    }
    return learner.finish();
}

std::vector<Solution> sample_network(const BayesNet& net, std::size_t count, RngStream& rng) {
    const std::vector<int> order = net.topological_order();
    std::vector<Solution> out;
    out.reserve(count);
    for (std::size_t c = 0; c < count; ++c) {
        Solution s(net.n());
        for (int j : order) {
            const DecisionTree& tree = net.tree(static_cast<std::size_t>(j));
            const int leaf = tree.route(s.bits);
            s.bits[static_cast<std::size_t>(j)] =
                static_cast<std::uint8_t>(rng.uniform01() < tree.leaf_p1(leaf));
        }
        out.push_back(std::move(s));
    }
    return out;
}

void refit_parameters(BayesNet& net, const std::vector<Solution>& selected) {
    if (selected.empty()) throw invalid_input("refit needs a non-empty training set");
    for (const Solution& s : selected)
        if (s.size() != net.n()) throw invalid_input("training rows do not match network size");
    for (std::size_t j = 0; j < net.n(); ++j) {
        DecisionTree& tree = net.tree(j);
        tree.clear_counts();
        for (const Solution& s : selected) {
            const int leaf = tree.route(s.bits);
            const TreeNode& nd = tree.node(leaf);
            if (s.bits[j])
                tree.set_leaf_counts(leaf, nd.m0, nd.m1 + 1);
            else
                tree.set_leaf_counts(leaf, nd.m0 + 1, nd.m1);
        }
    }
}

SplitHistogram model_split_histogram(const BayesNet& net, const DistanceMatrix& distances) {
    if (net.n() != distances.n())
        throw invalid_input("network and distance matrix disagree on n");
    SplitHistogram h;
    for (std::size_t j = 0; j < net.n(); ++j)
        for (const TreeNode& nd : net.tree(j).nodes())
            if (!nd.is_leaf()) {
                const int d =
                    static_cast<int>(distances(static_cast<std::size_t>(nd.split_var), j));
                ++h[{d, static_cast<int>(j)}];
            }
    return h;
}

} // namespace hboa
