#include "hboa/maxsat.hpp"

#include <algorithm>
#include <set>

#include "hboa/errors.hpp"

namespace hboa {

void MaxSatInstance::validate() const {
    if (nv < 1) throw invalid_input("maxsat instance needs nv >= 1");
    if (clauses.empty()) throw invalid_input("maxsat instance needs at least one clause");
    for (const auto& clause : clauses) {
        if (clause.empty()) throw invalid_input("empty clause");
        for (const Literal& lit : clause)
            if (lit.var < 0 || lit.var >= nv) throw invalid_input("literal variable out of range");
    }
}

bool MaxSatInstance::clause_satisfied(std::size_t clause,
                                      const std::vector<std::uint8_t>& bits) const {
    for (const Literal& lit : clauses[clause]) {
        const bool value = bits[static_cast<std::size_t>(lit.var)] != 0;
        if (value != lit.negated) return true;
    }
    return false;
}

int MaxSatInstance::count_satisfied(const std::vector<std::uint8_t>& bits) const {
    int count = 0;
    for (std::size_t c = 0; c < clauses.size(); ++c) count += clause_satisfied(c, bits);
    return count;
}

namespace {
constexpr int kColors = 3;
constexpr int kLatticeHalfDegree = 2; // neighbors at ring offsets 1 and 2
} // namespace

MaxSatInstance gen_maxsat_morph(int nv, double p, RngStream& rng) {
    if (nv % kColors != 0) throw invalid_input("nv must be divisible by the color count (3)");
    const int nodes = nv / kColors;
    if (nodes < 2 * kLatticeHalfDegree + 1)
        throw invalid_input("too few graph nodes for a degree-4 ring lattice");
    if (!(p > 0.0) || p > 0.5) throw invalid_input("morphing parameter must lie in (0, 1/2]");

    // ring lattice edges in canonical order
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> edge_set;
    for (int v = 0; v < nodes; ++v)
        for (int off = 1; off <= kLatticeHalfDegree; ++off) {
            int a = v, b = (v + off) % nodes;
            if (a > b) std::swap(a, b);
            if (edge_set.insert({a, b}).second) edges.push_back({a, b});
        }

    // morph: replace each lattice edge, with probability p, by a random non-edge
    const long long all_pairs = static_cast<long long>(nodes) * (nodes - 1) / 2;
    for (auto& edge : edges) {
        if (rng.uniform01() >= p) continue;
        if (static_cast<long long>(edge_set.size()) >= all_pairs) continue; // complete graph
        for (;;) {
            int a = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(nodes)));
            int b = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(nodes)));
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            if (edge_set.count({a, b})) continue;
            edge_set.erase(edge);
            edge_set.insert({a, b});
            edge = {a, b};
            break;
        }
    }
    std::sort(edges.begin(), edges.end());

    MaxSatInstance inst;
    inst.nv = nv;
    inst.origin_p = p;
    inst.clauses.reserve(static_cast<std::size_t>(nodes) + edges.size() * kColors);
    // proposition (node, color) sits at index node*3 + color
    for (int v = 0; v < nodes; ++v) {
        std::vector<Literal> clause;
        for (int c = 0; c < kColors; ++c) clause.push_back({v * kColors + c, false});
        inst.clauses.push_back(std::move(clause));
    }
    for (const auto& [u, v] : edges)
        for (int c = 0; c < kColors; ++c)
            inst.clauses.push_back({{u * kColors + c, true}, {v * kColors + c, true}});
    inst.validate();
    return inst;
}

std::vector<std::pair<int, int>> maxsat_graph_edges(const MaxSatInstance& inst) {
    std::set<std::pair<int, int>> edges;
    for (const auto& clause : inst.clauses) {
        if (clause.size() != 2 || !clause[0].negated || !clause[1].negated) continue;
        const int u = clause[0].var / kColors;
        const int v = clause[1].var / kColors;
        if (u != v) edges.insert({std::min(u, v), std::max(u, v)});
    }
    return {edges.begin(), edges.end()};
}

namespace {

bool color_backtrack(int node, int nodes, const std::vector<std::vector<int>>& adj,
                     std::vector<int>& color, long long& budget, bool& exhausted) {
    if (node == nodes) return true;
    if (--budget <= 0) {
        exhausted = true;
        return false;
    }
    for (int c = 0; c < kColors; ++c) {
        bool clash = false;
        for (int w : adj[static_cast<std::size_t>(node)])
            if (color[static_cast<std::size_t>(w)] == c) {
                clash = true;
                break;
            }
        if (clash) continue;
        color[static_cast<std::size_t>(node)] = c;
        if (color_backtrack(node + 1, nodes, adj, color, budget, exhausted)) return true;
        if (exhausted) return false;
        color[static_cast<std::size_t>(node)] = -1;
    }
    return false;
}

} // namespace

std::optional<bool> three_colorable(int nodes, const std::vector<std::pair<int, int>>& edges,
                                    long long step_budget) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nodes));
    for (const auto& [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<int> color(static_cast<std::size_t>(nodes), -1);
    bool exhausted = false;
    const bool found = color_backtrack(0, nodes, adj, color, step_budget, exhausted);
    if (exhausted) return std::nullopt;
    return found;
}

AdfSpec maxsat_adf(const MaxSatInstance& inst) {
    inst.validate();
    std::vector<Subfunction> subs;
    subs.reserve(inst.clauses.size());
    for (const auto& clause : inst.clauses) {
        Subfunction f;
        for (const Literal& lit : clause) f.vars.push_back(lit.var);
        const std::size_t states = std::size_t{1} << clause.size();
        f.table.resize(states);
        for (std::size_t a = 0; a < states; ++a) {
            bool sat = false;
            for (std::size_t t = 0; t < clause.size(); ++t) {
                const bool value = (a >> t) & 1;
                if (value != clause[t].negated) {
                    sat = true;
                    break;
                }
            }
            f.table[a] = sat ? 1.0 : 0.0;
        }
        subs.push_back(std::move(f));
    }
    return AdfSpec(static_cast<std::size_t>(inst.nv), std::move(subs));
}

} // namespace hboa
