#include "hboa/vertex_cover.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "hboa/errors.hpp"

namespace hboa {

void VertexCoverInstance::validate() const {
    if (n < 1) throw invalid_input("vertex cover instance needs n >= 1");
    std::unordered_set<long long> seen;
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw invalid_input("edge endpoint out of range");
        if (u == v) throw invalid_input("self-loop edge");
        const long long key = static_cast<long long>(std::min(u, v)) * n + std::max(u, v);
        if (!seen.insert(key).second) throw invalid_input("duplicate edge");
    }
}

VertexCoverInstance gen_mvc(int n, double c, RngStream& rng) {
    if (n < 2) throw invalid_input("vertex cover generator needs n >= 2");
    const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    const long long m = std::llround(c * n);
    if (m < 0 || m > pairs) throw invalid_input("requested edge count exceeds available pairs");

    // Floyd's sampling of m distinct pair indices from [0, pairs)
    std::unordered_set<long long> chosen;
    chosen.reserve(static_cast<std::size_t>(m) * 2);
    for (long long j = pairs - m; j < pairs; ++j) {
        const long long t = static_cast<long long>(rng.uniform_int(static_cast<std::uint64_t>(j + 1)));
        if (!chosen.insert(t).second) chosen.insert(j);
    }

    VertexCoverInstance inst;
    inst.n = n;
    inst.c = c;
    inst.edges.reserve(static_cast<std::size_t>(m));
    for (long long idx : chosen) {
        // idx = v*(v-1)/2 + u with u < v
        int v = static_cast<int>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(idx))) / 2.0);
        while (static_cast<long long>(v) * (v + 1) / 2 <= idx) ++v;
        while (static_cast<long long>(v) * (v - 1) / 2 > idx) --v;
        const int u = static_cast<int>(idx - static_cast<long long>(v) * (v - 1) / 2);
        inst.edges.emplace_back(u, v);
    }
    std::sort(inst.edges.begin(), inst.edges.end());
    inst.validate();
    return inst;
}

Solution repair_cover(const VertexCoverInstance& inst, Solution s, RngStream& rng) {
    if (s.size() != static_cast<std::size_t>(inst.n))
        throw invalid_input("solution length does not match instance");

    // phase 1: cover every edge, adding one endpoint of a random uncovered edge
    std::vector<std::size_t> uncovered;
    for (std::size_t e = 0; e < inst.edges.size(); ++e) {
        const auto& [u, v] = inst.edges[e];
        if (!s.bits[static_cast<std::size_t>(u)] && !s.bits[static_cast<std::size_t>(v)])
            uncovered.push_back(e);
    }
    while (!uncovered.empty()) {
        const std::size_t pick = static_cast<std::size_t>(rng.uniform_int(uncovered.size()));
        const auto& [u, v] = inst.edges[uncovered[pick]];
        const int added = rng.coin() ? v : u;
        s.bits[static_cast<std::size_t>(added)] = 1;
        std::size_t w = 0;
        for (std::size_t r = 0; r < uncovered.size(); ++r) {
            const auto& [a, b] = inst.edges[uncovered[r]];
            if (a != added && b != added) uncovered[w++] = uncovered[r];
        }
        uncovered.resize(w);
    }

    // phase 2: drop vertices whose removal keeps all edges covered
    std::vector<int> cover_count(inst.edges.size(), 0);
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(inst.n));
    for (std::size_t e = 0; e < inst.edges.size(); ++e) {
        const auto& [u, v] = inst.edges[e];
        incident[static_cast<std::size_t>(u)].push_back(static_cast<int>(e));
        incident[static_cast<std::size_t>(v)].push_back(static_cast<int>(e));
        cover_count[e] = s.bits[static_cast<std::size_t>(u)] + s.bits[static_cast<std::size_t>(v)];
    }
    std::vector<std::size_t> order(static_cast<std::size_t>(inst.n));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    rng.shuffle(order);
    for (std::size_t v : order) {
        if (!s.bits[v]) continue;
        bool removable = true;
        for (int e : incident[v])
            if (cover_count[static_cast<std::size_t>(e)] < 2) {
                removable = false;
                break;
            }
        if (removable) {
            s.bits[v] = 0;
            for (int e : incident[v]) --cover_count[static_cast<std::size_t>(e)];
        }
    }

    std::size_t cover = 0;
    for (std::uint8_t b : s.bits) cover += b;
    s.set_fitness(cover == 0 ? 0.0 : -static_cast<double>(cover));
    return s;
}

namespace {

struct BnbGraph {
    std::vector<std::vector<int>> adj;
    std::vector<bool> alive;

    int degree(int v) const {
        int d = 0;
        for (int w : adj[static_cast<std::size_t>(v)])
            if (alive[static_cast<std::size_t>(w)]) ++d;
        return d;
    }
};

/// Cover size of components with max degree <= 2 (paths and cycles).
std::size_t cover_paths_and_cycles(const BnbGraph& g) {
    const std::size_t n = g.alive.size();
    std::vector<bool> visited(n, false);
    std::size_t total = 0;
    for (std::size_t start = 0; start < n; ++start) {
        if (!g.alive[start] || visited[start]) continue;
        // walk the component, counting vertices and edges
        std::size_t verts = 0, half_edges = 0;
        std::vector<std::size_t> stack{start};
        visited[start] = true;
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            ++verts;
            for (int w : g.adj[v]) {
                if (!g.alive[static_cast<std::size_t>(w)]) continue;
                ++half_edges;
                if (!visited[static_cast<std::size_t>(w)]) {
                    visited[static_cast<std::size_t>(w)] = true;
                    stack.push_back(static_cast<std::size_t>(w));
                }
            }
        }
        const std::size_t edges = half_edges / 2;
        if (edges == 0) continue;
        if (edges == verts)
            total += (verts + 1) / 2; // cycle
        else
            total += (edges + 1) / 2; // path: ceil(edges/2)
    }
    return total;
}

/// Greedy maximal matching size: a lower bound on the cover of what remains.
std::size_t matching_bound(const BnbGraph& g) {
    std::vector<bool> used(g.alive.size(), false);
    std::size_t matched = 0;
    for (std::size_t v = 0; v < g.alive.size(); ++v) {
        if (!g.alive[v] || used[v]) continue;
        for (int w : g.adj[v]) {
            if (g.alive[static_cast<std::size_t>(w)] && !used[static_cast<std::size_t>(w)] &&
                static_cast<std::size_t>(w) != v) {
                used[v] = used[static_cast<std::size_t>(w)] = true;
                ++matched;
                break;
            }
        }
    }
    return matched;
}

void bnb(BnbGraph& g, std::size_t taken, std::size_t& best) {
    // reductions: drop isolated vertices, take the neighbor of degree-1 vertices
    for (;;) {
        bool changed = false;
        int max_degree = 0;
        int max_vertex = -1;
        for (std::size_t v = 0; v < g.alive.size(); ++v) {
            if (!g.alive[v]) continue;
            const int d = g.degree(static_cast<int>(v));
            if (d == 0) {
                g.alive[v] = false;
                changed = true;
            } else if (d == 1) {
                for (int w : g.adj[v])
                    if (g.alive[static_cast<std::size_t>(w)]) {
                        g.alive[static_cast<std::size_t>(w)] = false;
                        ++taken;
                        break;
                    }
                g.alive[v] = false;
                changed = true;
            } else if (d > max_degree) {
                max_degree = d;
                max_vertex = static_cast<int>(v);
            }
        }
        if (changed) continue;
        if (max_vertex < 0) { // no edges left
            best = std::min(best, taken);
            return;
        }
        if (taken + matching_bound(g) >= best) return;
        if (max_degree <= 2) {
            best = std::min(best, taken + cover_paths_and_cycles(g));
            return;
        }
        // branch: max_vertex in the cover, or all its neighbors are
        {
            BnbGraph g1 = g;
            g1.alive[static_cast<std::size_t>(max_vertex)] = false;
            bnb(g1, taken + 1, best);
        }
        {
            BnbGraph g2 = g;
            std::size_t added = 0;
            for (int w : g2.adj[static_cast<std::size_t>(max_vertex)])
                if (g2.alive[static_cast<std::size_t>(w)]) {
                    g2.alive[static_cast<std::size_t>(w)] = false;
                    ++added;
                }
            g2.alive[static_cast<std::size_t>(max_vertex)] = false;
            bnb(g2, taken + added, best);
        }
        return;
    }
}

} // namespace

std::size_t min_vertex_cover_bnb(const VertexCoverInstance& inst) {
    inst.validate();
    BnbGraph g;
    g.adj.assign(static_cast<std::size_t>(inst.n), {});
    g.alive.assign(static_cast<std::size_t>(inst.n), true);
    for (const auto& [u, v] : inst.edges) {
        g.adj[static_cast<std::size_t>(u)].push_back(v);
        g.adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::size_t best = static_cast<std::size_t>(inst.n);
    bnb(g, 0, best);
    return best;
}

AdfSpec vertex_cover_adf(const VertexCoverInstance& inst) {
    inst.validate();
    std::vector<Subfunction> subs;
    subs.reserve(static_cast<std::size_t>(inst.n) + inst.edges.size());
    for (int v = 0; v < inst.n; ++v) {
        Subfunction f;
        f.vars = {v};
        f.table = {0.0, -1.0};
        subs.push_back(std::move(f));
    }
    for (const auto& [u, v] : inst.edges) {
        Subfunction f;
        f.vars = {u, v};
        // uncovered edge costs more than any vertex saves
        f.table = {-2.0, 0.0, 0.0, 0.0};
        subs.push_back(std::move(f));
    }
    return AdfSpec(static_cast<std::size_t>(inst.n), std::move(subs));
}

} // namespace hboa
