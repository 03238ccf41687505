#include "hboa/distance.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>

#include "hboa/errors.hpp"

namespace hboa {

InteractionGraph::InteractionGraph(const AdfSpec& adf) {
    adjacency_.assign(adf.n(), {});
    for (const Subfunction& f : adf.subfunctions()) {
        for (std::size_t a = 0; a < f.vars.size(); ++a)
            for (std::size_t b = a + 1; b < f.vars.size(); ++b) {
                adjacency_[static_cast<std::size_t>(f.vars[a])].push_back(f.vars[b]);
                adjacency_[static_cast<std::size_t>(f.vars[b])].push_back(f.vars[a]);
            }
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
}

bool InteractionGraph::has_edge(int i, int j) const {
    const auto& nbrs = adjacency_[static_cast<std::size_t>(i)];
    return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

DistanceMatrix DistanceMatrix::from_graph(const InteractionGraph& graph) {
    const std::size_t n = graph.n();
    if (n > 65535) throw invalid_input("distance matrix limited to n <= 65535");
    DistanceMatrix m(n);
    const std::uint16_t unreachable = static_cast<std::uint16_t>(n);

    std::vector<std::uint16_t> dist(n);
    std::deque<int> queue;
    for (std::size_t src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), unreachable);
        dist[src] = 0;
        queue.clear();
        queue.push_back(static_cast<int>(src));
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int w : graph.neighbors(static_cast<std::size_t>(v))) {
                if (dist[static_cast<std::size_t>(w)] == unreachable) {
                    dist[static_cast<std::size_t>(w)] =
                        static_cast<std::uint16_t>(dist[static_cast<std::size_t>(v)] + 1);
                    queue.push_back(w);
                }
            }
        }
        std::copy(dist.begin(), dist.end(), m.d_.begin() + static_cast<std::ptrdiff_t>(src * n));
    }
    return m;
}

std::string DistanceMatrix::to_text() const {
    std::string out;
    char buf[64];
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            std::snprintf(buf, sizeof buf, "%zu %zu %u\n", i, j, unsigned((*this)(i, j)));
            out += buf;
        }
    return out;
}

} // namespace hboa
