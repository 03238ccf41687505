#include "hboa/core.hpp"

#include "hboa/errors.hpp"

namespace hboa {

std::vector<Solution> binary_tournament_select(const Population& pop, std::size_t count,
                                               RngStream& rng) {
    if (pop.empty()) throw invalid_state("cannot select from an empty population");
    if (count == 0) throw invalid_input("selection count must be positive");

    std::vector<Solution> winners;
    winners.reserve(count);

    if (pop.size() == 1) {
        while (winners.size() < count) winners.push_back(pop[0]);
        return winners;
    }

    std::vector<std::size_t> order(pop.size());
    while (winners.size() < count) {
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        rng.shuffle(order);
        // odd leftover sits the pass out
        for (std::size_t p = 0; p + 1 < order.size() && winners.size() < count; p += 2) {
            const Solution& a = pop[order[p]];
            const Solution& b = pop[order[p + 1]];
            if (!a.evaluated || !b.evaluated)
                throw invalid_state("tournament requires evaluated members");
            if (a.fitness > b.fitness)
                winners.push_back(a);
            else if (b.fitness > a.fitness)
                winners.push_back(b);
            else
                winners.push_back(rng.coin() ? a : b);
        }
    }
    return winners;
}

bool rts_incorporate(Population& pop, const Solution& cand, std::size_t window, RngStream& rng) {
    if (!cand.evaluated) throw invalid_state("candidate must be evaluated before incorporation");
    if (window < 1 || window > pop.size()) throw invalid_input("rts window out of range");

    const std::vector<std::size_t> drawn = rng.sample_without_replacement(pop.size(), window);
    std::size_t closest = drawn[0];
    std::size_t best_dist = hamming_distance(pop[drawn[0]], cand);
    for (std::size_t t = 1; t < drawn.size(); ++t) {
        const std::size_t d = hamming_distance(pop[drawn[t]], cand);
        if (d < best_dist) {
            best_dist = d;
            closest = drawn[t];
        }
    }
    if (cand.fitness > pop[closest].fitness) {
        pop[closest] = cand;
        return true;
    }
    return false;
}

} // namespace hboa
