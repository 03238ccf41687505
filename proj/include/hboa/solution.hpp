#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hboa/errors.hpp"
#include "hboa/rng.hpp"

namespace hboa {

/// Fixed-length bit string with a cached objective value. Fitness is always
/// maximized; minimization problems negate on the way in.
struct Solution {
    std::vector<std::uint8_t> bits;
    double fitness = 0.0;
    bool evaluated = false;

    Solution() = default;
    explicit Solution(std::size_t n) : bits(n, 0) {}
    Solution(std::initializer_list<int> b) {
        bits.reserve(b.size());
        for (int v : b) bits.push_back(static_cast<std::uint8_t>(v != 0));
    }

    std::size_t size() const { return bits.size(); }

    void set_fitness(double f) {
        fitness = f;
        evaluated = true;
    }
};

inline Solution random_solution(std::size_t n, RngStream& rng) {
    Solution s(n);
    for (std::size_t i = 0; i < n; ++i) s.bits[i] = static_cast<std::uint8_t>(rng.coin());
    return s;
}

inline std::size_t hamming_distance(const Solution& a, const Solution& b) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.bits.size(); ++i) d += (a.bits[i] != b.bits[i]);
    return d;
}

inline bool same_bits(const Solution& a, const Solution& b) { return a.bits == b.bits; }

/// Ordered multiset of solutions with a fixed capacity. All members share one
/// string length; the size never exceeds the capacity.
class Population {
public:
    Population(std::size_t n, std::size_t capacity) : n_(n), capacity_(capacity) {
        if (capacity == 0) throw invalid_input("population capacity must be positive");
        members_.reserve(capacity);
    }

    std::size_t n() const { return n_; }
    std::size_t capacity() const { return capacity_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    const Solution& operator[](std::size_t i) const { return members_[i]; }
    Solution& operator[](std::size_t i) { return members_[i]; }

    const std::vector<Solution>& members() const { return members_; }

    void add(Solution s) {
        if (s.size() != n_) throw invalid_input("solution length does not match population");
        if (members_.size() >= capacity_) throw invalid_state("population is at capacity");
        members_.push_back(std::move(s));
    }

    /// True when every member carries identical bits.
    bool collapsed() const {
        for (std::size_t i = 1; i < members_.size(); ++i)
            if (!same_bits(members_[i], members_[0])) return false;
        return !members_.empty();
    }

private:
    std::size_t n_;
    std::size_t capacity_;
    std::vector<Solution> members_;
};

} // namespace hboa
