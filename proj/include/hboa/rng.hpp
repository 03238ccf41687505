#pragma once

#include <cassert>
#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

namespace hboa {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

} // namespace detail

/// Deterministic random stream. Every draw goes through methods defined here,
/// so a seed pins the full sequence regardless of platform or standard
/// library (std::uniform_*_distribution is not portable; mt19937_64 is).
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Unbiased uniform integer in [0, bound), bound > 0.
    std::uint64_t uniform_int(std::uint64_t bound) {
        assert(bound > 0);
        const std::uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform double in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool coin() { return (next_u64() >> 63) != 0; }

    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(uniform_int(i));
            std::swap(values[i - 1], values[j]);
        }
    }

    /// k distinct indices from [0, n), reported in draw order.
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k) {
        assert(k <= n);
        std::vector<std::size_t> picked;
        picked.reserve(k);
        if (k * 4 <= n) {
            // sparse case: rejection against the already-picked set
            std::unordered_set<std::size_t> seen;
            seen.reserve(k * 2);
            while (picked.size() < k) {
                const std::size_t v = static_cast<std::size_t>(uniform_int(n));
                if (seen.insert(v).second) picked.push_back(v);
            }
        } else {
            // dense case: partial Fisher-Yates
            std::vector<std::size_t> pool(n);
            for (std::size_t i = 0; i < n; ++i) pool[i] = i;
            for (std::size_t i = 0; i < k; ++i) {
                const std::size_t j = i + static_cast<std::size_t>(uniform_int(n - i));
                std::swap(pool[i], pool[j]);
                picked.push_back(pool[i]);
            }
        }
        return picked;
    }

    /// Independent stream keyed by this stream's seed and a tag. Stateless:
    /// derivation depends only on the original seed, never on draws made so far.
    RngStream derive(std::uint64_t tag) const {
        return RngStream(detail::splitmix64(seed_ ^ detail::splitmix64(tag)));
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace hboa
