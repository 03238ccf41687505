#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hboa/errors.hpp"
#include "hboa/solution.hpp"

namespace hboa {

/// One additive term: a lookup table over the assignments of a small variable
/// subset. vars[t] contributes bit t of the table index.
struct Subfunction {
    std::vector<int> vars;
    std::vector<double> table;

    std::size_t index_of(const std::vector<std::uint8_t>& bits) const {
        std::size_t idx = 0;
        for (std::size_t t = 0; t < vars.size(); ++t)
            idx |= static_cast<std::size_t>(bits[static_cast<std::size_t>(vars[t])] != 0) << t;
        return idx;
    }

    double eval(const std::vector<std::uint8_t>& bits) const { return table[index_of(bits)]; }
};

/// Additive decomposition of an objective: subsets S_i with per-subset
/// contribution tables. Total fitness of a string is the sum of the terms.
class AdfSpec {
public:
    static constexpr std::size_t kMaxSubsetSize = 20;

    AdfSpec(std::size_t n, std::vector<Subfunction> subfunctions)
        : n_(n), subs_(std::move(subfunctions)) {
        if (n_ == 0) throw invalid_input("adf needs at least one variable");
        if (subs_.empty()) throw invalid_input("adf needs at least one subfunction");
        touch_.assign(n_, {});
        for (std::size_t s = 0; s < subs_.size(); ++s) {
            const Subfunction& f = subs_[s];
            if (f.vars.empty()) throw invalid_input("empty subfunction subset");
            if (f.vars.size() > kMaxSubsetSize) throw invalid_input("subfunction subset too large");
            if (f.table.size() != (std::size_t{1} << f.vars.size()))
                throw invalid_input("subfunction table size must be 2^|subset|");
            std::vector<bool> seen(n_, false);
            for (int v : f.vars) {
                if (v < 0 || static_cast<std::size_t>(v) >= n_)
                    throw invalid_input("subfunction variable index out of range");
                if (seen[static_cast<std::size_t>(v)])
                    throw invalid_input("duplicate variable in subfunction subset");
                seen[static_cast<std::size_t>(v)] = true;
                touch_[static_cast<std::size_t>(v)].push_back(static_cast<int>(s));
            }
        }
    }

    std::size_t n() const { return n_; }
    std::size_t num_subfunctions() const { return subs_.size(); }
    const std::vector<Subfunction>& subfunctions() const { return subs_; }

    /// Indices of the subfunctions whose subset contains `var`.
    const std::vector<int>& touching(std::size_t var) const { return touch_[var]; }

    double eval_bits(const std::vector<std::uint8_t>& bits) const {
        double total = 0.0;
        for (const Subfunction& f : subs_) total += f.eval(bits);
        return total;
    }

private:
    std::size_t n_;
    std::vector<Subfunction> subs_;
    std::vector<std::vector<int>> touch_;
};

/// Evaluates `s` against the decomposition, caches the value on the solution
/// and returns it. Linear in the total subset size.
inline double evaluate_adf(const AdfSpec& adf, Solution& s) {
    if (s.size() != adf.n()) throw invalid_input("solution length does not match adf");
    const double total = adf.eval_bits(s.bits);
    s.set_fitness(total);
    return total;
}

} // namespace hboa
