#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "hboa/distance.hpp"
#include "hboa/model_dump.hpp"

namespace hboa {

/// Per-model split counts keyed by (distance d, target variable j): how many
/// internal nodes of tree T_j split on a variable at distance d from X_j.
using SplitHistogram = std::map<std::pair<int, int>, int>;

/// Histogram of a structure dump against the instance's distance matrix.
SplitHistogram histogram_from_dump(const ModelDump& dump, const DistanceMatrix& distances);

/// Split statistics harvested from a corpus of prior-run models, kept
/// per model so survival counts over the corpus can be formed.
class SplitStats {
public:
    explicit SplitStats(int source_n) : source_n_(source_n) {}

    void add_model(SplitHistogram histogram);

    int source_n() const { return source_n_; }
    std::size_t model_count() const { return models_.size(); }
    const std::vector<SplitHistogram>& models() const { return models_; }

private:
    int source_n_;
    std::vector<SplitHistogram> models_;
};

/// Histograms for a set of structure dumps sharing one instance (hence one
/// distance matrix and one n).
SplitStats accumulate_stats(const std::vector<ModelDump>& dumps, const DistanceMatrix& distances);

enum class BiasMode {
    per_target, // P_k(d, j): same-size transfer
    pooled      // P_k(d): size-free, for cross-size transfer
};

/// Structural prior probabilities indexed by distance, target and split
/// ordinal. Missing cells and ordinals beyond the observed range evaluate to
/// the floor so no split is ever forbidden outright.
class BiasTable {
public:
    static constexpr double kDefaultFloor = 1e-4;

    BiasTable(BiasMode mode, int source_n, double floor)
        : mode_(mode), source_n_(source_n), floor_(floor) {}

    /// Table whose every lookup is 1: a bias that changes nothing.
    static BiasTable uniform(int source_n) {
        return BiasTable(BiasMode::per_target, source_n, 1.0);
    }

    BiasMode mode() const { return mode_; }
    int source_n() const { return source_n_; }
    double floor() const { return floor_; }
    bool empty() const { return rows_.empty(); }

    /// P_k for a split at distance d in tree j; k is 1-based. Pooled tables
    /// ignore j and clamp d to the source size.
    double pk(int d, int j, int k) const;

    /// log P_k for the (k_prev+1)-th split at distance d in tree j: the
    /// increment the structural prior contributes to one more such split.
    double log_prior_delta(int j, int d, int k_prev) const;

    void set_row(int d, int j, std::vector<double> pks);
    const std::map<std::pair<int, int>, std::vector<double>>& rows() const { return rows_; }

    void save(std::ostream& out) const;
    static BiasTable load(std::istream& in);

private:
    BiasMode mode_;
    int source_n_;
    double floor_;
    // key (d, j) for per_target; (d, 0) for pooled. Value index k-1 holds P_k.
    std::map<std::pair<int, int>, std::vector<double>> rows_;
};

/// Survival-ratio probabilities P_k(d,j) over the corpus:
/// |{m : s(m,d,j) >= k}| / |{m : s(m,d,j) >= k-1}|, floored into [floor, 1].
BiasTable compute_pk(const SplitStats& stats, double floor = BiasTable::kDefaultFloor);

/// Size-free variant pooling over (model, target) pairs, for applying bias
/// across problem sizes: P_k(d) = |{(m,j) : s >= k}| / |{(m,j) : s >= k-1}|.
BiasTable pool_across_sizes(const SplitStats& stats, double floor = BiasTable::kDefaultFloor);

} // namespace hboa
