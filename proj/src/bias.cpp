#include "hboa/bias.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "hboa/errors.hpp"

namespace hboa {

SplitHistogram histogram_from_dump(const ModelDump& dump, const DistanceMatrix& distances) {
    if (static_cast<std::size_t>(dump.n) != distances.n())
        throw invalid_input("model dump and distance matrix disagree on n");
    SplitHistogram h;
    for (const SplitRecord& rec : dump.splits) {
        const int d = distances(static_cast<std::size_t>(rec.var),
                                static_cast<std::size_t>(rec.target));
        ++h[{d, rec.target}];
    }
    return h;
}

void SplitStats::add_model(SplitHistogram histogram) {
    for (const auto& [key, count] : histogram) {
        if (count < 0 || key.first < 1 || key.first > source_n_ || key.second < 0 ||
            key.second >= source_n_)
            throw invalid_input("split histogram cell out of range");
    }
    models_.push_back(std::move(histogram));
}

SplitStats accumulate_stats(const std::vector<ModelDump>& dumps,
                            const DistanceMatrix& distances) {
    SplitStats stats(static_cast<int>(distances.n()));
    for (const ModelDump& dump : dumps) {
        if (dump.n != stats.source_n())
            throw invalid_input("model dumps with mixed n cannot be accumulated together");
        stats.add_model(histogram_from_dump(dump, distances));
    }
    return stats;
}

double BiasTable::pk(int d, int j, int k) const {
    if (k < 1) throw invalid_input("split ordinal k is 1-based");
    if (mode_ == BiasMode::pooled) {
        j = 0;
        d = std::min(d, source_n_); // target-size distances clamp to the source
    }
    const auto it = rows_.find({d, j});
    if (it == rows_.end()) return floor_;
    const auto& pks = it->second;
    if (static_cast<std::size_t>(k) > pks.size()) return floor_;
    return pks[static_cast<std::size_t>(k - 1)];
}

double BiasTable::log_prior_delta(int j, int d, int k_prev) const {
    return std::log(pk(d, j, k_prev + 1));
}

void BiasTable::set_row(int d, int j, std::vector<double> pks) {
    for (double p : pks)
        if (p < floor_ || p > 1.0) throw invalid_input("bias probability outside [floor, 1]");
    rows_[{d, j}] = std::move(pks);
}

namespace {

/// Survival-count ratios for one count sequence (one value per model/pair).
/// Index k-1 of the result holds P_k, for k = 1 .. max(counts)+1.
std::vector<double> survival_ratios(const std::vector<int>& counts, double floor) {
    int smax = 0;
    for (int c : counts) smax = std::max(smax, c);
    std::vector<double> pks;
    pks.reserve(static_cast<std::size_t>(smax) + 1);
    for (int k = 1; k <= smax + 1; ++k) {
        std::size_t num = 0, den = 0;
        for (int c : counts) {
            if (c >= k) ++num;
            if (c >= k - 1) ++den;
        }
        const double p = den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
        pks.push_back(std::clamp(p, floor, 1.0));
    }
    return pks;
}

} // namespace

BiasTable compute_pk(const SplitStats& stats, double floor) {
    if (stats.model_count() == 0) throw invalid_input("bias table needs at least one model");
    BiasTable table(BiasMode::per_target, stats.source_n(), floor);

    std::map<std::pair<int, int>, std::vector<int>> counts;
    for (std::size_t m = 0; m < stats.model_count(); ++m)
        for (const auto& [key, s] : stats.models()[m]) counts[key]; // touch every observed key
    for (auto& [key, vec] : counts) {
        vec.assign(stats.model_count(), 0);
        for (std::size_t m = 0; m < stats.model_count(); ++m) {
            const auto it = stats.models()[m].find(key);
            if (it != stats.models()[m].end()) vec[m] = it->second;
        }
        table.set_row(key.first, key.second, survival_ratios(vec, floor));
    }
    return table;
}

BiasTable pool_across_sizes(const SplitStats& stats, double floor) {
    if (stats.model_count() == 0) throw invalid_input("bias table needs at least one model");
    BiasTable table(BiasMode::pooled, stats.source_n(), floor);

    const std::size_t pairs = stats.model_count() * static_cast<std::size_t>(stats.source_n());
    std::map<int, std::vector<int>> counts; // d -> one count per (model, target) pair
    for (const SplitHistogram& h : stats.models())
        for (const auto& [key, s] : h) counts[key.first];
    for (auto& [d, vec] : counts) {
        vec.assign(pairs, 0);
        for (std::size_t m = 0; m < stats.model_count(); ++m) {
            const SplitHistogram& h = stats.models()[m];
            for (const auto& [key, s] : h)
                if (key.first == d)
                    vec[m * static_cast<std::size_t>(stats.source_n()) +
                        static_cast<std::size_t>(key.second)] = s;
        }
        table.set_row(d, 0, survival_ratios(vec, floor));
    }
    return table;
}

void BiasTable::save(std::ostream& out) const {
    char buf[64];
    out << "hboa-bias 1 " << (mode_ == BiasMode::per_target ? "per-dj" : "pooled") << ' '
        << source_n_ << ' ';
    std::snprintf(buf, sizeof buf, "%.17g", floor_);
    out << buf << '\n';
    for (const auto& [key, pks] : rows_) {
        for (std::size_t k = 0; k < pks.size(); ++k) {
            std::snprintf(buf, sizeof buf, "%.17g", pks[k]);
            if (mode_ == BiasMode::per_target)
                out << key.first << ' ' << key.second << ' ' << (k + 1) << ' ' << buf << '\n';
            else
                out << key.first << ' ' << (k + 1) << ' ' << buf << '\n';
        }
    }
}

BiasTable BiasTable::load(std::istream& in) {
    std::string line;
    long lineno = 0;
    if (!std::getline(in, line)) throw parse_error("empty bias file", 1);
    ++lineno;
    std::istringstream header(line);
    std::string magic, mode_word;
    int version = 0, n = 0;
    double floor = 0.0;
    if (!(header >> magic >> version >> mode_word >> n >> floor) || magic != "hboa-bias")
        throw parse_error("malformed bias header", lineno);
    if (version != 1)
        throw version_error("unsupported bias file version " + std::to_string(version));
    BiasMode mode;
    if (mode_word == "per-dj")
        mode = BiasMode::per_target;
    else if (mode_word == "pooled")
        mode = BiasMode::pooled;
    else
        throw parse_error("unknown bias mode '" + mode_word + "'", lineno);
    if (n <= 0 || floor <= 0.0 || floor > 1.0)
        throw parse_error("bias header values out of range", lineno);

    BiasTable table(mode, n, floor);
    std::map<std::pair<int, int>, std::vector<std::pair<int, double>>> cells;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream row(line);
        int d = 0, j = 0, k = 0;
        double p = 0.0;
        bool ok = (mode == BiasMode::per_target) ? static_cast<bool>(row >> d >> j >> k >> p)
                                                 : static_cast<bool>(row >> d >> k >> p);
        std::string trailing;
        if (!ok || (row >> trailing)) throw parse_error("malformed bias row", lineno);
        if (k < 1) throw parse_error("bias row ordinal must be >= 1", lineno);
        cells[{d, j}].emplace_back(k, p);
    }
    for (auto& [key, kps] : cells) {
        std::sort(kps.begin(), kps.end());
        std::vector<double> pks;
        for (std::size_t i = 0; i < kps.size(); ++i) {
            if (kps[i].first != static_cast<int>(i) + 1)
                throw parse_error("bias rows must cover k = 1..K without gaps", lineno);
            pks.push_back(kps[i].second);
        }
        table.set_row(key.first, key.second, std::move(pks));
    }
    return table;
}

} // namespace hboa
