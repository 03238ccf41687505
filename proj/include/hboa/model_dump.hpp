#pragma once

#include <iosfwd>
#include <vector>

namespace hboa {

/// One executed split: variable `var` entered the tree of `target` at `depth`.
struct SplitRecord {
    int target = 0;
    int var = 0;
    int depth = 0;
};

/// Structure-only snapshot of a learned network: the splits of every tree in
/// creation order. This is the text format the bias harvester consumes.
struct ModelDump {
    int n = 0;
    std::vector<SplitRecord> splits;

    void save(std::ostream& out) const;
    static ModelDump load(std::istream& in);
};

} // namespace hboa
