#include "hboa/model_dump.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "hboa/errors.hpp"

namespace hboa {

void ModelDump::save(std::ostream& out) const {
    out << "hboa-model 1 " << n << ' ' << splits.size() << '\n';
    for (const SplitRecord& rec : splits)
        out << rec.target << ' ' << rec.var << ' ' << rec.depth << '\n';
}

ModelDump ModelDump::load(std::istream& in) {
    std::string line;
    long lineno = 0;
    if (!std::getline(in, line)) throw parse_error("empty model dump", 1);
    ++lineno;
    std::istringstream header(line);
    std::string magic;
    int version = 0, n = 0;
    std::size_t count = 0;
    if (!(header >> magic >> version >> n >> count) || magic != "hboa-model")
        throw parse_error("malformed model dump header", lineno);
    if (version != 1)
        throw version_error("unsupported model dump version " + std::to_string(version));
    if (n <= 0) throw parse_error("model dump n must be positive", lineno);

    ModelDump dump;
    dump.n = n;
    dump.splits.reserve(count);
    while (dump.splits.size() < count) {
        if (!std::getline(in, line)) throw parse_error("model dump truncated", lineno + 1);
        ++lineno;
        if (line.empty()) continue;
        std::istringstream row(line);
        SplitRecord rec;
        if (!(row >> rec.target >> rec.var >> rec.depth))
            throw parse_error("malformed split record", lineno);
        if (rec.target < 0 || rec.target >= n || rec.var < 0 || rec.var >= n ||
            rec.var == rec.target || rec.depth < 0)
            throw parse_error("split record out of range", lineno);
        dump.splits.push_back(rec);
    }
    return dump;
}

} // namespace hboa
