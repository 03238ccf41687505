#include "hboa/spin_glass.hpp"

#include "hboa/errors.hpp"

namespace hboa {

void SpinGlass3D::validate() const {
    if (L < 3) throw invalid_input("spin glass needs L >= 3 (L = 2 duplicates periodic edges)");
    if (couplings.size() != static_cast<std::size_t>(3 * n()))
        throw invalid_input("spin glass must carry exactly 3n couplings");
    for (std::int8_t j : couplings)
        if (j != 1 && j != -1) throw invalid_input("couplings must be -1 or +1");
}

SpinGlass3D gen_spin_glass(int L, RngStream& rng) {
    if (L < 3) throw invalid_input("spin glass needs L >= 3 (L = 2 duplicates periodic edges)");
    SpinGlass3D sg;
    sg.L = L;
    sg.couplings.resize(static_cast<std::size_t>(3 * sg.n()));
    for (auto& j : sg.couplings) j = rng.coin() ? 1 : -1;
    return sg;
}

SpinGlass3D ferromagnetic_spin_glass(int L) {
    if (L < 3) throw invalid_input("spin glass needs L >= 3 (L = 2 duplicates periodic edges)");
    SpinGlass3D sg;
    sg.L = L;
    sg.couplings.assign(static_cast<std::size_t>(3 * sg.n()), 1);
    return sg;
}

AdfSpec spin_glass_adf(const SpinGlass3D& sg) {
    sg.validate();
    std::vector<Subfunction> subs;
    subs.reserve(sg.couplings.size());
    for (int s = 0; s < sg.n(); ++s)
        for (int axis = 0; axis < 3; ++axis) {
            const double j = sg.couplings[static_cast<std::size_t>(s * 3 + axis)];
            Subfunction f;
            f.vars = {s, sg.neighbor(s, axis)};
            // spins 2b-1: equal bits contribute +J, unequal -J
            f.table = {j, -j, -j, j};
            subs.push_back(std::move(f));
        }
    return AdfSpec(static_cast<std::size_t>(sg.n()), std::move(subs));
}

} // namespace hboa
