#pragma once

#include <cstdint>
#include <vector>

#include "hboa/adf.hpp"
#include "hboa/rng.hpp"

namespace hboa {

/// 3D +-J Ising spin glass on an L*L*L torus: one coupling per site per
/// positive axis direction, 3n couplings total. The objective is the
/// maximized interaction sum, so the ground state sits at the maximum.
struct SpinGlass3D {
    int L = 0;
    // couplings[site * 3 + axis], axis 0/1/2 = +x/+y/+z, values -1 or +1
    std::vector<std::int8_t> couplings;

    int n() const { return L * L * L; }

    int site(int x, int y, int z) const { return (z * L + y) * L + x; }

    int neighbor(int site_index, int axis) const {
        int x = site_index % L;
        int y = (site_index / L) % L;
        int z = site_index / (L * L);
        switch (axis) {
        case 0: x = (x + 1) % L; break;
        case 1: y = (y + 1) % L; break;
        default: z = (z + 1) % L; break;
        }
        return site(x, y, z);
    }

    void validate() const;
};

/// Each coupling independently -1 or +1 with probability 1/2.
SpinGlass3D gen_spin_glass(int L, RngStream& rng);

/// All couplings +1; the all-equal spin states are ground states at 3n.
SpinGlass3D ferromagnetic_spin_glass(int L);

/// One subfunction J * s_i * s_j per lattice edge, spins s = 2b - 1.
AdfSpec spin_glass_adf(const SpinGlass3D& sg);

} // namespace hboa
