#pragma once

#include <vector>

#include "kronrep/homalg.hpp"

namespace kronrep {

struct AdjointTrial {
    DimVector x_dim, m_dim;
    int hom_left = 0;   // Hom(shift_minus(inflate X), M)
    int hom_right = 0;  // Hom(X, shift_plus(restrict M))
    bool round_trip = false;
    bool natural = false;
};

struct AdjointCheck {
    int trials = 0;
    int dims_equal = 0;
    int round_trips = 0;
    int natural = 0;
    std::vector<AdjointTrial> details;
    bool all_pass() const { return dims_equal == trials && round_trips == trials && natural == trials; }
};

// Random X over K_d and M over K_r, dims bounded componentwise.
AdjointCheck adjoint_check(int d, int r, std::uint64_t seed, int trials, DimVector max_x = {3, 5},
                           DimVector max_m = {3, 5}, int bound = 3);

}  // namespace kronrep
