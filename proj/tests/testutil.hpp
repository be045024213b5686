#pragma once

#include "nchyl/potential.hpp"

namespace nchyl::testutil {

// The canonical well used throughout the examples and the acceptance runs.
inline potential::PotentialParams canonical_well()
{
    potential::PotentialParams p;
    p.V0 = 1.0;
    p.a = -4.0;
    p.b = 1.0;
    p.g = 0.0;
    p.alpha = 1.0;
    p.r_c = 0.5;
    p.M = 1.0;
    return p;
}

} // namespace nchyl::testutil
