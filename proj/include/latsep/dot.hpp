#pragma once

#include <string>

#include "latsep/dlat.hpp"
#include "latsep/space.hpp"

namespace latsep {

// Renders named points, a sampled fan prefix with a limit marker, and the
// order edges. Cosmetic only; checkers never consume this.
std::string space_dot(const SpaceSpec& spec, int fan_sample = 4);

// Hasse diagram (cover edges, bottom-up).
std::string lattice_dot(const FinDLat& L);

}  // namespace latsep
