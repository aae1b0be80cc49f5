#pragma once

#include <vector>

#include "snake/config.hpp"

namespace snake {

struct CalibrationResult {
  std::vector<double> offsets;    // per window slot, rad
  std::vector<double> cycle_std;  // spread of the per-cycle means, rad
};

// Friction-offset calibration: run the nominal-compliance stack on flat,
// unobstructed ground for a one-period transient plus n_cycles gait periods
// and average each window slot's amplitude deviation from nominal. Throws
// CalibrationError when the per-cycle means spread beyond 10% of the nominal
// amplitude (non-convergent offset).
CalibrationResult calibrate_friction(const Config& cfg, int n_cycles);

// Planar commanded joint vector before any compliance has acted: nominal
// amplitudes blended through the initial window layout. Used to spawn the
// robot already on its commanded shape.
std::vector<double> nominal_planar_commands(const Config& cfg, double t);

}  // namespace snake
