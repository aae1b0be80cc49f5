#pragma once

#include <span>
#include <vector>

#include "snake/gait.hpp"
#include "snake/reactive.hpp"
#include "snake/windows.hpp"

namespace snake {

// Diagonal per-window spring-mass-damper gains for the amplitude dynamics.
struct AdmittanceGains {
  double m_gain = 1.0;
  double b_gain = 4.0;
  double k_gain = 4.0;

  void validate() const;
};

// Per-window amplitude state driven by the admittance dynamics, plus the
// compliance mode that filters its rate.
struct ShapeState {
  std::vector<double> amp_desired;
  std::vector<double> amp_vel;
  std::vector<double> amp_acc;
  std::vector<double> amp_nominal;
  std::vector<ComplianceMode> mode;
  double amp_max = 1.5707963267948966;  // pi/2 clamp

  static ShapeState at_nominal(std::span<const double> nominal, double amp_max);

  int count() const { return static_cast<int>(amp_desired.size()); }
};

struct TorqueVector {
  std::vector<double> values;  // one entry per joint of the plane
  Plane plane = Plane::Odd;
};

// Project per-joint external torques into per-window shape forces through the
// windowed shape-function Jacobian:
//   F_j = sum_i w_j(s_i) * sin(eta*s_i - omega*t) * tau_i
// backbone_positions holds s_i for exactly the joints in `torques`.
std::vector<double> shape_force(std::span<const double> torques,
                                std::span<const double> backbone_positions,
                                double time, const WindowLayout& layout,
                                const GaitParams& gait);

std::vector<double> shape_force(const TorqueVector& torques, double time,
                                const WindowLayout& layout, const GaitParams& gait);

// One fixed-step semi-implicit Euler step of
//   M*acc + B*vel + K*(amp - nominal) = F
// per window: velocity update, then the mode's rate filter, then the position
// update, then the [0, amp_max] clamp (which zeroes outward velocity).
void admittance_step(ShapeState& state, std::span<const double> force,
                     const AdmittanceGains& gains, double dt);

}  // namespace snake
