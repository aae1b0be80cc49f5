#include "snake/admittance.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace snake {

void AdmittanceGains::validate() const {
  if (!(m_gain > 0.0 && b_gain > 0.0 && k_gain > 0.0))
    throw std::invalid_argument("admittance gains must be strictly positive");
}

ShapeState ShapeState::at_nominal(std::span<const double> nominal, double amp_max) {
  ShapeState s;
  s.amp_desired.assign(nominal.begin(), nominal.end());
  s.amp_nominal.assign(nominal.begin(), nominal.end());
  s.amp_vel.assign(nominal.size(), 0.0);
  s.amp_acc.assign(nominal.size(), 0.0);
  s.mode.assign(nominal.size(), ComplianceMode::NC);
  s.amp_max = amp_max;
  return s;
}

std::vector<double> shape_force(std::span<const double> torques,
                                std::span<const double> backbone_positions,
                                double time, const WindowLayout& layout,
                                const GaitParams& gait) {
  if (torques.size() != backbone_positions.size())
    throw std::invalid_argument("shape_force: torque/backbone position count mismatch");
  std::vector<double> force(static_cast<std::size_t>(layout.count()), 0.0);
  for (std::size_t i = 0; i < torques.size(); ++i) {
    const double jac = std::sin(gait.eta * backbone_positions[i] - gait.omega * time);
    const double weighted = jac * torques[i];
    for (int j = 0; j < layout.count(); ++j)
      force[static_cast<std::size_t>(j)] +=
          window_weight(backbone_positions[i], j, layout) * weighted;
  }
  return force;
}

std::vector<double> shape_force(const TorqueVector& torques, double time,
                                const WindowLayout& layout, const GaitParams& gait) {
  const auto indices = plane_joint_indices(gait.n_joints, torques.plane);
  if (torques.values.size() != indices.size())
    throw std::invalid_argument("shape_force: torque count does not match the plane");
  std::vector<double> s(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i)
    s[i] = gait.backbone_position(indices[i]);
  return shape_force(torques.values, s, time, layout, gait);
}

void admittance_step(ShapeState& state, std::span<const double> force,
                     const AdmittanceGains& gains, double dt) {
  gains.validate();
  if (!(dt > 0.0)) throw std::invalid_argument("admittance_step: dt must be > 0");
  if (force.size() != state.amp_desired.size())
    throw std::invalid_argument("admittance_step: force/window count mismatch");

  for (std::size_t j = 0; j < force.size(); ++j) {
    if (!std::isfinite(force[j]))
      throw std::domain_error("admittance_step: non-finite force in window " +
                              std::to_string(j));
    state.amp_acc[j] = (force[j] - gains.b_gain * state.amp_vel[j] -
                        gains.k_gain * (state.amp_desired[j] - state.amp_nominal[j])) /
                       gains.m_gain;
    state.amp_vel[j] += dt * state.amp_acc[j];
    state.amp_vel[j] = apply_filter(state.amp_vel[j], state.mode[j]);
    state.amp_desired[j] += dt * state.amp_vel[j];
    if (state.amp_desired[j] > state.amp_max) {
      state.amp_desired[j] = state.amp_max;
      if (state.amp_vel[j] > 0.0) state.amp_vel[j] = 0.0;
    } else if (state.amp_desired[j] < 0.0) {
      state.amp_desired[j] = 0.0;
      if (state.amp_vel[j] < 0.0) state.amp_vel[j] = 0.0;
    }
  }
}

}  // namespace snake
