#include "snake/calibration.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "snake/errors.hpp"
#include "snake/simworld.hpp"

namespace snake {

std::vector<double> nominal_planar_commands(const Config& cfg, double t) {
  const GaitParams gait = cfg.odd_gait();
  const WindowLayout layout = WindowLayout::tiled(cfg.windows.count, cfg.windows.slope);
  std::vector<double> nominal(static_cast<std::size_t>(cfg.windows.count),
                              gait.nominal_amplitude);
  std::vector<double> commands(static_cast<std::size_t>(cfg.world.n_joints), 0.0);
  for (int i : plane_joint_indices(cfg.world.n_joints, Plane::Odd)) {
    const double amp = blend(gait.backbone_position(i), nominal, layout);
    commands[static_cast<std::size_t>(i)] = serpenoid_angle(i, t, amp, gait);
  }
  return commands;
}

CalibrationResult calibrate_friction(const Config& cfg, int n_cycles) {
  if (n_cycles < 1) throw std::invalid_argument("calibrate_friction: n_cycles >= 1");

  const GaitParams gait = cfg.odd_gait();
  const double period = gait.period();
  const double dt = cfg.admittance.dt;
  const int steps_per_cycle = static_cast<int>(std::round(period / dt));
  const int transient_steps =
      static_cast<int>(std::round(cfg.calibration.transient_periods * period / dt));

  PegArray no_pegs;
  no_pegs.radius = cfg.pegs.radius;
  World world(cfg.world, no_pegs, Pose2{0.0, 0.0, 0.0}, nominal_planar_commands(cfg, 0.0));
  SnakeController controller(ControlTopology::Planar,
                             cfg.plane_config(Plane::Odd, Variant::NC));

  const int w = cfg.windows.count;
  std::vector<std::vector<double>> cycle_means(
      static_cast<std::size_t>(n_cycles),
      std::vector<double>(static_cast<std::size_t>(w), 0.0));

  std::vector<double> torques(static_cast<std::size_t>(cfg.world.n_joints), 0.0);
  double t = 0.0;
  controller.step(t, torques);
  for (int s = 0; s < transient_steps; ++s) {
    const JointReadings r = world.step(controller.commands(), dt);
    t += dt;
    controller.step(t, r.external_torque);
  }
  for (int c = 0; c < n_cycles; ++c) {
    auto& mean = cycle_means[static_cast<std::size_t>(c)];
    for (int s = 0; s < steps_per_cycle; ++s) {
      const JointReadings r = world.step(controller.commands(), dt);
      t += dt;
      controller.step(t, r.external_torque);
      const auto& amps = controller.odd().shape().amp_desired;
      const auto& noms = controller.odd().shape().amp_nominal;
      for (int j = 0; j < w; ++j)
        mean[static_cast<std::size_t>(j)] +=
            (amps[static_cast<std::size_t>(j)] - noms[static_cast<std::size_t>(j)]) /
            steps_per_cycle;
    }
  }

  CalibrationResult result;
  result.offsets.assign(static_cast<std::size_t>(w), 0.0);
  result.cycle_std.assign(static_cast<std::size_t>(w), 0.0);
  for (int j = 0; j < w; ++j) {
    double sum = 0.0;
    for (int c = 0; c < n_cycles; ++c)
      sum += cycle_means[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
    const double mean = sum / n_cycles;
    double var = 0.0;
    for (int c = 0; c < n_cycles; ++c) {
      const double d =
          cycle_means[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)] - mean;
      var += d * d;
    }
    result.offsets[static_cast<std::size_t>(j)] = mean;
    result.cycle_std[static_cast<std::size_t>(j)] =
        n_cycles > 1 ? std::sqrt(var / (n_cycles - 1)) : 0.0;
  }

  const double tolerance = 0.1 * gait.nominal_amplitude;
  for (int j = 0; j < w; ++j) {
    if (result.cycle_std[static_cast<std::size_t>(j)] > tolerance)
      throw CalibrationError("friction offset for window " + std::to_string(j) +
                             " did not converge: cycle std " +
                             std::to_string(result.cycle_std[static_cast<std::size_t>(j)]) +
                             " rad exceeds 10% of the nominal amplitude");
  }
  return result;
}

}  // namespace snake
