#include "snake/gait.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "snake/windows.hpp"

namespace snake {

const char* to_string(Plane plane) { return plane == Plane::Odd ? "odd" : "even"; }

GaitParams GaitParams::standard(int n_joints, double amplitude, double eta,
                                double omega, double kappa) {
  GaitParams p;
  p.kappa = kappa;
  p.nominal_amplitude = amplitude;
  p.eta = eta;
  p.omega = omega;
  p.n_joints = n_joints;
  p.delta_s = n_joints > 0 ? 1.0 / n_joints : 0.0;
  p.validate();
  return p;
}

void GaitParams::validate() const {
  if (n_joints < 2) throw std::invalid_argument("gait: n_joints must be >= 2");
  if (!(delta_s > 0.0)) throw std::invalid_argument("gait: delta_s must be > 0");
  if (!(omega > 0.0)) throw std::invalid_argument("gait: omega must be > 0");
  if (!(eta > 0.0)) throw std::invalid_argument("gait: eta must be > 0");
  if (!(nominal_amplitude >= 0.0) || !std::isfinite(nominal_amplitude))
    throw std::invalid_argument("gait: nominal_amplitude must be >= 0");
}

double GaitParams::period() const { return 2.0 * std::numbers::pi / omega; }

void DualPlaneGait::validate() const {
  odd_plane.validate();
  even_plane.validate();
  if (odd_plane.n_joints != even_plane.n_joints)
    throw std::invalid_argument("dual-plane gait: planes must share the joint count");
}

namespace {

void check_joint_index(int joint_index, const GaitParams& params) {
  if (joint_index < 0 || joint_index >= params.n_joints)
    throw std::out_of_range("joint index " + std::to_string(joint_index) +
                            " outside [0, " + std::to_string(params.n_joints) + ")");
}

}  // namespace

double serpenoid_angle(int joint_index, double time, double amplitude,
                       const GaitParams& params) {
  check_joint_index(joint_index, params);
  if (!std::isfinite(amplitude))
    throw std::domain_error("serpenoid_angle: non-finite amplitude");
  return params.kappa + amplitude * std::sin(params.phase(joint_index, time));
}

double shape_jacobian_entry(int joint_index, double time, const GaitParams& params) {
  check_joint_index(joint_index, params);
  return std::sin(params.phase(joint_index, time));
}

std::vector<int> plane_joint_indices(int n_joints, Plane plane) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n_joints) / 2 + 1);
  for (int i = plane == Plane::Odd ? 1 : 0; i < n_joints; i += 2) out.push_back(i);
  return out;
}

std::vector<double> dual_plane_angles(double time,
                                      std::span<const double> amplitudes_odd,
                                      std::span<const double> amplitudes_even,
                                      const DualPlaneGait& gait,
                                      const WindowLayout& layout_odd,
                                      const WindowLayout& layout_even) {
  gait.validate();
  if (amplitudes_odd.size() != static_cast<std::size_t>(layout_odd.count()))
    throw std::invalid_argument("dual_plane_angles: odd amplitude count != window count");
  if (amplitudes_even.size() != static_cast<std::size_t>(layout_even.count()))
    throw std::invalid_argument("dual_plane_angles: even amplitude count != window count");

  const int n = gait.odd_plane.n_joints;
  std::vector<double> angles(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    const bool odd = (i % 2) == 1;
    const GaitParams& plane = odd ? gait.odd_plane : gait.even_plane;
    const WindowLayout& layout = odd ? layout_odd : layout_even;
    const auto amps = odd ? amplitudes_odd : amplitudes_even;
    const double amp = blend(plane.backbone_position(i), amps, layout);
    angles[static_cast<std::size_t>(i)] = serpenoid_angle(i, time, amp, plane);
  }
  return angles;
}

}  // namespace snake
