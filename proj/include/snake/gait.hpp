#pragma once

#include <span>
#include <vector>

namespace snake {

enum class Plane { Odd, Even };

const char* to_string(Plane plane);

// Serpenoid gait constants for one bending plane. The backbone coordinate is
// normalized to [0,1] with joint i at s_i = i * delta_s and delta_s = 1/N.
struct GaitParams {
  double kappa = 0.0;              // angular offset (rad)
  double nominal_amplitude = 0.0;  // A0 (rad)
  double eta = 0.0;                // spatial frequency (rad per unit backbone)
  double omega = 0.0;              // temporal frequency (rad/s)
  double delta_s = 0.0;            // inter-joint spacing (unit backbone)
  int n_joints = 0;

  static GaitParams standard(int n_joints, double amplitude, double eta,
                             double omega, double kappa = 0.0);

  void validate() const;

  double backbone_position(int joint_index) const { return joint_index * delta_s; }
  double phase(int joint_index, double time) const {
    return eta * backbone_position(joint_index) - omega * time;
  }
  // Speed at which the body wave (and the activation windows riding it)
  // travels tailward, in backbone units per second.
  double wave_speed() const { return omega / eta; }
  double period() const;
};

// Two serpenoid planes assigned to alternating joints: odd joint indices bend
// dorsoventrally, even indices laterally. Planar locomotion = even amplitude 0.
struct DualPlaneGait {
  GaitParams odd_plane;
  GaitParams even_plane;

  void validate() const;
};

// theta_i = kappa + A * sin(eta * s_i - omega * t)
double serpenoid_angle(int joint_index, double time, double amplitude,
                       const GaitParams& params);

// dh_i/dA = sin(eta * s_i - omega * t)
double shape_jacobian_entry(int joint_index, double time, const GaitParams& params);

// Global joint indices belonging to a plane (0-based; Odd = {1,3,...}).
std::vector<int> plane_joint_indices(int n_joints, Plane plane);

struct WindowLayout;  // windows.hpp

// Full commanded joint vector for the two-plane gait: each joint follows its
// plane's serpenoid, with the amplitude blended from that plane's activation
// windows at the joint's backbone position.
std::vector<double> dual_plane_angles(double time,
                                      std::span<const double> amplitudes_odd,
                                      std::span<const double> amplitudes_even,
                                      const DualPlaneGait& gait,
                                      const WindowLayout& layout_odd,
                                      const WindowLayout& layout_even);

}  // namespace snake
