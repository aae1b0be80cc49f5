#pragma once

#include <optional>
#include <string>
#include <span>
#include <vector>

#include "snake/admittance.hpp"
#include "snake/gait.hpp"
#include "snake/reactive.hpp"
#include "snake/windows.hpp"

namespace snake {

// The four controller variants compared in the experiments, plus a manual
// mode used by scripted demonstrations where the operator switches modes.
enum class Variant { NC, NDCOnly, PDCOnly, DynamicalSystem, Manual };

const char* to_string(Variant variant);
Variant variant_from_string(const std::string& name);

struct ModeEvent {
  double time = 0.0;
  Plane plane = Plane::Odd;
  int window_index = 0;
  ComplianceMode from = ComplianceMode::NC;
  ComplianceMode to = ComplianceMode::NC;
};

// Emitted when a window passes off the tail and its state is discarded.
struct WindowDeath {
  double time = 0.0;
  Plane plane = Plane::Odd;
  double absition = 0.0;  // rad*s at discard
  double age = 0.0;       // seconds since birth
};

struct PlaneControllerConfig {
  GaitParams gait;           // n_joints is the global joint count
  Plane plane = Plane::Odd;
  int n_windows = 3;
  double window_slope = 50.0;
  AdmittanceGains gains;
  double dt = 5e-3;
  double amp_max = 1.5707963267948966;
  double threshold_scale = 2.0;        // thresholds = +-scale * A0 (rad*s)
  double exit_epsilon_scale = 1e-3;    // exit epsilon = scale * A0 (rad*s)
  double mean_window_periods = 1.0;    // trailing mean spans this many gait periods
  Variant variant = Variant::NC;
  bool windows_travel = true;

  std::size_t mean_window_samples() const;
  void validate() const;
};

// One bending plane's full reactive stack: windowed admittance dynamics on
// the amplitude, absition tracking with friction offsets, the directional
// compliance filter and (for the dynamical-system variant) the threshold
// mode machine, plus window propagation and lifecycle.
class PlaneController {
 public:
  explicit PlaneController(const PlaneControllerConfig& cfg);

  // One control tick at time `time` with the external torques measured at
  // this plane's joints (ordered by ascending global joint index).
  void step(double time, std::span<const double> torques);

  // Manual variant only: force a window's compliance mode.
  void force_mode(int window_index, ComplianceMode mode, double time);

  // Per-slot friction offsets from calibration; applied to current and
  // future trackers.
  void set_friction_offsets(std::span<const double> offsets);

  const std::vector<int>& joint_indices() const { return joint_indices_; }
  const std::vector<double>& backbone_positions() const { return backbone_s_; }
  // Blended amplitude at each of this plane's joints (refreshed by step()).
  const std::vector<double>& joint_amplitudes() const { return joint_amplitudes_; }

  const PlaneControllerConfig& config() const { return cfg_; }
  const WindowLayout& layout() const { return layout_; }
  const ShapeState& shape() const { return state_; }
  const std::vector<AbsitionTracker>& trackers() const { return trackers_; }
  const std::vector<double>& last_force() const { return last_force_; }
  const std::vector<ModeEvent>& events() const { return events_; }
  const std::vector<WindowDeath>& deaths() const { return deaths_; }
  double threshold_upper() const { return thresh_upper_; }
  double threshold_lower() const { return thresh_lower_; }

 private:
  void refresh_joint_amplitudes();

  PlaneControllerConfig cfg_;
  std::vector<int> joint_indices_;
  std::vector<double> backbone_s_;
  WindowLayout layout_;
  ShapeState state_;
  std::vector<AbsitionTracker> trackers_;
  std::vector<double> slot_offsets_;
  std::vector<double> birth_time_;
  std::vector<double> joint_amplitudes_;
  std::vector<double> last_force_;
  std::vector<ModeEvent> events_;
  std::vector<WindowDeath> deaths_;
  double thresh_upper_ = 0.0;
  double thresh_lower_ = 0.0;
};

// Planar control drives the odd-plane joints and holds even joints at zero;
// dual-plane control runs an independent stack per plane.
enum class ControlTopology { Planar, DualPlane };

class SnakeController {
 public:
  SnakeController(ControlTopology topology, const PlaneControllerConfig& odd_cfg,
                  std::optional<PlaneControllerConfig> even_cfg = std::nullopt);

  // One control tick: splits the global torque vector across the planes,
  // advances each plane's stack and refreshes the commanded joint angles.
  void step(double time, std::span<const double> joint_torques);

  const std::vector<double>& commands() const { return commands_; }
  int n_joints() const { return n_joints_; }
  ControlTopology topology() const { return topology_; }

  PlaneController& odd() { return odd_; }
  const PlaneController& odd() const { return odd_; }
  PlaneController* even() { return even_ ? &*even_ : nullptr; }
  const PlaneController* even() const { return even_ ? &*even_ : nullptr; }

  std::vector<ModeEvent> all_events() const;
  std::vector<WindowDeath> all_deaths() const;

 private:
  ControlTopology topology_;
  int n_joints_;
  PlaneController odd_;
  std::optional<PlaneController> even_;
  std::vector<double> commands_;
  std::vector<double> scratch_odd_, scratch_even_;
};

}  // namespace snake
