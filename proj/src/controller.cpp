#include "snake/controller.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace snake {

const char* to_string(Variant variant) {
  switch (variant) {
    case Variant::NC: return "nc";
    case Variant::NDCOnly: return "ndc";
    case Variant::PDCOnly: return "pdc";
    case Variant::DynamicalSystem: return "ds";
    case Variant::Manual: return "manual";
  }
  return "?";
}

Variant variant_from_string(const std::string& name) {
  if (name == "nc") return Variant::NC;
  if (name == "ndc") return Variant::NDCOnly;
  if (name == "pdc") return Variant::PDCOnly;
  if (name == "ds") return Variant::DynamicalSystem;
  if (name == "manual") return Variant::Manual;
  throw std::invalid_argument("unknown controller variant: " + name);
}

std::size_t PlaneControllerConfig::mean_window_samples() const {
  const double samples = mean_window_periods * gait.period() / dt;
  return static_cast<std::size_t>(std::max(1.0, std::round(samples)));
}

void PlaneControllerConfig::validate() const {
  gait.validate();
  gains.validate();
  if (!(dt > 0.0)) throw std::invalid_argument("controller: dt must be > 0");
  if (n_windows < 1) throw std::invalid_argument("controller: need >= 1 window");
  if (!(threshold_scale > 0.0))
    throw std::invalid_argument("controller: threshold_scale must be > 0");
}

namespace {

ComplianceMode variant_initial_mode(Variant variant) {
  switch (variant) {
    case Variant::PDCOnly: return ComplianceMode::PDC;
    case Variant::NDCOnly: return ComplianceMode::NDC;
    default: return ComplianceMode::NC;
  }
}

}  // namespace

PlaneController::PlaneController(const PlaneControllerConfig& cfg) : cfg_(cfg) {
  cfg_.validate();
  joint_indices_ = plane_joint_indices(cfg_.gait.n_joints, cfg_.plane);
  backbone_s_.reserve(joint_indices_.size());
  for (int i : joint_indices_) backbone_s_.push_back(cfg_.gait.backbone_position(i));

  layout_ = WindowLayout::tiled(cfg_.n_windows, cfg_.window_slope);

  const double a0 = cfg_.gait.nominal_amplitude;
  std::vector<double> nominal(static_cast<std::size_t>(cfg_.n_windows), a0);
  state_ = ShapeState::at_nominal(nominal, cfg_.amp_max);
  const ComplianceMode init_mode = variant_initial_mode(cfg_.variant);
  for (auto& m : state_.mode) m = init_mode;

  // Thresholds are in rad*s; the scale applies to the nominal amplitude. A
  // zero-amplitude plane (e.g. the lateral plane in planar work) still needs
  // valid thresholds, so fall back to the scale itself.
  const double basis = a0 > 0.0 ? a0 : 1.0;
  thresh_upper_ = cfg_.threshold_scale * basis;
  thresh_lower_ = -thresh_upper_;
  const double exit_eps = cfg_.exit_epsilon_scale * basis;
  const std::size_t k = cfg_.mean_window_samples();
  const double mean_duration = static_cast<double>(k) * cfg_.dt;
  trackers_.reserve(static_cast<std::size_t>(cfg_.n_windows));
  for (int j = 0; j < cfg_.n_windows; ++j)
    trackers_.push_back(
        AbsitionTracker::make(a0, thresh_upper_, thresh_lower_, exit_eps, k, mean_duration));

  slot_offsets_.assign(static_cast<std::size_t>(cfg_.n_windows), 0.0);
  birth_time_.assign(static_cast<std::size_t>(cfg_.n_windows), 0.0);
  joint_amplitudes_.assign(joint_indices_.size(), 0.0);
  last_force_.assign(static_cast<std::size_t>(cfg_.n_windows), 0.0);
  refresh_joint_amplitudes();
}

void PlaneController::set_friction_offsets(std::span<const double> offsets) {
  if (offsets.size() != slot_offsets_.size())
    throw std::invalid_argument("friction offsets: count != window count");
  for (std::size_t j = 0; j < offsets.size(); ++j) {
    slot_offsets_[j] = offsets[j];
    trackers_[j].friction_offset = offsets[j];
  }
}

void PlaneController::force_mode(int window_index, ComplianceMode mode, double time) {
  if (cfg_.variant != Variant::Manual)
    throw std::logic_error("force_mode is only available in the manual variant");
  auto& current = state_.mode.at(static_cast<std::size_t>(window_index));
  if (current == mode) return;
  events_.push_back({time, cfg_.plane, window_index, current, mode});
  current = mode;
  // Re-arm the tracker the same way the automatic machine would.
  auto& tracker = trackers_[static_cast<std::size_t>(window_index)];
  if (mode == ComplianceMode::NC) {
    tracker.entry_sign = 0;
    tracker.reference_amp = tracker.nominal_amp;
  } else {
    const double thresh =
        mode == ComplianceMode::PDC ? tracker.thresh_lower : tracker.thresh_upper;
    tracker.entry_sign = mode == ComplianceMode::PDC ? -1 : +1;
    tracker.reference_amp = tracker.nominal_amp + thresh / tracker.mean_duration;
  }
}

void PlaneController::refresh_joint_amplitudes() {
  for (std::size_t i = 0; i < backbone_s_.size(); ++i)
    joint_amplitudes_[i] = blend(backbone_s_[i], state_.amp_desired, layout_);
}

void PlaneController::step(double time, std::span<const double> torques) {
  if (torques.size() != backbone_s_.size())
    throw std::invalid_argument("plane controller: torque count != plane joint count");

  last_force_ = shape_force(torques, backbone_s_, time, layout_, cfg_.gait);
  admittance_step(state_, last_force_, cfg_.gains, cfg_.dt);

  for (std::size_t j = 0; j < trackers_.size(); ++j) {
    update_mean(trackers_[j], state_.amp_desired[j]);
    update_absition(trackers_[j], state_.amp_desired[j], cfg_.dt);
  }

  if (cfg_.variant == Variant::DynamicalSystem) {
    for (std::size_t j = 0; j < trackers_.size(); ++j) {
      const ComplianceMode next = transition(trackers_[j], state_.mode[j]);
      if (next != state_.mode[j]) {
        events_.push_back({time, cfg_.plane, static_cast<int>(j), state_.mode[j], next});
        state_.mode[j] = next;
      }
    }
  }

  // Commands for this tick use the pre-propagation windows.
  refresh_joint_amplitudes();

  if (cfg_.windows_travel) {
    layout_ = advance_windows(layout_, cfg_.dt, cfg_.gait);
    const double width = layout_.windows.front().width();
    double travel = layout_.windows.front().s_left;
    std::size_t dying = trackers_.size();
    while (travel >= width && dying > 0) {
      --dying;
      deaths_.push_back(
          {time, cfg_.plane, trackers_[dying].absition, time - birth_time_[dying]});
      travel -= width;
    }
    const int cycled =
        cycle_windows(layout_, state_, trackers_, cfg_.gait.nominal_amplitude);
    for (int c = 0; c < cycled; ++c) {
      birth_time_.pop_back();
      birth_time_.insert(birth_time_.begin(), time);
    }
    if (cycled > 0) {
      const ComplianceMode init_mode = variant_initial_mode(cfg_.variant);
      for (int c = 0; c < cycled && c < static_cast<int>(state_.mode.size()); ++c)
        state_.mode[static_cast<std::size_t>(c)] = init_mode;
      for (std::size_t j = 0; j < trackers_.size(); ++j)
        trackers_[j].friction_offset = slot_offsets_[j];
    }
  }
}

SnakeController::SnakeController(ControlTopology topology,
                                 const PlaneControllerConfig& odd_cfg,
                                 std::optional<PlaneControllerConfig> even_cfg)
    : topology_(topology), n_joints_(odd_cfg.gait.n_joints), odd_(odd_cfg) {
  if (topology_ == ControlTopology::DualPlane) {
    if (!even_cfg)
      throw std::invalid_argument("dual-plane controller needs an even-plane config");
    if (even_cfg->gait.n_joints != n_joints_)
      throw std::invalid_argument("plane configs disagree on the joint count");
    even_.emplace(*even_cfg);
  }
  commands_.assign(static_cast<std::size_t>(n_joints_), 0.0);
  scratch_odd_.assign(odd_.joint_indices().size(), 0.0);
  if (even_) scratch_even_.assign(even_->joint_indices().size(), 0.0);
}

void SnakeController::step(double time, std::span<const double> joint_torques) {
  if (joint_torques.size() != static_cast<std::size_t>(n_joints_))
    throw std::invalid_argument("controller: torque vector length != joint count");

  const auto& odd_idx = odd_.joint_indices();
  for (std::size_t k = 0; k < odd_idx.size(); ++k)
    scratch_odd_[k] = joint_torques[static_cast<std::size_t>(odd_idx[k])];
  odd_.step(time, scratch_odd_);

  if (even_) {
    const auto& even_idx = even_->joint_indices();
    for (std::size_t k = 0; k < even_idx.size(); ++k)
      scratch_even_[k] = joint_torques[static_cast<std::size_t>(even_idx[k])];
    even_->step(time, scratch_even_);
  }

  std::fill(commands_.begin(), commands_.end(), 0.0);
  for (std::size_t k = 0; k < odd_idx.size(); ++k) {
    const int i = odd_idx[k];
    commands_[static_cast<std::size_t>(i)] =
        serpenoid_angle(i, time, odd_.joint_amplitudes()[k], odd_.config().gait);
  }
  if (even_) {
    const auto& even_idx = even_->joint_indices();
    for (std::size_t k = 0; k < even_idx.size(); ++k) {
      const int i = even_idx[k];
      commands_[static_cast<std::size_t>(i)] =
          serpenoid_angle(i, time, even_->joint_amplitudes()[k], even_->config().gait);
    }
  }
}

std::vector<ModeEvent> SnakeController::all_events() const {
  std::vector<ModeEvent> out = odd_.events();
  if (even_) out.insert(out.end(), even_->events().begin(), even_->events().end());
  return out;
}

std::vector<WindowDeath> SnakeController::all_deaths() const {
  std::vector<WindowDeath> out = odd_.deaths();
  if (even_) out.insert(out.end(), even_->deaths().begin(), even_->deaths().end());
  return out;
}

}  // namespace snake
