#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "snake/admittance.hpp"
#include "snake/controller.hpp"
#include "snake/simworld.hpp"

namespace snake {

// Everything a run needs, loadable from one nested JSON file. Missing keys
// keep their defaults; unknown keys are rejected.
struct Config {
  struct Gait {
    double kappa = 0.0;
    double amplitude = 0.6283185307179586;  // pi/5
    double eta = 9.42477796076938;          // 3*pi: 1.5 body waves
    double omega = 1.5707963267948966;      // pi/2: 4 s gait period
    double even_kappa = 0.0;
    double even_amplitude = 0.0;
    double even_eta = 9.42477796076938;
    double even_omega = 1.5707963267948966;
  } gait;

  struct Windows {
    int count = 3;
    double slope = 50.0;
    bool travel = true;
  } windows;

  struct Admittance {
    double m_gain = 1.0;
    double b_gain = 4.0;
    double k_gain = 4.0;
    double dt = 5e-3;
    double amp_max = 1.5707963267948966;
  } admittance;

  struct Reactive {
    double threshold_scale = 2.0;
    double exit_epsilon_scale = 1e-3;
    double mean_window_periods = 1.0;
  } reactive;

  WorldConfig world;

  struct Pegs {
    double density = 4.5;      // pegs per square meter
    double min_spacing = 0.2;  // m
    double radius = 0.04;      // m
    double extent_x = 30.0;
    double extent_y = 30.0;
  } pegs;

  struct Experiment {
    std::vector<std::string> variants = {"nc", "ndc", "pdc", "ds"};
    int n_poses = 5;
    int trials_per_pose = 4;
    double trial_duration = 120.0;
    std::uint64_t master_seed = 74207281;
    double pose_interior_x = 6.0;  // poses drawn from the central box
    double pose_interior_y = 6.0;
    int telemetry_stride = 0;  // control steps between records; 0 disables
    int workers = 0;           // 0 = hardware concurrency
  } experiment;

  struct Calibration {
    bool enabled = true;
    int n_cycles = 6;
    double transient_periods = 1.0;
  } calibration;

  void validate() const;

  GaitParams odd_gait() const;
  GaitParams even_gait() const;
  AdmittanceGains gains() const;
  PlaneControllerConfig plane_config(Plane plane, Variant variant) const;
};

Config load_config(const std::string& path);
Config config_from_json(const std::string& text);
std::string config_to_json(const Config& cfg);
void save_config(const Config& cfg, const std::string& path);

}  // namespace snake
