#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "snake/calibration.hpp"
#include "snake/config.hpp"
#include "snake/controller.hpp"
#include "snake/simworld.hpp"

namespace snake {

struct TrialRecord {
  std::string variant;
  int pose_index = 0;
  int trial_index = 0;
  std::uint64_t seed = 0;  // per-trial jitter seed
  double init_x = 0.0, init_y = 0.0, init_heading = 0.0;
  double phase_offset = 0.0;  // gait clock offset (s)
  double displacement_projected_bl = 0.0;  // along the commanded direction
  double displacement_total_bl = 0.0;
  double velocity_bl_min = 0.0;  // projected displacement / duration in minutes
  double duration_s = 0.0;       // configured trial duration
  int n_mode_events = 0;
  bool aborted = false;
  double abort_time = 0.0;
  std::string abort_reason;
};

struct ReportRow {
  std::string variant;
  int pose_index = -1;  // -1 marks a per-variant grand row
  double velocity_mean = 0.0;
  double velocity_std = 0.0;  // populated for grand rows
  int n_trials = 0;
};

struct ComparisonReport {
  std::vector<TrialRecord> trials;
  std::vector<ReportRow> pose_rows;
  std::vector<ReportRow> grand_rows;
  bool any_crashed = false;  // exceptions other than divergence aborts
};

// Initial pose for a pose index: heading and position drawn uniformly from
// the configured interior box, re-drawn until the body spawns clear of pegs.
Pose2 sample_pose(const Config& cfg, const PegArray& pegs, int pose_index);

// One trial of one controller variant from one pose. Divergence aborts are
// recorded in the output, not thrown.
TrialRecord run_trial(const Config& cfg, Variant variant, int pose_index,
                      int trial_index, const PegArray& pegs,
                      const std::vector<double>& friction_offsets,
                      const std::string& telemetry_path = {});

// The full controller comparison: every variant x pose x trial, a shared peg
// array and shared calibration. Writes trials.csv, report.csv and optional
// per-trial telemetry under out_dir (when non-empty).
ComparisonReport run_comparison(const Config& cfg, const std::string& out_dir = {});

// Scripted scenarios.
struct ScenarioSample {
  double t = 0.0;
  std::vector<double> amp_odd, absition_odd;
  std::vector<ComplianceMode> mode_odd;
  std::vector<double> amp_even, absition_even;
  std::vector<ComplianceMode> mode_even;
};

struct ScenarioResult {
  std::string name;
  std::vector<ScenarioSample> samples;
  std::vector<ModeEvent> events;
  std::vector<WindowDeath> deaths;
  double nominal_odd = 0.0;
  double nominal_even = 0.0;
  double threshold_odd = 0.0;
};

// `fig2-jam`: pegs pinned around the mid and tail body sections, nominal
//   compliance; the obstructed windows' absitions diverge while the head
//   window's stays near zero.
// `fig3-manual-dc`: centralized single window, scripted mode switches and
//   scripted external torques; amplitude holds under PDC/NDC and recovers
//   to nominal under NC.
// `eq10-synthetic-3d`: dual-plane control with synthetic torque injection on
//   one plane at a time; the other plane must stay untouched.
ScenarioResult run_scenario(const std::string& name, const Config& cfg,
                            const std::string& telemetry_path = {});

std::vector<std::string> scenario_names();

// CSV artifacts. Doubles are printed with "%.17g" so re-parsing reproduces
// them bit-exactly.
void write_trials_csv(const std::vector<TrialRecord>& trials, const std::string& path);
void write_report_csv(const ComparisonReport& report, const std::string& path);
std::string trials_csv_text(const std::vector<TrialRecord>& trials);

// Tidy per-figure CSV exports from a telemetry log.
void export_amplitude_csv(const std::vector<ScenarioSample>& samples, int n_windows_odd,
                          const std::string& path);
void export_absition_csv(const ScenarioResult& result, const std::string& path);
void export_events_csv(const std::vector<ModeEvent>& events, const std::string& path);
// report.csv rendered for plotting: n_variants x n_poses rows + one summary
// row per variant.
void export_velocity_bars_csv(const ComparisonReport& report, const std::string& path);

ScenarioResult scenario_from_telemetry(const std::string& jsonl_path);

std::string format_double(double value);  // %.17g

}  // namespace snake
