#include <cstdio>
#include <filesystem>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "snake/calibration.hpp"
#include "snake/config.hpp"
#include "snake/harness.hpp"

namespace fs = std::filesystem;

namespace {

snake::Config load_or_default(const std::string& path) {
  if (path.empty()) return snake::Config{};
  return snake::load_config(path);
}

int cmd_run(const std::string& config_path, const std::string& scenario,
            const std::string& out_dir) {
  const snake::Config cfg = load_or_default(config_path);
  fs::create_directories(out_dir);
  const std::string log_path = (fs::path(out_dir) / (scenario + ".jsonl")).string();
  const snake::ScenarioResult result = snake::run_scenario(scenario, cfg, log_path);

  snake::export_amplitude_csv(result.samples, cfg.windows.count,
                              (fs::path(out_dir) / (scenario + "_amplitude.csv")).string());
  snake::export_absition_csv(result,
                             (fs::path(out_dir) / (scenario + "_absition.csv")).string());
  snake::export_events_csv(result.events,
                           (fs::path(out_dir) / (scenario + "_events.csv")).string());
  std::printf("scenario %s: %zu samples, %zu mode events, log %s\n", scenario.c_str(),
              result.samples.size(), result.events.size(), log_path.c_str());
  return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& out_dir) {
  const snake::Config cfg = load_or_default(config_path);
  fs::create_directories(out_dir);
  const snake::ComparisonReport report = snake::run_comparison(cfg, out_dir);
  snake::export_velocity_bars_csv(report,
                                  (fs::path(out_dir) / "velocity_bars.csv").string());
  for (const auto& row : report.grand_rows)
    std::printf("%-4s  mean %8.4f BL/min  std %8.4f  (n=%d)\n", row.variant.c_str(),
                row.velocity_mean, row.velocity_std, row.n_trials);
  int aborted = 0;
  for (const auto& t : report.trials) aborted += t.aborted ? 1 : 0;
  std::printf("trials: %zu total, %d aborted -> %s\n", report.trials.size(), aborted,
              (fs::path(out_dir) / "trials.csv").c_str());
  return report.any_crashed ? 1 : 0;
}

int cmd_calibrate(const std::string& config_path, const std::string& out_path) {
  const snake::Config cfg = load_or_default(config_path);
  const snake::CalibrationResult result =
      snake::calibrate_friction(cfg, cfg.calibration.n_cycles);
  nlohmann::json j;
  j["offsets"] = result.offsets;
  j["cycle_std"] = result.cycle_std;
  const std::string text = j.dump(2);
  std::printf("%s\n", text.c_str());
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << text << '\n';
  }
  return 0;
}

int cmd_replay(const std::string& log_path, const std::string& out_dir) {
  const snake::ScenarioResult result = snake::scenario_from_telemetry(log_path);
  fs::create_directories(out_dir);
  const std::string stem = fs::path(log_path).stem().string();
  snake::export_amplitude_csv(
      result.samples,
      result.samples.empty() ? 0 : static_cast<int>(result.samples.front().amp_odd.size()),
      (fs::path(out_dir) / (stem + "_amplitude.csv")).string());
  snake::export_absition_csv(result, (fs::path(out_dir) / (stem + "_absition.csv")).string());
  snake::export_events_csv(result.events,
                           (fs::path(out_dir) / (stem + "_events.csv")).string());
  double t0 = 0.0, t1 = 0.0;
  if (!result.samples.empty()) {
    t0 = result.samples.front().t;
    t1 = result.samples.back().t;
  }
  std::printf("replayed %s: %zu samples over [%g, %g] s, %zu mode events\n",
              log_path.c_str(), result.samples.size(), t0, t1, result.events.size());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shape-based reactive snake locomotion testbed"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "out";
  std::string scenario;
  std::string log_path;
  std::string calib_out;

  auto* run = app.add_subcommand("run", "run a scripted scenario");
  run->add_option("--config", config_path, "config JSON (defaults when omitted)");
  run->add_option("--scenario", scenario, "fig2-jam | fig3-manual-dc | eq10-synthetic-3d")
      ->required();
  run->add_option("--out", out_dir, "output directory");

  auto* sweep = app.add_subcommand("sweep", "run the full controller comparison");
  sweep->add_option("--config", config_path, "config JSON (defaults when omitted)");
  sweep->add_option("--out", out_dir, "output directory");

  auto* calibrate = app.add_subcommand("calibrate", "measure flat-ground friction offsets");
  calibrate->add_option("--config", config_path, "config JSON (defaults when omitted)");
  calibrate->add_option("--out", calib_out, "write offsets JSON here");

  auto* replay = app.add_subcommand("replay", "re-export plot data from a telemetry log");
  replay->add_option("--log", log_path, "telemetry JSONL")->required();
  replay->add_option("--out", out_dir, "output directory");

  auto* dump = app.add_subcommand("config", "print the default config JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(config_path, scenario, out_dir);
    if (sweep->parsed()) return cmd_sweep(config_path, out_dir);
    if (calibrate->parsed()) return cmd_calibrate(config_path, calib_out);
    if (replay->parsed()) return cmd_replay(log_path, out_dir);
    if (dump->parsed()) {
      std::printf("%s", snake::config_to_json(snake::Config{}).c_str());
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
