#include "snake/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <thread>

#include "snake/errors.hpp"
#include "snake/rng.hpp"
#include "snake/telemetry.hpp"

namespace snake {

namespace fs = std::filesystem;

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

namespace {

constexpr std::uint64_t kStreamWorld = 0x776f726c64ULL;  // "world"
constexpr std::uint64_t kStreamPose = 0x706f7365ULL;     // "pose"
constexpr std::uint64_t kStreamTrial = 0x747269616cULL;  // "trial"

struct ChainShape {
  std::vector<Vec2> nodes;  // n_joints + 2 points, head first
};

// Node polyline of the chain at a pose with given joint angles; psi0 is the
// first link's orientation (the body extends opposite the travel heading).
ChainShape chain_nodes(const Config& cfg, const Pose2& world_pose,
                       const std::vector<double>& joint_angles) {
  const int links = cfg.world.n_links();
  ChainShape shape;
  shape.nodes.resize(static_cast<std::size_t>(links + 1));
  double psi = world_pose.yaw;
  Vec2 p{0.0, 0.0};
  shape.nodes[0] = p;
  Vec2 center{0.0, 0.0};
  for (int k = 0; k < links; ++k) {
    if (k > 0) psi += joint_angles[static_cast<std::size_t>(k - 1)];
    const Vec2 d{std::cos(psi), std::sin(psi)};
    const Vec2 next{p.x + cfg.world.link_length * d.x, p.y + cfg.world.link_length * d.y};
    center.x += 0.5 * (p.x + next.x);
    center.y += 0.5 * (p.y + next.y);
    p = next;
    shape.nodes[static_cast<std::size_t>(k + 1)] = p;
  }
  center.x /= links;
  center.y /= links;
  const double dx = world_pose.x - center.x;
  const double dy = world_pose.y - center.y;
  for (auto& n : shape.nodes) {
    n.x += dx;
    n.y += dy;
  }
  return shape;
}

bool spawn_clear(const Config& cfg, const PegArray& pegs, const ChainShape& shape,
                 double margin) {
  if (pegs.pegs.empty()) return true;
  const double reach = pegs.radius + cfg.world.link_halfwidth + margin;
  std::vector<int> candidates;
  for (std::size_t k = 0; k + 1 < shape.nodes.size(); ++k) {
    const Vec2 a = shape.nodes[k];
    const Vec2 b = shape.nodes[k + 1];
    pegs.query_segment(a.x, a.y, b.x, b.y, reach, candidates);
    const double lx = b.x - a.x, ly = b.y - a.y;
    const double len2 = lx * lx + ly * ly;
    for (int pi : candidates) {
      const auto& peg = pegs.pegs[static_cast<std::size_t>(pi)];
      double u = len2 > 0.0 ? ((peg.x - a.x) * lx + (peg.y - a.y) * ly) / len2 : 0.0;
      u = std::clamp(u, 0.0, 1.0);
      const double cx = a.x + u * lx - peg.x;
      const double cy = a.y + u * ly - peg.y;
      if (cx * cx + cy * cy < reach * reach) return false;
    }
  }
  return true;
}

// Torques measured at the plane's joints mapped into the global joint vector.
std::vector<double> planar_injection(const Config& cfg, double t, double scale,
                                     Plane plane) {
  const GaitParams gait = plane == Plane::Odd ? cfg.odd_gait() : cfg.even_gait();
  std::vector<double> torques(static_cast<std::size_t>(cfg.world.n_joints), 0.0);
  for (int i : plane_joint_indices(cfg.world.n_joints, plane))
    torques[static_cast<std::size_t>(i)] =
        scale * std::sin(gait.eta * gait.backbone_position(i) - gait.omega * t);
  return torques;
}

ScenarioSample make_sample(double t, const SnakeController& ctrl) {
  ScenarioSample s;
  s.t = t;
  s.amp_odd = ctrl.odd().shape().amp_desired;
  s.mode_odd = ctrl.odd().shape().mode;
  for (const auto& tr : ctrl.odd().trackers()) s.absition_odd.push_back(tr.absition);
  if (ctrl.even() != nullptr) {
    s.amp_even = ctrl.even()->shape().amp_desired;
    s.mode_even = ctrl.even()->shape().mode;
    for (const auto& tr : ctrl.even()->trackers()) s.absition_even.push_back(tr.absition);
  }
  return s;
}

void write_meta(TelemetryWriter& tel, const std::string& name, const Config& cfg,
                double nominal_odd, double nominal_even, double threshold_odd) {
  nlohmann::json meta;
  meta["meta"] = {{"scenario", name},
                  {"nominal_odd", nominal_odd},
                  {"nominal_even", nominal_even},
                  {"threshold_odd", threshold_odd},
                  {"dt", cfg.admittance.dt}};
  tel.write(meta);
}

ScenarioResult scenario_fig3(const Config& base, const std::string& telemetry_path);
ScenarioResult scenario_fig2(const Config& base, const std::string& telemetry_path);
ScenarioResult scenario_eq10(const Config& base, const std::string& telemetry_path);

}  // namespace

Pose2 sample_pose(const Config& cfg, const PegArray& pegs, int pose_index) {
  auto rng = make_rng(derive_seed(cfg.experiment.master_seed, kStreamPose,
                                  static_cast<std::uint64_t>(pose_index)));
  std::uniform_real_distribution<double> ux(-cfg.experiment.pose_interior_x / 2.0,
                                            cfg.experiment.pose_interior_x / 2.0);
  std::uniform_real_distribution<double> uy(-cfg.experiment.pose_interior_y / 2.0,
                                            cfg.experiment.pose_interior_y / 2.0);
  std::uniform_real_distribution<double> uyaw(0.0, 2.0 * std::numbers::pi);

  const std::vector<double> init = nominal_planar_commands(cfg, 0.0);
  for (int attempt = 0; attempt < 20000; ++attempt) {
    Pose2 heading_pose{ux(rng), uy(rng), uyaw(rng)};
    const Pose2 world_pose{heading_pose.x, heading_pose.y,
                           heading_pose.yaw + std::numbers::pi};
    if (spawn_clear(cfg, pegs, chain_nodes(cfg, world_pose, init), 0.01))
      return heading_pose;
  }
  throw ConfigError("sample_pose: no clear spawn found for pose " +
                    std::to_string(pose_index));
}

TrialRecord run_trial(const Config& cfg, Variant variant, int pose_index,
                      int trial_index, const PegArray& pegs,
                      const std::vector<double>& friction_offsets,
                      const std::string& telemetry_path) {
  const double dt = cfg.admittance.dt;
  const double duration = cfg.experiment.trial_duration;
  const GaitParams gait = cfg.odd_gait();

  TrialRecord rec;
  rec.variant = to_string(variant);
  rec.pose_index = pose_index;
  rec.trial_index = trial_index;
  rec.duration_s = duration;
  rec.seed = derive_seed(cfg.experiment.master_seed, kStreamTrial,
                         static_cast<std::uint64_t>(pose_index),
                         static_cast<std::uint64_t>(trial_index));

  // Trials from the same pose differ by a small seeded placement jitter and
  // a random gait phase, standing in for physical repeatability noise.
  const Pose2 base = sample_pose(cfg, pegs, pose_index);
  auto rng = make_rng(rec.seed);
  std::uniform_real_distribution<double> upos(-0.02, 0.02);
  std::uniform_real_distribution<double> uyaw(-0.05, 0.05);
  std::uniform_real_distribution<double> uphase(0.0, gait.period());

  Pose2 heading_pose = base;
  double t0 = 0.0;
  for (int attempt = 0; attempt < 100; ++attempt) {
    Pose2 candidate{base.x + upos(rng), base.y + upos(rng), base.yaw + uyaw(rng)};
    const double phase = uphase(rng);
    const Pose2 world_pose{candidate.x, candidate.y, candidate.yaw + std::numbers::pi};
    if (spawn_clear(cfg, pegs, chain_nodes(cfg, world_pose, nominal_planar_commands(cfg, phase)),
                    0.005)) {
      heading_pose = candidate;
      t0 = phase;
      break;
    }
  }
  rec.init_x = heading_pose.x;
  rec.init_y = heading_pose.y;
  rec.init_heading = heading_pose.yaw;
  rec.phase_offset = t0;

  const Pose2 world_pose{heading_pose.x, heading_pose.y,
                         heading_pose.yaw + std::numbers::pi};
  World world(cfg.world, pegs, world_pose, nominal_planar_commands(cfg, t0));
  SnakeController ctrl(ControlTopology::Planar, cfg.plane_config(Plane::Odd, variant));
  if (!friction_offsets.empty()) ctrl.odd().set_friction_offsets(friction_offsets);

  TelemetryWriter tel(telemetry_path);
  const Vec2 start = world.geometric_center();
  const Vec2 axis{std::cos(heading_pose.yaw), std::sin(heading_pose.yaw)};
  const int n_steps = static_cast<int>(std::llround(duration / dt));
  const int stride = cfg.experiment.telemetry_stride;

  std::vector<double> zeros(static_cast<std::size_t>(cfg.world.n_joints), 0.0);
  double t = t0;
  ctrl.step(t, zeros);
  try {
    for (int s = 0; s < n_steps; ++s) {
      const JointReadings readings = world.step(ctrl.commands(), dt);
      t += dt;
      ctrl.step(t, readings.external_torque);
      if (stride > 0 && s % stride == 0)
        tel.write_step(t, &world, ctrl, readings.external_torque);
    }
  } catch (const SimulationDiverged& e) {
    rec.aborted = true;
    rec.abort_time = world.time();
    rec.abort_reason = e.what();
  }

  const Vec2 end = world.geometric_center();
  const double bl = cfg.world.body_length();
  const double dx = end.x - start.x, dy = end.y - start.y;
  rec.displacement_projected_bl = (dx * axis.x + dy * axis.y) / bl;
  rec.displacement_total_bl = std::sqrt(dx * dx + dy * dy) / bl;
  rec.velocity_bl_min = rec.displacement_projected_bl / (duration / 60.0);
  rec.n_mode_events = static_cast<int>(ctrl.all_events().size());
  for (const auto& e : ctrl.all_events()) tel.write_mode_event(e);
  for (const auto& d : ctrl.all_deaths()) tel.write_window_death(d);
  return rec;
}

ComparisonReport run_comparison(const Config& cfg, const std::string& out_dir) {
  cfg.validate();
  const PegArray pegs =
      spawn_peg_array(derive_seed(cfg.experiment.master_seed, kStreamWorld),
                      cfg.pegs.density, cfg.pegs.min_spacing, cfg.pegs.extent_x,
                      cfg.pegs.extent_y, cfg.pegs.radius);

  std::vector<double> offsets(static_cast<std::size_t>(cfg.windows.count), 0.0);
  if (cfg.calibration.enabled)
    offsets = calibrate_friction(cfg, cfg.calibration.n_cycles).offsets;

  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    if (cfg.experiment.telemetry_stride > 0)
      fs::create_directories(fs::path(out_dir) / "telemetry");
  }

  struct Task {
    Variant variant;
    int pose, trial;
    std::string telemetry;
  };
  std::vector<Task> tasks;
  for (const auto& vname : cfg.experiment.variants) {
    const Variant variant = variant_from_string(vname);
    for (int p = 0; p < cfg.experiment.n_poses; ++p)
      for (int tr = 0; tr < cfg.experiment.trials_per_pose; ++tr) {
        std::string tel;
        if (!out_dir.empty() && cfg.experiment.telemetry_stride > 0)
          tel = (fs::path(out_dir) / "telemetry" /
                 (vname + "_p" + std::to_string(p) + "_t" + std::to_string(tr) + ".jsonl"))
                    .string();
        tasks.push_back({variant, p, tr, tel});
      }
  }

  ComparisonReport report;
  report.trials.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> crashed{false};

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned n_workers =
      cfg.experiment.workers > 0 ? static_cast<unsigned>(cfg.experiment.workers) : hw;

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& task = tasks[i];
      try {
        report.trials[i] = run_trial(cfg, task.variant, task.pose, task.trial, pegs,
                                     offsets, task.telemetry);
      } catch (const std::exception& e) {
        TrialRecord rec;
        rec.variant = to_string(task.variant);
        rec.pose_index = task.pose;
        rec.trial_index = task.trial;
        rec.duration_s = cfg.experiment.trial_duration;
        rec.aborted = true;
        rec.abort_reason = std::string("crash: ") + e.what();
        report.trials[i] = rec;
        crashed = true;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned wi = 1; wi < n_workers; ++wi) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  report.any_crashed = crashed;

  // Per-pose means (the black bars) and per-variant grand mean/std (the red
  // bars with error bars).
  for (const auto& vname : cfg.experiment.variants) {
    std::vector<double> all;
    for (int p = 0; p < cfg.experiment.n_poses; ++p) {
      std::vector<double> vs;
      for (const auto& rec : report.trials)
        if (rec.variant == vname && rec.pose_index == p) vs.push_back(rec.velocity_bl_min);
      double mean = 0.0;
      for (double v : vs) mean += v;
      if (!vs.empty()) mean /= static_cast<double>(vs.size());
      double var = 0.0;
      for (double v : vs) var += (v - mean) * (v - mean);
      const double sd = vs.size() > 1 ? std::sqrt(var / (vs.size() - 1)) : 0.0;
      report.pose_rows.push_back({vname, p, mean, sd, static_cast<int>(vs.size())});
      all.insert(all.end(), vs.begin(), vs.end());
    }
    double mean = 0.0;
    for (double v : all) mean += v;
    if (!all.empty()) mean /= static_cast<double>(all.size());
    double var = 0.0;
    for (double v : all) var += (v - mean) * (v - mean);
    const double sd = all.size() > 1 ? std::sqrt(var / (all.size() - 1)) : 0.0;
    report.grand_rows.push_back({vname, -1, mean, sd, static_cast<int>(all.size())});
  }

  if (!out_dir.empty()) {
    write_trials_csv(report.trials, (fs::path(out_dir) / "trials.csv").string());
    write_report_csv(report, (fs::path(out_dir) / "report.csv").string());
  }
  return report;
}

// ---------------------------------------------------------------------------
// Scripted scenarios

namespace {

ScenarioResult scenario_fig3(const Config& base, const std::string& telemetry_path) {
  Config cfg = base;
  cfg.gait.amplitude = 1.0;   // centralized demo uses a unit nominal amplitude
  cfg.windows.count = 1;      // one window spanning the whole body
  cfg.windows.travel = false;

  SnakeController ctrl(ControlTopology::Planar,
                       cfg.plane_config(Plane::Odd, Variant::Manual));
  TelemetryWriter tel(telemetry_path);
  write_meta(tel, "fig3-manual-dc", cfg, 1.0, 0.0, ctrl.odd().threshold_upper());

  struct Switch {
    double t;
    ComplianceMode mode;
  };
  const Switch schedule[] = {{5.0, ComplianceMode::PDC},
                             {14.0, ComplianceMode::NC},
                             {19.0, ComplianceMode::NDC},
                             {32.0, ComplianceMode::NC}};
  std::size_t next_switch = 0;

  auto push = [](double t) {
    if (t >= 6.0 && t < 7.0) return 0.67;    // raises the amplitude toward 1.4
    if (t >= 21.0 && t < 23.0) return -1.0;  // lowers it toward 0.1
    return 0.0;
  };

  ScenarioResult result;
  result.name = "fig3-manual-dc";
  result.nominal_odd = 1.0;
  result.threshold_odd = ctrl.odd().threshold_upper();

  const double dt = cfg.admittance.dt;
  const int n_steps = static_cast<int>(std::llround(40.0 / dt));
  for (int s = 0; s <= n_steps; ++s) {
    const double t = s * dt;
    while (next_switch < std::size(schedule) && t >= schedule[next_switch].t) {
      ctrl.odd().force_mode(0, schedule[next_switch].mode, t);
      ++next_switch;
    }
    ctrl.step(t, planar_injection(cfg, t, push(t), Plane::Odd));
    result.samples.push_back(make_sample(t, ctrl));
    tel.write_step(t, nullptr, ctrl);
  }
  result.events = ctrl.all_events();
  result.deaths = ctrl.all_deaths();
  for (const auto& e : result.events) tel.write_mode_event(e);
  return result;
}

ScenarioResult scenario_fig2(const Config& base, const std::string& telemetry_path) {
  Config cfg = base;
  // Slower gait so windows dwell long enough on the obstruction for the
  // absition to build before the window cycles off the tail.
  cfg.gait.omega = 2.0 * std::numbers::pi / 6.0;

  const std::vector<double> offsets =
      cfg.calibration.enabled
          ? calibrate_friction(cfg, cfg.calibration.n_cycles).offsets
          : std::vector<double>(static_cast<std::size_t>(cfg.windows.count), 0.0);

  // Pegs pinched around the mid and tail body sections, leaving the head
  // third free: pairs flanking the backbone so the wave cannot develop there
  // and the squeezed Coulomb friction anchors the body.
  const Pose2 heading_pose{0.0, 0.0, 0.0};
  const Pose2 world_pose{0.0, 0.0, std::numbers::pi};
  const std::vector<double> init = nominal_planar_commands(cfg, 0.0);
  const ChainShape shape = chain_nodes(cfg, world_pose, init);

  PegArray pegs;
  pegs.radius = cfg.pegs.radius;
  pegs.extent_x = 10.0;
  pegs.extent_y = 10.0;
  const double reach = cfg.pegs.radius + cfg.world.link_halfwidth;
  const double gap = 5e-4;
  auto pinch = [&](double frac, bool both_sides, double side) {
    const double fk = frac * (static_cast<double>(shape.nodes.size()) - 1.0);
    const std::size_t k =
        std::min(shape.nodes.size() - 2, static_cast<std::size_t>(fk));
    const Vec2 a = shape.nodes[k];
    const Vec2 b = shape.nodes[k + 1];
    const double u = fk - static_cast<double>(k);
    const Vec2 p{a.x + u * (b.x - a.x), a.y + u * (b.y - a.y)};
    double tx = b.x - a.x, ty = b.y - a.y;
    const double norm = std::hypot(tx, ty);
    tx /= norm;
    ty /= norm;
    const Vec2 n{-ty, tx};
    const double d = reach + gap;
    if (both_sides || side > 0.0) pegs.pegs.push_back({p.x + d * n.x, p.y + d * n.y});
    if (both_sides || side < 0.0) pegs.pegs.push_back({p.x - d * n.x, p.y - d * n.y});
  };
  pinch(0.50, true, 0.0);
  pinch(0.78, true, 0.0);
  pegs.build_grid(0.25);

  World world(cfg.world, pegs, world_pose, init);
  SnakeController ctrl(ControlTopology::Planar, cfg.plane_config(Plane::Odd, Variant::NC));
  ctrl.odd().set_friction_offsets(offsets);

  TelemetryWriter tel(telemetry_path);
  write_meta(tel, "fig2-jam", cfg, cfg.gait.amplitude, 0.0,
             ctrl.odd().threshold_upper());

  ScenarioResult result;
  result.name = "fig2-jam";
  result.nominal_odd = cfg.gait.amplitude;
  result.threshold_odd = ctrl.odd().threshold_upper();

  const double dt = cfg.admittance.dt;
  const int n_steps = static_cast<int>(std::llround(20.0 / dt));
  std::vector<double> zeros(static_cast<std::size_t>(cfg.world.n_joints), 0.0);
  double t = 0.0;
  ctrl.step(t, zeros);
  result.samples.push_back(make_sample(t, ctrl));
  for (int s = 0; s < n_steps; ++s) {
    const JointReadings readings = world.step(ctrl.commands(), dt);
    t += dt;
    ctrl.step(t, readings.external_torque);
    result.samples.push_back(make_sample(t, ctrl));
    tel.write_step(t, &world, ctrl, readings.external_torque);
  }
  result.events = ctrl.all_events();
  result.deaths = ctrl.all_deaths();
  for (const auto& e : result.events) tel.write_mode_event(e);
  for (const auto& d : result.deaths) tel.write_window_death(d);
  (void)heading_pose;
  return result;
}

ScenarioResult scenario_eq10(const Config& base, const std::string& telemetry_path) {
  Config cfg = base;

  TelemetryWriter tel(telemetry_path);

  ScenarioResult result;
  result.name = "eq10-synthetic-3d";
  result.nominal_odd = cfg.gait.amplitude;
  result.nominal_even = cfg.gait.even_amplitude;

  const double dt = cfg.admittance.dt;
  const double half = 20.0;
  const int n_steps = static_cast<int>(std::llround(half / dt));

  // Two fresh runs: torques injected on one plane at a time; the second run's
  // samples are shifted by `half` so one log carries both.
  for (int phase = 0; phase < 2; ++phase) {
    const Plane injected = phase == 0 ? Plane::Even : Plane::Odd;
    SnakeController ctrl(ControlTopology::DualPlane,
                         cfg.plane_config(Plane::Odd, Variant::DynamicalSystem),
                         cfg.plane_config(Plane::Even, Variant::DynamicalSystem));
    if (phase == 0)
      write_meta(tel, "eq10-synthetic-3d", cfg, result.nominal_odd, result.nominal_even,
                 ctrl.odd().threshold_upper());
    result.threshold_odd = ctrl.odd().threshold_upper();
    for (int s = 0; s <= n_steps; ++s) {
      const double t = s * dt;
      std::vector<double> torques(static_cast<std::size_t>(cfg.world.n_joints), 0.0);
      if (t >= 2.0 && t < 14.0) torques = planar_injection(cfg, t, 0.5, injected);
      ctrl.step(t, torques);
      ScenarioSample sample = make_sample(t + phase * half, ctrl);
      result.samples.push_back(sample);
      tel.write_step(t + phase * half, nullptr, ctrl);
    }
    for (auto e : ctrl.all_events()) {
      e.time += phase * half;
      result.events.push_back(e);
      tel.write_mode_event(e);
    }
  }
  return result;
}

}  // namespace

std::vector<std::string> scenario_names() {
  return {"fig2-jam", "fig3-manual-dc", "eq10-synthetic-3d"};
}

ScenarioResult run_scenario(const std::string& name, const Config& cfg,
                            const std::string& telemetry_path) {
  if (name == "fig2-jam") return scenario_fig2(cfg, telemetry_path);
  if (name == "fig3-manual-dc") return scenario_fig3(cfg, telemetry_path);
  if (name == "eq10-synthetic-3d") return scenario_eq10(cfg, telemetry_path);
  throw std::invalid_argument("unknown scenario '" + name + "'");
}

// ---------------------------------------------------------------------------
// CSV artifacts

std::string trials_csv_text(const std::vector<TrialRecord>& trials) {
  std::string out =
      "variant,pose_index,trial_index,seed,init_x,init_y,init_heading,phase_offset,"
      "displacement_projected_bl,displacement_total_bl,velocity_bl_min,duration_s,"
      "n_mode_events,aborted,abort_time,abort_reason\n";
  for (const auto& r : trials) {
    out += r.variant + ',' + std::to_string(r.pose_index) + ',' +
           std::to_string(r.trial_index) + ',' + std::to_string(r.seed) + ',' +
           format_double(r.init_x) + ',' + format_double(r.init_y) + ',' +
           format_double(r.init_heading) + ',' + format_double(r.phase_offset) + ',' +
           format_double(r.displacement_projected_bl) + ',' +
           format_double(r.displacement_total_bl) + ',' +
           format_double(r.velocity_bl_min) + ',' + format_double(r.duration_s) + ',' +
           std::to_string(r.n_mode_events) + ',' + (r.aborted ? "1" : "0") + ',' +
           format_double(r.abort_time) + ',' + r.abort_reason + '\n';
  }
  return out;
}

void write_trials_csv(const std::vector<TrialRecord>& trials, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << trials_csv_text(trials);
}

void write_report_csv(const ComparisonReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "variant,kind,pose_index,velocity_mean,velocity_std,n_trials\n";
  for (const auto& row : report.pose_rows)
    out << row.variant << ",pose," << row.pose_index << ',' << format_double(row.velocity_mean)
        << ',' << format_double(row.velocity_std) << ',' << row.n_trials << '\n';
  for (const auto& row : report.grand_rows)
    out << row.variant << ",grand,," << format_double(row.velocity_mean) << ','
        << format_double(row.velocity_std) << ',' << row.n_trials << '\n';
}

void export_amplitude_csv(const std::vector<ScenarioSample>& samples, int n_windows_odd,
                          const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "t,plane,window,amplitude\n";
  for (const auto& s : samples) {
    for (int j = 0; j < n_windows_odd && j < static_cast<int>(s.amp_odd.size()); ++j)
      out << format_double(s.t) << ",odd," << j << ','
          << format_double(s.amp_odd[static_cast<std::size_t>(j)]) << '\n';
    for (std::size_t j = 0; j < s.amp_even.size(); ++j)
      out << format_double(s.t) << ",even," << j << ','
          << format_double(s.amp_even[j]) << '\n';
  }
}

void export_absition_csv(const ScenarioResult& result, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "t,plane,window,absition,thresh_lower,thresh_upper,mode\n";
  for (const auto& s : result.samples) {
    for (std::size_t j = 0; j < s.absition_odd.size(); ++j)
      out << format_double(s.t) << ",odd," << j << ','
          << format_double(s.absition_odd[j]) << ','
          << format_double(-result.threshold_odd) << ','
          << format_double(result.threshold_odd) << ',' << to_string(s.mode_odd[j])
          << '\n';
    for (std::size_t j = 0; j < s.absition_even.size(); ++j)
      out << format_double(s.t) << ",even," << j << ','
          << format_double(s.absition_even[j]) << ',' << format_double(-result.threshold_odd)
          << ',' << format_double(result.threshold_odd) << ',' << to_string(s.mode_even[j])
          << '\n';
  }
}

void export_events_csv(const std::vector<ModeEvent>& events, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "t,plane,window,from,to\n";
  for (const auto& e : events)
    out << format_double(e.time) << ',' << to_string(e.plane) << ',' << e.window_index
        << ',' << to_string(e.from) << ',' << to_string(e.to) << '\n';
}

void export_velocity_bars_csv(const ComparisonReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "variant,kind,pose_index,velocity_mean,velocity_std\n";
  for (const auto& row : report.pose_rows)
    out << row.variant << ",pose," << row.pose_index << ','
        << format_double(row.velocity_mean) << ',' << format_double(row.velocity_std)
        << '\n';
  for (const auto& row : report.grand_rows)
    out << row.variant << ",grand,," << format_double(row.velocity_mean) << ','
        << format_double(row.velocity_std) << '\n';
}

ScenarioResult scenario_from_telemetry(const std::string& jsonl_path) {
  ScenarioResult result;
  for (const auto& j : read_jsonl(jsonl_path)) {
    if (j.contains("meta")) {
      const auto& m = j.at("meta");
      result.name = m.value("scenario", std::string{});
      result.nominal_odd = m.value("nominal_odd", 0.0);
      result.nominal_even = m.value("nominal_even", 0.0);
      result.threshold_odd = m.value("threshold_odd", 0.0);
      continue;
    }
    if (j.contains("event")) {
      if (j.at("event") == "mode") {
        ModeEvent e;
        e.time = j.at("t").get<double>();
        e.plane = j.at("plane") == "even" ? Plane::Even : Plane::Odd;
        e.window_index = j.at("window").get<int>();
        result.events.push_back(e);
      } else if (j.at("event") == "window_death") {
        WindowDeath d;
        d.time = j.at("t").get<double>();
        d.plane = j.at("plane") == "even" ? Plane::Even : Plane::Odd;
        d.absition = j.at("absition").get<double>();
        d.age = j.at("age").get<double>();
        result.deaths.push_back(d);
      }
      continue;
    }
    ScenarioSample s;
    s.t = j.at("t").get<double>();
    if (j.contains("odd")) {
      const auto& o = j.at("odd");
      s.amp_odd = o.at("amp").get<std::vector<double>>();
      s.absition_odd = o.at("absition").get<std::vector<double>>();
      for (const auto& m : o.at("mode"))
        s.mode_odd.push_back(m == "PDC" ? ComplianceMode::PDC
                             : m == "NDC" ? ComplianceMode::NDC
                                          : ComplianceMode::NC);
    }
    if (j.contains("even")) {
      const auto& o = j.at("even");
      s.amp_even = o.at("amp").get<std::vector<double>>();
      s.absition_even = o.at("absition").get<std::vector<double>>();
      for (const auto& m : o.at("mode"))
        s.mode_even.push_back(m == "PDC" ? ComplianceMode::PDC
                              : m == "NDC" ? ComplianceMode::NDC
                                           : ComplianceMode::NC);
    }
    result.samples.push_back(std::move(s));
  }
  return result;
}

}  // namespace snake
