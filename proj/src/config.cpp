#include "snake/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "snake/errors.hpp"

namespace snake {

using nlohmann::json;

namespace {

// Assign known keys from `j` into fields, rejecting anything unrecognized so
// config typos fail loudly.
class Group {
 public:
  Group(const json& j, std::string name) : j_(j), name_(std::move(name)) {
    if (!j_.is_object()) throw ConfigError("config group '" + name_ + "' must be an object");
  }

  template <typename T>
  void field(const char* key, T& value) {
    keys_.push_back(key);
    if (j_.contains(key)) {
      try {
        value = j_.at(key).get<T>();
      } catch (const json::exception& e) {
        throw ConfigError("config key '" + name_ + "." + key + "': " + e.what());
      }
    }
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      bool known = false;
      for (const auto& k : keys_)
        if (k == it.key()) { known = true; break; }
      if (!known)
        throw ConfigError("unknown config key '" + name_ + "." + it.key() + "'");
    }
  }

 private:
  const json& j_;
  std::string name_;
  std::vector<std::string> keys_;
};

void parse_world(const json& j, WorldConfig& w) {
  Group g(j, "world");
  g.field("n_joints", w.n_joints);
  g.field("link_length", w.link_length);
  g.field("link_halfwidth", w.link_halfwidth);
  g.field("node_mass", w.node_mass);
  g.field("joint_kp", w.joint_kp);
  g.field("joint_kd", w.joint_kd);
  g.field("friction_tangent", w.friction_tangent);
  g.field("friction_normal", w.friction_normal);
  g.field("contact_stiffness", w.contact_stiffness);
  g.field("contact_damping", w.contact_damping);
  g.field("peg_mu", w.peg_mu);
  g.field("slip_regularization", w.slip_regularization);
  g.field("dt_phys", w.dt_phys);
  g.field("joint_stop", w.joint_stop);
  g.field("stop_stiffness", w.stop_stiffness);
  g.field("stop_damping", w.stop_damping);
  g.field("abort_energy", w.abort_energy);
  g.finish();
}

json world_to_json(const WorldConfig& w) {
  json j;
  j["n_joints"] = w.n_joints;
  j["link_length"] = w.link_length;
  j["link_halfwidth"] = w.link_halfwidth;
  j["node_mass"] = w.node_mass;
  j["joint_kp"] = w.joint_kp;
  j["joint_kd"] = w.joint_kd;
  j["friction_tangent"] = w.friction_tangent;
  j["friction_normal"] = w.friction_normal;
  j["contact_stiffness"] = w.contact_stiffness;
  j["contact_damping"] = w.contact_damping;
  j["peg_mu"] = w.peg_mu;
  j["slip_regularization"] = w.slip_regularization;
  j["dt_phys"] = w.dt_phys;
  j["joint_stop"] = w.joint_stop;
  j["stop_stiffness"] = w.stop_stiffness;
  j["stop_damping"] = w.stop_damping;
  j["abort_energy"] = w.abort_energy;
  return j;
}

}  // namespace

void Config::validate() const {
  odd_gait().validate();
  even_gait().validate();
  gains().validate();
  world.validate();
  if (!(admittance.dt > 0.0)) throw ConfigError("admittance.dt must be > 0");
  if (windows.count < 1) throw ConfigError("windows.count must be >= 1");
  if (experiment.n_poses < 1 || experiment.trials_per_pose < 1)
    throw ConfigError("experiment.n_poses and trials_per_pose must be >= 1");
  if (!(experiment.trial_duration > 0.0))
    throw ConfigError("experiment.trial_duration must be > 0");
  for (const auto& v : experiment.variants) variant_from_string(v);
  if (!(pegs.min_spacing > 2.0 * pegs.radius))
    throw ConfigError("pegs.min_spacing must exceed the peg diameter");
}

GaitParams Config::odd_gait() const {
  return GaitParams::standard(world.n_joints, gait.amplitude, gait.eta, gait.omega,
                              gait.kappa);
}

GaitParams Config::even_gait() const {
  return GaitParams::standard(world.n_joints, gait.even_amplitude, gait.even_eta,
                              gait.even_omega, gait.even_kappa);
}

AdmittanceGains Config::gains() const {
  return AdmittanceGains{admittance.m_gain, admittance.b_gain, admittance.k_gain};
}

PlaneControllerConfig Config::plane_config(Plane plane, Variant variant) const {
  PlaneControllerConfig pc;
  pc.gait = plane == Plane::Odd ? odd_gait() : even_gait();
  pc.plane = plane;
  pc.n_windows = windows.count;
  pc.window_slope = windows.slope;
  pc.gains = gains();
  pc.dt = admittance.dt;
  pc.amp_max = admittance.amp_max;
  pc.threshold_scale = reactive.threshold_scale;
  pc.exit_epsilon_scale = reactive.exit_epsilon_scale;
  pc.mean_window_periods = reactive.mean_window_periods;
  pc.variant = variant;
  pc.windows_travel = windows.travel;
  return pc;
}

Config config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config parse failure: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be an object");

  Config cfg;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key == "gait") {
      Group g(it.value(), "gait");
      g.field("kappa", cfg.gait.kappa);
      g.field("amplitude", cfg.gait.amplitude);
      g.field("eta", cfg.gait.eta);
      g.field("omega", cfg.gait.omega);
      g.field("even_kappa", cfg.gait.even_kappa);
      g.field("even_amplitude", cfg.gait.even_amplitude);
      g.field("even_eta", cfg.gait.even_eta);
      g.field("even_omega", cfg.gait.even_omega);
      g.finish();
    } else if (key == "windows") {
      Group g(it.value(), "windows");
      g.field("count", cfg.windows.count);
      g.field("slope", cfg.windows.slope);
      g.field("travel", cfg.windows.travel);
      g.finish();
    } else if (key == "admittance") {
      Group g(it.value(), "admittance");
      g.field("m_gain", cfg.admittance.m_gain);
      g.field("b_gain", cfg.admittance.b_gain);
      g.field("k_gain", cfg.admittance.k_gain);
      g.field("dt", cfg.admittance.dt);
      g.field("amp_max", cfg.admittance.amp_max);
      g.finish();
    } else if (key == "reactive") {
      Group g(it.value(), "reactive");
      g.field("threshold_scale", cfg.reactive.threshold_scale);
      g.field("exit_epsilon_scale", cfg.reactive.exit_epsilon_scale);
      g.field("mean_window_periods", cfg.reactive.mean_window_periods);
      g.finish();
    } else if (key == "world") {
      parse_world(it.value(), cfg.world);
    } else if (key == "pegs") {
      Group g(it.value(), "pegs");
      g.field("density", cfg.pegs.density);
      g.field("min_spacing", cfg.pegs.min_spacing);
      g.field("radius", cfg.pegs.radius);
      g.field("extent_x", cfg.pegs.extent_x);
      g.field("extent_y", cfg.pegs.extent_y);
      g.finish();
    } else if (key == "experiment") {
      Group g(it.value(), "experiment");
      g.field("variants", cfg.experiment.variants);
      g.field("n_poses", cfg.experiment.n_poses);
      g.field("trials_per_pose", cfg.experiment.trials_per_pose);
      g.field("trial_duration", cfg.experiment.trial_duration);
      g.field("master_seed", cfg.experiment.master_seed);
      g.field("pose_interior_x", cfg.experiment.pose_interior_x);
      g.field("pose_interior_y", cfg.experiment.pose_interior_y);
      g.field("telemetry_stride", cfg.experiment.telemetry_stride);
      g.field("workers", cfg.experiment.workers);
      g.finish();
    } else if (key == "calibration") {
      Group g(it.value(), "calibration");
      g.field("enabled", cfg.calibration.enabled);
      g.field("n_cycles", cfg.calibration.n_cycles);
      g.field("transient_periods", cfg.calibration.transient_periods);
      g.finish();
    } else {
      throw ConfigError("unknown config section '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return config_from_json(buf.str());
}

std::string config_to_json(const Config& cfg) {
  json j;
  j["gait"] = {{"kappa", cfg.gait.kappa},
               {"amplitude", cfg.gait.amplitude},
               {"eta", cfg.gait.eta},
               {"omega", cfg.gait.omega},
               {"even_kappa", cfg.gait.even_kappa},
               {"even_amplitude", cfg.gait.even_amplitude},
               {"even_eta", cfg.gait.even_eta},
               {"even_omega", cfg.gait.even_omega}};
  j["windows"] = {{"count", cfg.windows.count},
                  {"slope", cfg.windows.slope},
                  {"travel", cfg.windows.travel}};
  j["admittance"] = {{"m_gain", cfg.admittance.m_gain},
                     {"b_gain", cfg.admittance.b_gain},
                     {"k_gain", cfg.admittance.k_gain},
                     {"dt", cfg.admittance.dt},
                     {"amp_max", cfg.admittance.amp_max}};
  j["reactive"] = {{"threshold_scale", cfg.reactive.threshold_scale},
                   {"exit_epsilon_scale", cfg.reactive.exit_epsilon_scale},
                   {"mean_window_periods", cfg.reactive.mean_window_periods}};
  j["world"] = world_to_json(cfg.world);
  j["pegs"] = {{"density", cfg.pegs.density},
               {"min_spacing", cfg.pegs.min_spacing},
               {"radius", cfg.pegs.radius},
               {"extent_x", cfg.pegs.extent_x},
               {"extent_y", cfg.pegs.extent_y}};
  j["experiment"] = {{"variants", cfg.experiment.variants},
                     {"n_poses", cfg.experiment.n_poses},
                     {"trials_per_pose", cfg.experiment.trials_per_pose},
                     {"trial_duration", cfg.experiment.trial_duration},
                     {"master_seed", cfg.experiment.master_seed},
                     {"pose_interior_x", cfg.experiment.pose_interior_x},
                     {"pose_interior_y", cfg.experiment.pose_interior_y},
                     {"telemetry_stride", cfg.experiment.telemetry_stride},
                     {"workers", cfg.experiment.workers}};
  j["calibration"] = {{"enabled", cfg.calibration.enabled},
                      {"n_cycles", cfg.calibration.n_cycles},
                      {"transient_periods", cfg.calibration.transient_periods}};
  return j.dump(2) + "\n";
}

void save_config(const Config& cfg, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write config file " + path);
  out << config_to_json(cfg);
}

}  // namespace snake
