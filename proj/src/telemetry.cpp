#include "snake/telemetry.hpp"

#include <stdexcept>

#include "snake/simworld.hpp"

namespace snake {

namespace {

nlohmann::json plane_record(const PlaneController& plane) {
  nlohmann::json j;
  j["amp"] = plane.shape().amp_desired;
  j["vel"] = plane.shape().amp_vel;
  nlohmann::json modes = nlohmann::json::array();
  for (auto m : plane.shape().mode) modes.push_back(to_string(m));
  j["mode"] = std::move(modes);
  nlohmann::json abs = nlohmann::json::array();
  nlohmann::json mean = nlohmann::json::array();
  for (const auto& t : plane.trackers()) {
    abs.push_back(t.absition);
    mean.push_back(t.running_mean);
  }
  j["absition"] = std::move(abs);
  j["mean"] = std::move(mean);
  j["force"] = plane.last_force();
  return j;
}

}  // namespace

TelemetryWriter::TelemetryWriter(const std::string& path) {
  if (path.empty()) return;
  out_.open(path);
  if (!out_) throw std::runtime_error("telemetry: cannot open " + path);
}

void TelemetryWriter::write(const nlohmann::json& record) {
  if (!out_.is_open()) return;
  out_ << record.dump() << '\n';
}

nlohmann::json step_record(double time, const World* world,
                           const SnakeController& controller,
                           std::span<const double> sensed_torques) {
  nlohmann::json j;
  j["t"] = time;
  if (world != nullptr) {
    const Vec2 c = world->geometric_center();
    j["center"] = {c.x, c.y};
    nlohmann::json links = nlohmann::json::array();
    for (int k = 0; k < world->n_links(); ++k) {
      const LinkPose p = world->link_pose(k);
      links.push_back({p.x, p.y, p.yaw});
    }
    j["links"] = std::move(links);
  }
  if (!sensed_torques.empty())
    j["torque"] = std::vector<double>(sensed_torques.begin(), sensed_torques.end());
  j["odd"] = plane_record(controller.odd());
  if (controller.even() != nullptr) j["even"] = plane_record(*controller.even());
  return j;
}

void TelemetryWriter::write_step(double time, const World* world,
                                 const SnakeController& controller,
                                 std::span<const double> sensed_torques) {
  if (!out_.is_open()) return;
  write(step_record(time, world, controller, sensed_torques));
}

void TelemetryWriter::write_mode_event(const ModeEvent& event) {
  if (!out_.is_open()) return;
  nlohmann::json j;
  j["event"] = "mode";
  j["t"] = event.time;
  j["plane"] = to_string(event.plane);
  j["window"] = event.window_index;
  j["from"] = to_string(event.from);
  j["to"] = to_string(event.to);
  write(j);
}

void TelemetryWriter::write_window_death(const WindowDeath& death) {
  if (!out_.is_open()) return;
  nlohmann::json j;
  j["event"] = "window_death";
  j["t"] = death.time;
  j["plane"] = to_string(death.plane);
  j["absition"] = death.absition;
  j["age"] = death.age;
  write(j);
}

std::vector<nlohmann::json> read_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("telemetry: cannot read " + path);
  std::vector<nlohmann::json> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    records.push_back(nlohmann::json::parse(line));
  }
  return records;
}

}  // namespace snake
