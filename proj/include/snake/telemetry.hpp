#pragma once

#include <fstream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "snake/controller.hpp"

namespace snake {

class World;

// JSONL telemetry: one JSON object per line. Step records carry the world
// snapshot and per-window controller state; event records carry mode
// transitions and window discards.
class TelemetryWriter {
 public:
  TelemetryWriter() = default;
  explicit TelemetryWriter(const std::string& path);

  bool open() const { return out_.is_open(); }
  void write(const nlohmann::json& record);

  void write_step(double time, const World* world, const SnakeController& controller,
                  std::span<const double> sensed_torques = {});
  void write_mode_event(const ModeEvent& event);
  void write_window_death(const WindowDeath& death);

 private:
  std::ofstream out_;
};

nlohmann::json step_record(double time, const World* world,
                           const SnakeController& controller,
                           std::span<const double> sensed_torques = {});

std::vector<nlohmann::json> read_jsonl(const std::string& path);

}  // namespace snake
