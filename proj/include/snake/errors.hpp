#pragma once

#include <stdexcept>
#include <string>

namespace snake {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct CalibrationError : std::runtime_error {
  explicit CalibrationError(const std::string& what) : std::runtime_error(what) {}
};

struct SimulationDiverged : std::runtime_error {
  explicit SimulationDiverged(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace snake
