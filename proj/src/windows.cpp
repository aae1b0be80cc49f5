#include "snake/windows.hpp"

#include <cmath>
#include <stdexcept>

#include "snake/admittance.hpp"
#include "snake/reactive.hpp"

namespace snake {

namespace {

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace

WindowLayout WindowLayout::tiled(int n_windows, double slope) {
  if (n_windows < 1) throw std::invalid_argument("window layout: need >= 1 window");
  WindowLayout layout;
  layout.slope = slope;
  layout.windows.resize(static_cast<std::size_t>(n_windows));
  const double width = 1.0 / n_windows;
  for (int j = 0; j < n_windows; ++j) {
    layout.windows[static_cast<std::size_t>(j)] = {j * width, (j + 1) * width};
  }
  layout.phase_offset = 0.0;
  layout.validate();
  return layout;
}

void WindowLayout::validate() const {
  if (windows.empty()) throw std::invalid_argument("window layout: no windows");
  if (!(slope > 0.0)) throw std::invalid_argument("window layout: slope must be > 0");
  const double gap_tol = transition_width();
  for (std::size_t j = 0; j < windows.size(); ++j) {
    if (!(windows[j].s_left < windows[j].s_right))
      throw std::invalid_argument("window layout: window has non-positive width");
    if (j > 0) {
      const double gap = windows[j].s_left - windows[j - 1].s_right;
      if (gap > gap_tol)
        throw std::invalid_argument("window layout: gap between windows exceeds the "
                                    "sigmoid transition width");
      if (gap < -gap_tol)
        throw std::invalid_argument("window layout: windows overlap");
    }
  }
}

double WindowLayout::transition_width() const { return 2.0 * std::log(9.0) / slope; }

double window_weight(double s, int window_index, const WindowLayout& layout) {
  const auto& w = layout.windows.at(static_cast<std::size_t>(window_index));
  return logistic(layout.slope * (s - w.s_left)) *
         logistic(layout.slope * (w.s_right - s));
}

double blend(double s, std::span<const double> amplitudes, const WindowLayout& layout) {
  if (amplitudes.size() != layout.windows.size())
    throw std::invalid_argument("blend: amplitude count != window count");
  double sum = 0.0;
  for (std::size_t j = 0; j < amplitudes.size(); ++j)
    sum += amplitudes[j] * window_weight(s, static_cast<int>(j), layout);
  return sum;
}

double blend(double s, const WindowedAmplitudes& amplitudes, const WindowLayout& layout) {
  return blend(s, std::span<const double>(amplitudes.per_window), layout);
}

WindowLayout advance_windows(const WindowLayout& layout, double dt,
                             const GaitParams& gait) {
  if (dt < 0.0) throw std::invalid_argument("advance_windows: dt must be >= 0");
  WindowLayout out = layout;
  const double shift = gait.wave_speed() * dt;
  for (auto& w : out.windows) {
    w.s_left += shift;
    w.s_right += shift;
  }
  out.phase_offset += shift;
  return out;
}

int cycle_windows(WindowLayout& layout, ShapeState& state,
                  std::vector<AbsitionTracker>& trackers, double nominal_amplitude) {
  const std::size_t n = layout.windows.size();
  if (state.amp_desired.size() != n || trackers.size() != n)
    throw std::invalid_argument("cycle_windows: state/tracker count != window count");

  int cycled = 0;
  while (layout.windows.front().s_left >= layout.windows.front().width()) {
    const double width = layout.windows.front().width();

    // Discard the tail window and everything it carried.
    layout.windows.pop_back();
    state.amp_desired.pop_back();
    state.amp_vel.pop_back();
    state.amp_acc.pop_back();
    state.amp_nominal.pop_back();
    state.mode.pop_back();
    AbsitionTracker fresh = trackers.back();
    trackers.pop_back();

    // Fresh head window at the nominal amplitude.
    const double head_left = layout.windows.front().s_left;
    layout.windows.insert(layout.windows.begin(), {head_left - width, head_left});
    state.amp_desired.insert(state.amp_desired.begin(), nominal_amplitude);
    state.amp_vel.insert(state.amp_vel.begin(), 0.0);
    state.amp_acc.insert(state.amp_acc.begin(), 0.0);
    state.amp_nominal.insert(state.amp_nominal.begin(), nominal_amplitude);
    state.mode.insert(state.mode.begin(), ComplianceMode::NC);
    fresh.nominal_amp = nominal_amplitude;
    fresh.reset();
    trackers.insert(trackers.begin(), fresh);

    layout.phase_offset = layout.windows.front().s_left;
    ++cycled;
  }
  return cycled;
}

}  // namespace snake
