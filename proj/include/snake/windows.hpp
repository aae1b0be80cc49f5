#pragma once

#include <span>
#include <vector>

#include "snake/gait.hpp"

namespace snake {

struct ShapeState;       // admittance.hpp
struct AbsitionTracker;  // reactive.hpp

struct Window {
  double s_left = 0.0;
  double s_right = 0.0;
  double width() const { return s_right - s_left; }
};

// Activation windows: sigmoid-weighted backbone segments whose joints share
// one shape parameter. Windows travel tailward with the body wave; a fresh
// window is born at the head when the current head window has advanced one
// full window width, and the tail window is discarded with all its state.
struct WindowLayout {
  std::vector<Window> windows;  // ordered head to tail
  double slope = 50.0;          // sigmoid steepness m (normalized backbone units)
  double phase_offset = 0.0;    // head-window travel since its birth

  // Equal-width windows tiling [0,1].
  static WindowLayout tiled(int n_windows, double slope);

  void validate() const;
  int count() const { return static_cast<int>(windows.size()); }
  // 10-90% width of one sigmoid edge, 2*ln(9)/m.
  double transition_width() const;
};

struct WindowedAmplitudes {
  std::vector<double> per_window;
  Plane plane = Plane::Odd;
};

// Product of the rising and falling boundary sigmoids:
//   1/(1+e^{m(s_l-s)}) * 1/(1+e^{m(s-s_r)})
// ~1 deep inside [s_l,s_r], ~0 far outside, 0.5 at each boundary.
double window_weight(double s, int window_index, const WindowLayout& layout);

// Effective shape parameter at backbone position s: sum of the per-window
// parameters weighted by their activation windows.
double blend(double s, std::span<const double> amplitudes, const WindowLayout& layout);
double blend(double s, const WindowedAmplitudes& amplitudes, const WindowLayout& layout);

// Shift all windows tailward by dt * (omega/eta).
WindowLayout advance_windows(const WindowLayout& layout, double dt,
                             const GaitParams& gait);

// Window lifecycle. When the head window has traveled one full window width
// past the head, drop the tail window together with its amplitude state and
// tracker (no leakage to the successor) and insert a fresh head window at the
// nominal amplitude with zeroed absition and nominal-compliance mode.
// Returns the number of windows cycled (0 if no boundary crossed).
int cycle_windows(WindowLayout& layout, ShapeState& state,
                  std::vector<AbsitionTracker>& trackers, double nominal_amplitude);

}  // namespace snake
