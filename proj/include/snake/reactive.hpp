#pragma once

#include <cstddef>
#include <vector>

namespace snake {

// NC passes the amplitude rate through unchanged; PDC admits only increases
// in local curvature, NDC only decreases.
enum class ComplianceMode { NC, PDC, NDC };

const char* to_string(ComplianceMode mode);

double apply_filter(double amp_vel, ComplianceMode mode);

// Per-window obstruction-inference state: the shape absition (time integral
// of the desired amplitude's deviation from its reference) plus the trailing
// mean used for diagnostics. The absition staying near zero indicates smooth
// progress; sustained deviation drives it across a threshold, which the mode
// machine uses to engage directional compliance.
struct AbsitionTracker {
  // configuration
  double nominal_amp = 0.0;     // A0 for this window (rad)
  double thresh_upper = 0.0;    // rad*s, > 0
  double thresh_lower = 0.0;    // rad*s, < 0
  double exit_epsilon = 0.0;    // |absition| below this counts as returned to zero
  std::size_t mean_window = 1;  // k samples in the trailing mean
  double mean_duration = 0.0;   // k * dt, seconds; maps thresholds to a rad reference

  // state
  double absition = 0.0;       // rad*s
  double running_mean = 0.0;   // trailing mean of amp_desired
  double mean_deviation = 0.0; // |running_mean - nominal_amp|
  double friction_offset = 0.0;
  double reference_amp = 0.0;  // integration reference: A0 in NC, remapped in DC
  int entry_sign = 0;          // sign of the absition when DC engaged (0 in NC)

  static AbsitionTracker make(double nominal, double thresh_upper, double thresh_lower,
                              double exit_epsilon, std::size_t mean_window,
                              double mean_duration);

  void validate() const;
  // Zero the accumulated state, keeping configuration and friction offset.
  void reset();

  std::size_t sample_count() const { return filled_; }
  double push_sample(double amp_sample);  // returns the refreshed mean

 private:
  std::vector<double> buffer_;
  std::size_t head_ = 0;
  std::size_t filled_ = 0;
  double sum_ = 0.0;
};

// Trailing mean over the last k samples and the deviation from nominal.
void update_mean(AbsitionTracker& tracker, double amp_sample);

// absition += (amp_desired - reference_amp - friction_offset) * dt
void update_absition(AbsitionTracker& tracker, double amp_desired, double dt);

// Threshold-triggered NC/PDC/NDC machine. NC holds while the absition stays
// within [thresh_lower, thresh_upper] (boundaries inclusive). Crossing below
// the lower threshold engages PDC, above the upper engages NDC. On entry the
// integration reference is remapped (nominal + threshold / mean_duration) so
// the absition decays back toward zero; the episode ends when the absition
// changes sign relative to entry or falls below exit_epsilon, restoring NC
// and the nominal reference.
ComplianceMode transition(AbsitionTracker& tracker, ComplianceMode current);

}  // namespace snake
