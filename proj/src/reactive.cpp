#include "snake/reactive.hpp"

#include <cmath>
#include <stdexcept>

namespace snake {

const char* to_string(ComplianceMode mode) {
  switch (mode) {
    case ComplianceMode::NC: return "NC";
    case ComplianceMode::PDC: return "PDC";
    case ComplianceMode::NDC: return "NDC";
  }
  return "?";
}

double apply_filter(double amp_vel, ComplianceMode mode) {
  switch (mode) {
    case ComplianceMode::NC: return amp_vel;
    case ComplianceMode::PDC: return amp_vel >= 0.0 ? amp_vel : 0.0;
    case ComplianceMode::NDC: return amp_vel <= 0.0 ? amp_vel : 0.0;
  }
  return amp_vel;
}

AbsitionTracker AbsitionTracker::make(double nominal, double thresh_upper,
                                      double thresh_lower, double exit_epsilon,
                                      std::size_t mean_window, double mean_duration) {
  AbsitionTracker t;
  t.nominal_amp = nominal;
  t.thresh_upper = thresh_upper;
  t.thresh_lower = thresh_lower;
  t.exit_epsilon = exit_epsilon;
  t.mean_window = mean_window == 0 ? 1 : mean_window;
  t.mean_duration = mean_duration;
  t.reference_amp = nominal;
  t.running_mean = nominal;
  t.buffer_.assign(t.mean_window, 0.0);
  t.validate();
  return t;
}

void AbsitionTracker::validate() const {
  if (!(thresh_lower < 0.0 && 0.0 < thresh_upper))
    throw std::invalid_argument("absition tracker: need thresh_lower < 0 < thresh_upper");
  if (!(mean_duration > 0.0))
    throw std::invalid_argument("absition tracker: mean_duration must be > 0");
  if (!(exit_epsilon >= 0.0))
    throw std::invalid_argument("absition tracker: exit_epsilon must be >= 0");
}

void AbsitionTracker::reset() {
  absition = 0.0;
  running_mean = nominal_amp;
  mean_deviation = 0.0;
  reference_amp = nominal_amp;
  entry_sign = 0;
  head_ = 0;
  filled_ = 0;
  sum_ = 0.0;
}

double AbsitionTracker::push_sample(double amp_sample) {
  if (buffer_.size() != mean_window) buffer_.assign(mean_window, 0.0);
  if (filled_ < mean_window) {
    buffer_[head_] = amp_sample;
    sum_ += amp_sample;
    ++filled_;
  } else {
    sum_ += amp_sample - buffer_[head_];
    buffer_[head_] = amp_sample;
  }
  head_ = (head_ + 1) % mean_window;
  // Refresh the sum exactly once per wrap so the incremental mean cannot
  // drift from the arithmetic mean of the buffered samples.
  if (head_ == 0 && filled_ == mean_window) {
    double s = 0.0;
    for (double v : buffer_) s += v;
    sum_ = s;
  }
  return sum_ / static_cast<double>(filled_);
}

void update_mean(AbsitionTracker& tracker, double amp_sample) {
  if (!std::isfinite(amp_sample))
    throw std::domain_error("update_mean: non-finite amplitude sample");
  tracker.running_mean = tracker.push_sample(amp_sample);
  tracker.mean_deviation = std::abs(tracker.running_mean - tracker.nominal_amp);
}

void update_absition(AbsitionTracker& tracker, double amp_desired, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("update_absition: dt must be > 0");
  tracker.absition +=
      (amp_desired - tracker.reference_amp - tracker.friction_offset) * dt;
}

ComplianceMode transition(AbsitionTracker& tracker, ComplianceMode current) {
  switch (current) {
    case ComplianceMode::NC: {
      if (tracker.absition < tracker.thresh_lower) {
        tracker.entry_sign = -1;
        tracker.reference_amp =
            tracker.nominal_amp + tracker.thresh_lower / tracker.mean_duration;
        return ComplianceMode::PDC;
      }
      if (tracker.absition > tracker.thresh_upper) {
        tracker.entry_sign = +1;
        tracker.reference_amp =
            tracker.nominal_amp + tracker.thresh_upper / tracker.mean_duration;
        return ComplianceMode::NDC;
      }
      return ComplianceMode::NC;
    }
    case ComplianceMode::PDC:
    case ComplianceMode::NDC: {
      const bool sign_changed =
          tracker.entry_sign != 0 &&
          ((tracker.entry_sign < 0 && tracker.absition > 0.0) ||
           (tracker.entry_sign > 0 && tracker.absition < 0.0));
      if (sign_changed || std::abs(tracker.absition) < tracker.exit_epsilon) {
        tracker.entry_sign = 0;
        tracker.reference_amp = tracker.nominal_amp;
        return ComplianceMode::NC;
      }
      return current;
    }
  }
  return current;
}

}  // namespace snake
