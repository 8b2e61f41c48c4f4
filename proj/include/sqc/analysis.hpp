#ifndef SQC_ANALYSIS_HPP
#define SQC_ANALYSIS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "sqc/clockloop.hpp"
#include "sqc/lonoise.hpp"

namespace sqc::analysis {

struct StabilityPoint {
  double tau = 0.0;
  double sigma_y = 0.0;
  double stderr_ = 0.0;
  std::size_t samples = 0;
};

struct StabilityCurve {
  std::vector<StabilityPoint> points;  // taus strictly increasing
  double floor_coeff = 0.0;            // c in sigma_y = c / sqrt(tau)
  double floor_stderr = 0.0;
  double fit_tau_min = 0.0;
  double fit_tau_max = 0.0;
  bool flagged = false;                // set when the 1/sqrt(tau) model fails
};

struct PsdEstimate {
  std::vector<double> freqs;  // Hz, positive increasing
  std::vector<double> psd;    // one-sided, (rad/s)^2 / Hz
  std::size_t segment_count = 0;
};

struct ScalingFit {
  double exponent = 0.0;
  double stderr_ = 0.0;
};

// Allan deviation of the locked clock from the per-cycle time-average of
// Eq.-(3) form: the segment statistic is the mean of the post-correction
// residuals (phase_k + T * correction_k) / T over tau = m T. Samples are
// pooled over trials x non-overlapping segments in trial order (fixed
// summation order, independent of how trials were executed).
StabilityCurve allan_deviation(const std::vector<clockloop::ClockTrace>& traces,
                               const std::vector<double>& taus, double omega);

// Per-trial partial sums for the same estimator, so sweeps can reduce each
// trace as soon as it is produced instead of holding the whole ensemble.
// Combining partials in trial order reproduces allan_deviation bit for bit.
struct AllanPartial {
  std::vector<double> sum_sq;      // per tau
  std::vector<std::size_t> count;  // per tau
};
AllanPartial allan_reduce_trace(const clockloop::ClockTrace& trace,
                                const std::vector<double>& taus);
StabilityCurve allan_combine(const std::vector<AllanPartial>& partials,
                             const std::vector<double>& taus, double omega);

// Classical non-overlapping two-sample Allan deviation of a delta-omega
// trajectory; secondary estimator kept for cross-checks.
StabilityCurve allan_deviation_twosample(const lonoise::NoiseTrajectory& traj,
                                         const std::vector<double>& taus,
                                         double omega);

// tau grid m*T for m = 1, 2, 4, ... <= n_cycles / min_segments.
std::vector<double> tau_grid(double ramsey_t, std::size_t n_cycles,
                             std::size_t min_segments = 2);

// Weighted least squares of sigma_y against c/sqrt(tau) through the origin
// over points with tau >= tau_min; fills the curve's floor fields and flags
// the result when the log-log slope differs from -1/2 by more than 3 sigma.
double fit_floor(StabilityCurve& curve, double tau_min);

// Welch periodogram average: Hann window, overlap in [0, 0.9]. Normalized so
// that sum(psd) * df recovers the sample variance for white input.
PsdEstimate psd_welch(const lonoise::NoiseTrajectory& traj,
                      std::size_t segment_len, double overlap_fraction);

// Bin-wise mean of estimates on identical frequency grids.
PsdEstimate psd_mean(const std::vector<PsdEstimate>& estimates);

// Least-squares slope of log(value) vs log(n); requires >= 4 points spanning
// >= 2 decades in n and positive values.
ScalingFit fit_scaling(const std::vector<std::pair<double, double>>& points);

// Log-log slope over an arbitrary positive (x, y) set (>= 2 points); used for
// periodogram slopes and small fits where the scaling-fit preconditions are
// deliberately not enforced.
ScalingFit loglog_slope(const std::vector<std::pair<double, double>>& points);

}  // namespace sqc::analysis

#endif
