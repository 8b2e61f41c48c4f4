#ifndef SQC_LONOISE_HPP
#define SQC_LONOISE_HPP

#include <cstddef>
#include <vector>

#include "sqc/rng.hpp"

namespace sqc::lonoise {

enum class Kind { none, white_fm, flicker_fm };

// Free-running local-oscillator frequency noise, calibrated by the dephasing
// rate gamma:
//   white_fm:   Var(phase over any window T) = gamma * T
//   flicker_fm: Var(phase over t_ref) = (gamma * t_ref)^2, one-sided spectral
//               density proportional to 1/f over [10^-f_floor_decades / t_ref,
//               1/(2 dt)]
struct LONoiseModel {
  Kind kind = Kind::white_fm;
  double gamma = 0.0;        // s^-1
  double t_ref = 1.0;        // s, flicker calibration window
  int f_floor_decades = 4;   // flicker band extent below 1/t_ref
};

// Regularly sampled delta-omega series (rad/s).
struct NoiseTrajectory {
  double dt = 0.0;
  std::vector<double> samples;
};

NoiseTrajectory gen_white_fm(const LONoiseModel& model, double dt,
                             std::size_t n_steps, RngStream& rng);
NoiseTrajectory gen_flicker_fm(const LONoiseModel& model, double dt,
                               std::size_t n_steps, RngStream& rng);
NoiseTrajectory generate(const LONoiseModel& model, double dt,
                         std::size_t n_steps, RngStream& rng);

// Phase accumulated over [start_index, start_index + steps): left-Riemann sum
// dt * sum(samples); the O(dt) quadrature error is controlled by the caller's
// substep resolution.
double accumulate_phase(const NoiseTrajectory& traj, std::size_t start_index,
                        std::size_t steps);

}  // namespace sqc::lonoise

#endif
