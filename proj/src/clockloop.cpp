#include "sqc/clockloop.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sqc::clockloop {

namespace {

double dephasing_sigma(const LoopConfig& config,
                       const spinstate::StateMoments& moments) {
  if (!config.dephasing || config.dephasing->gamma_e == 0.0) return 0.0;
  const double phi2 = config.dephasing->gamma_e * config.ramsey_t;
  const double lambda_jz2 =
      config.dephasing->mode == LambdaMode::collective
          ? moments.jz_second_moment()
          : 0.25 * static_cast<double>(moments.n_atoms);
  return std::sqrt(lambda_jz2 * phi2);
}

void check_config(const LoopConfig& config, const lonoise::LONoiseModel& noise) {
  if (!(config.ramsey_t > 0.0))
    throw std::invalid_argument("ramsey_t must be positive");
  if (config.n_cycles < 8) throw std::invalid_argument("n_cycles must be >= 8");
  if (!(config.gain > 0.0) || config.gain > 2.0)
    throw std::invalid_argument("gain must lie in (0, 2]");
  if (config.steps_per_cycle < 1)
    throw std::invalid_argument("steps_per_cycle must be >= 1");
  if (config.fast_mode && noise.kind == lonoise::Kind::flicker_fm)
    throw std::invalid_argument(
        "fast mode is white-FM only: flicker phases are correlated across cycles");
}

}  // namespace

double error_signal(const spinstate::AtomicSample& sample, double phase,
                    double dephasing_draw) {
  return sample.jz * std::sin(phase) + sample.jy * std::cos(phase) +
         dephasing_draw;
}

double linear_correction(double error, const spinstate::StateMoments& moments,
                         double ramsey_t, double gain) {
  return -gain * error / (moments.jz_mean * ramsey_t);
}

double nonlinear_correction(double error, const spinstate::StateMoments& moments,
                            double ramsey_t, double gain) {
  const double x = std::clamp(error / moments.jz_mean, -1.0, 1.0);
  return -gain * std::asin(x) / ramsey_t;
}

ClockTrace run_clock(const LoopConfig& config, const lonoise::LONoiseModel& noise,
                     const spinstate::StateMoments& moments,
                     std::uint64_t trial_index) {
  check_config(config, noise);
  RngStream rng(config.master_seed, trial_index);

  const double t = config.ramsey_t;
  const std::size_t n = config.n_cycles;
  const std::size_t steps = config.fast_mode ? 1 : config.steps_per_cycle;
  const double dt = t / static_cast<double>(steps);
  const double sigma_deph = dephasing_sigma(config, moments);

  ClockTrace trace;
  trace.ramsey_t = t;
  trace.omega = config.omega;
  trace.phase.resize(n);
  trace.error.resize(n);
  trace.correction.resize(n);

  lonoise::NoiseTrajectory free;
  double sigma_fast = 0.0;
  if (config.fast_mode) {
    if (noise.kind == lonoise::Kind::white_fm)
      sigma_fast = std::sqrt(noise.gamma * t);
  } else {
    free = lonoise::generate(noise, dt, n * steps, rng);
  }

  if (config.record_trajectory) {
    trace.slaved.dt = dt;
    trace.slaved.samples.resize(n * steps);
  }

  // The feedback starts at t = 0; corrections take effect instantly at each
  // detection time t_k and persist (zero dead time).
  double corr = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double phase;
    if (config.fast_mode) {
      phase = sigma_fast * rng.normal() + corr * t;
      if (config.record_trajectory) trace.slaved.samples[k] = phase / t;
    } else {
      phase = lonoise::accumulate_phase(free, k * steps, steps) + corr * t;
      if (config.record_trajectory)
        for (std::size_t i = k * steps; i < (k + 1) * steps; ++i)
          trace.slaved.samples[i] = free.samples[i] + corr;
    }

    const spinstate::AtomicSample sample =
        spinstate::sample_atomic_noise(moments, rng);
    const double deph = sigma_deph > 0.0 ? sigma_deph * rng.normal() : 0.0;
    const double e =
        config.linearized_error
            ? sample.jz * phase + sample.jy + deph
            : error_signal(sample, phase, deph);
    const double dw = config.feedback == Feedback::linear
                          ? linear_correction(e, moments, t, config.gain)
                          : nonlinear_correction(e, moments, t, config.gain);
    trace.phase[k] = phase;
    trace.error[k] = e;
    trace.correction[k] = dw;
    corr += dw;
  }
  return trace;
}

double mean_frequency_offset(const ClockTrace& trace, std::size_t n_sub) {
  if (n_sub < 1 || n_sub > trace.n_cycles())
    throw std::out_of_range("mean_frequency_offset: n_sub out of range");
  if (trace.slaved.samples.empty())
    throw std::invalid_argument("mean_frequency_offset requires a recorded trajectory");
  const double tau = static_cast<double>(n_sub) * trace.ramsey_t;
  const auto steps = static_cast<std::size_t>(
      std::llround(tau / trace.slaved.dt));
  return lonoise::accumulate_phase(trace.slaved, 0, steps) / tau;
}

}  // namespace sqc::clockloop
