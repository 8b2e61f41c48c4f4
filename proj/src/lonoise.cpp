#include "sqc/lonoise.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "sqc/fft.hpp"

namespace sqc::lonoise {

namespace {

void check_window(double dt, std::size_t n_steps) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (n_steps < 1) throw std::invalid_argument("n_steps must be >= 1");
}

}  // namespace

NoiseTrajectory gen_white_fm(const LONoiseModel& model, double dt,
                             std::size_t n_steps, RngStream& rng) {
  check_window(dt, n_steps);
  if (model.kind != Kind::white_fm)
    throw std::invalid_argument("gen_white_fm requires kind = white_fm");
  NoiseTrajectory traj;
  traj.dt = dt;
  traj.samples.resize(n_steps);
  if (model.gamma == 0.0) return traj;
  // i.i.d. samples with variance gamma/dt make the integrated phase over a
  // window T exactly Normal(0, gamma*T); one-sided PSD is flat at 2*gamma.
  const double sigma = std::sqrt(model.gamma / dt);
  for (auto& s : traj.samples) s = sigma * rng.normal();
  return traj;
}

NoiseTrajectory gen_flicker_fm(const LONoiseModel& model, double dt,
                               std::size_t n_steps, RngStream& rng) {
  check_window(dt, n_steps);
  if (model.kind != Kind::flicker_fm)
    throw std::invalid_argument("gen_flicker_fm requires kind = flicker_fm");
  if (model.f_floor_decades < 1)
    throw std::invalid_argument("f_floor_decades must be >= 1");
  if (!(model.t_ref > 0.0)) throw std::invalid_argument("t_ref must be positive");
  const double span = dt * static_cast<double>(n_steps);
  if (span + 1e-9 * model.t_ref < model.t_ref)
    throw std::invalid_argument("flicker span must cover t_ref");

  NoiseTrajectory traj;
  traj.dt = dt;
  traj.samples.assign(n_steps, 0.0);
  if (model.gamma == 0.0) return traj;

  const double f_min = std::pow(10.0, -model.f_floor_decades) / model.t_ref;
  const double f_max = 0.5 / dt;
  if (!(f_min < f_max))
    throw std::invalid_argument("flicker band empty: 10^-d/t_ref >= 1/(2 dt)");

  // Synthesis grid: long enough both for the requested span and for the
  // lowest band frequency to be resolved.
  std::size_t m = 1;
  const auto min_len = static_cast<std::size_t>(std::ceil(1.0 / (f_min * dt)));
  while (m < std::max(n_steps, min_len)) m *= 2;

  const std::size_t half = m / 2;
  std::vector<double> sigma(half + 1, 0.0);  // per-bin amplitude std dev
  for (std::size_t j = 1; j <= half; ++j) {
    const double f = static_cast<double>(j) / (static_cast<double>(m) * dt);
    if (f >= f_min * (1.0 - 1e-12)) sigma[j] = 1.0 / std::sqrt(f);
  }

  // Exact variance of the boxcar-integrated phase over t_ref for the circular
  // synthesized process; fixes the overall amplitude so that
  // Var(phase over t_ref) = (gamma * t_ref)^2.
  const auto k_ref = static_cast<double>(
      std::llround(model.t_ref / dt));
  const double pi = std::numbers::pi;
  double var_raw = 0.0;
  for (std::size_t j = 1; j <= half; ++j) {
    if (sigma[j] == 0.0) continue;
    const double num = std::sin(pi * static_cast<double>(j) * k_ref / static_cast<double>(m));
    const double den = std::sin(pi * static_cast<double>(j) / static_cast<double>(m));
    const double w2 = dt * dt * (num / den) * (num / den);
    var_raw += (j < half ? 2.0 : 1.0) * sigma[j] * sigma[j] * w2;
  }
  if (!(var_raw > 0.0))
    throw std::runtime_error("flicker calibration failed: empty band");
  const double scale = model.gamma * model.t_ref / std::sqrt(var_raw);

  std::vector<std::complex<double>> spectrum(half + 1, {0.0, 0.0});
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t j = 1; j < half; ++j) {
    if (sigma[j] == 0.0) continue;
    const double a = scale * sigma[j] * inv_sqrt2;
    spectrum[j] = {a * rng.normal(), a * rng.normal()};
  }
  if (sigma[half] > 0.0) spectrum[half] = {scale * sigma[half] * rng.normal(), 0.0};

  const std::vector<double> x = fft::irfft(spectrum, m);
  std::copy(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n_steps),
            traj.samples.begin());
  return traj;
}

NoiseTrajectory generate(const LONoiseModel& model, double dt,
                         std::size_t n_steps, RngStream& rng) {
  switch (model.kind) {
    case Kind::none: {
      check_window(dt, n_steps);
      NoiseTrajectory traj;
      traj.dt = dt;
      traj.samples.assign(n_steps, 0.0);
      return traj;
    }
    case Kind::white_fm:
      return gen_white_fm(model, dt, n_steps, rng);
    case Kind::flicker_fm:
      return gen_flicker_fm(model, dt, n_steps, rng);
  }
  throw std::logic_error("unreachable noise kind");
}

double accumulate_phase(const NoiseTrajectory& traj, std::size_t start_index,
                        std::size_t steps) {
  if (start_index + steps > traj.samples.size())
    throw std::out_of_range("accumulate_phase: window exceeds trajectory");
  double sum = 0.0;
  for (std::size_t i = start_index; i < start_index + steps; ++i)
    sum += traj.samples[i];
  return traj.dt * sum;
}

}  // namespace sqc::lonoise
