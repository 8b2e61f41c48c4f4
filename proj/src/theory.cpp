#include "sqc/theory.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sqc::theory {

namespace {

spinstate::StateMoments gaussian_moments(std::int64_t n, double kappa) {
  const spinstate::EnsembleSpec spec{n, spinstate::Family::gaussian, kappa};
  return n <= spinstate::exact_summation_cap
             ? spinstate::exact_gaussian_moments(spec)
             : spinstate::asymptotic_gaussian_moments(spec);
}

// Reduced floor sigma_y * omega * sqrt(tau / gamma) from Eq. (5) at the
// dimensionless interrogation time x = gamma T.
double reduced_floor(const spinstate::StateMoments& m, double x, NoiseKind noise) {
  const double a = m.var_jy / (m.jz_mean * m.jz_mean);
  const double b = m.var_jz / (m.jz_mean * m.jz_mean);
  const double phi2 = noise == NoiseKind::white ? x : x * x;
  return std::sqrt((a + b * phi2) / x);
}

double flicker_linear_x(const spinstate::StateMoments& m) {
  const double a = m.var_jy / (m.jz_mean * m.jz_mean);
  const double b = m.var_jz / (m.jz_mean * m.jz_mean);
  const double x_break = std::pow(2.0 * a, 1.0 / 6.0);
  if (b <= 0.0) return x_break;
  // Unconstrained Eq.-(5) optimum of (a + b x^2)/x.
  const double x_star = std::sqrt(a / b);
  return std::min(x_break, x_star);
}

double objective(std::int64_t n, double kappa, clockloop::Feedback feedback,
                 NoiseKind noise) {
  const spinstate::StateMoments m = gaussian_moments(n, kappa);
  if (feedback == clockloop::Feedback::linear && noise == NoiseKind::white)
    return zeta_eq6(m, n);
  double x = capture_gamma_t;
  if (feedback == clockloop::Feedback::linear) x = flicker_linear_x(m);
  return reduced_floor(m, x, noise);
}

}  // namespace

double lambda_collective() { return 1.0; }

double lambda_independent(const spinstate::StateMoments& moments) {
  return 0.25 * static_cast<double>(moments.n_atoms) /
         moments.jz_second_moment();
}

double sigma_y_eq5(const spinstate::StateMoments& moments, double var_phi_o,
                   double var_phi_e, double lambda, double ramsey_t, double tau,
                   double omega) {
  if (var_phi_o < 0.0 || var_phi_e < 0.0 || !(ramsey_t > 0.0) || !(tau > 0.0) ||
      !(omega > 0.0))
    throw std::invalid_argument("sigma_y_eq5: invalid argument");
  const double num = moments.var_jy + moments.var_jz * var_phi_o +
                     lambda * moments.jz_second_moment() * var_phi_e;
  return std::sqrt(num) / (omega * std::sqrt(tau * ramsey_t) * moments.jz_mean);
}

double zeta_eq6(const spinstate::StateMoments& moments, std::int64_t n_atoms) {
  if (!(moments.jz_mean > 0.0))
    throw std::invalid_argument("zeta_eq6 requires jz_mean > 0");
  const double n = static_cast<double>(n_atoms);
  const double ry = std::sqrt(moments.var_jy) / moments.jz_mean;
  const double rz2 = moments.var_jz / (moments.jz_mean * moments.jz_mean);
  const double c = 3.0 / std::pow(2.0, 4.0 / 3.0);
  return c * std::cbrt(n) *
         std::sqrt(std::pow(ry, 4.0 / 3.0) + (1.0 / c) * rz2);
}

double optimal_T_linear(const spinstate::StateMoments& moments, double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  const double a = moments.var_jy / (moments.jz_mean * moments.jz_mean);
  return std::cbrt(2.0 * a) / gamma;
}

double optimal_T_nonlinear(double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  return capture_gamma_t / gamma;
}

double optimal_T_flicker_linear(const spinstate::StateMoments& moments,
                                double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  return flicker_linear_x(moments) / gamma;
}

KappaOpt optimize_kappa(std::int64_t n_atoms, clockloop::Feedback feedback,
                        NoiseKind noise) {
  if (n_atoms < 100) throw std::invalid_argument("optimize_kappa requires N >= 100");
  const double lo0 = 1.0;
  const double hi0 = std::sqrt(static_cast<double>(n_atoms));
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

  double lo = lo0, hi = hi0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = objective(n_atoms, x1, feedback, noise);
  double f2 = objective(n_atoms, x2, feedback, noise);
  while ((hi - lo) > 1e-3 * 0.5 * (hi + lo)) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = objective(n_atoms, x1, feedback, noise);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = objective(n_atoms, x2, feedback, noise);
    }
  }
  KappaOpt out;
  out.kappa = 0.5 * (lo + hi);
  out.value = objective(n_atoms, out.kappa, feedback, noise);
  // A minimum pinned to either end of [1, sqrt(N)] is not bracketed; report
  // rather than extrapolate.
  out.flagged = (out.kappa - lo0) < 5e-3 * (hi0 - lo0) / hi0 ||
                (hi0 - out.kappa) < 5e-3 * hi0;
  return out;
}

double predicted_exponent(clockloop::Feedback feedback, StateKind state) {
  if (feedback == clockloop::Feedback::linear)
    return state == StateKind::uncorrelated ? -1.0 / 3.0 : -1.0 / 2.0;
  return state == StateKind::uncorrelated ? -1.0 / 2.0 : -2.0 / 3.0;
}

double predicted_improvement(clockloop::Feedback feedback, NoiseKind noise) {
  if (noise == NoiseKind::white) return 1.0 / 6.0;
  return feedback == clockloop::Feedback::linear ? 5.0 / 24.0 : 1.0 / 6.0;
}

TheoryPrediction predict(std::int64_t n_atoms, StateKind state,
                         clockloop::Feedback feedback, NoiseKind noise,
                         double gamma, double tau, double omega) {
  TheoryPrediction p;
  spinstate::StateMoments m;
  if (state == StateKind::uncorrelated) {
    m = spinstate::uncorrelated_moments(
        {n_atoms, spinstate::Family::uncorrelated, 0.0});
    p.kappa_opt = std::sqrt(static_cast<double>(n_atoms));
  } else {
    const KappaOpt ko = optimize_kappa(n_atoms, feedback, noise);
    p.kappa_opt = ko.kappa;
    m = gaussian_moments(n_atoms, ko.kappa);
  }
  p.zeta = zeta_eq6(m, n_atoms);
  double t_opt;
  if (feedback == clockloop::Feedback::nonlinear)
    t_opt = optimal_T_nonlinear(gamma);
  else if (noise == NoiseKind::white)
    t_opt = optimal_T_linear(m, gamma);
  else
    t_opt = optimal_T_flicker_linear(m, gamma);
  p.gamma_t_opt = gamma * t_opt;
  const double phi2 = noise == NoiseKind::white ? gamma * t_opt
                                                : (gamma * t_opt) * (gamma * t_opt);
  p.sigma_y = sigma_y_eq5(m, phi2, 0.0, 1.0, t_opt, tau, omega);
  if (noise == NoiseKind::white)
    p.scaling_exponent = predicted_exponent(feedback, state);
  else
    // 1/f baselines are not claimed; only the squeezing improvement is.
    p.scaling_exponent = std::numeric_limits<double>::quiet_NaN();
  return p;
}

}  // namespace sqc::theory
