#ifndef SQC_THEORY_HPP
#define SQC_THEORY_HPP

#include <cstdint>

#include "sqc/clockloop.hpp"
#include "sqc/spinstate.hpp"

namespace sqc::theory {

enum class NoiseKind { white, flicker };
enum class StateKind { uncorrelated, squeezed };

// Phase variance at which the nonlinear-feedback servo stops capturing.
inline constexpr double capture_gamma_t = 0.1;

double lambda_collective();
double lambda_independent(const spinstate::StateMoments& moments);

// sigma_y(tau) = sqrt(dJy^2 + dJz^2 <dphi_O^2> + lambda <Jz^2> <dphi_E^2>)
//               / (omega sqrt(tau T) <Jz>)
double sigma_y_eq5(const spinstate::StateMoments& moments, double var_phi_o,
                   double var_phi_e, double lambda, double ramsey_t, double tau,
                   double omega);

// zeta = 3/2^(4/3) N^(1/3) [ (dJy/<Jz>)^(4/3)
//                            + 2^(4/3)/3 (dJz/<Jz>)^2 ]^(1/2)
double zeta_eq6(const spinstate::StateMoments& moments, std::int64_t n_atoms);

// Linear feedback, white LO noise: gamma T = (2 dJy^2 / <Jz>^2)^(1/3).
double optimal_T_linear(const spinstate::StateMoments& moments, double gamma);

// Nonlinear feedback: the capture condition gamma T <= 0.1 caps the useful
// interrogation time at T = 0.1 / gamma (both noise kinds).
double optimal_T_nonlinear(double gamma);

// Linear feedback, 1/f LO noise: the white-noise breakdown rule applied with
// <dphi^2> = (gamma T)^2, additionally capped by the Eq.-(5) optimum when the
// longitudinal term dominates. Derived rule; simulation is the arbiter.
double optimal_T_flicker_linear(const spinstate::StateMoments& moments,
                                double gamma);

struct KappaOpt {
  double kappa = 0.0;
  // zeta for white/linear; the reduced floor sigma_y * omega * sqrt(tau/gamma)
  // for the other feedback/noise combinations.
  double value = 0.0;
  bool flagged = false;  // minimum not bracketed inside [1, sqrt(N)]
};

// One-dimensional minimization over the Gaussian family, kappa in [1, sqrt(N)]
// (golden section, 1e-3 relative tolerance; exact moments up to the summation
// cap, asymptotic beyond).
KappaOpt optimize_kappa(std::int64_t n_atoms, clockloop::Feedback feedback,
                        NoiseKind noise);

// White-noise scaling exponents of the optimized stability with N.
double predicted_exponent(clockloop::Feedback feedback, StateKind state);

// Exponent gained by optimal squeezing relative to the uncorrelated state.
double predicted_improvement(clockloop::Feedback feedback, NoiseKind noise);

struct TheoryPrediction {
  double sigma_y = 0.0;
  double zeta = 0.0;
  double gamma_t_opt = 0.0;
  double kappa_opt = 0.0;
  double scaling_exponent = 0.0;
};

TheoryPrediction predict(std::int64_t n_atoms, StateKind state,
                         clockloop::Feedback feedback, NoiseKind noise,
                         double gamma, double tau, double omega);

}  // namespace sqc::theory

#endif
