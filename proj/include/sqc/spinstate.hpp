#ifndef SQC_SPINSTATE_HPP
#define SQC_SPINSTATE_HPP

#include <cstdint>

#include "sqc/rng.hpp"

namespace sqc::spinstate {

enum class Family { uncorrelated, gaussian };

// Initial collective-spin state of the N-atom ensemble. For the gaussian
// family the amplitudes in the J_y eigenbasis are (-1)^m exp(-(m/kappa)^2),
// m = -J..J with J = N/2; kappa = sqrt(N) approximates the uncorrelated
// state, kappa -> 1 is strongly squeezed.
struct EnsembleSpec {
  std::int64_t n_atoms = 0;
  Family family = Family::uncorrelated;
  double kappa = 0.0;  // required for the gaussian family, 1 <= kappa <= sqrt(N)
};

// First and second moments of the collective spin, mean spin along +z.
struct StateMoments {
  std::int64_t n_atoms = 0;
  double jz_mean = 0.0;  // <J_z>, > 0 by convention
  double var_jy = 0.0;   // (Delta J_y)^2, the measured quadrature
  double var_jz = 0.0;   // (Delta J_z)^2, longitudinal noise
  double var_jx = 0.0;   // (Delta J_x)^2, anti-squeezed quadrature
  double xi = 0.0;       // sqrt(N) * Delta J_y / <J_z>

  double jz_second_moment() const { return var_jz + jz_mean * jz_mean; }
};

// Per-cycle projection-noise realization; J_y and J_z components are
// independent for the states considered (<J_y J_z> = 0).
struct AtomicSample {
  double jy = 0.0;
  double jz = 0.0;
};

// Largest N accepted by the exact O(N) basis summation.
inline constexpr std::int64_t exact_summation_cap = 10'000'000;

StateMoments uncorrelated_moments(const EnsembleSpec& spec);
StateMoments exact_gaussian_moments(const EnsembleSpec& spec);
StateMoments asymptotic_gaussian_moments(const EnsembleSpec& spec);

// Dispatch: uncorrelated family as-is, gaussian exact up to the summation
// cap and asymptotic beyond it.
StateMoments state_moments(const EnsembleSpec& spec);

// Solve xi(kappa) = xi_target by bisection on exact moments (xi is
// monotonically increasing in kappa).
double kappa_for_xi(std::int64_t n_atoms, double xi_target);

AtomicSample sample_atomic_noise(const StateMoments& moments, RngStream& rng);

}  // namespace sqc::spinstate

#endif
