#ifndef SQC_CLOCKLOOP_HPP
#define SQC_CLOCKLOOP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "sqc/lonoise.hpp"
#include "sqc/spinstate.hpp"

namespace sqc::clockloop {

enum class Feedback { linear, nonlinear };
enum class LambdaMode { collective, independent };

// Environmental dephasing, injected as one aggregate Gaussian term per cycle
// with variance lambda * <J_z^2> * gamma_e * T added to the error signal
// (collective: shared phase; independent: aggregate of per-atom phases).
struct Dephasing {
  double gamma_e = 0.0;  // s^-1, white dephasing rate
  LambdaMode mode = LambdaMode::independent;
};

struct LoopConfig {
  double ramsey_t = 1.0;           // s
  std::size_t n_cycles = 8;
  Feedback feedback = Feedback::linear;
  double gain = 1.0;               // stable for gain in (0, 2]
  std::size_t steps_per_cycle = 32;
  std::size_t trials = 1;
  std::uint64_t master_seed = 0;
  double omega = 2.0 * 3.14159265358979323846e9;  // rad/s carrier
  std::optional<Dephasing> dephasing;
  // fast mode draws per-cycle phases directly as Normal(0, gamma T); valid
  // for white FM only (flicker phases are correlated across cycles).
  bool fast_mode = false;
  bool record_trajectory = true;
  // test hook: replace the trig error signal by its linearization
  // Jz*phi + jy + (jz - <Jz>)*phi
  bool linearized_error = false;
};

// Per-cycle record of one closed-loop trial. `correction` holds the frequency
// increment applied at the end of each cycle; `slaved` the delta-omega series
// of the locked oscillator (per-substep in trajectory mode, per-cycle
// averages in fast mode; empty when recording is off).
struct ClockTrace {
  double ramsey_t = 0.0;
  double omega = 0.0;
  std::vector<double> phase;       // measured Ramsey phase per cycle (rad)
  std::vector<double> error;       // error signal per cycle (spin units)
  std::vector<double> correction;  // applied correction per cycle (rad/s)
  lonoise::NoiseTrajectory slaved;

  std::size_t n_cycles() const { return phase.size(); }
};

// E = jz sin(phi) + jy cos(phi) + aggregate dephasing draw; the full
// trigonometric form is kept so the cubic breakdown emerges naturally.
double error_signal(const spinstate::AtomicSample& sample, double phase,
                    double dephasing_draw);

// Delta-omega = -g E / (<J_z> T).
double linear_correction(double error, const spinstate::StateMoments& moments,
                         double ramsey_t, double gain);

// Delta-omega = -g arcsin(clamp(E/<J_z>, -1, 1)) / T; reduces to the linear
// law for small signals and saturates at +-g pi/(2T).
double nonlinear_correction(double error, const spinstate::StateMoments& moments,
                            double ramsey_t, double gain);

ClockTrace run_clock(const LoopConfig& config, const lonoise::LONoiseModel& noise,
                     const spinstate::StateMoments& moments,
                     std::uint64_t trial_index);

// (1/tau) integral of the slaved delta-omega over tau = n_sub * T, from t = 0.
double mean_frequency_offset(const ClockTrace& trace, std::size_t n_sub);

}  // namespace sqc::clockloop

#endif
