#include "sqc/runner.hpp"

namespace sqc::runner {

int default_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<clockloop::ClockTrace> run_ensemble(
    const clockloop::LoopConfig& config, const lonoise::LONoiseModel& noise,
    const spinstate::StateMoments& moments, int threads) {
  return map_trials_parallel(
      config.trials,
      [&](std::size_t i) { return clockloop::run_clock(config, noise, moments, i); },
      threads);
}

}  // namespace sqc::runner
