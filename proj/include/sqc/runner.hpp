#ifndef SQC_RUNNER_HPP
#define SQC_RUNNER_HPP

#include <cstddef>
#include <vector>

#include "sqc/clockloop.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sqc::runner {

// Number of worker threads the parallel path uses for threads = 0.
int default_threads();

// Maps f over trial indices [0, n_trials), storing results by index. Every
// trial derives its randomness from (master seed, trial index) alone, so the
// serial reference and the OpenMP kernel produce bit-identical output for any
// thread count.

template <class Fn>
auto map_trials_serial(std::size_t n_trials, Fn&& f)
    -> std::vector<decltype(f(std::size_t{0}))> {
  std::vector<decltype(f(std::size_t{0}))> out(n_trials);
  for (std::size_t i = 0; i < n_trials; ++i) out[i] = f(i);
  return out;
}

template <class Fn>
auto map_trials_parallel(std::size_t n_trials, Fn&& f, int threads = 0)
    -> std::vector<decltype(f(std::size_t{0}))> {
  if (threads == 1) return map_trials_serial(n_trials, f);
  std::vector<decltype(f(std::size_t{0}))> out(n_trials);
#ifdef _OPENMP
  const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n_trials); ++i)
    out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
#else
  for (std::size_t i = 0; i < n_trials; ++i) out[i] = f(i);
#endif
  return out;
}

// Runs all configured trials of the closed loop, traces by trial index.
// threads = 1 selects the serial reference path.
std::vector<clockloop::ClockTrace> run_ensemble(
    const clockloop::LoopConfig& config, const lonoise::LONoiseModel& noise,
    const spinstate::StateMoments& moments, int threads = 0);

}  // namespace sqc::runner

#endif
