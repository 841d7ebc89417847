#include <vector>

#include "acn/percolation.hpp"
#include "sweep_internal.hpp"

namespace acn {

SweepResult sweep_giant_component(std::size_t n, double r_max, std::size_t steps,
                                  std::size_t trials, std::uint64_t seed,
                                  const TransitionCriterion& criterion) {
  kernels::check_sweep_args(n, r_max, steps, trials);
  std::vector<std::vector<double>> per_trial(trials);
  const auto count = static_cast<std::int64_t>(trials);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t t = 0; t < count; ++t) {
    per_trial[t] = kernels::giant_component_trial(n, r_max, steps, trial_seed(seed, t));
  }
  return detail::average_trials(detail::ratio_grid(r_max, steps), per_trial, seed, criterion);
}

SweepResult raf_phase_sweep(const RandomSystemConfig& base, std::span<const double> p_values,
                            std::size_t trials, std::uint64_t seed,
                            const TransitionCriterion& criterion) {
  validate_config(base);
  kernels::check_p_values(p_values, trials);
  std::vector<std::vector<std::uint8_t>> per_trial(trials);
  const auto count = static_cast<std::int64_t>(trials);

#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t t = 0; t < count; ++t) {
    per_trial[t] = kernels::raf_emergence_trial(base, p_values, trial_seed(seed, t));
  }
  return detail::count_trials(p_values, per_trial, seed, criterion);
}

}  // namespace acn
