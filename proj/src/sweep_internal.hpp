#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "acn/percolation.hpp"

namespace acn::detail {

std::vector<double> ratio_grid(double r_max, std::size_t steps);

// Pointwise mean of per-trial observables, summed in trial order.
SweepResult average_trials(const std::vector<double>& controls,
                           const std::vector<std::vector<double>>& per_trial,
                           std::uint64_t seed, const TransitionCriterion& criterion);

SweepResult count_trials(std::span<const double> p_values,
                         const std::vector<std::vector<std::uint8_t>>& per_trial,
                         std::uint64_t seed, const TransitionCriterion& criterion);

}  // namespace acn::detail
