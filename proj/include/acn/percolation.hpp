#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "acn/errors.hpp"
#include "acn/model.hpp"

namespace acn {

struct Edge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;

  bool operator==(const Edge&) const = default;
};

// Disjoint-set forest with union by size and path halving.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);

  std::size_t find(std::size_t x);
  // Returns the size of the merged component.
  std::size_t unite(std::size_t a, std::size_t b);
  std::size_t largest() const { return largest_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t largest_ = 0;
};

// m distinct undirected edges drawn uniformly without replacement, returned
// in a uniformly random order (so every prefix is itself a G(n, k) sample).
std::vector<Edge> sample_gnm(std::size_t n, std::uint64_t m, std::uint64_t seed);

double largest_component_fraction(std::size_t n, std::span<const Edge> edges);

struct CurvePoint {
  double control = 0.0;
  double observable = 0.0;

  bool operator==(const CurvePoint&) const = default;
};

struct Curve {
  std::vector<CurvePoint> points;
  std::size_t trials_per_point = 1;
  std::uint64_t seed = 0;

  bool operator==(const Curve&) const = default;
};

struct MaxSlope {
  bool operator==(const MaxSlope&) const = default;
};
struct Crossing {
  double threshold = 0.5;
  bool operator==(const Crossing&) const = default;
};
using TransitionCriterion = std::variant<MaxSlope, Crossing>;

class NoTransitionError : public InputError {
 public:
  using InputError::InputError;
};

// MaxSlope: midpoint of the steepest segment (earliest on ties).
// Crossing(t): linear interpolation of the first segment rising through t.
double estimate_transition(const Curve& curve, const TransitionCriterion& criterion);

struct SweepResult {
  Curve curve;
  double transition_estimate = 0.0;
  TransitionCriterion criterion;
};

// One incremental run: edges are added in random order up to floor(r_max*n),
// and the largest-component fraction is recorded at `steps` evenly spaced
// edge/node ratios in [0, r_max].
Curve percolation_run(std::size_t n, double r_max, std::size_t steps, std::uint64_t seed);

// Trial-averaged percolation curve; trials run in parallel with OpenMP.
SweepResult sweep_giant_component(std::size_t n, double r_max, std::size_t steps,
                                  std::size_t trials, std::uint64_t seed,
                                  const TransitionCriterion& criterion);

struct RandomSystemConfig {
  std::size_t n_food = 4;
  std::size_t n_derived = 8;
  std::size_t reactions_per_derived = 2;
  double catalysis_probability = 0.0;
  std::uint64_t seed = 0;
  // Extra catalyst-only elements. Zero for the phase sweeps.
  std::size_t n_stimuli = 0;
};

void validate_config(const RandomSystemConfig& config);

// Layered generator: derived element i is produced by reactions whose 1-2
// reactants come from lower-indexed elements. Each potential (catalyst,
// reaction) pair gets one uniform draw u and is kept when u < p, so for a
// fixed seed the catalysis relation only grows with p.
ReactionSystem sample_random_system(const RandomSystemConfig& config);

// Fraction of sampled systems with a non-empty maxRAF (stimuli excluded) at
// each catalysis probability. Trials run in parallel with OpenMP.
SweepResult raf_phase_sweep(const RandomSystemConfig& base, std::span<const double> p_values,
                            std::size_t trials, std::uint64_t seed,
                            const TransitionCriterion& criterion);

// Independent per-trial seed.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

// Per-trial kernels shared by the parallel sweeps and the serial reference.
namespace kernels {

std::vector<double> giant_component_trial(std::size_t n, double r_max, std::size_t steps,
                                          std::uint64_t seed);

std::vector<std::uint8_t> raf_emergence_trial(const RandomSystemConfig& base,
                                              std::span<const double> p_values,
                                              std::uint64_t seed);

void check_sweep_args(std::size_t n, double r_max, std::size_t steps, std::size_t trials);
void check_p_values(std::span<const double> p_values, std::size_t trials);

}  // namespace kernels

// Single-threaded versions of the sweeps. Results are bitwise identical to
// the parallel ones; kept for testing and benchmarking.
namespace serial {

SweepResult sweep_giant_component(std::size_t n, double r_max, std::size_t steps,
                                  std::size_t trials, std::uint64_t seed,
                                  const TransitionCriterion& criterion);

SweepResult raf_phase_sweep(const RandomSystemConfig& base, std::span<const double> p_values,
                            std::size_t trials, std::uint64_t seed,
                            const TransitionCriterion& criterion);

}  // namespace serial

}  // namespace acn
