#include "acn/percolation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <unordered_set>

#include "acn/raf.hpp"
#include "sweep_internal.hpp"

namespace acn {
namespace {

// Uniform double in [0, 1) from the top 53 bits.
double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t max_edges(std::size_t n) {
  const auto nn = static_cast<std::uint64_t>(n);
  return nn < 2 ? 0 : nn * (nn - 1) / 2;
}

}  // namespace

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1), largest_(n == 0 ? 0 : 1) {
  for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
}

std::size_t UnionFind::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

std::size_t UnionFind::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return size_[a];
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  largest_ = std::max(largest_, size_[a]);
  return size_[a];
}

std::vector<Edge> sample_gnm(std::size_t n, std::uint64_t m, std::uint64_t seed) {
  if (n > std::numeric_limits<std::uint32_t>::max()) throw InputError("too many nodes");
  const std::uint64_t total = max_edges(n);
  if (m > total) {
    throw InputError("edge count " + std::to_string(m) + " exceeds n(n-1)/2 = " +
                     std::to_string(total));
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(m);

  if (m > total / 2) {
    // Dense: shuffle the full edge list and keep a prefix.
    for (std::uint32_t u = 0; u < n; ++u) {
      for (std::uint32_t v = u + 1; v < n; ++v) edges.push_back({u, v});
    }
    std::shuffle(edges.begin(), edges.end(), rng);
    edges.resize(m);
    return edges;
  }

  // Sparse: rejection sampling; acceptance probability stays above 1/2.
  std::uniform_int_distribution<std::uint32_t> node(0, static_cast<std::uint32_t>(n - 1));
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m * 2);
  while (edges.size() < m) {
    std::uint32_t u = node(rng);
    std::uint32_t v = node(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (seen.insert(static_cast<std::uint64_t>(u) * n + v).second) edges.push_back({u, v});
  }
  return edges;
}

double largest_component_fraction(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw InputError("graph has no nodes");
  UnionFind uf(n);
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw InputError("edge endpoint out of range: " + std::to_string(e.u) + "-" +
                       std::to_string(e.v));
    }
    uf.unite(e.u, e.v);
  }
  return static_cast<double>(uf.largest()) / static_cast<double>(n);
}

double estimate_transition(const Curve& curve, const TransitionCriterion& criterion) {
  const auto& pts = curve.points;
  if (pts.size() < 3) throw InputError("transition estimate needs at least 3 curve points");
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (!(pts[i].control > pts[i - 1].control)) {
      throw InputError("curve controls must be strictly increasing");
    }
  }

  if (std::holds_alternative<MaxSlope>(criterion)) {
    std::size_t best = 0;
    double best_slope = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const double slope =
          (pts[i + 1].observable - pts[i].observable) / (pts[i + 1].control - pts[i].control);
      if (slope > best_slope) {
        best_slope = slope;
        best = i;
      }
    }
    return 0.5 * (pts[best].control + pts[best + 1].control);
  }

  const double theta = std::get<Crossing>(criterion).threshold;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const auto& a = pts[i];
    const auto& b = pts[i + 1];
    if (a.observable < theta && b.observable >= theta) {
      const double t = (theta - a.observable) / (b.observable - a.observable);
      return a.control + t * (b.control - a.control);
    }
  }
  throw NoTransitionError("no transition: curve never rises through " + std::to_string(theta));
}

Curve percolation_run(std::size_t n, double r_max, std::size_t steps, std::uint64_t seed) {
  kernels::check_sweep_args(n, r_max, steps, 1);
  const auto grid = detail::ratio_grid(r_max, steps);
  const auto observables = kernels::giant_component_trial(n, r_max, steps, seed);
  Curve c;
  c.seed = seed;
  c.trials_per_point = 1;
  for (std::size_t i = 0; i < steps; ++i) c.points.push_back({grid[i], observables[i]});
  return c;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

void validate_config(const RandomSystemConfig& config) {
  if (config.n_food < 1 || config.n_derived < 1 || config.reactions_per_derived < 1) {
    throw InputError("random system counts must be at least 1");
  }
  const double p = config.catalysis_probability;
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("catalysis probability must lie in [0, 1]");
}

ReactionSystem sample_random_system(const RandomSystemConfig& config) {
  validate_config(config);
  std::mt19937_64 rng(config.seed);

  ReactionSystem sys;
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= config.n_food; ++i) names.push_back("f" + std::to_string(i));
  for (std::size_t i = 1; i <= config.n_derived; ++i) names.push_back("d" + std::to_string(i));
  for (std::size_t i = 1; i <= config.n_stimuli; ++i) names.push_back("s" + std::to_string(i));
  for (std::size_t i = 0; i < names.size(); ++i) {
    const ElementKind kind = i < config.n_food ? ElementKind::Food
                             : i < config.n_food + config.n_derived ? ElementKind::Derived
                                                                    : ElementKind::Stimulus;
    sys.elements.emplace(names[i], kind);
  }

  // Reactant structure first, so the draws below never depend on p.
  for (std::size_t d = 0; d < config.n_derived; ++d) {
    const std::size_t product = config.n_food + d;
    for (std::size_t k = 0; k < config.reactions_per_derived; ++k) {
      Reaction r;
      r.id = "R" + std::to_string(sys.reactions.size() + 1);
      r.products.insert(names[product]);
      std::uniform_int_distribution<std::size_t> pick(0, product - 1);
      const std::size_t first = pick(rng);
      r.reactants.insert(names[first]);
      if (product >= 2 && std::uniform_int_distribution<int>(1, 2)(rng) == 2) {
        std::size_t second = first;
        while (second == first) second = pick(rng);
        r.reactants.insert(names[second]);
      }
      sys.reactions.push_back(std::move(r));
    }
  }

  const double p = config.catalysis_probability;
  for (auto& r : sys.reactions) {
    for (const auto& name : names) {
      if (unit_draw(rng) < p) r.catalysts.insert(name);
    }
  }
  return sys;
}

namespace kernels {

void check_sweep_args(std::size_t n, double r_max, std::size_t steps, std::size_t trials) {
  if (n < 2) throw InputError("percolation needs at least 2 nodes");
  if (steps < 2) throw InputError("percolation needs at least 2 steps");
  if (trials < 1) throw InputError("at least one trial is required");
  if (!(r_max > 0.0) || !std::isfinite(r_max)) throw InputError("ratio maximum must be positive");
  const double edges = std::floor(r_max * static_cast<double>(n));
  if (edges > static_cast<double>(max_edges(n))) {
    throw InputError("ratio maximum asks for more edges than a simple graph on " +
                     std::to_string(n) + " nodes has");
  }
}

void check_p_values(std::span<const double> p_values, std::size_t trials) {
  if (trials < 1) throw InputError("at least one trial is required");
  if (p_values.empty()) throw InputError("empty probability list");
  for (std::size_t i = 0; i < p_values.size(); ++i) {
    if (!(p_values[i] >= 0.0 && p_values[i] <= 1.0)) {
      throw InputError("probabilities must lie in [0, 1]");
    }
    if (i > 0 && !(p_values[i] > p_values[i - 1])) {
      throw InputError("probabilities must be strictly increasing");
    }
  }
}

std::vector<double> giant_component_trial(std::size_t n, double r_max, std::size_t steps,
                                          std::uint64_t seed) {
  const auto grid = detail::ratio_grid(r_max, steps);
  const auto total = static_cast<std::uint64_t>(std::floor(r_max * static_cast<double>(n)));
  const auto edges = sample_gnm(n, total, seed);

  UnionFind uf(n);
  std::vector<double> out;
  out.reserve(steps);
  std::uint64_t added = 0;
  for (const double ratio : grid) {
    const auto target = std::min(
        total, static_cast<std::uint64_t>(std::floor(ratio * static_cast<double>(n))));
    for (; added < target; ++added) uf.unite(edges[added].u, edges[added].v);
    out.push_back(static_cast<double>(uf.largest()) / static_cast<double>(n));
  }
  return out;
}

std::vector<std::uint8_t> raf_emergence_trial(const RandomSystemConfig& base,
                                              std::span<const double> p_values,
                                              std::uint64_t seed) {
  std::vector<std::uint8_t> out;
  out.reserve(p_values.size());
  RandomSystemConfig config = base;
  config.seed = seed;
  for (const double p : p_values) {
    config.catalysis_probability = p;
    const CompiledSystem cs(sample_random_system(config));
    const Mask raf = cs.max_raf(StimulusMode::Exclude);
    out.push_back(std::any_of(raf.begin(), raf.end(), [](auto b) { return b != 0; }));
  }
  return out;
}

}  // namespace kernels

namespace detail {

std::vector<double> ratio_grid(double r_max, std::size_t steps) {
  std::vector<double> grid(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    grid[i] = i + 1 == steps ? r_max
                             : r_max * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  return grid;
}

SweepResult average_trials(const std::vector<double>& controls,
                           const std::vector<std::vector<double>>& per_trial,
                           std::uint64_t seed, const TransitionCriterion& criterion) {
  SweepResult result;
  result.criterion = criterion;
  result.curve.seed = seed;
  result.curve.trials_per_point = per_trial.size();
  for (std::size_t i = 0; i < controls.size(); ++i) {
    double sum = 0.0;
    for (const auto& trial : per_trial) sum += trial[i];
    result.curve.points.push_back({controls[i], sum / static_cast<double>(per_trial.size())});
  }
  result.transition_estimate = estimate_transition(result.curve, criterion);
  return result;
}

SweepResult count_trials(std::span<const double> p_values,
                         const std::vector<std::vector<std::uint8_t>>& per_trial,
                         std::uint64_t seed, const TransitionCriterion& criterion) {
  SweepResult result;
  result.criterion = criterion;
  result.curve.seed = seed;
  result.curve.trials_per_point = per_trial.size();
  for (std::size_t i = 0; i < p_values.size(); ++i) {
    std::size_t hits = 0;
    for (const auto& trial : per_trial) hits += trial[i];
    result.curve.points.push_back(
        {p_values[i], static_cast<double>(hits) / static_cast<double>(per_trial.size())});
  }
  result.transition_estimate = estimate_transition(result.curve, criterion);
  return result;
}

}  // namespace detail
}  // namespace acn
