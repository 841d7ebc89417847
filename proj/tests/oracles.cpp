#include "oracles.hpp"

#include <algorithm>
#include <queue>

namespace acn::oracle {

ElementSet closure(const ReactionSystem& system, const ElementSet& seed,
                   const ReactionSet& subset) {
  ElementSet w = seed;
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& r : system.reactions) {
      if (!subset.contains(r.id)) continue;
      if (!std::includes(w.begin(), w.end(), r.reactants.begin(), r.reactants.end())) continue;
      for (const auto& p : r.products) grew |= w.insert(p).second;
    }
  }
  return w;
}

bool is_raf(const ReactionSystem& system, const ReactionSet& subset, bool include_stimuli) {
  if (subset.empty()) return false;
  ElementSet f = system.foodset();
  if (include_stimuli) f.merge(system.stimuli());
  const ElementSet w = closure(system, f, subset);
  for (const auto& r : system.reactions) {
    if (!subset.contains(r.id)) continue;
    if (!std::includes(w.begin(), w.end(), r.reactants.begin(), r.reactants.end())) return false;
    if (std::none_of(r.catalysts.begin(), r.catalysts.end(),
                     [&](const auto& c) { return w.contains(c); })) {
      return false;
    }
  }
  return true;
}

ReactionSet max_raf(const ReactionSystem& system, bool include_stimuli) {
  const std::size_t n = system.reactions.size();
  ReactionSet united;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    ReactionSet subset;
    for (std::size_t i = 0; i < n; ++i) {
      if (bits >> i & 1) subset.insert(system.reactions[i].id);
    }
    if (is_raf(system, subset, include_stimuli)) united.insert(subset.begin(), subset.end());
  }
  return united;
}

double largest_component_fraction(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> seen(n, false);
  std::size_t best = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::size_t size = 0;
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      auto x = q.front();
      q.pop();
      ++size;
      for (auto y : adj[x]) {
        if (!seen[y]) seen[y] = true, q.push(y);
      }
    }
    best = std::max(best, size);
  }
  return static_cast<double>(best) / static_cast<double>(n);
}

ElementSet step(const ReactionSystem& system, const ElementSet& present,
                const ElementSet& active) {
  ElementSet next = present;
  for (const auto& r : system.reactions) {
    const bool fed =
        std::includes(present.begin(), present.end(), r.reactants.begin(), r.reactants.end());
    const bool cat = std::any_of(r.catalysts.begin(), r.catalysts.end(), [&](const auto& c) {
      return present.contains(c) || active.contains(c);
    });
    if (fed && cat) next.insert(r.products.begin(), r.products.end());
  }
  return next;
}

ReactionSystem random_small_system(std::mt19937_64& rng) {
  RandomSystemConfig c;
  c.n_food = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  c.n_derived = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
  c.reactions_per_derived = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
  c.n_stimuli = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
  c.catalysis_probability = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
  c.seed = rng();
  return sample_random_system(c);
}

ElementSet random_subset(const ElementSet& from, std::mt19937_64& rng) {
  ElementSet out;
  for (const auto& e : from) {
    if (rng() & 1) out.insert(e);
  }
  return out;
}

ReactionSet random_reaction_subset(const ReactionSystem& system, std::mt19937_64& rng) {
  ReactionSet out;
  for (const auto& r : system.reactions) {
    if (rng() & 1) out.insert(r.id);
  }
  return out;
}

}  // namespace acn::oracle
