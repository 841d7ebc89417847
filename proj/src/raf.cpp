#include "acn/raf.hpp"

#include <algorithm>
#include <deque>

#include "acn/errors.hpp"

namespace acn {
namespace {

std::vector<std::uint32_t> to_indices(const ElementSet& ids,
                                      const std::unordered_map<std::string, std::size_t>& lookup) {
  std::vector<std::uint32_t> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(static_cast<std::uint32_t>(lookup.at(id)));
  return out;
}

}  // namespace

CompiledSystem::CompiledSystem(const ReactionSystem& system) {
  if (auto violations = validate_system(system); !violations.empty()) {
    const auto& v = violations.front();
    std::string msg = "invalid system: " + v.message + " (" + v.subject;
    if (!v.element.empty()) msg += ", " + v.element;
    throw InputError(msg + ")");
  }
  for (const auto& [id, kind] : system.elements) {
    element_lookup_.emplace(id, names_.size());
    names_.push_back(id);
    kinds_.push_back(kind);
  }
  consumers_.resize(names_.size());
  for (const auto& r : system.reactions) {
    const auto index = static_cast<std::uint32_t>(entries_.size());
    reaction_lookup_.emplace(r.id, index);
    reaction_names_.push_back(r.id);
    Entry e{to_indices(r.reactants, element_lookup_), to_indices(r.products, element_lookup_),
            to_indices(r.catalysts, element_lookup_)};
    for (auto x : e.reactants) consumers_[x].push_back(index);
    entries_.push_back(std::move(e));
  }
}

std::size_t CompiledSystem::element_index(std::string_view id) const {
  auto it = element_lookup_.find(std::string(id));
  if (it == element_lookup_.end()) throw InputError("unknown element '" + std::string(id) + "'");
  return it->second;
}

std::size_t CompiledSystem::reaction_index(std::string_view id) const {
  auto it = reaction_lookup_.find(std::string(id));
  if (it == reaction_lookup_.end()) throw InputError("unknown reaction '" + std::string(id) + "'");
  return it->second;
}

Mask CompiledSystem::element_mask(const ElementSet& ids) const {
  Mask m(element_count(), 0);
  for (const auto& id : ids) m[element_index(id)] = 1;
  return m;
}

Mask CompiledSystem::reaction_mask(const ReactionSet& ids) const {
  Mask m(reaction_count(), 0);
  for (const auto& id : ids) m[reaction_index(id)] = 1;
  return m;
}

ElementSet CompiledSystem::element_names(const Mask& mask) const {
  ElementSet out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.insert(names_[i]);
  }
  return out;
}

ReactionSet CompiledSystem::reaction_names(const Mask& mask) const {
  ReactionSet out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.insert(reaction_names_[i]);
  }
  return out;
}

Mask CompiledSystem::base_elements(StimulusMode mode) const {
  Mask m(element_count(), 0);
  for (std::size_t i = 0; i < kinds_.size(); ++i) {
    m[i] = kinds_[i] == ElementKind::Food ||
           (mode == StimulusMode::Include && kinds_[i] == ElementKind::Stimulus);
  }
  return m;
}

Mask CompiledSystem::closure(const Mask& seed, const Mask& subset) const {
  Mask present = seed;
  // missing[r] = reactants of r not yet present; r fires when it hits zero.
  std::vector<std::uint32_t> missing(reaction_count(), 0);
  std::deque<std::uint32_t> ready;
  for (std::size_t r = 0; r < reaction_count(); ++r) {
    if (!subset[r]) continue;
    for (auto x : entries_[r].reactants) missing[r] += !present[x];
    if (missing[r] == 0) ready.push_back(static_cast<std::uint32_t>(r));
  }
  while (!ready.empty()) {
    const auto r = ready.front();
    ready.pop_front();
    for (auto p : entries_[r].products) {
      if (present[p]) continue;
      present[p] = 1;
      for (auto c : consumers_[p]) {
        if (subset[c] && --missing[c] == 0) ready.push_back(c);
      }
    }
  }
  return present;
}

bool CompiledSystem::fed_by(std::size_t r, const Mask& present) const {
  const auto& xs = entries_[r].reactants;
  return std::all_of(xs.begin(), xs.end(), [&](auto x) { return present[x] != 0; });
}

bool CompiledSystem::catalysed_by(std::size_t r, const Mask& present) const {
  const auto& cs = entries_[r].catalysts;
  return std::any_of(cs.begin(), cs.end(), [&](auto c) { return present[c] != 0; });
}

bool CompiledSystem::is_raf(const Mask& subset, StimulusMode mode) const {
  if (std::none_of(subset.begin(), subset.end(), [](auto b) { return b != 0; })) return false;
  const Mask reached = closure(base_elements(mode), subset);
  for (std::size_t r = 0; r < reaction_count(); ++r) {
    if (subset[r] && !(fed_by(r, reached) && catalysed_by(r, reached))) return false;
  }
  return true;
}

Mask CompiledSystem::max_raf(StimulusMode mode) const { return max_raf(all_reactions(), mode); }

Mask CompiledSystem::max_raf(const Mask& candidates, StimulusMode mode) const {
  const Mask base = base_elements(mode);
  Mask current = candidates;
  for (;;) {
    const Mask reached = closure(base, current);
    bool changed = false;
    for (std::size_t r = 0; r < reaction_count(); ++r) {
      if (current[r] && !(fed_by(r, reached) && catalysed_by(r, reached))) {
        current[r] = 0;
        changed = true;
      }
    }
    if (!changed) return current;
  }
}

ElementSet closure(const ReactionSystem& system, const ElementSet& seed,
                   const ReactionSet& subset) {
  const CompiledSystem cs(system);
  return cs.element_names(cs.closure(cs.element_mask(seed), cs.reaction_mask(subset)));
}

bool is_raf(const ReactionSystem& system, const ReactionSet& subset, StimulusMode mode) {
  const CompiledSystem cs(system);
  return cs.is_raf(cs.reaction_mask(subset), mode);
}

ReactionSet max_raf(const ReactionSystem& system, StimulusMode mode) {
  const CompiledSystem cs(system);
  return cs.reaction_names(cs.max_raf(mode));
}

ReactionSet brute_force_max_raf(const ReactionSystem& system, StimulusMode mode) {
  if (system.reactions.size() > kBruteForceReactionCap) {
    throw InputError("brute-force maxRAF refuses " + std::to_string(system.reactions.size()) +
                     " reactions (cap is " + std::to_string(kBruteForceReactionCap) + ")");
  }
  const CompiledSystem cs(system);
  const std::size_t n = cs.reaction_count();
  const Mask base = cs.base_elements(mode);

  // Naive rescan closure, kept separate from the worklist path it checks.
  auto naive_closure = [&](std::uint32_t bits) {
    Mask present = base;
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t r = 0; r < n; ++r) {
        if (!(bits >> r & 1u)) continue;
        const auto& e = cs.reaction(r);
        bool fed = true;
        for (auto x : e.reactants) fed = fed && present[x];
        if (!fed) continue;
        for (auto p : e.products) {
          if (!present[p]) present[p] = 1, grew = true;
        }
      }
    }
    return present;
  };

  std::uint32_t united = 0;
  const std::uint32_t limit = n == 0 ? 0u : (1u << n);
  for (std::uint32_t bits = 1; bits < limit; ++bits) {
    const Mask reached = naive_closure(bits);
    bool raf = true;
    for (std::size_t r = 0; r < n && raf; ++r) {
      if (!(bits >> r & 1u)) continue;
      const auto& e = cs.reaction(r);
      bool fed = true, cat = false;
      for (auto x : e.reactants) fed = fed && reached[x];
      for (auto c : e.catalysts) cat = cat || reached[c];
      raf = fed && cat;
    }
    if (raf) united |= bits;
  }

  ReactionSet out;
  for (std::size_t r = 0; r < n; ++r) {
    if (united >> r & 1u) out.insert(cs.reaction_name(r));
  }
  return out;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::None:
      return "NONE";
    case Verdict::Transient:
      return "TRANSIENT";
    case Verdict::SelfSustaining:
      return "SELF_SUSTAINING";
  }
  return "UNKNOWN";
}

Classification classify(const ReactionSystem& system) {
  const CompiledSystem cs(system);
  Classification c;
  c.max_raf_with_stimuli = cs.reaction_names(cs.max_raf(StimulusMode::Include));
  c.max_raf_without_stimuli = cs.reaction_names(cs.max_raf(StimulusMode::Exclude));
  if (!c.max_raf_without_stimuli.empty()) {
    c.verdict = Verdict::SelfSustaining;
  } else if (!c.max_raf_with_stimuli.empty()) {
    c.verdict = Verdict::Transient;
  } else {
    c.verdict = Verdict::None;
  }
  return c;
}

}  // namespace acn
