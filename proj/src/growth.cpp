#include "acn/growth.hpp"

#include <algorithm>

#include "acn/errors.hpp"
#include "acn/raf.hpp"

namespace acn {
namespace {

struct MaskStep {
  Mask present;
  Mask fired;
  bool grew = false;
};

MaskStep step_masks(const CompiledSystem& cs, const Mask& present, const Mask& active) {
  MaskStep out{present, Mask(cs.reaction_count(), 0), false};
  for (std::size_t r = 0; r < cs.reaction_count(); ++r) {
    const auto& e = cs.reaction(r);
    const bool fed =
        std::all_of(e.reactants.begin(), e.reactants.end(), [&](auto x) { return present[x]; });
    const bool cat = std::any_of(e.catalysts.begin(), e.catalysts.end(),
                                 [&](auto c) { return present[c] || active[c]; });
    if (!(fed && cat)) continue;
    out.fired[r] = 1;
    for (auto p : e.products) {
      if (!out.present[p]) out.present[p] = 1, out.grew = true;
    }
  }
  return out;
}

Mask checked_present(const CompiledSystem& cs, const ElementSet& present) {
  Mask m = cs.element_mask(present);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] && cs.kind(i) == ElementKind::Stimulus) {
      throw InputError("stimulus '" + cs.element_name(i) + "' cannot be a present element");
    }
  }
  return m;
}

Mask checked_stimuli(const CompiledSystem& cs, const ElementSet& stimuli) {
  Mask m = cs.element_mask(stimuli);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] && cs.kind(i) != ElementKind::Stimulus) {
      throw InputError("'" + cs.element_name(i) + "' is not a stimulus");
    }
  }
  return m;
}

// Restrict to reactions whose reactants and products are all present; the
// closure can then only reach present elements, so catalysts outside the
// present set are ignored as well.
bool induced_self_sustaining(const CompiledSystem& cs, const Mask& present) {
  Mask candidates(cs.reaction_count(), 0);
  for (std::size_t r = 0; r < cs.reaction_count(); ++r) {
    const auto& e = cs.reaction(r);
    auto in = [&](auto x) { return present[x] != 0; };
    candidates[r] = std::all_of(e.reactants.begin(), e.reactants.end(), in) &&
                    std::all_of(e.products.begin(), e.products.end(), in);
  }
  const Mask raf = cs.max_raf(candidates, StimulusMode::Exclude);
  return std::any_of(raf.begin(), raf.end(), [](auto b) { return b != 0; });
}

}  // namespace

StimulusSchedule StimulusSchedule::always(const ElementSet& stimuli, Tick end) {
  StimulusSchedule s;
  for (const auto& id : stimuli) s.intervals[id] = {{0, end}};
  return s;
}

ElementSet StimulusSchedule::active_at(Tick t) const {
  ElementSet out;
  for (const auto& [id, list] : intervals) {
    for (const auto& iv : list) {
      if (iv.start <= t && t < iv.end) out.insert(id);
    }
  }
  return out;
}

bool StimulusSchedule::activates_after(Tick t) const {
  for (const auto& [id, list] : intervals) {
    for (const auto& iv : list) {
      if (iv.start > t) return true;
    }
  }
  return false;
}

void validate_schedule(const ReactionSystem& system, const StimulusSchedule& schedule) {
  for (const auto& [id, list] : schedule.intervals) {
    auto it = system.elements.find(id);
    if (it == system.elements.end()) throw InputError("unknown stimulus '" + id + "'");
    if (it->second != ElementKind::Stimulus) throw InputError("'" + id + "' is not a stimulus");
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i].start < 0 || list[i].start >= list[i].end) {
        throw InputError("empty or negative interval for stimulus '" + id + "'");
      }
      if (i > 0 && list[i].start < list[i - 1].end) {
        throw InputError("intervals for stimulus '" + id + "' overlap or are unsorted");
      }
    }
  }
}

StepResult step(const ReactionSystem& system, const ElementSet& present,
                const ElementSet& active_stimuli) {
  const CompiledSystem cs(system);
  const auto s = step_masks(cs, checked_present(cs, present), checked_stimuli(cs, active_stimuli));
  return {cs.element_names(s.present), cs.reaction_names(s.fired)};
}

GrowthTrace run_growth(const ReactionSystem& system, const StimulusSchedule& schedule,
                       Tick max_ticks) {
  if (max_ticks < 1) throw InputError("max ticks must be at least 1");
  validate_schedule(system, schedule);
  const CompiledSystem cs(system);

  GrowthTrace trace;
  Mask present = cs.base_elements(StimulusMode::Exclude);
  auto record = [&](Tick t, const Mask& fired) {
    TickRecord rec{t, cs.element_names(present), cs.reaction_names(fired),
                   induced_self_sustaining(cs, present)};
    for (const auto& id : rec.present) trace.first_appearance.emplace(id, t);
    if (rec.self_sustaining && !trace.self_sustaining_from) trace.self_sustaining_from = t;
    trace.ticks.push_back(std::move(rec));
  };

  record(0, Mask(cs.reaction_count(), 0));
  for (Tick t = 0; t < max_ticks; ++t) {
    const Mask active = checked_stimuli(cs, schedule.active_at(t));
    auto s = step_masks(cs, present, active);
    present = std::move(s.present);
    record(t + 1, s.fired);
    if (!s.grew && !schedule.activates_after(t)) break;
  }
  return trace;
}

ElementSet reachable_dynamic(const ReactionSystem& system, const ElementSet& always_active) {
  const CompiledSystem cs(system);
  const Mask active = checked_stimuli(cs, always_active);
  Mask present = cs.base_elements(StimulusMode::Exclude);
  for (;;) {
    auto s = step_masks(cs, present, active);
    if (!s.grew) return cs.element_names(present);
    present = std::move(s.present);
  }
}

}  // namespace acn
