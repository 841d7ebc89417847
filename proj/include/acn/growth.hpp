#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "acn/model.hpp"

namespace acn {

using Tick = std::int64_t;

// Half-open [start, end).
struct TickInterval {
  Tick start = 0;
  Tick end = 0;

  bool operator==(const TickInterval&) const = default;
};

struct StimulusSchedule {
  std::map<ElementId, std::vector<TickInterval>> intervals;

  // Every listed stimulus active on [0, end).
  static StimulusSchedule always(const ElementSet& stimuli, Tick end);

  ElementSet active_at(Tick t) const;
  bool activates_after(Tick t) const;  // some interval starts later than t
};

// Throws InputError for non-stimulus ids, empty or overlapping intervals.
void validate_schedule(const ReactionSystem& system, const StimulusSchedule& schedule);

struct StepResult {
  ElementSet present;
  ReactionSet fired;
};

// Fires, simultaneously, every reaction whose reactants are present and
// which has a catalyst among present elements or active stimuli.
StepResult step(const ReactionSystem& system, const ElementSet& present,
                const ElementSet& active_stimuli);

struct TickRecord {
  Tick tick = 0;
  ElementSet present;
  ReactionSet fired;
  // maxRAF of the subsystem induced by `present`, stimuli excluded, is non-empty.
  bool self_sustaining = false;

  bool operator==(const TickRecord&) const = default;
};

struct GrowthTrace {
  std::vector<TickRecord> ticks;
  std::map<ElementId, Tick> first_appearance;
  std::optional<Tick> self_sustaining_from;

  bool operator==(const GrowthTrace&) const = default;
};

// Starts from the foodset at tick 0. Tick t+1 is step() applied to tick t
// with the stimuli scheduled at tick t. Stops after max_ticks, or once a
// tick adds nothing and no stimulus interval starts later.
GrowthTrace run_growth(const ReactionSystem& system, const StimulusSchedule& schedule,
                       Tick max_ticks);

// Fixed point of step() from the foodset with the given stimuli always on.
ElementSet reachable_dynamic(const ReactionSystem& system, const ElementSet& always_active);

}  // namespace acn
