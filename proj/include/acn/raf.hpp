#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "acn/model.hpp"

namespace acn {

enum class StimulusMode { Exclude, Include };

// Membership flags indexed by element or reaction position.
using Mask = std::vector<std::uint8_t>;

// Index form of a validated ReactionSystem. Element indices follow the
// sorted element map; reaction indices follow the reaction list.
class CompiledSystem {
 public:
  struct Entry {
    std::vector<std::uint32_t> reactants;
    std::vector<std::uint32_t> products;
    std::vector<std::uint32_t> catalysts;
  };

  // Throws InputError naming the first violation if `system` is invalid.
  explicit CompiledSystem(const ReactionSystem& system);

  std::size_t element_count() const { return names_.size(); }
  std::size_t reaction_count() const { return entries_.size(); }
  const std::string& element_name(std::size_t i) const { return names_[i]; }
  const std::string& reaction_name(std::size_t i) const { return reaction_names_[i]; }
  ElementKind kind(std::size_t i) const { return kinds_[i]; }
  const Entry& reaction(std::size_t i) const { return entries_[i]; }

  std::size_t element_index(std::string_view id) const;
  std::size_t reaction_index(std::string_view id) const;

  Mask element_mask(const ElementSet& ids) const;
  Mask reaction_mask(const ReactionSet& ids) const;
  ElementSet element_names(const Mask& mask) const;
  ReactionSet reaction_names(const Mask& mask) const;

  // Foodset, plus stimuli when requested.
  Mask base_elements(StimulusMode mode) const;
  Mask all_reactions() const { return Mask(reaction_count(), 1); }

  // Smallest superset of `seed` closed under the reactions in `subset`,
  // catalysis ignored. Worklist propagation, linear in system size.
  Mask closure(const Mask& seed, const Mask& subset) const;

  bool is_raf(const Mask& subset, StimulusMode mode) const;

  // Fixed-point pruning: drop reactions that are not fed from the closure
  // or have no catalyst in it, until nothing changes.
  Mask max_raf(StimulusMode mode) const;
  Mask max_raf(const Mask& candidates, StimulusMode mode) const;

 private:
  bool catalysed_by(std::size_t r, const Mask& present) const;
  bool fed_by(std::size_t r, const Mask& present) const;

  std::vector<std::string> names_;
  std::vector<ElementKind> kinds_;
  std::vector<std::string> reaction_names_;
  std::vector<Entry> entries_;
  std::vector<std::vector<std::uint32_t>> consumers_;  // element -> reactions using it as reactant
  std::unordered_map<std::string, std::size_t> element_lookup_;
  std::unordered_map<std::string, std::size_t> reaction_lookup_;
};

ElementSet closure(const ReactionSystem& system, const ElementSet& seed,
                   const ReactionSet& subset);

bool is_raf(const ReactionSystem& system, const ReactionSet& subset, StimulusMode mode);

ReactionSet max_raf(const ReactionSystem& system, StimulusMode mode);

inline constexpr std::size_t kBruteForceReactionCap = 20;

// Union of every RAF found by enumerating all reaction subsets. Exponential;
// refuses systems with more than kBruteForceReactionCap reactions.
ReactionSet brute_force_max_raf(const ReactionSystem& system, StimulusMode mode);

enum class Verdict { None, Transient, SelfSustaining };

std::string_view to_string(Verdict verdict);

struct Classification {
  Verdict verdict = Verdict::None;
  ReactionSet max_raf_with_stimuli;
  ReactionSet max_raf_without_stimuli;
};

Classification classify(const ReactionSystem& system);

}  // namespace acn
