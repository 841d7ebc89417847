#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace acn {

using ElementId = std::string;
using ElementSet = std::set<ElementId>;
using ReactionSet = std::set<std::string>;

enum class ElementKind { Food, Derived, Stimulus };

std::string_view to_string(ElementKind kind);

struct Reaction {
  std::string id;
  ElementSet reactants;
  ElementSet products;
  ElementSet catalysts;

  bool operator==(const Reaction&) const = default;
};

// A catalytic reaction system. Plain value type: it can hold an invalid
// configuration, which validate_system() reports on.
struct ReactionSystem {
  std::map<ElementId, ElementKind> elements;
  std::vector<Reaction> reactions;

  bool operator==(const ReactionSystem&) const = default;

  ElementSet elements_of_kind(ElementKind kind) const;
  ElementSet foodset() const { return elements_of_kind(ElementKind::Food); }
  ElementSet stimuli() const { return elements_of_kind(ElementKind::Stimulus); }
  ReactionSet reaction_ids() const;
  const Reaction* find_reaction(std::string_view id) const;
};

// Same elements and the same reactions, ignoring reaction list order.
bool structurally_equal(const ReactionSystem& a, const ReactionSystem& b);

// Copy of `system` with reactions sorted by id.
ReactionSystem canonical_order(ReactionSystem system);

bool is_valid_id(std::string_view id);

struct Violation {
  std::string subject;  // reaction id, element id, or "system"
  std::string element;  // offending element id, empty if not applicable
  std::string message;

  bool operator==(const Violation&) const = default;
};

std::vector<Violation> validate_system(const ReactionSystem& system);

enum class FigureStage { A, B, C, D };

// Cumulative snapshots of the four-stage growth figure:
//   R1: f1 + f2 -> d1   cat s        (stage D: cat s, d2)
//   R2: d1 -> d2        cat f2       (from stage B)
//   R3: d1 + d2 -> d3   cat f1       (from stage C)
ReactionSystem figure_system(FigureStage stage);

FigureStage parse_stage(std::string_view name);
char stage_letter(FigureStage stage);

}  // namespace acn
