#include "acn/model.hpp"

#include <algorithm>

#include "acn/errors.hpp"

namespace acn {

std::string_view to_string(ElementKind kind) {
  switch (kind) {
    case ElementKind::Food:
      return "food";
    case ElementKind::Derived:
      return "derived";
    case ElementKind::Stimulus:
      return "stimulus";
  }
  return "unknown";
}

ElementSet ReactionSystem::elements_of_kind(ElementKind kind) const {
  ElementSet out;
  for (const auto& [id, k] : elements) {
    if (k == kind) out.insert(id);
  }
  return out;
}

ReactionSet ReactionSystem::reaction_ids() const {
  ReactionSet out;
  for (const auto& r : reactions) out.insert(r.id);
  return out;
}

const Reaction* ReactionSystem::find_reaction(std::string_view id) const {
  for (const auto& r : reactions) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

ReactionSystem canonical_order(ReactionSystem system) {
  std::stable_sort(system.reactions.begin(), system.reactions.end(),
                   [](const Reaction& a, const Reaction& b) { return a.id < b.id; });
  return system;
}

bool structurally_equal(const ReactionSystem& a, const ReactionSystem& b) {
  return canonical_order(a) == canonical_order(b);
}

bool is_valid_id(std::string_view id) {
  if (id.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(id.front())) return false;
  return std::all_of(id.begin(), id.end(), [&](char c) { return alpha(c) || digit(c); });
}

std::vector<Violation> validate_system(const ReactionSystem& system) {
  std::vector<Violation> out;

  for (const auto& [id, kind] : system.elements) {
    if (!is_valid_id(id)) out.push_back({id, id, "malformed element id"});
  }
  if (system.foodset().empty()) out.push_back({"system", "", "empty foodset"});

  std::set<std::string> seen;
  for (const auto& r : system.reactions) {
    if (!is_valid_id(r.id)) out.push_back({r.id, "", "malformed reaction id"});
    if (!seen.insert(r.id).second) out.push_back({r.id, "", "duplicate reaction id"});
    if (r.reactants.empty()) out.push_back({r.id, "", "no reactants"});
    if (r.products.empty()) out.push_back({r.id, "", "no products"});

    auto kind_of = [&](const ElementId& e) -> const ElementKind* {
      auto it = system.elements.find(e);
      return it == system.elements.end() ? nullptr : &it->second;
    };

    for (const auto& e : r.reactants) {
      const ElementKind* k = kind_of(e);
      if (k == nullptr) {
        out.push_back({r.id, e, "unknown element"});
      } else if (*k == ElementKind::Stimulus) {
        out.push_back({r.id, e, "stimulus used as reactant"});
      }
    }
    for (const auto& e : r.products) {
      const ElementKind* k = kind_of(e);
      if (k == nullptr) {
        out.push_back({r.id, e, "unknown element"});
      } else if (r.reactants.contains(e)) {
        out.push_back({r.id, e, "product is also a reactant"});
      } else if (*k != ElementKind::Derived) {
        out.push_back({r.id, e, "product is not a derived element"});
      }
    }
    for (const auto& e : r.catalysts) {
      if (kind_of(e) == nullptr) out.push_back({r.id, e, "unknown element"});
    }
  }
  return out;
}

ReactionSystem figure_system(FigureStage stage) {
  ReactionSystem sys;
  sys.elements = {{"f1", ElementKind::Food},
                  {"f2", ElementKind::Food},
                  {"s", ElementKind::Stimulus},
                  {"d1", ElementKind::Derived}};
  sys.reactions.push_back({"R1", {"f1", "f2"}, {"d1"}, {"s"}});
  if (stage == FigureStage::A) return sys;

  sys.elements.emplace("d2", ElementKind::Derived);
  sys.reactions.push_back({"R2", {"d1"}, {"d2"}, {"f2"}});
  if (stage == FigureStage::B) return sys;

  sys.elements.emplace("d3", ElementKind::Derived);
  sys.reactions.push_back({"R3", {"d1", "d2"}, {"d3"}, {"f1"}});
  if (stage == FigureStage::C) return sys;

  sys.reactions.front().catalysts.insert("d2");
  return sys;
}

FigureStage parse_stage(std::string_view name) {
  if (name == "A" || name == "a") return FigureStage::A;
  if (name == "B" || name == "b") return FigureStage::B;
  if (name == "C" || name == "c") return FigureStage::C;
  if (name == "D" || name == "d") return FigureStage::D;
  throw InputError("unknown figure stage '" + std::string(name) + "'");
}

char stage_letter(FigureStage stage) {
  return "ABCD"[static_cast<int>(stage)];
}

}  // namespace acn
