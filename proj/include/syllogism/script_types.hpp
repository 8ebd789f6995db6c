#pragma once

#include <optional>
#include <string>
#include <vector>

#include "syllogism/core_model.hpp"

namespace syl {

enum class JustificationKind : std::uint8_t { axiom, rule1, rule2, rule3, rewrite, converse, d3 };

std::string_view keyword(JustificationKind k);

// Why a derivation step holds. `inputs` are step ids: the premise step first,
// then (for rule1/rule2 citing a proved implication) the implication's step.
struct Justification {
  JustificationKind kind = JustificationKind::axiom;
  std::vector<int> inputs;
  std::vector<std::string> licenses;  // fact ids, or "A2" for the axiom

  auto operator<=>(const Justification&) const = default;
};

struct DerivationStep {
  int id = 0;
  ConditionalWff wff;
  Justification justification;
  std::optional<Mnemonic> name;
  int line = 0;
};

struct DerivationScript {
  std::string label;
  std::vector<DerivationStep> steps;
};

struct DiscourseLink {
  std::optional<Mnemonic> name;
  ConditionalWff wff;
  int line = 0;
};

struct Discourse {
  std::vector<DiscourseLink> links;
};

}  // namespace syl
