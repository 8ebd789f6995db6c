#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "syllogism/core_model.hpp"

namespace syl {

enum class NegationMode : std::uint8_t { inner, outer, dual };

// Q~, ~Q and ~Q~ respectively.
Quantifier negate(Quantifier q, NegationMode mode);

enum class SquareId : std::uint8_t { all_square, most_square };

SquareId square_of(Quantifier q);

// Negations of a modality applied across a sentential negation:
// ~[]X == <>~X and ~<>X == []~X.
Modality dual(Modality m);

enum class LicenseKind : std::uint8_t { equivalence, implication };

// One entry of the fact tables. Schemas are written over the placeholder terms
// p and w. When `schematic_quantifier` is set, the quantifier fields of lhs and
// rhs are placeholders and the license stands for its 8 instances.
struct FactLicense {
  std::string id;  // "1.1" ... "5.2"
  LicenseKind kind = LicenseKind::equivalence;
  Proposition lhs;
  Proposition rhs;
  bool schematic_quantifier = false;
  // False when soundness rests on the subject being non-empty; the kernel then
  // refuses to instantiate the subject with a complemented term.
  bool empty_subject_safe = true;
  // False for licenses that fail the finite semantic audit; strict mode drops them.
  bool audited_sound = true;
};

// All 32 licenses, in table order.
std::span<const FactLicense> fact_licenses();

const FactLicense* find_license(std::string_view id);

// Concrete instances of a license (8 for schematic ones, 1 otherwise).
struct LicenseInstance {
  Proposition lhs;
  Proposition rhs;
};
std::vector<LicenseInstance> instances(const FactLicense& lic);

}  // namespace syl
