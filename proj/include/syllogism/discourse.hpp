#pragma once

#include <optional>
#include <vector>

#include "syllogism/finite_semantics.hpp"
#include "syllogism/script_types.hpp"

namespace syl {

struct LinkReport {
  std::size_t index = 0;
  // Link 0 is always chained; link k>0 needs the conclusion of link k-1 among its premises.
  bool structural_ok = true;
  Verdict verdict;
  // Declared name agrees with the formula; empty when no name was given.
  std::optional<bool> name_ok;
  // Filled when closure membership was requested.
  std::optional<bool> in_closure;

  bool ok() const { return structural_ok && verdict.status == Status::valid_up_to_bound; }
};

struct DiscourseVerdict {
  bool valid = false;
  std::vector<LinkReport> links;
};

struct DiscourseOptions {
  bool closure = false;
  int closure_depth = 7;
  bool closure_strict = true;
};

DiscourseVerdict check_discourse(const Discourse& d, const SearchBounds& b = {},
                                 const DiscourseOptions& opts = {});

}  // namespace syl
