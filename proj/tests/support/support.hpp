#pragma once

#include <random>
#include <string>
#include <vector>

#include "syllogism/core_model.hpp"
#include "syllogism/finite_semantics.hpp"

namespace syl::testing {

struct PropertyResult {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return cases > 0 && failures == 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

// Naive search over labeled subsets: every atom gets an explicit subset of
// {1..d} in every world. Shares no code with the library's search.
bool oracle_has_countermodel(const ConditionalWff& w, const SearchBounds& b);

// Independent evaluation of a proposition over explicit sets.
bool oracle_eval(const Proposition& p, const KripkeModel& m, std::size_t world);

Proposition random_proposition(std::mt19937& rng, const std::vector<std::string>& atoms, bool modal = true);
ConditionalWff random_wff(std::mt19937& rng, const std::vector<std::string>& atoms, bool modal = true);
KripkeModel random_model(std::mt19937& rng, const std::vector<std::string>& atoms, int max_domain,
                         int max_worlds, bool existential_import = true);

// The property suites, also run by the acceptance binary.
PropertyResult square_algebra_properties();
PropertyResult mnemonic_roundtrips();  // all 2048 non-modal codes
PropertyResult oracle_equivalence(std::size_t count = 500, unsigned seed = 20240611);
PropertyResult strict_random_derivations(std::size_t count = 1000, int max_depth = 5, unsigned seed = 7);

}  // namespace syl::testing
