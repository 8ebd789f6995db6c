#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "syllogism/core_model.hpp"
#include "syllogism/square_algebra.hpp"

namespace syl {

class UnknownAtom : public Error {
 public:
  using Error::Error;
};

class BoundsExceeded : public Error {
 public:
  using Error::Error;
};

// Extension of each atom in one world, as 1-based domain elements.
struct World {
  std::map<std::string, std::set<int>> extensions;

  bool operator==(const World&) const = default;
};

struct KripkeModel {
  int domain_size = 1;
  std::vector<World> worlds;
  std::size_t actual = 0;

  bool operator==(const KripkeModel&) const = default;
};

struct SearchBounds {
  int max_domain = 4;
  int max_worlds = 2;
  bool rigid = false;
  // Base-atom extensions are non-empty in every world; complements may be empty.
  bool existential_import = true;
  int max_atoms = 4;
  // Worker threads for countermodel search; results are identical for any value.
  unsigned threads = 1;
};

enum class Status : std::uint8_t { valid_up_to_bound, invalid };

std::string_view keyword(Status s);

struct Verdict {
  Status status = Status::valid_up_to_bound;
  std::optional<KripkeModel> countermodel;
  SearchBounds bounds;
};

// Truth of p at the given world. Counting quantifiers compare 2|S∩T| with |S|
// in integers; [] ranges over all worlds and <> over at least one.
bool eval_proposition(const Proposition& p, const KripkeModel& m, std::size_t world_index);

// Premises at the actual world imply the conclusion there.
bool holds(const ConditionalWff& w, const KripkeModel& m);

// Exhaustive search over Venn-region cardinality vectors, by increasing domain
// size, then world count. Returns the first falsifying model in that order.
std::optional<KripkeModel> find_countermodel(const ConditionalWff& w, const SearchBounds& b = {});

Verdict check_validity(const ConditionalWff& w, const SearchBounds& b = {});

struct AuditEntry {
  std::string license_id;
  // One checked conditional per direction and quantifier instance.
  std::vector<ConditionalWff> checked;
  bool passed = true;
  std::optional<ConditionalWff> failing_wff;
  std::optional<KripkeModel> countermodel;
};

struct AuditReport {
  std::vector<AuditEntry> entries;

  std::size_t passed() const;
  std::size_t failed() const;
};

// Checks every license (both directions of equivalences) as a conditional over
// the atoms p and w.
AuditReport audit_facts(const SearchBounds& b = {});

// Empty-subject soundness of an implication license: whether it survives
// instantiating the subject with a complemented (possibly empty) term.
bool survives_empty_subject(const FactLicense& lic, const SearchBounds& b = {});

struct CensusRow {
  Mnemonic mnemonic;
  ConditionalWff wff;
  Verdict verdict;
};

struct CensusTable {
  std::vector<CensusRow> rows;
  std::size_t valid_count() const;
};

// Classifies every syllogism form over the given letters and figures, in
// mnemonic order (figure, then major, minor, conclusion; modalities innermost).
CensusTable census(const std::vector<Quantifier>& letters, const std::vector<int>& figures,
                   bool modal, const SearchBounds& b = {});

}  // namespace syl
