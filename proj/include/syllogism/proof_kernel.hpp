#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "syllogism/core_model.hpp"
#include "syllogism/script_types.hpp"

namespace syl {

// Proved conditionals with provenance, indexed by step id and by canonical form.
class ProvedSet {
 public:
  struct Entry {
    ConditionalWff wff;  // as written
    std::string provenance;
    std::optional<int> step;
  };

  // Returns false when the canonical form was already present.
  bool add(ConditionalWff wff, std::string provenance, std::optional<int> step = std::nullopt);

  const ConditionalWff* step(int id) const;
  bool contains(const ConditionalWff& wff) const;
  const Entry* find(const ConditionalWff& wff) const;

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<Entry> entries_;
  std::map<ConditionalWff, std::size_t> canonical_;
  std::map<int, ConditionalWff> by_step_;  // literal formula of each step
};

enum class RejectCode : std::uint8_t {
  none,
  unresolved_input,  // cited step missing from the proved set
  license_mismatch,  // wrong kind of license for the move, or no instance fits
  wrong_shape,       // target does not have the shape the rule produces
  excluded_license,  // license dropped in strict mode
  name_mismatch,     // declared mnemonic disagrees with the formula
};

std::string_view keyword(RejectCode c);

struct DeriveResult {
  bool accepted = false;
  RejectCode code = RejectCode::none;
  std::string reason;

  explicit operator bool() const { return accepted; }
};

struct KernelOptions {
  // Drop licenses that fail the semantic audit.
  bool strict = false;
};

// The syllogism all(n,w) & most(p,n) -> some(p,w).
ConditionalWff axiom_a2();

// Checks that `target` follows from the cited inputs by the cited move, modulo
// conjunct commutation, double-negation elimination and congruence of the cited
// equivalences inside negations and modalities.
DeriveResult derive_step(const Justification& j, const ConditionalWff& target,
                         const ProvedSet& proved, const KernelOptions& opts = {});

struct ReplayReport {
  std::string label;
  std::size_t steps_checked = 0;
  std::size_t steps_accepted = 0;
  bool ok = true;
  std::optional<int> failed_step;
  std::string failure_reason;
  RejectCode failure_code = RejectCode::none;
  ProvedSet proved;
  // (step id, mnemonic) for each named step in script order.
  std::vector<std::pair<int, Mnemonic>> named;

  // Distinct names on non-axiom steps.
  std::vector<Mnemonic> minted() const;
};

ReplayReport replay(const DerivationScript& s, const KernelOptions& opts = {});

class NodeCapExceeded : public Error {
 public:
  using Error::Error;
};

struct MiningOptions {
  int depth = 7;
  bool strict = false;
  std::size_t node_cap = 1'000'000;
};

struct MinedWff {
  ConditionalWff wff;  // canonical
  int depth = 0;
  std::optional<std::size_t> parent;  // index into MiningResult::all
  std::string move;                   // e.g. "rule1 4.10", "rule3", "converse 3.1"
};

struct MiningResult {
  std::vector<MinedWff> all;  // breadth-first order
  bool complete = true;  // false when the frontier was still growing at `depth`

  // Indices of syllogism-shaped entries.
  std::vector<std::size_t> syllogisms() const;
  // Moves from a seed to entry i.
  std::vector<std::string> trace(std::size_t i) const;
};

// Breadth-first closure of the seeds under Rules 1-3 with every implication
// license, inner-negation rewriting (with complement terms), symmetry and the
// outer-negation/duality tables (absorbed by canonicalization). States are
// deduplicated by canonical form.
MiningResult mine(const std::vector<ConditionalWff>& seeds, const MiningOptions& opts = {});
MiningResult mine(const ProvedSet& seeds, const MiningOptions& opts = {});

}  // namespace syl
