#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "syllogism/finite_semantics.hpp"
#include "syllogism/proof_kernel.hpp"
#include "syllogism/script_types.hpp"

namespace syl {

enum class Expectation : std::uint8_t { valid, invalid, mode_dependent };

std::string_view keyword(Expectation e);
Expectation expectation_from_keyword(std::string_view s);

struct RegistryEntry {
  Mnemonic mnemonic;
  ConditionalWff wff;  // canonical expansion of the mnemonic
  std::string source;  // "thm4_2:18", "axiom A2" or "sect5:3"
  Expectation expectation = Expectation::valid;

  bool from_theorem() const { return source.starts_with("thm"); }
};

struct Erratum {
  std::string script;
  std::string step;  // step id, or "list N" for an item of a theorem's list
  std::string printed;
  std::string corrected;
  std::string reason;
};

// SYL_CORPUS_DIR when set, otherwise the directory the build was configured with.
std::filesystem::path corpus_dir();
std::string read_corpus_file(const std::string& name);

// The four derivation scripts, in the order they are verified.
const std::vector<std::string>& corpus_script_labels();
DerivationScript load_script(const std::string& label);
Discourse load_discourse();

// Loads registry.tsv and checks its invariants: every wff is the expansion of
// its mnemonic and no mnemonic appears twice.
std::vector<RegistryEntry> registry();
std::vector<Erratum> errata();

struct RegistryCheck {
  std::size_t index = 0;                // into CorpusReport::registry
  Verdict verdict;                      // at the requested bounds
  std::optional<Verdict> rigid_verdict; // mode_dependent entries only
  bool matches = false;
};

struct ScriptSummary {
  ReplayReport replay;
  // Names minted by this script and by no earlier one, the axiom excluded.
  std::vector<Mnemonic> fresh_names;
  std::size_t expected_names = 0;
};

struct CorpusReport {
  std::vector<ScriptSummary> scripts;
  std::size_t total_steps = 0;
  std::vector<RegistryCheck> entries;  // empty when semantics were skipped
  std::vector<Mnemonic> missing_from_scripts;  // registry theorem names no script mints
  std::vector<Mnemonic> missing_from_registry; // minted names absent from the registry
  std::vector<RegistryEntry> registry;

  bool replay_ok() const;
  bool counts_ok() const;
  bool names_ok() const { return missing_from_scripts.empty() && missing_from_registry.empty(); }
  bool semantics_ok() const;
  bool ok() const { return replay_ok() && counts_ok() && names_ok() && semantics_ok(); }
};

struct CorpusOptions {
  bool semantics = true;
  KernelOptions kernel;
};

CorpusReport verify_corpus(const SearchBounds& b = {}, const CorpusOptions& opts = {});

}  // namespace syl
