#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "syllogism/core_model.hpp"
#include "syllogism/script_types.hpp"

namespace syl {

// Malformed input. Line and column are 1-based.
class SourceError : public Error {
 public:
  SourceError(int line, int column, std::string message);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

// A proof step cites a step that is not defined before it.
class DanglingReference : public SourceError {
 public:
  using SourceError::SourceError;
};

// Grammar (ASCII, whitespace insensitive):
//
//   wff   := prems "->" prop | prop
//   prems := prop [ "&" prop ] | "(" prems ")"
//   prop  := { "~" } [ ("[]" | "<>" | "nec" | "pos") { "~" } ] quant [ "~" ] "(" term "," term ")"
//   term  := { "non_" } ident
//
// A "~" after the modality negates its scope; a "~" after the quantifier is the
// Q~ form. The symbols ¬ ∧ → □ ◇ are accepted as aliases.
using ParsedWff = std::variant<ConditionalWff, Proposition>;

ParsedWff parse_wff(std::string_view text);
ConditionalWff parse_conditional(std::string_view text);
Proposition parse_proposition(std::string_view text);

// Literal rendering, negation flags included.
std::string render(const Term& t);
std::string render(const Proposition& p);
std::string render(const ConditionalWff& c);

// Canonical text: render(canonicalize(x)).
std::string print_wff(const ConditionalWff& c);
std::string print_wff(const Proposition& p);

// (MOD? LETTER){3} '-' [1-4], MOD in {"[]", "<>"} (or □ / ◇).
Mnemonic parse_mnemonic(std::string_view text);
std::string print_mnemonic(const Mnemonic& m);
bool looks_like_mnemonic(std::string_view text);

// Atoms are chosen by figure: subject/predicate/middle are p/w/n in figure 1,
// p/n/w in figure 2 and n/w/p in figures 3 and 4. Major premise first.
ConditionalWff expand_mnemonic(const Mnemonic& m);

// Inverse of expand_mnemonic up to renaming of atoms. Empty when the input is
// not syllogism-shaped or an atom occurs both plain and complemented.
std::optional<Mnemonic> name_of(const ConditionalWff& c);

// One step per line:  ID | WFF | JUST [| name=MNEMONIC], '#' starts a comment.
DerivationScript parse_proof_script(std::string_view text, std::string label = {});

// One link per line:  WFF [| name=MNEMONIC].
Discourse parse_discourse(std::string_view text);

}  // namespace syl
