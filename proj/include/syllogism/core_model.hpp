#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace syl {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotSyllogismShaped : public Error {
 public:
  using Error::Error;
};

// A lexical variable. Names are case-sensitive and compared exactly.
struct TermAtom {
  std::string name;

  explicit TermAtom(std::string n);
  auto operator<=>(const TermAtom&) const = default;
};

// An atom or its complement D-atom.
struct Term {
  std::string atom;
  bool complemented = false;

  Term() = default;
  Term(std::string a, bool comp = false);
  Term(const TermAtom& a, bool comp = false) : Term(a.name, comp) {}

  auto operator<=>(const Term&) const = default;
};

Term complement(const Term& t);

enum class Quantifier : std::uint8_t {
  all,
  some,
  no,
  not_all,
  most,
  fewer_than_half,
  at_least_half,
  at_most_half,
};

inline constexpr std::array<Quantifier, 8> kAllQuantifiers = {
    Quantifier::all,  Quantifier::some,            Quantifier::no,
    Quantifier::not_all, Quantifier::most,         Quantifier::fewer_than_half,
    Quantifier::at_least_half, Quantifier::at_most_half,
};

enum class Modality : std::uint8_t { none, necessary, possible };

inline constexpr std::array<Modality, 3> kAllModalities = {Modality::none, Modality::necessary,
                                                           Modality::possible};

std::string_view keyword(Quantifier q);
std::optional<Quantifier> quantifier_from_keyword(std::string_view word);

// Mnemonic letters: A=all, E=no, I=some, O=not all, M=most, F=fewer than half,
// S=at least half, H=at most half.
char letter(Quantifier q);
std::optional<Quantifier> quantifier_from_letter(char c);

// A modality-decorated quantified statement.
//
// The stored shape is  [~] [modality [~]] quantifier[~](subject, predicate):
// `negated` is the sentential negation in front of everything, `body_negated`
// sits directly under the modality and `inner_negated` is the Q~ form (which
// by definition means Q(subject, D-predicate)). For non-modal propositions the
// two outer negations coincide and only `negated` is used; the constructor
// folds them. Repeated negations cancel (double-negation elimination).
struct Proposition {
  bool negated = false;
  Modality modality = Modality::none;
  bool body_negated = false;
  Quantifier quantifier = Quantifier::all;
  bool inner_negated = false;
  Term subject;
  Term predicate;

  Proposition() = default;
  Proposition(Quantifier q, Term s, Term p, Modality m = Modality::none);

  // Restores the folding invariant after fields were edited directly.
  Proposition& normalize();

  bool is_canonical() const { return !negated && !body_negated && !inner_negated; }

  auto operator<=>(const Proposition&) const = default;
};

// Sentential negation ~p.
Proposition negation(Proposition p);
Proposition necessarily(Proposition p);
Proposition possibly(Proposition p);

// premises -> conclusion, with one or two premises.
struct ConditionalWff {
  std::vector<Proposition> premises;
  Proposition conclusion;

  ConditionalWff() = default;
  ConditionalWff(std::vector<Proposition> prem, Proposition concl);

  auto operator<=>(const ConditionalWff&) const = default;
};

// Role assignment of a syllogism-shaped conditional.
struct SyllogismRoles {
  std::string subject;    // S: conclusion subject atom
  std::string predicate;  // P: conclusion predicate atom
  std::string middle;     // M: shared atom absent from the conclusion
  std::size_t major = 0;  // index of the premise containing P
  std::size_t minor = 1;  // index of the premise containing S
  int figure = 1;
};

// Computes roles, comparing atoms only (complement flags ignored).
std::optional<SyllogismRoles> syllogism_roles(const ConditionalWff& c);
bool is_syllogism_shaped(const ConditionalWff& c);

// Figure 1: (M,P),(S,M)  2: (P,M),(S,M)  3: (M,P),(M,S)  4: (P,M),(M,S).
// Throws NotSyllogismShaped.
int figure_of(const ConditionalWff& c);

// Pushes every negation into the quantifier (outer-negation tables, duality for
// modalities) and turns Q~ into a complemented predicate. The result has no
// negation flags.
Proposition canonicalize(const Proposition& p);

// Canonicalizes each proposition and orders the premises major-then-minor for
// syllogism-shaped input (lexicographically otherwise). Idempotent.
ConditionalWff canonicalize(const ConditionalWff& c);

// Equality modulo conjunct commutation.
bool structurally_equal(const ConditionalWff& a, const ConditionalWff& b);

// Sorted distinct atom names.
std::vector<std::string> atoms_of(const Proposition& p);
std::vector<std::string> atoms_of(const ConditionalWff& c);

bool is_modal(const ConditionalWff& c);

struct Mnemonic {
  Modality major_mod = Modality::none;
  Quantifier major = Quantifier::all;
  Modality minor_mod = Modality::none;
  Quantifier minor = Quantifier::all;
  Modality concl_mod = Modality::none;
  Quantifier conclusion = Quantifier::all;
  int figure = 1;

  auto operator<=>(const Mnemonic&) const = default;
};

}  // namespace syl
