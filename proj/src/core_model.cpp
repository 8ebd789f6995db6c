#include "syllogism/core_model.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "syllogism/square_algebra.hpp"

namespace syl {

TermAtom::TermAtom(std::string n) : name(std::move(n)) {
  if (name.empty()) throw Error("term atom name must be non-empty");
}

Term::Term(std::string a, bool comp) : atom(std::move(a)), complemented(comp) {
  if (atom.empty()) throw Error("term atom name must be non-empty");
}

Term complement(const Term& t) { return Term(t.atom, !t.complemented); }

std::string_view keyword(Quantifier q) {
  switch (q) {
    case Quantifier::all: return "all";
    case Quantifier::some: return "some";
    case Quantifier::no: return "no";
    case Quantifier::not_all: return "not_all";
    case Quantifier::most: return "most";
    case Quantifier::fewer_than_half: return "fewer_than_half";
    case Quantifier::at_least_half: return "at_least_half";
    case Quantifier::at_most_half: return "at_most_half";
  }
  return "?";
}

std::optional<Quantifier> quantifier_from_keyword(std::string_view word) {
  for (Quantifier q : kAllQuantifiers)
    if (keyword(q) == word) return q;
  return std::nullopt;
}

char letter(Quantifier q) {
  switch (q) {
    case Quantifier::all: return 'A';
    case Quantifier::some: return 'I';
    case Quantifier::no: return 'E';
    case Quantifier::not_all: return 'O';
    case Quantifier::most: return 'M';
    case Quantifier::fewer_than_half: return 'F';
    case Quantifier::at_least_half: return 'S';
    case Quantifier::at_most_half: return 'H';
  }
  return '?';
}

std::optional<Quantifier> quantifier_from_letter(char c) {
  for (Quantifier q : kAllQuantifiers)
    if (letter(q) == c) return q;
  return std::nullopt;
}

Proposition::Proposition(Quantifier q, Term s, Term p, Modality m)
    : modality(m), quantifier(q), subject(std::move(s)), predicate(std::move(p)) {}

Proposition& Proposition::normalize() {
  if (modality == Modality::none && body_negated) {
    negated = !negated;
    body_negated = false;
  }
  return *this;
}

Proposition negation(Proposition p) {
  p.negated = !p.negated;
  return p;
}

namespace {

Proposition with_modality(Proposition p, Modality m) {
  if (p.modality != Modality::none) throw Error("stacked modalities are not supported");
  p.modality = m;
  // the old sentential negation now sits under the modality
  p.body_negated = p.negated;
  p.negated = false;
  return p;
}

}  // namespace

Proposition necessarily(Proposition p) { return with_modality(std::move(p), Modality::necessary); }
Proposition possibly(Proposition p) { return with_modality(std::move(p), Modality::possible); }

ConditionalWff::ConditionalWff(std::vector<Proposition> prem, Proposition concl)
    : premises(std::move(prem)), conclusion(std::move(concl)) {
  if (premises.empty() || premises.size() > 2)
    throw Error("a conditional takes one or two premises");
}

std::optional<SyllogismRoles> syllogism_roles(const ConditionalWff& c) {
  if (c.premises.size() != 2) return std::nullopt;
  const auto& s = c.conclusion.subject.atom;
  const auto& p = c.conclusion.predicate.atom;
  if (s == p) return std::nullopt;
  auto atoms = atoms_of(c);
  if (atoms.size() != 3) return std::nullopt;
  std::string m;
  for (const auto& a : atoms)
    if (a != s && a != p) m = a;

  auto has = [](const Proposition& q, const std::string& a) {
    return q.subject.atom == a || q.predicate.atom == a;
  };
  SyllogismRoles roles{s, p, m};
  bool found = false;
  for (std::size_t major = 0; major < 2 && !found; ++major) {
    const auto& maj = c.premises[major];
    const auto& min = c.premises[1 - major];
    if (maj.subject.atom == maj.predicate.atom || min.subject.atom == min.predicate.atom) break;
    if (has(maj, p) && has(maj, m) && has(min, s) && has(min, m)) {
      roles.major = major;
      roles.minor = 1 - major;
      found = true;
    }
  }
  if (!found) return std::nullopt;

  bool major_m_first = c.premises[roles.major].subject.atom == m;
  bool minor_s_first = c.premises[roles.minor].subject.atom == s;
  if (major_m_first && minor_s_first) roles.figure = 1;
  else if (!major_m_first && minor_s_first) roles.figure = 2;
  else if (major_m_first) roles.figure = 3;
  else roles.figure = 4;
  return roles;
}

bool is_syllogism_shaped(const ConditionalWff& c) { return syllogism_roles(c).has_value(); }

int figure_of(const ConditionalWff& c) {
  auto roles = syllogism_roles(c);
  if (!roles) throw NotSyllogismShaped("conditional is not a two-premise, three-term syllogism");
  return roles->figure;
}

Proposition canonicalize(const Proposition& in) {
  Proposition p = in;
  p.normalize();
  if (p.inner_negated) {
    // Q~(s, t) is Q(s, D-t)
    p.predicate = complement(p.predicate);
    p.inner_negated = false;
  }
  if (p.body_negated) {
    p.quantifier = negate(p.quantifier, NegationMode::outer);
    p.body_negated = false;
  }
  if (p.negated) {
    p.modality = dual(p.modality);
    p.quantifier = negate(p.quantifier, NegationMode::outer);
    p.negated = false;
  }
  return p;
}

ConditionalWff canonicalize(const ConditionalWff& c) {
  ConditionalWff out = c;
  for (auto& p : out.premises) p = canonicalize(p);
  out.conclusion = canonicalize(out.conclusion);
  if (out.premises.size() == 2) {
    if (auto roles = syllogism_roles(out)) {
      if (roles->major != 0) std::swap(out.premises[0], out.premises[1]);
    } else if (out.premises[1] < out.premises[0]) {
      std::swap(out.premises[0], out.premises[1]);
    }
  }
  return out;
}

bool structurally_equal(const ConditionalWff& a, const ConditionalWff& b) {
  if (a.premises.size() != b.premises.size() || a.conclusion != b.conclusion) return false;
  if (a.premises == b.premises) return true;
  return a.premises.size() == 2 && a.premises[0] == b.premises[1] && a.premises[1] == b.premises[0];
}

std::vector<std::string> atoms_of(const Proposition& p) {
  std::set<std::string> s{p.subject.atom, p.predicate.atom};
  return {s.begin(), s.end()};
}

std::vector<std::string> atoms_of(const ConditionalWff& c) {
  std::set<std::string> s;
  for (const auto& p : c.premises) {
    s.insert(p.subject.atom);
    s.insert(p.predicate.atom);
  }
  s.insert(c.conclusion.subject.atom);
  s.insert(c.conclusion.predicate.atom);
  return {s.begin(), s.end()};
}

bool is_modal(const ConditionalWff& c) {
  if (c.conclusion.modality != Modality::none) return true;
  return std::any_of(c.premises.begin(), c.premises.end(),
                     [](const Proposition& p) { return p.modality != Modality::none; });
}

}  // namespace syl
