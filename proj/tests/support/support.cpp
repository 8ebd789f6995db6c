#include "support.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "syllogism/proof_kernel.hpp"
#include "syllogism/square_algebra.hpp"
#include "syllogism/text_frontend.hpp"

namespace syl::testing {

namespace {

using Mask = unsigned;

// One world: a subset mask per atom.
using MaskWorld = std::vector<Mask>;

struct MaskModel {
  int domain = 1;
  std::vector<std::string> atoms;
  std::vector<MaskWorld> worlds;  // world 0 is actual

  Mask full() const { return (1u << domain) - 1; }
  Mask ext(std::size_t world, const Term& t) const {
    auto it = std::find(atoms.begin(), atoms.end(), t.atom);
    Mask m = worlds[world][static_cast<std::size_t>(it - atoms.begin())];
    return t.complemented ? full() & ~m : m;
  }
};

bool quantified(Quantifier q, Mask s, Mask t) {
  const int a = std::popcount(s & t), b = std::popcount(s);
  switch (q) {
    case Quantifier::all: return (s & ~t) == 0;
    case Quantifier::some: return (s & t) != 0;
    case Quantifier::no: return (s & t) == 0;
    case Quantifier::not_all: return (s & ~t) != 0;
    case Quantifier::most: return 2 * a > b;
    case Quantifier::fewer_than_half: return 2 * a < b;
    case Quantifier::at_least_half: return 2 * a >= b;
    case Quantifier::at_most_half: return 2 * a <= b;
  }
  return false;
}

bool body_at(const Proposition& p, const MaskModel& m, std::size_t world) {
  Mask s = m.ext(world, p.subject);
  Mask t = m.ext(world, p.predicate);
  if (p.inner_negated) t = m.full() & ~t;
  return quantified(p.quantifier, s, t) != p.body_negated;
}

bool eval_mask(const Proposition& p, const MaskModel& m) {
  bool v = false;
  switch (p.modality) {
    case Modality::none: v = body_at(p, m, 0); break;
    case Modality::necessary:
      v = true;
      for (std::size_t i = 0; i < m.worlds.size(); ++i) v = v && body_at(p, m, i);
      break;
    case Modality::possible:
      for (std::size_t i = 0; i < m.worlds.size(); ++i) v = v || body_at(p, m, i);
      break;
  }
  return v != p.negated;
}

bool falsified(const ConditionalWff& w, const MaskModel& m) {
  for (const auto& p : w.premises)
    if (!eval_mask(p, m)) return false;
  return !eval_mask(w.conclusion, m);
}

// Enumerates every assignment of the remaining (world, atom) slots.
bool search(const ConditionalWff& w, MaskModel& m, std::size_t slot, bool import) {
  const std::size_t k = m.atoms.size();
  if (slot == m.worlds.size() * k) return falsified(w, m);
  const Mask lo = import ? 1 : 0;
  for (Mask mask = lo; mask <= m.full(); ++mask) {
    m.worlds[slot / k][slot % k] = mask;
    if (search(w, m, slot + 1, import)) return true;
  }
  return false;
}

Term random_term(std::mt19937& rng, const std::vector<std::string>& atoms) {
  std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
  return Term(atoms[pick(rng)], std::bernoulli_distribution(0.25)(rng));
}

}  // namespace

bool oracle_has_countermodel(const ConditionalWff& w, const SearchBounds& b) {
  MaskModel m;
  m.atoms = atoms_of(w);
  bool modal = false;
  for (const auto& p : w.premises) modal = modal || p.modality != Modality::none;
  modal = modal || w.conclusion.modality != Modality::none;
  const int max_worlds = b.rigid ? 1 : b.max_worlds;
  for (m.domain = 1; m.domain <= b.max_domain; ++m.domain) {
    for (int k = 1; k <= max_worlds; ++k) {
      m.worlds.assign(static_cast<std::size_t>(k), MaskWorld(m.atoms.size(), 0));
      if (search(w, m, 0, b.existential_import)) return true;
    }
  }
  (void)modal;
  return false;
}

bool oracle_eval(const Proposition& p, const KripkeModel& km, std::size_t world) {
  MaskModel m;
  m.domain = km.domain_size;
  for (const auto& [atom, _] : km.worlds.at(0).extensions) m.atoms.push_back(atom);
  // put the evaluation world first, since eval_mask treats world 0 as actual
  std::vector<std::size_t> order{world};
  for (std::size_t i = 0; i < km.worlds.size(); ++i)
    if (i != world) order.push_back(i);
  for (std::size_t i : order) {
    MaskWorld mw;
    for (const auto& atom : m.atoms) {
      Mask mask = 0;
      for (int e : km.worlds[i].extensions.at(atom)) mask |= 1u << (e - 1);
      mw.push_back(mask);
    }
    m.worlds.push_back(std::move(mw));
  }
  return eval_mask(p, m);
}

Proposition random_proposition(std::mt19937& rng, const std::vector<std::string>& atoms, bool modal) {
  std::uniform_int_distribution<int> q(0, 7), mod(0, modal ? 2 : 0);
  std::bernoulli_distribution coin(0.3);
  Proposition p(static_cast<Quantifier>(q(rng)), random_term(rng, atoms), random_term(rng, atoms),
                static_cast<Modality>(mod(rng)));
  p.negated = coin(rng);
  p.body_negated = coin(rng);
  p.inner_negated = coin(rng);
  p.normalize();
  return p;
}

ConditionalWff random_wff(std::mt19937& rng, const std::vector<std::string>& atoms, bool modal) {
  std::vector<Proposition> prem{random_proposition(rng, atoms, modal)};
  if (std::bernoulli_distribution(0.8)(rng)) prem.push_back(random_proposition(rng, atoms, modal));
  return ConditionalWff(std::move(prem), random_proposition(rng, atoms, modal));
}

KripkeModel random_model(std::mt19937& rng, const std::vector<std::string>& atoms, int max_domain,
                         int max_worlds, bool existential_import) {
  KripkeModel m;
  m.domain_size = std::uniform_int_distribution<int>(1, max_domain)(rng);
  const int k = std::uniform_int_distribution<int>(1, max_worlds)(rng);
  const Mask full = (1u << m.domain_size) - 1;
  std::uniform_int_distribution<Mask> pick(existential_import ? 1 : 0, full);
  for (int i = 0; i < k; ++i) {
    World w;
    for (const auto& a : atoms) {
      Mask mask = pick(rng);
      auto& ext = w.extensions[a];
      for (int e = 1; e <= m.domain_size; ++e)
        if (mask & (1u << (e - 1))) ext.insert(e);
    }
    m.worlds.push_back(std::move(w));
  }
  m.actual = std::uniform_int_distribution<std::size_t>(0, m.worlds.size() - 1)(rng);
  return m;
}

// ---------------------------------------------------------------------------

PropertyResult square_algebra_properties() {
  PropertyResult r;
  const NegationMode modes[] = {NegationMode::inner, NegationMode::outer, NegationMode::dual};
  for (Quantifier q : kAllQuantifiers) {
    ++r.cases;
    const std::string name(keyword(q));
    for (auto m : modes)
      if (negate(negate(q, m), m) != q) r.fail("negation is not an involution on " + name);
    if (negate(negate(q, NegationMode::inner), NegationMode::outer) != negate(q, NegationMode::dual) ||
        negate(negate(q, NegationMode::outer), NegationMode::inner) != negate(q, NegationMode::dual))
      r.fail("inner and outer do not compose to dual on " + name);
    std::set<Quantifier> orbit{q};
    for (auto m : modes) orbit.insert(negate(q, m));
    if (orbit.size() != 4) r.fail("square of " + name + " does not have 4 members");
    for (Quantifier x : orbit)
      if (square_of(x) != square_of(q)) r.fail("negation leaves the square of " + name);
  }
  std::map<SquareId, int> sizes;
  for (Quantifier q : kAllQuantifiers) ++sizes[square_of(q)];
  ++r.cases;
  if (sizes.size() != 2 || sizes[SquareId::all_square] != 4 || sizes[SquareId::most_square] != 4)
    r.fail("the squares do not partition the quantifiers 4 + 4");
  for (Modality m : kAllModalities) {
    ++r.cases;
    if (dual(dual(m)) != m) r.fail("modal duality is not an involution");
  }

  // The tables agree with the semantics.
  std::mt19937 rng(99);
  const std::vector<std::string> atoms{"a", "b"};
  for (int i = 0; i < 300; ++i) {
    KripkeModel m = random_model(rng, atoms, 4, 3, false);
    for (Quantifier q : kAllQuantifiers) {
      ++r.cases;
      Proposition p(q, Term("a"), Term("b"));
      Proposition neg_p(negate(q, NegationMode::outer), Term("a"), Term("b"));
      Proposition inner_p(negate(q, NegationMode::inner), Term("a"), Term("b"));
      Proposition comp_p(q, Term("a"), Term("b", true));
      bool v = eval_proposition(p, m, m.actual);
      if (eval_proposition(neg_p, m, m.actual) == v) r.fail("outer negation table disagrees with " + std::string(keyword(q)));
      if (eval_proposition(inner_p, m, m.actual) != eval_proposition(comp_p, m, m.actual))
        r.fail("inner negation table disagrees with " + std::string(keyword(q)));
    }
  }
  return r;
}

PropertyResult mnemonic_roundtrips() {
  PropertyResult r;
  for (int fig = 1; fig <= 4; ++fig)
    for (Quantifier a : kAllQuantifiers)
      for (Quantifier b : kAllQuantifiers)
        for (Quantifier c : kAllQuantifiers) {
          ++r.cases;
          Mnemonic m;
          m.major = a;
          m.minor = b;
          m.conclusion = c;
          m.figure = fig;
          const std::string code = print_mnemonic(m);
          ConditionalWff w = expand_mnemonic(m);
          const std::string text = print_wff(w);
          ConditionalWff back = parse_conditional(text);
          if (parse_mnemonic(code) != m) r.fail("mnemonic text round-trip fails for " + code);
          if (print_wff(back) != text) r.fail("print/parse round-trip fails for " + text);
          if (render(w) != text) r.fail("expansion of " + code + " is not canonical");
          auto named = name_of(back);
          if (!named || *named != m) r.fail("name_of(expand) differs for " + code);
          if (figure_of(back) != fig) r.fail("figure differs for " + code);
          if (canonicalize(canonicalize(back)) != canonicalize(back)) r.fail("canonicalize not idempotent: " + text);
        }
  return r;
}

PropertyResult oracle_equivalence(std::size_t count, unsigned seed) {
  PropertyResult r;
  std::mt19937 rng(seed);
  SearchBounds b;
  b.max_domain = 3;
  b.max_worlds = 2;
  const std::vector<std::string> three{"a", "b", "c"}, two{"a", "b"};
  for (std::size_t i = 0; i < count; ++i) {
    ++r.cases;
    ConditionalWff w = random_wff(rng, i % 4 == 3 ? two : three);
    auto cm = find_countermodel(w, b);
    bool oracle = oracle_has_countermodel(w, b);
    if (cm.has_value() != oracle) {
      r.fail("verdicts differ on " + render(w));
      continue;
    }
    if (cm) {
      if (holds(w, *cm)) r.fail("reported countermodel satisfies " + render(w));
      bool premises = true;
      for (const auto& p : w.premises) premises = premises && oracle_eval(p, *cm, cm->actual);
      if (!premises || oracle_eval(w.conclusion, *cm, cm->actual))
        r.fail("oracle does not confirm the countermodel of " + render(w));
    }
  }
  return r;
}

namespace {

struct Binding {
  std::optional<Term> p, w;
  std::optional<Quantifier> q;
};

bool bind(std::optional<Term>& slot, const Term& t) {
  if (slot) return *slot == t;
  slot = t;
  return true;
}

// Matches the whole flat proposition against a schema.
bool match(const Proposition& schema, const Proposition& x, bool schematic, Binding& b) {
  if (schema.negated != x.negated || schema.modality != x.modality || schema.body_negated != x.body_negated ||
      schema.inner_negated != x.inner_negated)
    return false;
  if (!schematic && schema.quantifier != x.quantifier) return false;
  b.q = x.quantifier;
  return bind(schema.subject.atom == "p" ? b.p : b.w, x.subject) &&
         bind(schema.predicate.atom == "p" ? b.p : b.w, x.predicate);
}

Proposition build(const Proposition& schema, bool schematic, const Binding& b) {
  Proposition out = schema;
  if (schematic) out.quantifier = *b.q;
  out.subject = schema.subject.atom == "p" ? *b.p : *b.w;
  out.predicate = schema.predicate.atom == "p" ? *b.p : *b.w;
  return out.normalize();
}

// Applies a non-modal equivalence schema to x itself, or to the body under
// x's modality; applies modal schemas to x as a whole.
std::optional<Proposition> rewrite_once(const FactLicense& lic, bool forward, const Proposition& x) {
  const Proposition& from = forward ? lic.lhs : lic.rhs;
  const Proposition& to = forward ? lic.rhs : lic.lhs;
  Binding b;
  if (match(from, x, lic.schematic_quantifier, b)) return build(to, lic.schematic_quantifier, b);
  if (from.modality != Modality::none || x.modality == Modality::none) return std::nullopt;
  Proposition body = x;
  body.modality = Modality::none;
  body.negated = x.body_negated;
  body.body_negated = false;
  b = {};
  if (!match(from, body, lic.schematic_quantifier, b)) return std::nullopt;
  Proposition out = build(to, lic.schematic_quantifier, b);
  out.body_negated = out.negated;
  out.negated = x.negated;
  out.modality = x.modality;
  return out;
}

}  // namespace

PropertyResult strict_random_derivations(std::size_t count, int max_depth, unsigned seed) {
  PropertyResult r;
  std::mt19937 rng(seed);
  std::vector<const FactLicense*> implications, equivalences;
  for (const auto& lic : fact_licenses()) {
    if (!lic.audited_sound) continue;
    (lic.kind == LicenseKind::implication ? implications : equivalences).push_back(&lic);
  }
  KernelOptions strict;
  strict.strict = true;
  SearchBounds bounds;  // (4, 2)

  for (std::size_t n = 0; n < count; ++n) {
    ProvedSet proved;
    proved.add(axiom_a2(), "axiom", 1);
    ConditionalWff current = axiom_a2();
    const int depth = std::uniform_int_distribution<int>(1, max_depth)(rng);
    int step = 1;
    for (int attempts = 0; step <= depth && attempts < 200; ++attempts) {
      Justification j;
      j.inputs = {step};
      ConditionalWff target = current;
      const std::size_t positions = current.premises.size() + 1;
      const std::size_t pos = std::uniform_int_distribution<std::size_t>(0, positions - 1)(rng);
      auto at = [&](ConditionalWff& c) -> Proposition& { return pos < c.premises.size() ? c.premises[pos] : c.conclusion; };
      bool made = false;
      switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
        case 0: {  // rule1 or rule2 with an implication license
          const FactLicense& lic = *implications[std::uniform_int_distribution<std::size_t>(0, implications.size() - 1)(rng)];
          const bool conclusion = pos == current.premises.size();
          j.kind = conclusion ? JustificationKind::rule2 : JustificationKind::rule1;
          j.licenses = {lic.id};
          for (const auto& inst : instances(lic)) {
            Binding b;
            const Proposition& from = conclusion ? inst.lhs : inst.rhs;
            if (!match(from, at(current), false, b)) continue;
            if (!lic.empty_subject_safe && b.p->complemented) continue;
            at(target) = build(conclusion ? inst.rhs : inst.lhs, false, b);
            made = true;
          }
          break;
        }
        case 1: {  // rule3
          if (current.premises.size() != 2) break;
          const std::size_t i = std::uniform_int_distribution<std::size_t>(0, 1)(rng);
          j.kind = JustificationKind::rule3;
          target = ConditionalWff({negation(current.conclusion), current.premises[i]},
                                  negation(current.premises[1 - i]));
          made = true;
          break;
        }
        case 2: {  // rewrite with one equivalence
          const FactLicense& lic = *equivalences[std::uniform_int_distribution<std::size_t>(0, equivalences.size() - 1)(rng)];
          auto out = rewrite_once(lic, std::bernoulli_distribution(0.5)(rng), at(current));
          if (!out || *out == at(current)) break;
          at(target) = *out;
          const bool sym = lic.id == "3.1" || lic.id == "3.2";
          j.kind = sym ? JustificationKind::converse : JustificationKind::rewrite;
          j.licenses = {lic.id};
          made = true;
          break;
        }
        default: {  // d3 in either direction
          Proposition& p = at(target);
          p.inner_negated = !p.inner_negated;
          p.predicate = complement(p.predicate);
          j.kind = JustificationKind::d3;
          made = true;
          break;
        }
      }
      if (!made || structurally_equal(target, current)) continue;

      ++r.cases;
      DeriveResult d = derive_step(j, target, proved, strict);
      if (!d) {
        r.fail("kernel rejects a well-formed " + std::string(keyword(j.kind)) + " step (" + d.reason +
               "): " + render(current) + "  =>  " + render(target));
        continue;
      }
      ++step;
      proved.add(target, "random", step);
      current = target;
      if (check_validity(target, bounds).status == Status::invalid)
        r.fail("strict derivation produced an invalid wff: " + render(target));
    }
  }
  return r;
}

}  // namespace syl::testing
