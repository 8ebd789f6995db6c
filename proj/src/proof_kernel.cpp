#include "syllogism/proof_kernel.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <unordered_map>

#include "syllogism/square_algebra.hpp"
#include "syllogism/text_frontend.hpp"

namespace syl {

std::string_view keyword(RejectCode c) {
  switch (c) {
    case RejectCode::none: return "none";
    case RejectCode::unresolved_input: return "unresolved_input";
    case RejectCode::license_mismatch: return "license_mismatch";
    case RejectCode::wrong_shape: return "wrong_shape";
    case RejectCode::excluded_license: return "excluded_license";
    case RejectCode::name_mismatch: return "name_mismatch";
  }
  return "?";
}

bool ProvedSet::add(ConditionalWff wff, std::string provenance, std::optional<int> step) {
  if (step) by_step_[*step] = wff;
  auto key = canonicalize(wff);
  if (canonical_.contains(key)) return false;
  canonical_.emplace(std::move(key), entries_.size());
  entries_.push_back({std::move(wff), std::move(provenance), step});
  return true;
}

const ConditionalWff* ProvedSet::step(int id) const {
  auto it = by_step_.find(id);
  return it == by_step_.end() ? nullptr : &it->second;
}

bool ProvedSet::contains(const ConditionalWff& wff) const { return find(wff) != nullptr; }

const ProvedSet::Entry* ProvedSet::find(const ConditionalWff& wff) const {
  auto it = canonical_.find(canonicalize(wff));
  return it == canonical_.end() ? nullptr : &entries_[it->second];
}

ConditionalWff axiom_a2() {
  return ConditionalWff({Proposition(Quantifier::all, Term("n"), Term("w")),
                         Proposition(Quantifier::most, Term("p"), Term("n"))},
                        Proposition(Quantifier::some, Term("p"), Term("w")));
}

namespace {

// ---------------------------------------------------------------------------
// schema matching

struct Binding {
  std::optional<Term> p, w;
  std::optional<Quantifier> q;
};

bool bind_term(std::optional<Term>& slot, const Term& t) {
  if (slot) return *slot == t;
  slot = t;
  return true;
}

bool bind_placeholder(const Term& schema, const Term& t, Binding& b) {
  return bind_term(schema.atom == "p" ? b.p : b.w, t);
}

// Matches the core Q[~](s, t) of a schema; operators are compared by the caller.
bool match_core(const Proposition& schema, const Proposition& x, bool schematic, Binding& b) {
  if (schema.inner_negated != x.inner_negated) return false;
  if (schematic) {
    if (b.q && *b.q != x.quantifier) return false;
    b.q = x.quantifier;
  } else if (schema.quantifier != x.quantifier) {
    return false;
  }
  return bind_placeholder(schema.subject, x.subject, b) &&
         bind_placeholder(schema.predicate, x.predicate, b);
}

Term instantiate_term(const Term& schema, const Binding& b) {
  return schema.atom == "p" ? *b.p : *b.w;
}

// Is (from -> to) an instance of the implication license?
bool implication_instance(const FactLicense& lic, const Proposition& from, const Proposition& to) {
  const auto& l = lic.lhs;
  if (l.negated != from.negated || l.modality != from.modality || l.body_negated != from.body_negated)
    return false;
  Binding b;
  if (!match_core(l, from, lic.schematic_quantifier, b)) return false;
  if (!lic.empty_subject_safe && b.p->complemented) return false;
  Proposition out = lic.rhs;
  if (lic.schematic_quantifier) out.quantifier = *b.q;
  out.subject = instantiate_term(lic.rhs.subject, b);
  out.predicate = instantiate_term(lic.rhs.predicate, b);
  return out == to;
}

// ---------------------------------------------------------------------------
// congruent rewriting
//
// A proposition is viewed as a stack of unary operators over a core; an
// equivalence may be applied to any suffix of the stack.

enum class Op : std::uint8_t { neg, nec, pos };

struct Stack {
  std::vector<Op> ops;
  Proposition core;  // operators stripped
};

Stack to_stack(const Proposition& p0) {
  Proposition p = p0;
  p.normalize();
  Stack s;
  if (p.negated) s.ops.push_back(Op::neg);
  if (p.modality == Modality::necessary) s.ops.push_back(Op::nec);
  if (p.modality == Modality::possible) s.ops.push_back(Op::pos);
  if (p.body_negated) s.ops.push_back(Op::neg);
  s.core = p;
  s.core.negated = s.core.body_negated = false;
  s.core.modality = Modality::none;
  return s;
}

std::optional<Proposition> from_stack(const Stack& s) {
  Proposition p = s.core;
  bool seen_modality = false;
  for (Op op : s.ops) {
    if (op == Op::neg) {
      if (seen_modality) p.body_negated = !p.body_negated;
      else p.negated = !p.negated;
    } else {
      if (seen_modality) return std::nullopt;
      seen_modality = true;
      p.modality = op == Op::nec ? Modality::necessary : Modality::possible;
    }
  }
  p.normalize();
  return p;
}

// A directed rewrite: from-schema => to-schema.
struct Rule {
  Stack from, to;
  bool schematic = false;
  bool d3 = false;  // Q~(s,t) <=> Q(s, D-t), handled structurally
  bool d3_forward = true;
};

std::vector<Rule> rules_for(const FactLicense& lic) {
  Stack l = to_stack(lic.lhs), r = to_stack(lic.rhs);
  return {Rule{l, r, lic.schematic_quantifier}, Rule{r, l, lic.schematic_quantifier}};
}

std::vector<Rule> d3_rules() {
  Rule fwd, back;
  fwd.d3 = back.d3 = true;
  back.d3_forward = false;
  return {fwd, back};
}

void apply_rule(const Rule& rule, const Proposition& x, std::vector<Proposition>& out) {
  Stack s = to_stack(x);
  if (rule.d3) {
    Proposition core = s.core;
    if (rule.d3_forward == core.inner_negated) {
      core.inner_negated = !core.inner_negated;
      core.predicate = complement(core.predicate);
      Stack t{s.ops, core};
      if (auto p = from_stack(t)) out.push_back(*p);
    }
    return;
  }
  const std::size_t n = rule.from.ops.size();
  if (n > s.ops.size()) return;
  const std::size_t k = s.ops.size() - n;
  if (!std::equal(rule.from.ops.begin(), rule.from.ops.end(), s.ops.begin() + static_cast<long>(k)))
    return;
  Binding b;
  if (!match_core(rule.from.core, s.core, rule.schematic, b)) return;
  Stack t;
  t.ops.assign(s.ops.begin(), s.ops.begin() + static_cast<long>(k));
  t.ops.insert(t.ops.end(), rule.to.ops.begin(), rule.to.ops.end());
  t.core = rule.to.core;
  if (rule.schematic) t.core.quantifier = *b.q;
  t.core.subject = instantiate_term(rule.to.core.subject, b);
  t.core.predicate = instantiate_term(rule.to.core.predicate, b);
  if (auto p = from_stack(t)) out.push_back(*p);
}

std::set<Proposition> closure(const Proposition& start, const std::vector<Rule>& rules, int max_depth = 4) {
  std::set<Proposition> seen{start};
  std::vector<Proposition> frontier{start};
  for (int d = 0; d < max_depth && !frontier.empty(); ++d) {
    std::vector<Proposition> next;
    for (const auto& x : frontier) {
      std::vector<Proposition> produced;
      for (const auto& r : rules) apply_rule(r, x, produced);
      for (auto& y : produced)
        if (seen.insert(y).second) next.push_back(y);
    }
    frontier = std::move(next);
  }
  return seen;
}

bool rewrites_to(const ConditionalWff& src, const ConditionalWff& dst, const std::vector<Rule>& rules) {
  if (src.premises.size() != dst.premises.size()) return false;
  if (!closure(src.conclusion, rules).contains(dst.conclusion)) return false;
  if (src.premises.size() == 1) return closure(src.premises[0], rules).contains(dst.premises[0]);
  auto c0 = closure(src.premises[0], rules);
  auto c1 = closure(src.premises[1], rules);
  return (c0.contains(dst.premises[0]) && c1.contains(dst.premises[1])) ||
         (c0.contains(dst.premises[1]) && c1.contains(dst.premises[0]));
}

DeriveResult accept() { return {true, RejectCode::none, {}}; }
DeriveResult reject(RejectCode c, std::string why) { return {false, c, std::move(why)}; }

struct LicenseLookup {
  const FactLicense* lic = nullptr;
  std::optional<DeriveResult> error;
};

LicenseLookup lookup(const std::string& id, const KernelOptions& opts) {
  const FactLicense* lic = find_license(id);
  if (!lic) return {nullptr, reject(RejectCode::license_mismatch, "unknown license " + id)};
  if (opts.strict && !lic->audited_sound)
    return {nullptr, reject(RejectCode::excluded_license, "license " + id + " is excluded in strict mode")};
  return {lic, std::nullopt};
}

// Side condition of rules 1 and 2: from -> to, by license or by a proved
// one-premise implication.
DeriveResult side_implication(const Justification& j, const ProvedSet& proved, const KernelOptions& opts,
                              const Proposition& from, const Proposition& to, bool& ok) {
  ok = false;
  if (j.inputs.size() == 2) {
    const ConditionalWff* imp = proved.step(j.inputs[1]);
    if (!imp) return reject(RejectCode::unresolved_input, "step " + std::to_string(j.inputs[1]) + " is not proved");
    if (imp->premises.size() != 1)
      return reject(RejectCode::license_mismatch,
                    "step " + std::to_string(j.inputs[1]) + " is not a single implication");
    ok = imp->premises[0] == from && imp->conclusion == to;
    return accept();
  }
  if (j.licenses.size() != 1)
    return reject(RejectCode::license_mismatch, "expected exactly one implication license");
  auto lk = lookup(j.licenses[0], opts);
  if (lk.error) return *lk.error;
  if (lk.lic->kind != LicenseKind::implication)
    return reject(RejectCode::license_mismatch, "license " + lk.lic->id + " is not an implication");
  ok = implication_instance(*lk.lic, from, to);
  return accept();
}

DeriveResult check_rule1(const Justification& j, const ConditionalWff& src, const ConditionalWff& target,
                         const ProvedSet& proved, const KernelOptions& opts) {
  if (src.conclusion != target.conclusion)
    return reject(RejectCode::wrong_shape, "rule1 must keep the conclusion");
  if (src.premises.size() != target.premises.size())
    return reject(RejectCode::wrong_shape, "rule1 must keep the number of premises");
  const std::size_t n = src.premises.size();
  bool any_shape = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < n; ++t) {
      if (n == 2 && src.premises[1 - i] != target.premises[1 - t]) continue;
      any_shape = true;
      bool ok = false;
      auto r = side_implication(j, proved, opts, target.premises[t], src.premises[i], ok);
      if (!r) return r;
      if (ok) return accept();
    }
  }
  if (!any_shape) return reject(RejectCode::wrong_shape, "rule1 may replace only one premise");
  return reject(RejectCode::license_mismatch, "no premise is strengthened by the cited implication");
}

DeriveResult check_rule2(const Justification& j, const ConditionalWff& src, const ConditionalWff& target,
                         const ProvedSet& proved, const KernelOptions& opts) {
  ConditionalWff same_concl = target;
  same_concl.conclusion = src.conclusion;
  if (!structurally_equal(src, same_concl)) return reject(RejectCode::wrong_shape, "rule2 must keep the premises");
  bool ok = false;
  auto r = side_implication(j, proved, opts, src.conclusion, target.conclusion, ok);
  if (!r) return r;
  if (!ok) return reject(RejectCode::license_mismatch, "the conclusion is not weakened by the cited implication");
  return accept();
}

DeriveResult check_rule3(const ConditionalWff& src, const ConditionalWff& target) {
  if (src.premises.size() != 2) return reject(RejectCode::wrong_shape, "rule3 needs two premises");
  for (std::size_t i = 0; i < 2; ++i) {
    ConditionalWff expected({negation(src.conclusion).normalize(), src.premises[i]},
                            negation(src.premises[1 - i]).normalize());
    if (structurally_equal(expected, target)) return accept();
  }
  return reject(RejectCode::wrong_shape, "target is not ~conclusion & premise -> ~other premise");
}

DeriveResult check_rewrite(const Justification& j, const ConditionalWff& src, const ConditionalWff& target,
                           const KernelOptions& opts) {
  if (structurally_equal(src, target)) return reject(RejectCode::wrong_shape, "rewrite changes nothing");
  std::vector<std::vector<Rule>> per_license;
  if (j.kind == JustificationKind::d3) {
    per_license.push_back(d3_rules());
  } else {
    if (j.kind == JustificationKind::converse &&
        (j.licenses.size() != 1 || (j.licenses[0] != "3.1" && j.licenses[0] != "3.2")))
      return reject(RejectCode::license_mismatch, "converse cites exactly one of 3.1, 3.2");
    for (const auto& id : j.licenses) {
      auto lk = lookup(id, opts);
      if (lk.error) return *lk.error;
      if (lk.lic->kind != LicenseKind::equivalence)
        return reject(RejectCode::license_mismatch, "license " + id + " is not an equivalence");
      per_license.push_back(rules_for(*lk.lic));
    }
  }
  auto flatten = [&](std::optional<std::size_t> skip) {
    std::vector<Rule> rules;
    for (std::size_t i = 0; i < per_license.size(); ++i)
      if (i != skip) rules.insert(rules.end(), per_license[i].begin(), per_license[i].end());
    return rules;
  };
  if (!rewrites_to(src, target, flatten(std::nullopt)))
    return reject(RejectCode::wrong_shape, "target is not reachable with the cited equivalences");
  if (per_license.size() > 1) {
    for (std::size_t i = 0; i < per_license.size(); ++i)
      if (rewrites_to(src, target, flatten(i)))
        return reject(RejectCode::license_mismatch, "license " + j.licenses[i] + " is not used");
  }
  return accept();
}

}  // namespace

DeriveResult derive_step(const Justification& j, const ConditionalWff& target, const ProvedSet& proved,
                         const KernelOptions& opts) {
  if (j.kind == JustificationKind::axiom) {
    if (j.licenses.size() != 1 || j.licenses[0] != "A2")
      return reject(RejectCode::license_mismatch, "the only axiom is A2");
    if (!structurally_equal(target, axiom_a2()))
      return reject(RejectCode::wrong_shape, "target is not the axiom all(n,w) & most(p,n) -> some(p,w)");
    return accept();
  }
  if (j.inputs.empty()) return reject(RejectCode::unresolved_input, "justification cites no step");
  const ConditionalWff* src = proved.step(j.inputs[0]);
  if (!src) return reject(RejectCode::unresolved_input, "step " + std::to_string(j.inputs[0]) + " is not proved");

  switch (j.kind) {
    case JustificationKind::rule1: return check_rule1(j, *src, target, proved, opts);
    case JustificationKind::rule2: return check_rule2(j, *src, target, proved, opts);
    case JustificationKind::rule3: return check_rule3(*src, target);
    case JustificationKind::rewrite:
    case JustificationKind::converse:
    case JustificationKind::d3: return check_rewrite(j, *src, target, opts);
    case JustificationKind::axiom: break;
  }
  return reject(RejectCode::wrong_shape, "unsupported justification");
}

std::vector<Mnemonic> ReplayReport::minted() const {
  std::vector<Mnemonic> out;
  for (const auto& [id, m] : named) {
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  return out;
}

ReplayReport replay(const DerivationScript& s, const KernelOptions& opts) {
  ReplayReport report;
  report.label = s.label;
  for (const auto& step : s.steps) {
    ++report.steps_checked;
    DeriveResult r = derive_step(step.justification, step.wff, report.proved, opts);
    if (r && step.name) {
      auto actual = name_of(step.wff);
      if (!actual || *actual != *step.name)
        r = reject(RejectCode::name_mismatch,
                   "declared " + print_mnemonic(*step.name) + " but the formula is " +
                       (actual ? print_mnemonic(*actual) : std::string("not a named syllogism")));
    }
    if (!r) {
      report.ok = false;
      report.failed_step = step.id;
      report.failure_reason = r.reason;
      report.failure_code = r.code;
      break;
    }
    ++report.steps_accepted;
    report.proved.add(step.wff, s.label + ":" + std::to_string(step.id), step.id);
    if (step.name && step.justification.kind != JustificationKind::axiom)
      report.named.emplace_back(step.id, *step.name);
  }
  return report;
}

// ---------------------------------------------------------------------------
// mining

namespace {

using Packed = std::uint16_t;  // mod:2 quant:3 subject:3 predicate:3
using StateKey = std::uint64_t;

constexpr int kTermBits = 3;

struct Codec {
  std::vector<std::string> atoms;

  int term_code(const Term& t) const {
    auto it = std::find(atoms.begin(), atoms.end(), t.atom);
    return static_cast<int>(it - atoms.begin()) | (t.complemented ? 4 : 0);
  }
  Term term(int code) const { return Term(atoms.at(code & 3), (code & 4) != 0); }

  Packed pack(const Proposition& p) const {
    return static_cast<Packed>(static_cast<int>(p.modality) | (static_cast<int>(p.quantifier) << 2) |
                               (term_code(p.subject) << 5) | (term_code(p.predicate) << 8));
  }
  Proposition unpack(Packed x) const {
    Proposition p(static_cast<Quantifier>((x >> 2) & 7), term((x >> 5) & 7), term((x >> 8) & 7),
                  static_cast<Modality>(x & 3));
    return p;
  }
};

Modality packed_mod(Packed x) { return static_cast<Modality>(x & 3); }
Quantifier packed_quant(Packed x) { return static_cast<Quantifier>((x >> 2) & 7); }
int packed_subject(Packed x) { return (x >> 5) & 7; }
int packed_predicate(Packed x) { return (x >> 8) & 7; }

Packed make(Modality m, Quantifier q, int s, int t) {
  return static_cast<Packed>(static_cast<int>(m) | (static_cast<int>(q) << 2) | (s << 5) | (t << (kTermBits + 5)));
}

Packed negate_packed(Packed x) {
  return make(dual(packed_mod(x)), negate(packed_quant(x), NegationMode::outer), packed_subject(x),
              packed_predicate(x));
}

Packed inner_packed(Packed x) {
  return make(packed_mod(x), negate(packed_quant(x), NegationMode::inner), packed_subject(x),
              packed_predicate(x) ^ 4);
}

Packed swap_packed(Packed x) { return make(packed_mod(x), packed_quant(x), packed_predicate(x), packed_subject(x)); }

struct State {
  int n = 2;  // number of premises
  std::array<Packed, 2> prem{};
  Packed concl = 0;
};

StateKey key_of(State s) {
  // premise order: the one sharing the conclusion predicate's atom first, else numeric
  if (s.n == 2) {
    int pred_atom = packed_predicate(s.concl) & 3;
    auto has = [&](Packed p) { return (packed_subject(p) & 3) == pred_atom || (packed_predicate(p) & 3) == pred_atom; };
    bool h0 = has(s.prem[0]), h1 = has(s.prem[1]);
    if ((h1 && !h0) || (h0 == h1 && s.prem[1] < s.prem[0])) std::swap(s.prem[0], s.prem[1]);
  }
  return StateKey(s.prem[0]) | (StateKey(s.n == 2 ? s.prem[1] : 0xFFFF) << 16) | (StateKey(s.concl) << 32) |
         (StateKey(s.n) << 48);
}

State state_of(StateKey k) {
  State s;
  s.n = static_cast<int>((k >> 48) & 3);
  s.prem[0] = static_cast<Packed>(k & 0xFFFF);
  s.prem[1] = static_cast<Packed>((k >> 16) & 0xFFFF);
  s.concl = static_cast<Packed>((k >> 32) & 0xFFFF);
  return s;
}

struct Implications {
  // stronger[x]: (pi, license) with pi -> x;  weaker[x]: (pi, license) with x -> pi
  std::unordered_map<Packed, std::vector<std::pair<Packed, std::string>>> stronger, weaker;
};

Implications build_implications(const Codec& codec, bool strict) {
  Implications imp;
  const int terms = static_cast<int>(codec.atoms.size());
  std::vector<Packed> universe;
  for (Modality m : kAllModalities)
    for (Quantifier q : kAllQuantifiers)
      for (int s = 0; s < 8; ++s)
        for (int t = 0; t < 8; ++t)
          if ((s & 3) < terms && (t & 3) < terms) universe.push_back(make(m, q, s, t));
  std::unordered_map<Packed, Proposition> props;
  for (Packed x : universe) props.emplace(x, codec.unpack(x));

  for (const auto& lic : fact_licenses()) {
    if (lic.kind != LicenseKind::implication || (strict && !lic.audited_sound)) continue;
    for (Packed from : universe) {
      // the consequent of an implication instance is determined by the antecedent
      for (const auto& inst : instances(lic)) {
        Binding b;
        const Proposition& x = props.at(from);
        const auto& l = inst.lhs;
        if (l.negated || l.body_negated || l.modality != x.modality) continue;
        if (!match_core(l, x, false, b)) continue;
        if (!lic.empty_subject_safe && b.p->complemented) continue;
        Proposition to = inst.rhs;
        to.subject = instantiate_term(inst.rhs.subject, b);
        to.predicate = instantiate_term(inst.rhs.predicate, b);
        Packed tp = codec.pack(to);
        imp.weaker[from].emplace_back(tp, lic.id);
        imp.stronger[tp].emplace_back(from, lic.id);
      }
    }
  }
  return imp;
}

}  // namespace

std::vector<std::size_t> MiningResult::syllogisms() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (is_syllogism_shaped(all[i].wff)) out.push_back(i);
  return out;
}

std::vector<std::string> MiningResult::trace(std::size_t i) const {
  std::vector<std::string> moves;
  for (std::optional<std::size_t> cur = i; cur && all[*cur].parent; cur = all[*cur].parent)
    moves.push_back(all[*cur].move);
  std::reverse(moves.begin(), moves.end());
  return moves;
}

MiningResult mine(const std::vector<ConditionalWff>& seeds, const MiningOptions& opts) {
  if (opts.depth < 0) throw Error("mining depth must be non-negative");
  Codec codec;
  for (const auto& s : seeds)
    for (const auto& a : atoms_of(s))
      if (std::find(codec.atoms.begin(), codec.atoms.end(), a) == codec.atoms.end()) codec.atoms.push_back(a);
  std::sort(codec.atoms.begin(), codec.atoms.end());
  if (codec.atoms.size() > 4) throw Error("mining supports at most 4 atoms");

  const Implications imp = build_implications(codec, opts.strict);
  MiningResult result;
  std::unordered_map<StateKey, std::size_t> index;

  auto to_wff = [&](const State& s) {
    std::vector<Proposition> prem;
    for (int i = 0; i < s.n; ++i) prem.push_back(codec.unpack(s.prem[i]));
    return canonicalize(ConditionalWff(std::move(prem), codec.unpack(s.concl)));
  };
  auto insert = [&](const State& s, int depth, std::optional<std::size_t> parent, std::string move) {
    StateKey k = key_of(s);
    if (index.contains(k)) return false;
    if (result.all.size() >= opts.node_cap)
      throw NodeCapExceeded("mining exceeded the node cap of " + std::to_string(opts.node_cap));
    index.emplace(k, result.all.size());
    result.all.push_back({to_wff(state_of(k)), depth, parent, std::move(move)});
    return true;
  };

  std::vector<std::size_t> frontier;
  for (const auto& seed : seeds) {
    ConditionalWff c = canonicalize(seed);
    State s;
    s.n = static_cast<int>(c.premises.size());
    for (int i = 0; i < s.n; ++i) s.prem[i] = codec.pack(c.premises[i]);
    s.concl = codec.pack(c.conclusion);
    if (insert(s, 0, std::nullopt, "seed")) frontier.push_back(result.all.size() - 1);
  }

  for (int depth = 1; depth <= opts.depth && !frontier.empty(); ++depth) {
    std::vector<std::size_t> next;
    for (std::size_t node : frontier) {
      // work from the packed key of the node; result.all may reallocate below
      const ConditionalWff w = result.all[node].wff;
      State s;
      s.n = static_cast<int>(w.premises.size());
      for (int i = 0; i < s.n; ++i) s.prem[i] = codec.pack(w.premises[i]);
      s.concl = codec.pack(w.conclusion);

      auto emit = [&](const State& t, std::string move) {
        if (insert(t, depth, node, std::move(move))) next.push_back(result.all.size() - 1);
      };

      // rule 1: strengthen one premise
      for (int i = 0; i < s.n; ++i) {
        auto it = imp.stronger.find(s.prem[i]);
        if (it == imp.stronger.end()) continue;
        for (const auto& [pi, lic] : it->second) {
          State t = s;
          t.prem[i] = pi;
          emit(t, "rule1 " + lic);
        }
      }
      // rule 2: weaken the conclusion
      if (auto it = imp.weaker.find(s.concl); it != imp.weaker.end()) {
        for (const auto& [pi, lic] : it->second) {
          State t = s;
          t.concl = pi;
          emit(t, "rule2 " + lic);
        }
      }
      // rule 3: anti-syllogism, then outer negations folded
      if (s.n == 2) {
        for (int i = 0; i < 2; ++i) {
          State t = s;
          t.prem[0] = negate_packed(s.concl);
          t.prem[1] = s.prem[i];
          t.concl = negate_packed(s.prem[1 - i]);
          emit(t, "rule3");
        }
      }
      // inner negation with complement terms, and symmetry, on any set of positions
      const int positions = s.n + 1;
      auto at = [&](State& t, int pos) -> Packed& { return pos < t.n ? t.prem[pos] : t.concl; };
      for (int mask = 1; mask < (1 << positions); ++mask) {
        State t = s;
        for (int pos = 0; pos < positions; ++pos)
          if ((mask >> pos) & 1) at(t, pos) = inner_packed(at(t, pos));
        emit(t, "inner-negation+d3 mask " + std::to_string(mask));

        State u = s;
        bool ok = true;
        for (int pos = 0; pos < positions && ok; ++pos) {
          if (!((mask >> pos) & 1)) continue;
          Quantifier q = packed_quant(at(u, pos));
          ok = q == Quantifier::some || q == Quantifier::no;
          if (ok) at(u, pos) = swap_packed(at(u, pos));
        }
        if (ok) emit(u, "converse mask " + std::to_string(mask));
      }
    }
    frontier = std::move(next);
  }
  result.complete = frontier.empty();
  return result;
}

MiningResult mine(const ProvedSet& seeds, const MiningOptions& opts) {
  std::vector<ConditionalWff> wffs;
  for (const auto& e : seeds.entries()) wffs.push_back(e.wff);
  return mine(wffs, opts);
}

}  // namespace syl
