#include "syllogism/finite_semantics.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "syllogism/text_frontend.hpp"

namespace syl {

std::string_view keyword(Status s) {
  return s == Status::invalid ? "invalid" : "valid_up_to_bound";
}

namespace {

bool quantifier_test(Quantifier q, int both, int subject_size) {
  switch (q) {
    case Quantifier::all: return both == subject_size;
    case Quantifier::some: return both > 0;
    case Quantifier::no: return both == 0;
    case Quantifier::not_all: return both < subject_size;
    case Quantifier::most: return 2 * both > subject_size;
    case Quantifier::fewer_than_half: return 2 * both < subject_size;
    case Quantifier::at_least_half: return 2 * both >= subject_size;
    case Quantifier::at_most_half: return 2 * both <= subject_size;
  }
  return false;
}

// ---------------------------------------------------------------------------
// explicit models

std::set<int> extension_of(const Term& t, const World& w, int domain) {
  auto it = w.extensions.find(t.atom);
  if (it == w.extensions.end()) throw UnknownAtom("atom '" + t.atom + "' has no extension");
  if (!t.complemented) return it->second;
  std::set<int> out;
  for (int e = 1; e <= domain; ++e)
    if (!it->second.contains(e)) out.insert(e);
  return out;
}

bool core_at(const Proposition& p, const KripkeModel& m, std::size_t world) {
  const World& w = m.worlds.at(world);
  Term pred = p.inner_negated ? complement(p.predicate) : p.predicate;
  auto s = extension_of(p.subject, w, m.domain_size);
  auto t = extension_of(pred, w, m.domain_size);
  int both = 0;
  for (int e : s) both += t.contains(e) ? 1 : 0;
  return quantifier_test(p.quantifier, both, static_cast<int>(s.size())) != p.body_negated;
}

// ---------------------------------------------------------------------------
// region-vector search

struct Core {
  Quantifier q;
  int subject;
  bool subject_comp;
  int predicate;
  bool predicate_comp;
  bool negated;
  bool operator==(const Core&) const = default;
};

struct CompiledProp {
  int core;
  Modality modality;
  bool negated;
};

struct Compiled {
  std::vector<std::string> atoms;
  std::vector<Core> cores;
  std::vector<CompiledProp> premises;
  CompiledProp conclusion{};
  bool modal = false;
};

Compiled compile(const ConditionalWff& w) {
  Compiled c;
  c.atoms = atoms_of(w);
  auto index = [&](const std::string& a) {
    return static_cast<int>(std::find(c.atoms.begin(), c.atoms.end(), a) - c.atoms.begin());
  };
  auto add = [&](const Proposition& p0) {
    Proposition p = p0;
    p.normalize();
    Core core{p.quantifier,
              index(p.subject.atom),
              p.subject.complemented,
              index(p.predicate.atom),
              p.predicate.complemented != p.inner_negated,
              p.body_negated};
    auto it = std::find(c.cores.begin(), c.cores.end(), core);
    int id = static_cast<int>(it - c.cores.begin());
    if (it == c.cores.end()) c.cores.push_back(core);
    if (p.modality != Modality::none) c.modal = true;
    return CompiledProp{id, p.modality, p.negated};
  };
  for (const auto& p : w.premises) c.premises.push_back(add(p));
  c.conclusion = add(w.conclusion);
  return c;
}

using Vector = std::vector<int>;

// All cardinality vectors over `regions` cells summing to `total`, in
// lexicographic order.
void compositions(int regions, int total, Vector& cur, std::vector<Vector>& out) {
  if (static_cast<int>(cur.size()) == regions - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int c = 0; c <= total; ++c) {
    cur.push_back(c);
    compositions(regions, total - c, cur, out);
    cur.pop_back();
  }
}

std::vector<Vector> region_vectors(int atoms, int domain, bool existential_import) {
  int regions = 1 << atoms;
  std::vector<Vector> all;
  Vector cur;
  compositions(regions, domain, cur, all);
  if (!existential_import) return all;
  std::vector<Vector> out;
  for (auto& v : all) {
    bool ok = true;
    for (int a = 0; a < atoms && ok; ++a) {
      int size = 0;
      for (int r = 0; r < regions; ++r)
        if ((r >> a) & 1) size += v[r];
      ok = size > 0;
    }
    if (ok) out.push_back(std::move(v));
  }
  return out;
}

bool core_on_vector(const Core& c, const Vector& v) {
  int subject_size = 0, both = 0;
  for (std::size_t r = 0; r < v.size(); ++r) {
    bool in_s = (((r >> c.subject) & 1) != 0) != c.subject_comp;
    if (!in_s) continue;
    subject_size += v[r];
    bool in_t = (((r >> c.predicate) & 1) != 0) != c.predicate_comp;
    if (in_t) both += v[r];
  }
  return quantifier_test(c.q, both, subject_size) != c.negated;
}

using Sig = std::uint32_t;

bool prop_value(const CompiledProp& p, Sig actual, Sig all_others, Sig any_other) {
  Sig bit = Sig{1} << p.core;
  bool v = false;
  switch (p.modality) {
    case Modality::none: v = actual & bit; break;
    case Modality::necessary: v = (actual & all_others) & bit; break;
    case Modality::possible: v = (actual | any_other) & bit; break;
  }
  return v != p.negated;
}

bool falsified(const Compiled& c, Sig actual, Sig all_others, Sig any_other) {
  for (const auto& p : c.premises)
    if (!prop_value(p, actual, all_others, any_other)) return false;
  return !prop_value(c.conclusion, actual, all_others, any_other);
}

World world_from_vector(const std::vector<std::string>& atoms, const Vector& v) {
  World w;
  for (const auto& a : atoms) w.extensions[a];
  int next = 1;
  for (std::size_t r = 0; r < v.size(); ++r) {
    for (int j = 0; j < v[r]; ++j, ++next)
      for (std::size_t a = 0; a < atoms.size(); ++a)
        if ((r >> a) & 1) w.extensions[atoms[a]].insert(next);
  }
  return w;
}

// k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace

bool eval_proposition(const Proposition& p0, const KripkeModel& m, std::size_t world_index) {
  Proposition p = p0;
  p.normalize();
  if (m.worlds.empty() || world_index >= m.worlds.size()) throw Error("world index out of range");
  bool v = false;
  switch (p.modality) {
    case Modality::none: v = core_at(p, m, world_index); break;
    case Modality::necessary:
      v = true;
      for (std::size_t i = 0; i < m.worlds.size(); ++i) v = v && core_at(p, m, i);
      break;
    case Modality::possible:
      for (std::size_t i = 0; i < m.worlds.size(); ++i) v = v || core_at(p, m, i);
      break;
  }
  return v != p.negated;
}

bool holds(const ConditionalWff& w, const KripkeModel& m) {
  for (const auto& p : w.premises)
    if (!eval_proposition(p, m, m.actual)) return true;
  return eval_proposition(w.conclusion, m, m.actual);
}

std::optional<KripkeModel> find_countermodel(const ConditionalWff& w, const SearchBounds& b) {
  if (b.max_domain < 1 || b.max_worlds < 1) throw Error("search bounds must be positive");
  Compiled c = compile(w);
  if (static_cast<int>(c.atoms.size()) > b.max_atoms)
    throw BoundsExceeded("wff uses " + std::to_string(c.atoms.size()) + " atoms; the cap is " +
                         std::to_string(b.max_atoms));
  const int k = static_cast<int>(c.atoms.size());
  const int max_worlds = (b.rigid || !c.modal) ? 1 : b.max_worlds;
  const unsigned threads = std::max(1u, b.threads);

  for (int d = 1; d <= b.max_domain; ++d) {
    auto vectors = region_vectors(k, d, b.existential_import);
    if (vectors.empty()) continue;
    std::vector<Sig> sig(vectors.size(), 0);
    for (std::size_t i = 0; i < vectors.size(); ++i)
      for (std::size_t ci = 0; ci < c.cores.size(); ++ci)
        if (core_on_vector(c.cores[ci], vectors[i])) sig[i] |= Sig{1} << ci;
    // distinct signatures, each represented by its first vector
    std::vector<Sig> sigs;
    std::vector<std::size_t> rep;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (std::find(sigs.begin(), sigs.end(), sig[i]) == sigs.end()) {
        sigs.push_back(sig[i]);
        rep.push_back(i);
      }
    }
    std::vector<std::size_t> order(sigs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return sigs[x] < sigs[y]; });

    for (int worlds = 1; worlds <= max_worlds; ++worlds) {
      auto combos = combinations(static_cast<int>(sigs.size()), worlds - 1);
      if (combos.empty()) break;
      std::vector<Sig> and_mask(combos.size(), ~Sig{0}), or_mask(combos.size(), 0);
      for (std::size_t t = 0; t < combos.size(); ++t)
        for (int j : combos[t]) {
          and_mask[t] &= sigs[order[j]];
          or_mask[t] |= sigs[order[j]];
        }

      // ordered reduction: smallest actual-world index wins, then smallest combination
      constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
      std::atomic<std::size_t> best_actual{kNone};
      std::vector<std::size_t> best_combo(threads, kNone);
      std::vector<std::size_t> found_actual(threads, kNone);
      auto scan = [&](unsigned tid, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
          if (i > best_actual.load(std::memory_order_relaxed)) return;
          for (std::size_t t = 0; t < combos.size(); ++t) {
            if (falsified(c, sig[i], and_mask[t], or_mask[t])) {
              found_actual[tid] = i;
              best_combo[tid] = t;
              std::size_t cur = best_actual.load();
              while (i < cur && !best_actual.compare_exchange_weak(cur, i)) {
              }
              return;
            }
          }
        }
      };
      std::size_t n = vectors.size();
      if (threads == 1 || n < 64) {
        scan(0, 0, n);
      } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (n + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
          std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
          if (lo < hi) pool.emplace_back(scan, t, lo, hi);
        }
        for (auto& th : pool) th.join();
      }
      std::size_t actual = kNone, combo = kNone;
      for (unsigned t = 0; t < threads; ++t)
        if (found_actual[t] < actual) actual = found_actual[t], combo = best_combo[t];
      if (actual == kNone) continue;

      KripkeModel m;
      m.domain_size = d;
      m.actual = 0;
      m.worlds.push_back(world_from_vector(c.atoms, vectors[actual]));
      for (int j : combos[combo]) m.worlds.push_back(world_from_vector(c.atoms, vectors[rep[order[j]]]));
      return m;
    }
  }
  return std::nullopt;
}

Verdict check_validity(const ConditionalWff& w, const SearchBounds& b) {
  Verdict v;
  v.bounds = b;
  v.countermodel = find_countermodel(w, b);
  v.status = v.countermodel ? Status::invalid : Status::valid_up_to_bound;
  return v;
}

std::size_t AuditReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const AuditEntry& e) { return e.passed; }));
}

std::size_t AuditReport::failed() const { return entries.size() - passed(); }

namespace {

std::vector<ConditionalWff> license_conditionals(const FactLicense& lic) {
  std::vector<ConditionalWff> out;
  for (const auto& inst : instances(lic)) {
    out.emplace_back(std::vector<Proposition>{inst.lhs}, inst.rhs);
    if (lic.kind == LicenseKind::equivalence)
      out.emplace_back(std::vector<Proposition>{inst.rhs}, inst.lhs);
  }
  return out;
}

}  // namespace

AuditReport audit_facts(const SearchBounds& b) {
  AuditReport report;
  for (const auto& lic : fact_licenses()) {
    AuditEntry e;
    e.license_id = lic.id;
    e.checked = license_conditionals(lic);
    for (const auto& w : e.checked) {
      if (auto m = find_countermodel(w, b)) {
        e.passed = false;
        e.failing_wff = w;
        e.countermodel = std::move(m);
        break;
      }
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

bool survives_empty_subject(const FactLicense& lic, const SearchBounds& b) {
  for (auto w : license_conditionals(lic)) {
    w.premises[0].subject = complement(w.premises[0].subject);
    w.conclusion.subject = complement(w.conclusion.subject);
    if (find_countermodel(w, b)) return false;
  }
  return true;
}

std::size_t CensusTable::valid_count() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const CensusRow& r) {
    return r.verdict.status == Status::valid_up_to_bound;
  }));
}

CensusTable census(const std::vector<Quantifier>& letters, const std::vector<int>& figures,
                   bool modal, const SearchBounds& b) {
  CensusTable table;
  std::vector<Modality> mods = {Modality::none};
  if (modal) mods.assign(kAllModalities.begin(), kAllModalities.end());
  for (int fig : figures)
    for (Quantifier major : letters)
      for (Quantifier minor : letters)
        for (Quantifier concl : letters)
          for (Modality m1 : mods)
            for (Modality m2 : mods)
              for (Modality m3 : mods) {
                Mnemonic mn{m1, major, m2, minor, m3, concl, fig};
                table.rows.push_back({mn, expand_mnemonic(mn), {}});
              }

  SearchBounds single = b;
  single.threads = 1;
  const unsigned threads = std::max(1u, b.threads);
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) table.rows[i].verdict = check_validity(table.rows[i].wff, single);
  };
  std::size_t n = table.rows.size();
  if (threads == 1) {
    work(0, n);
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
      if (lo < hi) pool.emplace_back(work, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  for (auto& r : table.rows) r.verdict.bounds = b;
  return table;
}

}  // namespace syl
