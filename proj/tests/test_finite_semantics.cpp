#include <doctest.h>

#include "support.hpp"
#include "syllogism/finite_semantics.hpp"
#include "syllogism/text_frontend.hpp"

using namespace syl;

namespace {

KripkeModel one_world(int domain, std::map<std::string, std::set<int>> ext) {
  KripkeModel m;
  m.domain_size = domain;
  m.worlds.push_back(World{std::move(ext)});
  return m;
}

ConditionalWff wff(const char* s) { return parse_conditional(s); }
ConditionalWff named(const char* s) { return expand_mnemonic(parse_mnemonic(s)); }

SearchBounds bounds(int d, int k, bool rigid = false) {
  SearchBounds b;
  b.max_domain = d;
  b.max_worlds = k;
  b.rigid = rigid;
  return b;
}

}  // namespace

TEST_CASE("counting quantifiers by hand") {
  auto m = one_world(2, {{"p", {1}}, {"n", {1, 2}}, {"w", {1}}});
  CHECK(eval_proposition(parse_proposition("most(p,n)"), m, 0));
  auto half = one_world(2, {{"p", {1, 2}}, {"w", {1}}});
  CHECK(eval_proposition(parse_proposition("at_least_half(p,w)"), half, 0));
  CHECK(eval_proposition(parse_proposition("at_most_half(p,w)"), half, 0));
  CHECK_FALSE(eval_proposition(parse_proposition("most(p,w)"), half, 0));
  CHECK_FALSE(eval_proposition(parse_proposition("fewer_than_half(p,w)"), half, 0));
  CHECK(eval_proposition(parse_proposition("all(p,w)"), one_world(1, {{"p", {1}}, {"w", {1}}}), 0));
  // complements are taken in the domain
  CHECK(eval_proposition(parse_proposition("some(p,non_w)"), half, 0));
  CHECK(eval_proposition(parse_proposition("no~(n,w)"), one_world(2, {{"n", {1}}, {"w", {1, 2}}}), 0));
  CHECK_THROWS_AS(eval_proposition(parse_proposition("all(p,x)"), half, 0), UnknownAtom);
}

TEST_CASE("modalities range over all worlds") {
  KripkeModel m;
  m.domain_size = 2;
  m.worlds = {World{{{"p", {1}}, {"w", {2}}}}, World{{{"p", {1}}, {"w", {1}}}}};
  CHECK_FALSE(eval_proposition(parse_proposition("some(p,w)"), m, 0));
  CHECK(eval_proposition(parse_proposition("<>some(p,w)"), m, 0));
  CHECK_FALSE(eval_proposition(parse_proposition("[]some(p,w)"), m, 0));
  CHECK(eval_proposition(parse_proposition("~[]some(p,w)"), m, 0));
  CHECK(eval_proposition(parse_proposition("[]~all(p,w)"), m, 0) == false);
  CHECK(eval_proposition(parse_proposition("<>~some(p,w)"), m, 1));
}

TEST_CASE("holds") {
  auto sat = one_world(2, {{"n", {1}}, {"w", {1}}, {"p", {1}}});
  CHECK(holds(named("AMI-1"), sat));
  auto mam = one_world(3, {{"z", {1, 2, 3}}, {"p", {1, 2}}, {"c", {3}}});
  CHECK_FALSE(holds(wff("most(z,p) & all(c,z) -> most(c,p)"), mam));
  // premises false: vacuous
  CHECK(holds(wff("all(z,p) -> no(z,p)"), mam));
}

TEST_CASE("AMI-1 is valid at (5, 1)") {
  CHECK_FALSE(find_countermodel(named("AMI-1"), bounds(5, 1)).has_value());
  Verdict v = check_validity(named("AMI-1"));
  CHECK(v.status == Status::valid_up_to_bound);
  CHECK_FALSE(v.countermodel.has_value());
  CHECK(v.bounds.max_domain == 4);
}

TEST_CASE("frozen countermodels in canonical order") {
  auto mmi = find_countermodel(named("MMI-1"));
  REQUIRE(mmi);
  CHECK(*mmi == one_world(3, {{"n", {1, 2, 3}}, {"p", {1}}, {"w", {2, 3}}}));

  auto mam = find_countermodel(wff("most(z,p) & all(c,z) -> most(c,p)"), bounds(3, 1));
  REQUIRE(mam);
  CHECK(*mam == one_world(3, {{"c", {1, 3}}, {"p", {2, 3}}, {"z", {1, 2, 3}}}));
  CHECK_FALSE(holds(wff("most(z,p) & all(c,z) -> most(c,p)"), *mam));
}

TEST_CASE("A<>I<>I-1 depends on rigidity") {
  ConditionalWff w = wff("all(r,n) & <>some(c,r) -> <>some(c,n)");
  auto flexible = find_countermodel(w, bounds(2, 2, false));
  REQUIRE(flexible);
  CHECK(flexible->worlds.size() == 2);
  CHECK(flexible->actual == 0);
  CHECK_FALSE(holds(w, *flexible));
  CHECK_FALSE(find_countermodel(w, bounds(2, 2, true)).has_value());
  CHECK_FALSE(find_countermodel(w, bounds(4, 3, true)).has_value());
}

TEST_CASE("<>MM<>I-1 fails") {
  ConditionalWff w = wff("<>most(p,r) & most(c,p) -> <>some(c,r)");
  auto cm = find_countermodel(w, bounds(3, 2));
  REQUIRE(cm);
  CHECK_FALSE(holds(w, *cm));
  CHECK(find_countermodel(w, bounds(3, 2, true)).has_value());
}

TEST_CASE("existential import is a policy") {
  SearchBounds b;
  CHECK(check_validity(named("AAI-1"), b).status == Status::valid_up_to_bound);
  b.existential_import = false;
  Verdict v = check_validity(named("AAI-1"), b);
  REQUIRE(v.status == Status::invalid);
  CHECK(v.countermodel->worlds[0].extensions.at("p").empty());
}

TEST_CASE("bounds and atom cap") {
  CHECK_THROWS_AS(find_countermodel(wff("all(a,b) & all(c,d) -> all(a,e)")), BoundsExceeded);
  CHECK_THROWS_AS(find_countermodel(named("AMI-1"), bounds(0, 1)), Error);
  CHECK_THROWS_AS(find_countermodel(named("AMI-1"), bounds(1, 0)), Error);
}

TEST_CASE("threads do not change results") {
  std::mt19937 rng(5);
  const std::vector<std::string> atoms{"a", "b", "c"};
  SearchBounds one = bounds(4, 2), many = bounds(4, 2);
  many.threads = 4;
  for (int i = 0; i < 60; ++i) {
    ConditionalWff w = testing::random_wff(rng, atoms);
    CAPTURE(render(w));
    CHECK(find_countermodel(w, one) == find_countermodel(w, many));
  }
}

TEST_CASE("audit") {
  AuditReport r = audit_facts();
  CHECK(r.entries.size() == 32);
  CHECK(r.passed() == 31);
  CHECK(r.failed() == 1);
  for (const auto& e : r.entries) {
    if (e.license_id == "4.9") {
      CHECK_FALSE(e.passed);
      REQUIRE(e.countermodel);
      CHECK(e.countermodel->domain_size == 2);
      CHECK(*e.countermodel == one_world(2, {{"p", {1, 2}}, {"w", {2}}}));
      CHECK(render(*e.failing_wff) == "at_least_half(p,w) -> most(p,w)");
    } else {
      CHECK_MESSAGE(e.passed, e.license_id);
    }
  }
}

TEST_CASE("empty subjects") {
  CHECK_FALSE(survives_empty_subject(*find_license("4.1")));
  CHECK(survives_empty_subject(*find_license("4.4")));
  CHECK(survives_empty_subject(*find_license("4.10")));
}

TEST_CASE("census") {
  using Q = Quantifier;
  CensusTable classical = census({Q::all, Q::no, Q::some, Q::not_all}, {1, 2, 3, 4}, false);
  CHECK(classical.rows.size() == 256);
  CHECK(classical.valid_count() == 24);
  CHECK(census({}, {1, 2, 3, 4}, false).rows.empty());
  CensusTable fig1 = census({Q::all, Q::no, Q::some, Q::not_all}, {1}, false);
  CHECK(fig1.rows.size() == 64);
  CHECK(fig1.valid_count() == 6);

  std::vector<Q> all8(kAllQuantifiers.begin(), kAllQuantifiers.end());
  CensusTable full = census(all8, {1, 2, 3, 4}, false);
  CHECK(full.rows.size() == 2048);
  CHECK(full.valid_count() == 72);
  std::set<std::string> valid;
  for (const auto& row : full.rows)
    if (row.verdict.status == Status::valid_up_to_bound) valid.insert(print_mnemonic(row.mnemonic));
  for (const char* n : {"MAI-4", "AEH-2", "AEH-4", "EMO-3", "EMO-4", "EMO-1", "EMO-2", "AMI-3", "MAI-3", "EAH-2",
                        "EAH-1", "ASI-1", "SAI-4", "ESO-3", "ESO-4", "AEF-2", "AEF-4", "ASI-3", "SAI-3", "AAI-1",
                        "AAI-4", "EAO-3", "EAO-4", "AEO-2", "AEO-4", "EAO-1", "EAO-2"})
    CHECK_MESSAGE(valid.contains(n), n);
  CHECK(print_mnemonic(full.rows.front().mnemonic) == "AAA-1");
}

TEST_CASE("property: modal semantics") {
  std::mt19937 rng(17);
  const std::vector<std::string> atoms{"a", "b"};
  for (int i = 0; i < 400; ++i) {
    KripkeModel m = testing::random_model(rng, atoms, 4, 3);
    for (Quantifier q : kAllQuantifiers) {
      Proposition p(q, Term("a"), Term("b", i % 2 == 1));
      bool all = true, any = false;
      for (std::size_t w = 0; w < m.worlds.size(); ++w) {
        bool v = eval_proposition(p, m, w);
        all = all && v;
        any = any || v;
      }
      const bool here = eval_proposition(p, m, m.actual);
      const bool nec = eval_proposition(necessarily(p), m, m.actual);
      const bool pos = eval_proposition(possibly(p), m, m.actual);
      CHECK(nec == all);
      CHECK(pos == any);
      CHECK((!nec || here));
      CHECK((!here || pos));
      // duality: ~[]p == <>~p and ~<>p == []~p
      CHECK(eval_proposition(negation(necessarily(p)), m, m.actual) == eval_proposition(possibly(negation(p)), m, m.actual));
      CHECK(eval_proposition(negation(possibly(p)), m, m.actual) == eval_proposition(necessarily(negation(p)), m, m.actual));
      CHECK(testing::oracle_eval(p, m, m.actual) == here);
    }
  }
}

TEST_CASE("property: region vectors agree with labeled subsets at (3, 2)") {
  auto r = testing::oracle_equivalence(500);
  INFO(r.first_failure);
  CHECK(r.cases == 500);
  CHECK(r.ok());
}

TEST_CASE("property: rigid search agrees with labeled subsets") {
  std::mt19937 rng(31);
  const std::vector<std::string> atoms{"a", "b", "c"};
  SearchBounds b = bounds(3, 2, true);
  for (int i = 0; i < 150; ++i) {
    ConditionalWff w = testing::random_wff(rng, atoms);
    CAPTURE(render(w));
    auto cm = find_countermodel(w, b);
    CHECK(cm.has_value() == testing::oracle_has_countermodel(w, b));
    if (cm) CHECK_FALSE(holds(w, *cm));
  }
}

TEST_CASE("property: countermodels always falsify") {
  std::mt19937 rng(8);
  const std::vector<std::string> atoms{"a", "b", "c", "d"};
  for (int i = 0; i < 150; ++i) {
    ConditionalWff w = testing::random_wff(rng, atoms);
    Verdict v = check_validity(w, bounds(3, 2));
    CHECK(v.countermodel.has_value() == (v.status == Status::invalid));
    if (v.countermodel) CHECK_FALSE(holds(w, *v.countermodel));
  }
}
