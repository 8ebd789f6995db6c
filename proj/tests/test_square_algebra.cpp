#include <doctest.h>

#include <set>

#include "support.hpp"
#include "syllogism/finite_semantics.hpp"
#include "syllogism/square_algebra.hpp"

using namespace syl;
using Q = Quantifier;

TEST_CASE("negation tables") {
  CHECK(negate(Q::all, NegationMode::inner) == Q::no);
  CHECK(negate(Q::all, NegationMode::outer) == Q::not_all);
  CHECK(negate(Q::all, NegationMode::dual) == Q::some);
  CHECK(negate(Q::some, NegationMode::inner) == Q::not_all);
  CHECK(negate(Q::most, NegationMode::inner) == Q::fewer_than_half);
  CHECK(negate(Q::most, NegationMode::outer) == Q::at_most_half);
  CHECK(negate(Q::most, NegationMode::dual) == Q::at_least_half);
  CHECK(negate(Q::at_least_half, NegationMode::outer) == Q::fewer_than_half);
  CHECK(negate(Q::at_least_half, NegationMode::inner) == Q::at_most_half);
}

TEST_CASE("squares") {
  CHECK(square_of(Q::all) == SquareId::all_square);
  CHECK(square_of(Q::not_all) == SquareId::all_square);
  CHECK(square_of(Q::most) == SquareId::most_square);
  CHECK(square_of(Q::at_most_half) == SquareId::most_square);
  CHECK(dual(Modality::necessary) == Modality::possible);
  CHECK(dual(Modality::none) == Modality::none);
}

TEST_CASE("license table") {
  auto table = fact_licenses();
  REQUIRE(table.size() == 32);
  std::set<std::string> ids;
  std::size_t equivalences = 0, schematic = 0;
  for (const auto& lic : table) {
    ids.insert(lic.id);
    equivalences += lic.kind == LicenseKind::equivalence;
    schematic += lic.schematic_quantifier;
    CHECK(instances(lic).size() == (lic.schematic_quantifier ? 8u : 1u));
  }
  CHECK(ids.size() == 32);
  CHECK(equivalences == 20);
  CHECK(schematic == 5);
  REQUIRE(find_license("4.9"));
  CHECK_FALSE(find_license("4.9")->audited_sound);
  CHECK(find_license("4.10")->schematic_quantifier);
  CHECK(find_license("6.1") == nullptr);
  for (const auto& lic : table)
    if (lic.id != "4.9") CHECK_MESSAGE(lic.audited_sound, lic.id);
}

TEST_CASE("empty-subject flags agree with the semantics") {
  // A license keeps its flag only if it survives complemented (possibly empty) subjects.
  for (const auto& lic : fact_licenses()) {
    if (lic.kind != LicenseKind::implication) continue;
    CAPTURE(lic.id);
    CHECK(lic.empty_subject_safe == survives_empty_subject(lic));
  }
}

TEST_CASE("audited_sound agrees with the audit") {
  AuditReport report = audit_facts();
  REQUIRE(report.entries.size() == 32);
  for (const auto& e : report.entries) {
    CAPTURE(e.license_id);
    CHECK(find_license(e.license_id)->audited_sound == e.passed);
  }
}

TEST_CASE("property: negation involutions and square partition") {
  auto r = testing::square_algebra_properties();
  INFO(r.first_failure);
  CHECK(r.ok());
  CHECK(r.cases > 2000);
}
