#include "syllogism/square_algebra.hpp"

#include <algorithm>

namespace syl {

namespace {

Quantifier inner_of(Quantifier q) {
  switch (q) {
    case Quantifier::all: return Quantifier::no;
    case Quantifier::no: return Quantifier::all;
    case Quantifier::some: return Quantifier::not_all;
    case Quantifier::not_all: return Quantifier::some;
    case Quantifier::most: return Quantifier::fewer_than_half;
    case Quantifier::fewer_than_half: return Quantifier::most;
    case Quantifier::at_least_half: return Quantifier::at_most_half;
    case Quantifier::at_most_half: return Quantifier::at_least_half;
  }
  return q;
}

Quantifier outer_of(Quantifier q) {
  switch (q) {
    case Quantifier::all: return Quantifier::not_all;
    case Quantifier::not_all: return Quantifier::all;
    case Quantifier::some: return Quantifier::no;
    case Quantifier::no: return Quantifier::some;
    case Quantifier::most: return Quantifier::at_most_half;
    case Quantifier::at_most_half: return Quantifier::most;
    case Quantifier::fewer_than_half: return Quantifier::at_least_half;
    case Quantifier::at_least_half: return Quantifier::fewer_than_half;
  }
  return q;
}

const Term kP{"p"};
const Term kW{"w"};

Proposition plain(Quantifier q) { return Proposition(q, kP, kW); }

Proposition inner_neg(Quantifier q) {
  Proposition p = plain(q);
  p.inner_negated = true;
  return p;
}

Proposition outer_neg(Quantifier q) { return negation(plain(q)); }

FactLicense equiv(std::string id, Proposition l, Proposition r) {
  return FactLicense{std::move(id), LicenseKind::equivalence, std::move(l), std::move(r)};
}

FactLicense impl(std::string id, Proposition l, Proposition r, bool empty_subject_safe = true) {
  FactLicense f{std::move(id), LicenseKind::implication, std::move(l), std::move(r)};
  f.empty_subject_safe = empty_subject_safe;
  return f;
}

FactLicense schematic(FactLicense f) {
  f.schematic_quantifier = true;
  return f;
}

std::vector<FactLicense> build_table() {
  using Q = Quantifier;
  std::vector<FactLicense> t;
  // inner negation
  t.push_back(equiv("1.1", plain(Q::all), inner_neg(Q::no)));
  t.push_back(equiv("1.2", plain(Q::no), inner_neg(Q::all)));
  t.push_back(equiv("1.3", plain(Q::some), inner_neg(Q::not_all)));
  t.push_back(equiv("1.4", plain(Q::not_all), inner_neg(Q::some)));
  t.push_back(equiv("1.5", plain(Q::most), inner_neg(Q::fewer_than_half)));
  t.push_back(equiv("1.6", plain(Q::fewer_than_half), inner_neg(Q::most)));
  t.push_back(equiv("1.7", plain(Q::at_least_half), inner_neg(Q::at_most_half)));
  t.push_back(equiv("1.8", plain(Q::at_most_half), inner_neg(Q::at_least_half)));
  // outer negation
  t.push_back(equiv("2.1", outer_neg(Q::all), plain(Q::not_all)));
  t.push_back(equiv("2.2", outer_neg(Q::not_all), plain(Q::all)));
  t.push_back(equiv("2.3", outer_neg(Q::no), plain(Q::some)));
  t.push_back(equiv("2.4", outer_neg(Q::some), plain(Q::no)));
  t.push_back(equiv("2.5", outer_neg(Q::most), plain(Q::at_most_half)));
  t.push_back(equiv("2.6", outer_neg(Q::at_most_half), plain(Q::most)));
  t.push_back(equiv("2.7", outer_neg(Q::fewer_than_half), plain(Q::at_least_half)));
  t.push_back(equiv("2.8", outer_neg(Q::at_least_half), plain(Q::fewer_than_half)));
  // symmetry
  t.push_back(equiv("3.1", plain(Q::some), Proposition(Q::some, kW, kP)));
  t.push_back(equiv("3.2", plain(Q::no), Proposition(Q::no, kW, kP)));
  // subordination
  t.push_back(impl("4.1", plain(Q::all), plain(Q::some), false));
  t.push_back(impl("4.2", plain(Q::no), plain(Q::not_all), false));
  t.push_back(impl("4.3", plain(Q::all), plain(Q::most), false));
  t.push_back(impl("4.4", plain(Q::most), plain(Q::some)));
  t.push_back(impl("4.5", plain(Q::at_least_half), plain(Q::some), false));
  t.push_back(impl("4.6", plain(Q::all), plain(Q::at_least_half)));
  t.push_back(impl("4.7", plain(Q::at_most_half), plain(Q::not_all), false));
  t.push_back(impl("4.8", plain(Q::fewer_than_half), plain(Q::not_all)));
  t.push_back(impl("4.9", plain(Q::at_least_half), plain(Q::most), false));
  t.back().audited_sound = false;
  t.push_back(schematic(impl("4.10", necessarily(plain(Q::all)), plain(Q::all))));
  t.push_back(schematic(impl("4.11", necessarily(plain(Q::all)), possibly(plain(Q::all)))));
  t.push_back(schematic(impl("4.12", plain(Q::all), possibly(plain(Q::all)))));
  // duality
  t.push_back(schematic(equiv("5.1", negation(necessarily(plain(Q::all))),
                              possibly(negation(plain(Q::all))))));
  t.push_back(schematic(equiv("5.2", negation(possibly(plain(Q::all))),
                              necessarily(negation(plain(Q::all))))));
  return t;
}

}  // namespace

Quantifier negate(Quantifier q, NegationMode mode) {
  switch (mode) {
    case NegationMode::inner: return inner_of(q);
    case NegationMode::outer: return outer_of(q);
    case NegationMode::dual: return inner_of(outer_of(q));
  }
  return q;
}

SquareId square_of(Quantifier q) {
  switch (q) {
    case Quantifier::all:
    case Quantifier::some:
    case Quantifier::no:
    case Quantifier::not_all: return SquareId::all_square;
    default: return SquareId::most_square;
  }
}

Modality dual(Modality m) {
  switch (m) {
    case Modality::necessary: return Modality::possible;
    case Modality::possible: return Modality::necessary;
    case Modality::none: return Modality::none;
  }
  return m;
}

std::span<const FactLicense> fact_licenses() {
  static const std::vector<FactLicense> table = build_table();
  return table;
}

const FactLicense* find_license(std::string_view id) {
  auto table = fact_licenses();
  auto it = std::find_if(table.begin(), table.end(), [&](const FactLicense& f) { return f.id == id; });
  return it == table.end() ? nullptr : &*it;
}

std::vector<LicenseInstance> instances(const FactLicense& lic) {
  if (!lic.schematic_quantifier) return {{lic.lhs, lic.rhs}};
  std::vector<LicenseInstance> out;
  for (Quantifier q : kAllQuantifiers) {
    LicenseInstance inst{lic.lhs, lic.rhs};
    inst.lhs.quantifier = q;
    inst.rhs.quantifier = q;
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace syl
