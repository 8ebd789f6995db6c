#include "syllogism/discourse.hpp"

#include <algorithm>
#include <set>

#include "syllogism/proof_kernel.hpp"
#include "syllogism/text_frontend.hpp"

namespace syl {

DiscourseVerdict check_discourse(const Discourse& d, const SearchBounds& b, const DiscourseOptions& opts) {
  if (d.links.empty()) throw Error("discourse has no syllogisms");

  // Closure membership is by mnemonic: the mined closure is over the axiom's
  // atoms and the discourse uses its own.
  std::optional<std::set<Mnemonic>> mined;
  if (opts.closure) {
    MiningOptions mo;
    mo.depth = opts.closure_depth;
    mo.strict = opts.closure_strict;
    auto r = mine(std::vector<ConditionalWff>{axiom_a2()}, mo);
    mined.emplace();
    for (auto i : r.syllogisms())
      if (auto m = name_of(r.all[i].wff)) mined->insert(*m);
  }

  DiscourseVerdict out;
  out.valid = true;
  for (std::size_t k = 0; k < d.links.size(); ++k) {
    const auto& link = d.links[k];
    LinkReport r;
    r.index = k;
    if (k > 0) {
      const Proposition prev = canonicalize(d.links[k - 1].wff.conclusion);
      r.structural_ok = std::any_of(link.wff.premises.begin(), link.wff.premises.end(),
                                    [&](const Proposition& p) { return canonicalize(p) == prev; });
    }
    r.verdict = check_validity(link.wff, b);
    auto actual = name_of(link.wff);
    if (link.name) r.name_ok = actual && *actual == *link.name;
    if (mined) r.in_closure = actual && mined->contains(*actual);
    out.valid = out.valid && r.ok();
    out.links.push_back(std::move(r));
  }
  return out;
}

}  // namespace syl
