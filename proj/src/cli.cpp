#include "syllogism/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "syllogism/corpus.hpp"
#include "syllogism/discourse.hpp"
#include "syllogism/finite_semantics.hpp"
#include "syllogism/proof_kernel.hpp"
#include "syllogism/report.hpp"
#include "syllogism/text_frontend.hpp"

namespace syl::cli {
namespace {

using json = nlohmann::json;

// Input the user got wrong; reported with exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Shared {
  int max_domain = 4;
  int max_worlds = 2;
  bool rigid = false;
  bool no_import = false;
  unsigned threads = 1;
  bool json = false;

  SearchBounds bounds() const {
    SearchBounds b;
    b.max_domain = max_domain;
    b.max_worlds = max_worlds;
    b.rigid = rigid;
    b.existential_import = !no_import;
    b.threads = std::max(1u, threads);
    return b;
  }
};

void add_shared(CLI::App* sub, Shared& s) {
  sub->add_option("--max-domain", s.max_domain, "largest domain size searched")->check(CLI::PositiveNumber);
  sub->add_option("--max-worlds", s.max_worlds, "largest number of worlds searched")->check(CLI::PositiveNumber);
  sub->add_flag("--rigid", s.rigid, "term extensions are the same in every world");
  sub->add_flag("--no-existential-import", s.no_import, "allow empty base-term extensions");
  sub->add_option("--threads", s.threads, "worker threads for countermodel search")->check(CLI::PositiveNumber);
  sub->add_flag("--json", s.json, "machine-readable output");
}

class Timer {
 public:
  long long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

ConditionalWff formula_arg(const std::string& text) {
  if (looks_like_mnemonic(text)) return expand_mnemonic(parse_mnemonic(text));
  auto parsed = parse_wff(text);
  if (auto* c = std::get_if<ConditionalWff>(&parsed)) return *c;
  throw UsageError("expected a conditional 'PREMISES -> CONCLUSION' or a mnemonic, got a bare proposition");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string bounds_text(const SearchBounds& b) {
  std::ostringstream s;
  s << "max_domain=" << b.max_domain << " max_worlds=" << b.max_worlds << " rigid=" << (b.rigid ? "true" : "false")
    << " existential_import=" << (b.existential_import ? "true" : "false");
  return s.str();
}

std::string name_text(const ConditionalWff& w) {
  auto m = name_of(w);
  return m ? print_mnemonic(*m) : "-";
}

std::vector<std::string> mnemonic_strings(const std::vector<Mnemonic>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(print_mnemonic(m));
  return out;
}

void indent(std::ostream& out, const std::string& text, const std::string& pad = "  ") {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out << pad << line << "\n";
}

// ---------------------------------------------------------------------------

int cmd_check(const std::string& formula, const Shared& s, std::ostream& out) {
  Timer t;
  const ConditionalWff w = formula_arg(formula);
  const Verdict v = check_validity(w, s.bounds());
  if (s.json) {
    json j = to_json(v);
    j["wff"] = print_wff(w);
    auto name = name_of(w);
    j["name"] = name ? json(print_mnemonic(*name)) : json(nullptr);
    j["elapsed_ms"] = t.elapsed_ms();
    out << j.dump(2) << "\n";
  } else {
    out << "wff: " << print_wff(w) << "\n";
    out << "name: " << name_text(w) << "\n";
    out << "status: " << keyword(v.status) << "\n";
    out << "bounds: " << bounds_text(v.bounds) << "\n";
    if (v.countermodel) {
      out << "countermodel:\n";
      indent(out, describe(*v.countermodel));
    }
  }
  return v.status == Status::valid_up_to_bound ? 0 : 1;
}

int cmd_expand(const std::string& text, const Shared& s, std::ostream& out) {
  if (looks_like_mnemonic(text)) {
    Mnemonic m = parse_mnemonic(text);
    ConditionalWff w = expand_mnemonic(m);
    if (s.json) out << json{{"mnemonic", print_mnemonic(m)}, {"wff", render(w)}}.dump(2) << "\n";
    else out << render(w) << "\n";
    return 0;
  }
  ConditionalWff w = formula_arg(text);
  auto m = name_of(w);
  if (s.json) {
    out << json{{"mnemonic", m ? json(print_mnemonic(*m)) : json(nullptr)}, {"wff", print_wff(w)}}.dump(2) << "\n";
  } else if (m) {
    out << print_mnemonic(*m) << "\n";
  } else {
    out << "not a syllogism: " << print_wff(w) << "\n";
  }
  return m ? 0 : 1;
}

json replay_json(const ReplayReport& r) {
  return {{"label", r.label},
          {"steps_checked", r.steps_checked},
          {"steps_accepted", r.steps_accepted},
          {"ok", r.ok},
          {"failed_step", r.failed_step ? json(*r.failed_step) : json(nullptr)},
          {"failure_code", std::string(keyword(r.failure_code))},
          {"failure_reason", r.failure_reason},
          {"minted", mnemonic_strings(r.minted())}};
}

int cmd_replay(const std::string& path, bool strict, const Shared& s, std::ostream& out) {
  Timer t;
  std::string label = std::filesystem::path(path).stem().string();
  DerivationScript script;
  try {
    script = parse_proof_script(read_file(path), label);
  } catch (const SourceError& e) {
    throw UsageError(path + ":" + e.what());
  }
  KernelOptions ko;
  ko.strict = strict;
  ReplayReport r = replay(script, ko);
  if (s.json) {
    json j = replay_json(r);
    j["elapsed_ms"] = t.elapsed_ms();
    out << j.dump(2) << "\n";
  } else {
    out << label << ": " << r.steps_accepted << "/" << script.steps.size() << " steps accepted, "
        << r.minted().size() << " names minted\n";
    if (!r.ok)
      out << "step " << *r.failed_step << " rejected (" << keyword(r.failure_code) << "): " << r.failure_reason
          << "\n";
  }
  return r.ok ? 0 : 1;
}

int cmd_verify_corpus(bool semantics, bool strict, const Shared& s, std::ostream& out) {
  Timer t;
  CorpusOptions co;
  co.semantics = semantics;
  co.kernel.strict = strict;
  CorpusReport r = verify_corpus(s.bounds(), co);

  std::size_t mismatches = 0, valid_expected = 0;
  for (const auto& e : r.registry) valid_expected += e.expectation == Expectation::valid;
  for (const auto& c : r.entries) mismatches += !c.matches;

  if (s.json) {
    json scripts = json::array();
    for (const auto& sc : r.scripts) {
      json j = replay_json(sc.replay);
      j["fresh_names"] = mnemonic_strings(sc.fresh_names);
      j["expected_names"] = sc.expected_names;
      scripts.push_back(std::move(j));
    }
    json entries = json::array();
    for (const auto& c : r.entries) {
      const auto& e = r.registry[c.index];
      json j = {{"mnemonic", print_mnemonic(e.mnemonic)},
                {"wff", render(e.wff)},
                {"source", e.source},
                {"expectation", std::string(keyword(e.expectation))},
                {"verdict", to_json(c.verdict)},
                {"matches", c.matches}};
      if (c.rigid_verdict) j["rigid_verdict"] = to_json(*c.rigid_verdict);
      entries.push_back(std::move(j));
    }
    out << json{{"ok", r.ok()},
                {"total_steps", r.total_steps},
                {"scripts", std::move(scripts)},
                {"registry_size", r.registry.size()},
                {"valid_expected", valid_expected},
                {"entries", std::move(entries)},
                {"missing_from_scripts", mnemonic_strings(r.missing_from_scripts)},
                {"missing_from_registry", mnemonic_strings(r.missing_from_registry)},
                {"bounds", to_json(s.bounds())},
                {"elapsed_ms", t.elapsed_ms()}}
               .dump(2)
        << "\n";
    return r.ok() ? 0 : 1;
  }

  for (const auto& sc : r.scripts) {
    out << sc.replay.label << ": " << sc.replay.steps_accepted << "/" << sc.replay.steps_checked
        << " steps accepted, " << sc.fresh_names.size() << " new names (expected " << sc.expected_names << ")\n";
    if (!sc.replay.ok)
      out << "  step " << *sc.replay.failed_step << " rejected (" << keyword(sc.replay.failure_code)
          << "): " << sc.replay.failure_reason << "\n";
  }
  out << "total steps: " << r.total_steps << "\n";
  for (const auto& m : r.missing_from_scripts) out << "registry name not minted: " << print_mnemonic(m) << "\n";
  for (const auto& m : r.missing_from_registry) out << "minted name not registered: " << print_mnemonic(m) << "\n";
  if (semantics) {
    out << "registry: " << r.registry.size() << " entries, " << valid_expected << " expected valid, "
        << mismatches << " mismatches (" << bounds_text(s.bounds()) << ")\n";
    for (const auto& c : r.entries) {
      const auto& e = r.registry[c.index];
      if (e.expectation == Expectation::valid && c.matches) continue;
      out << "  " << print_mnemonic(e.mnemonic) << " [" << e.source << "] expected " << keyword(e.expectation)
          << ": " << keyword(c.verdict.status);
      if (c.rigid_verdict) out << ", rigid " << keyword(c.rigid_verdict->status);
      out << (c.matches ? "" : "  MISMATCH") << "\n";
      if (c.verdict.countermodel) indent(out, describe(*c.verdict.countermodel), "    ");
    }
  }
  out << (r.ok() ? "corpus verified" : "corpus verification FAILED") << "\n";
  return r.ok() ? 0 : 1;
}

int cmd_mine(const std::string& seed, int depth, bool strict, std::size_t node_cap, bool check, const Shared& s,
             std::ostream& out) {
  Timer t;
  MiningOptions mo;
  mo.depth = depth;
  mo.strict = strict;
  mo.node_cap = node_cap;
  MiningResult r = mine(std::vector<ConditionalWff>{formula_arg(seed)}, mo);

  std::set<Mnemonic> names;
  std::size_t invalid = 0;
  json rows = json::array();
  std::ostringstream text;
  for (std::size_t i : r.syllogisms()) {
    const auto& m = r.all[i];
    auto name = name_of(m.wff);
    if (name) names.insert(*name);
    std::optional<Verdict> v;
    if (check) {
      v = check_validity(m.wff, s.bounds());
      invalid += v->status == Status::invalid;
    }
    auto trace = r.trace(i);
    if (s.json) {
      json row = {{"mnemonic", name ? json(print_mnemonic(*name)) : json(nullptr)},
                  {"wff", render(m.wff)},
                  {"depth", m.depth},
                  {"trace", trace}};
      if (v) row["verdict"] = to_json(*v);
      rows.push_back(std::move(row));
    } else {
      text << m.depth << "\t" << (name ? print_mnemonic(*name) : "-") << "\t" << render(m.wff);
      if (v) text << "\t" << keyword(v->status);
      text << "\n";
    }
  }
  if (s.json) {
    json j = {{"depth", depth},
              {"strict", strict},
              {"states", r.all.size()},
              {"saturated", r.complete},
              {"names", names.size()},
              {"syllogisms", std::move(rows)},
              {"elapsed_ms", t.elapsed_ms()}};
    if (check) j["invalid"] = invalid;
    out << j.dump(2) << "\n";
  } else {
    out << text.str();
    out << r.all.size() << " states, " << r.syllogisms().size() << " syllogisms, " << names.size()
        << " distinct names" << (r.complete ? ", closure saturated" : "") << "\n";
    if (check) out << invalid << " with a countermodel (" << bounds_text(s.bounds()) << ")\n";
  }
  return invalid == 0 ? 0 : 1;
}

std::vector<Quantifier> parse_letters(const std::string& letters) {
  std::vector<Quantifier> out;
  for (char c : letters) {
    if (c == ',' || c == ' ') continue;
    auto q = quantifier_from_letter(c);
    if (!q) throw UsageError(std::string("unknown quantifier letter '") + c + "'");
    if (std::find(out.begin(), out.end(), *q) == out.end()) out.push_back(*q);
  }
  return out;
}

int cmd_census(const std::string& letters, std::vector<int> figures, bool modal, bool csv, const Shared& s,
               std::ostream& out) {
  Timer t;
  for (int f : figures)
    if (f < 1 || f > 4) throw UsageError("figures must be between 1 and 4");
  std::sort(figures.begin(), figures.end());
  figures.erase(std::unique(figures.begin(), figures.end()), figures.end());
  CensusTable table = census(parse_letters(letters), figures, modal, s.bounds());

  if (s.json) {
    json rows = json::array();
    for (const auto& row : table.rows)
      rows.push_back({{"mnemonic", print_mnemonic(row.mnemonic)},
                      {"wff", render(row.wff)},
                      {"status", std::string(keyword(row.verdict.status))}});
    out << json{{"forms", table.rows.size()},
                {"valid", table.valid_count()},
                {"rows", std::move(rows)},
                {"bounds", to_json(s.bounds())},
                {"elapsed_ms", t.elapsed_ms()}}
               .dump(2)
        << "\n";
  } else if (csv) {
    out << "mnemonic,wff,status\n";
    for (const auto& row : table.rows)
      out << print_mnemonic(row.mnemonic) << ",\"" << render(row.wff) << "\"," << keyword(row.verdict.status) << "\n";
  } else {
    for (const auto& row : table.rows)
      out << print_mnemonic(row.mnemonic) << "\t" << keyword(row.verdict.status) << "\n";
    out << table.rows.size() << " forms, " << table.valid_count() << " valid (" << bounds_text(s.bounds()) << ")\n";
  }
  return 0;
}

int cmd_audit(bool strict, const Shared& s, std::ostream& out) {
  Timer t;
  AuditReport r = audit_facts(s.bounds());
  std::size_t counted_failures = 0;
  json entries = json::array();
  std::ostringstream text;
  for (const auto& e : r.entries) {
    const FactLicense* lic = find_license(e.license_id);
    const bool excluded = strict && lic && !lic->audited_sound;
    if (!e.passed && !excluded) ++counted_failures;
    if (s.json) {
      json j = {{"license", e.license_id},
                {"passed", e.passed},
                {"excluded", excluded},
                {"instances", e.checked.size()},
                {"failing_wff", e.failing_wff ? json(render(*e.failing_wff)) : json(nullptr)},
                {"countermodel", e.countermodel ? to_json(*e.countermodel) : json(nullptr)}};
      entries.push_back(std::move(j));
    } else {
      text << e.license_id << "\t" << (e.passed ? "pass" : "FAIL") << (excluded ? " (excluded in strict mode)" : "")
           << "\n";
      if (e.failing_wff) text << "  " << render(*e.failing_wff) << "\n";
      if (e.countermodel) indent(text, describe(*e.countermodel), "    ");
    }
  }
  if (s.json) {
    out << json{{"passed", r.passed()},
                {"failed", r.failed()},
                {"strict", strict},
                {"entries", std::move(entries)},
                {"bounds", to_json(s.bounds())},
                {"elapsed_ms", t.elapsed_ms()}}
               .dump(2)
        << "\n";
  } else {
    out << text.str();
    out << r.passed() << " of " << r.entries.size() << " licenses pass (" << bounds_text(s.bounds()) << ")\n";
  }
  return counted_failures == 0 ? 0 : 1;
}

int cmd_discourse(const std::string& path, bool closure, int closure_depth, const Shared& s, std::ostream& out) {
  Timer t;
  Discourse d;
  try {
    d = parse_discourse(read_file(path));
  } catch (const SourceError& e) {
    throw UsageError(path + ":" + e.what());
  }
  DiscourseOptions opts;
  opts.closure = closure;
  opts.closure_depth = closure_depth;
  DiscourseVerdict v = check_discourse(d, s.bounds(), opts);

  if (s.json) {
    json links = json::array();
    for (const auto& l : v.links) {
      const auto& link = d.links[l.index];
      json j = to_json(l.verdict);
      j["index"] = l.index;
      j["wff"] = render(link.wff);
      j["name"] = link.name ? json(print_mnemonic(*link.name)) : json(nullptr);
      j["name_ok"] = l.name_ok ? json(*l.name_ok) : json(nullptr);
      j["structural_ok"] = l.structural_ok;
      j["in_closure"] = l.in_closure ? json(*l.in_closure) : json(nullptr);
      links.push_back(std::move(j));
    }
    out << json{{"status", v.valid ? "valid" : "invalid"},
                {"links", std::move(links)},
                {"bounds", to_json(s.bounds())},
                {"elapsed_ms", t.elapsed_ms()}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& l : v.links) {
      const auto& link = d.links[l.index];
      out << "link " << l.index + 1 << " " << (link.name ? print_mnemonic(*link.name) : name_text(link.wff)) << ": "
          << (l.structural_ok ? "chained" : "NOT CHAINED") << ", " << keyword(l.verdict.status);
      if (l.name_ok && !*l.name_ok) out << ", name does not match (" << name_text(link.wff) << ")";
      if (l.in_closure) out << (*l.in_closure ? ", in mined closure" : ", not in mined closure");
      out << "\n";
      if (l.verdict.countermodel) indent(out, describe(*l.verdict.countermodel), "    ");
    }
    out << "overall: " << (v.valid ? "valid" : "invalid") << " (" << bounds_text(s.bounds()) << ")\n";
  }
  return v.valid ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Syllogism validity checker, proof replayer and miner", "syl"};
  app.require_subcommand(1);
  Shared shared;

  std::string formula, path, letters = "AEIOMFSH", seed = "AMI-1";
  std::vector<int> figures = {1, 2, 3, 4};
  bool strict = false, modal = false, csv = false, mine_check = false, no_semantics = false, closure = false;
  int depth = 7, closure_depth = 7;
  std::size_t node_cap = 1'000'000;

  auto* check = app.add_subcommand("check", "search for a countermodel");
  check->add_option("formula", formula, "wff or mnemonic")->required();
  add_shared(check, shared);

  auto* expand = app.add_subcommand("expand", "mnemonic to wff, or wff to mnemonic");
  expand->add_option("formula", formula, "mnemonic or wff")->required();
  add_shared(expand, shared);

  auto* replay_cmd = app.add_subcommand("replay", "check a derivation script");
  replay_cmd->add_option("file", path)->required();
  replay_cmd->add_flag("--strict", strict, "refuse licenses that fail the audit");
  add_shared(replay_cmd, shared);

  auto* verify = app.add_subcommand("verify-corpus", "replay the shipped scripts and check the registry");
  verify->add_flag("--strict", strict, "refuse licenses that fail the audit");
  verify->add_flag("--no-semantics", no_semantics, "skip the countermodel search over the registry");
  add_shared(verify, shared);

  auto* mine_cmd = app.add_subcommand("mine", "forward closure of a seed syllogism");
  mine_cmd->add_option("--depth", depth, "breadth-first depth")->check(CLI::NonNegativeNumber);
  mine_cmd->add_option("--seed", seed, "seed wff or mnemonic");
  mine_cmd->add_flag("--strict", strict, "use audited licenses only");
  mine_cmd->add_option("--node-cap", node_cap, "abort above this many states")->check(CLI::PositiveNumber);
  mine_cmd->add_flag("--check", mine_check, "search a countermodel for every mined syllogism");
  add_shared(mine_cmd, shared);

  auto* census_cmd = app.add_subcommand("census", "classify every syllogism form");
  census_cmd->add_option("--letters", letters, "quantifier letters, e.g. AEIO");
  census_cmd->add_option("--figures", figures, "figures, e.g. 1,2")->delimiter(',');
  census_cmd->add_flag("--modal", modal, "decorate each proposition with none, [] or <>");
  census_cmd->add_flag("--csv", csv, "CSV output");
  add_shared(census_cmd, shared);

  auto* audit = app.add_subcommand("audit-facts", "check every fact license semantically");
  audit->add_flag("--strict", strict, "do not count licenses excluded in strict mode");
  add_shared(audit, shared);

  auto* disc = app.add_subcommand("discourse", "check a chain of syllogisms");
  disc->add_option("file", path)->required();
  disc->add_flag("--closure", closure, "also report membership in the mined closure");
  disc->add_option("--closure-depth", closure_depth, "mining depth for --closure")->check(CLI::NonNegativeNumber);
  add_shared(disc, shared);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "syl: " << e.what() << "\n";
    err << "run 'syl --help' for usage\n";
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(formula, shared, out);
    if (expand->parsed()) return cmd_expand(formula, shared, out);
    if (replay_cmd->parsed()) return cmd_replay(path, strict, shared, out);
    if (verify->parsed()) return cmd_verify_corpus(!no_semantics, strict, shared, out);
    if (mine_cmd->parsed()) return cmd_mine(seed, depth, strict, node_cap, mine_check, shared, out);
    if (census_cmd->parsed()) return cmd_census(letters, figures, modal, csv, shared, out);
    if (audit->parsed()) return cmd_audit(strict, shared, out);
    if (disc->parsed()) return cmd_discourse(path, closure, closure_depth, shared, out);
  } catch (const UsageError& e) {
    err << "syl: " << e.what() << "\n";
    return 2;
  } catch (const SourceError& e) {
    err << "syl: " << e.what() << "\n";
    return 2;
  } catch (const BoundsExceeded& e) {
    err << "syl: " << e.what() << "\n";
    return 2;
  } catch (const NodeCapExceeded& e) {
    err << "syl: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "syl: " << e.what() << "\n";
    return 2;
  }
  err << "syl: no subcommand\n";
  return 2;
}

}  // namespace syl::cli
