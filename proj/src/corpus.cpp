#include "syllogism/corpus.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "syllogism/text_frontend.hpp"

#ifndef SYL_DEFAULT_CORPUS_DIR
#define SYL_DEFAULT_CORPUS_DIR "corpus"
#endif

namespace syl {

std::string_view keyword(Expectation e) {
  switch (e) {
    case Expectation::valid: return "valid";
    case Expectation::invalid: return "invalid";
    case Expectation::mode_dependent: return "mode_dependent";
  }
  return "?";
}

Expectation expectation_from_keyword(std::string_view s) {
  if (s == "valid") return Expectation::valid;
  if (s == "invalid") return Expectation::invalid;
  if (s == "mode_dependent") return Expectation::mode_dependent;
  throw Error("unknown expectation '" + std::string(s) + "'");
}

std::filesystem::path corpus_dir() {
  if (const char* env = std::getenv("SYL_CORPUS_DIR"); env && *env) return env;
  return SYL_DEFAULT_CORPUS_DIR;
}

std::string read_corpus_file(const std::string& name) {
  auto path = corpus_dir() / name;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open corpus file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::vector<std::string>& corpus_script_labels() {
  static const std::vector<std::string> labels = {"thm4_2", "thm4_3", "thm4_4", "thm4_5"};
  return labels;
}

DerivationScript load_script(const std::string& label) {
  return parse_proof_script(read_corpus_file(label + ".proof"), label);
}

Discourse load_discourse() { return parse_discourse(read_corpus_file("sect5.disc")); }

namespace {

std::vector<std::vector<std::string>> read_tsv(const std::string& name, std::size_t columns) {
  std::istringstream in(read_corpus_file(name));
  std::string line;
  std::vector<std::vector<std::string>> rows;
  bool header = true;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
      auto tab = line.find('\t', start);
      cells.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (cells.size() != columns)
      throw Error(name + ":" + std::to_string(line_no) + ": expected " + std::to_string(columns) + " columns");
    rows.push_back(std::move(cells));
  }
  return rows;
}

const std::map<std::string, std::size_t>& expected_counts() {
  static const std::map<std::string, std::size_t> m = {
      {"thm4_2", 19}, {"thm4_3", 22}, {"thm4_4", 8}, {"thm4_5", 24}};
  return m;
}

}  // namespace

std::vector<RegistryEntry> registry() {
  std::vector<RegistryEntry> out;
  std::set<Mnemonic> seen;
  for (auto& row : read_tsv("registry.tsv", 4)) {
    RegistryEntry e;
    e.mnemonic = parse_mnemonic(row[0]);
    e.wff = canonicalize(parse_conditional(row[1]));
    e.source = row[2];
    e.expectation = expectation_from_keyword(row[3]);
    if (!structurally_equal(e.wff, canonicalize(expand_mnemonic(e.mnemonic))))
      throw Error("registry: " + row[0] + " does not expand to " + row[1]);
    if (!seen.insert(e.mnemonic).second) throw Error("registry: duplicate entry " + row[0]);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Erratum> errata() {
  std::vector<Erratum> out;
  for (auto& row : read_tsv("errata.tsv", 5)) out.push_back({row[0], row[1], row[2], row[3], row[4]});
  return out;
}

bool CorpusReport::replay_ok() const {
  for (const auto& s : scripts)
    if (!s.replay.ok) return false;
  return !scripts.empty();
}

bool CorpusReport::counts_ok() const {
  for (const auto& s : scripts)
    if (s.fresh_names.size() != s.expected_names) return false;
  return true;
}

bool CorpusReport::semantics_ok() const {
  for (const auto& c : entries)
    if (!c.matches) return false;
  return true;
}

CorpusReport verify_corpus(const SearchBounds& b, const CorpusOptions& opts) {
  CorpusReport report;
  report.registry = registry();

  std::set<Mnemonic> minted{parse_mnemonic("AMI-1")};
  for (const auto& label : corpus_script_labels()) {
    ScriptSummary s;
    s.replay = replay(load_script(label), opts.kernel);
    s.expected_names = expected_counts().at(label);
    report.total_steps += s.replay.steps_checked;
    for (const auto& m : s.replay.minted())
      if (minted.insert(m).second) s.fresh_names.push_back(m);
    report.scripts.push_back(std::move(s));
  }
  minted.erase(parse_mnemonic("AMI-1"));

  std::set<Mnemonic> registered;
  for (const auto& e : report.registry)
    if (e.from_theorem()) registered.insert(e.mnemonic);
  for (const auto& m : registered)
    if (!minted.contains(m)) report.missing_from_scripts.push_back(m);
  for (const auto& m : minted)
    if (!registered.contains(m)) report.missing_from_registry.push_back(m);

  if (!opts.semantics) return report;
  for (std::size_t i = 0; i < report.registry.size(); ++i) {
    const auto& e = report.registry[i];
    RegistryCheck c;
    c.index = i;
    if (e.expectation == Expectation::mode_dependent) {
      SearchBounds flexible = b, rigid = b;
      flexible.rigid = false;
      rigid.rigid = true;
      c.verdict = check_validity(e.wff, flexible);
      c.rigid_verdict = check_validity(e.wff, rigid);
      c.matches = c.verdict.status == Status::invalid && c.rigid_verdict->status == Status::valid_up_to_bound;
    } else {
      c.verdict = check_validity(e.wff, b);
      c.matches = (c.verdict.status == Status::valid_up_to_bound) == (e.expectation == Expectation::valid);
    }
    report.entries.push_back(std::move(c));
  }
  return report;
}

}  // namespace syl
