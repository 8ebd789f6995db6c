#include "syllogism/text_frontend.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <utility>

#include "syllogism/square_algebra.hpp"

namespace syl {

SourceError::SourceError(int line, int column, std::string message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(std::move(message)) {}

std::string_view keyword(JustificationKind k) {
  switch (k) {
    case JustificationKind::axiom: return "axiom";
    case JustificationKind::rule1: return "rule1";
    case JustificationKind::rule2: return "rule2";
    case JustificationKind::rule3: return "rule3";
    case JustificationKind::rewrite: return "rewrite";
    case JustificationKind::converse: return "converse";
    case JustificationKind::d3: return "d3";
  }
  return "?";
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Recursive-descent parser over one line of text.
class Parser {
 public:
  Parser(std::string_view text, int line = 1, int column0 = 0)
      : text_(text), line_(line), column0_(column0) {}

  ParsedWff wff() {
    std::vector<Proposition> prems = premises();
    skip_ws();
    if (eat("->") || eat("→")) {
      Proposition concl = proposition();
      expect_end();
      if (prems.size() > 2) fail(pos_, "at most two premises are supported");
      return ConditionalWff(std::move(prems), std::move(concl));
    }
    if (prems.size() != 1) fail(pos_, "expected '->' after the premises");
    expect_end();
    return prems.front();
  }

  Proposition single_proposition() {
    Proposition p = proposition();
    expect_end();
    return p;
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& msg) const {
    throw SourceError(line_, column0_ + static_cast<int>(at) + 1, msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  bool peek(std::string_view tok) {
    skip_ws();
    return text_.substr(pos_, tok.size()) == tok;
  }

  bool eat(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  void expect_end() {
    if (!at_end()) fail(pos_, "unexpected trailing input '" + std::string(text_.substr(pos_)) + "'");
  }

  std::string_view ident() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && is_ident_start(text_[pos_])) {
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  bool eat_negation() { return eat("~") || eat("¬"); }

  std::vector<Proposition> premises() {
    skip_ws();
    std::size_t open = pos_;
    if (eat("(")) {
      auto inner = premises();
      if (!eat(")")) fail(open, "unbalanced parentheses");
      return inner;
    }
    std::vector<Proposition> out;
    out.push_back(proposition());
    while (eat("&") || eat("∧")) out.push_back(proposition());
    return out;
  }

  Proposition proposition() {
    Proposition p;
    while (eat_negation()) p.negated = !p.negated;

    skip_ws();
    std::size_t save = pos_;
    if (eat("[]") || eat("□")) {
      p.modality = Modality::necessary;
    } else if (eat("<>") || eat("◇") || eat("◊")) {
      p.modality = Modality::possible;
    } else {
      auto word = ident();
      if (word == "nec") p.modality = Modality::necessary;
      else if (word == "pos") p.modality = Modality::possible;
      else pos_ = save;
    }
    if (p.modality != Modality::none)
      while (eat_negation()) p.body_negated = !p.body_negated;

    skip_ws();
    std::size_t qpos = pos_;
    auto word = ident();
    if (word.empty()) {
      if (pos_ >= text_.size()) fail(qpos, "expected a quantifier, found end of input");
      fail(qpos, "expected a quantifier");
    }
    auto q = quantifier_from_keyword(word);
    if (!q) fail(qpos, "unknown quantifier '" + std::string(word) + "'");
    p.quantifier = *q;
    if (eat_negation()) p.inner_negated = true;

    skip_ws();
    std::size_t open = pos_;
    if (!eat("(")) fail(pos_, "expected '(' after quantifier '" + std::string(word) + "'");
    std::vector<Term> args;
    if (!peek(")")) {
      for (;;) {
        args.push_back(term());
        if (eat(",")) continue;
        if (eat(")")) break;
        if (at_end()) fail(open, "unbalanced parentheses");
        fail(pos_, "expected ',' or ')'");
      }
    } else {
      eat(")");
    }
    if (args.size() != 2)
      fail(qpos, "quantifier '" + std::string(word) + "' expects 2 arguments, got " +
                     std::to_string(args.size()));
    p.subject = args[0];
    p.predicate = args[1];
    p.normalize();
    return p;
  }

  Term term() {
    skip_ws();
    std::size_t start = pos_;
    auto word = ident();
    if (word.empty()) {
      if (pos_ >= text_.size()) fail(start, "unbalanced parentheses");
      fail(start, "expected a term");
    }
    bool comp = false;
    while (word.starts_with("non_")) {
      word.remove_prefix(4);
      comp = !comp;
    }
    if (word.empty()) fail(start, "complement of nothing");
    return Term(std::string(word), comp);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int column0_;
};

ParsedWff parse_wff_at(std::string_view text, int line, int col0) {
  return Parser(text, line, col0).wff();
}

ConditionalWff parse_conditional_at(std::string_view text, int line, int col0) {
  auto w = parse_wff_at(text, line, col0);
  if (auto* c = std::get_if<ConditionalWff>(&w)) return *c;
  throw SourceError(line, col0 + 1, "expected a conditional 'premises -> conclusion'");
}

Mnemonic parse_mnemonic_at(std::string_view text, int line, int col0) {
  std::size_t pos = 0;
  auto fail = [&](std::size_t at, const std::string& msg) -> void {
    throw SourceError(line, col0 + static_cast<int>(at) + 1, msg);
  };
  auto eat = [&](std::string_view tok) {
    if (text.substr(pos, tok.size()) != tok) return false;
    pos += tok.size();
    return true;
  };
  auto modality = [&]() {
    if (eat("[]") || eat("□")) return Modality::necessary;
    if (eat("<>") || eat("◇") || eat("◊")) return Modality::possible;
    return Modality::none;
  };
  auto quant = [&]() {
    if (pos >= text.size()) fail(pos, "expected a mnemonic letter");
    auto q = quantifier_from_letter(text[pos]);
    if (!q) fail(pos, std::string("unknown mnemonic letter '") + text[pos] + "'");
    ++pos;
    return *q;
  };
  Mnemonic m;
  m.major_mod = modality();
  m.major = quant();
  m.minor_mod = modality();
  m.minor = quant();
  m.concl_mod = modality();
  m.conclusion = quant();
  if (!eat("-")) fail(pos, "expected '-' before the figure");
  if (pos >= text.size() || text[pos] < '1' || text[pos] > '4') fail(pos, "figure must be 1-4");
  m.figure = text[pos] - '0';
  ++pos;
  if (pos != text.size()) fail(pos, "unexpected trailing input in mnemonic");
  return m;
}

struct Field {
  std::string_view text;
  int column0;  // 0-based column of text[0] in the line
};

std::vector<Field> split_fields(std::string_view line) {
  std::vector<Field> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t bar = line.find('|', start);
    std::string_view raw = line.substr(start, bar == std::string_view::npos ? line.npos : bar - start);
    std::size_t lead = 0;
    while (lead < raw.size() && std::isspace(static_cast<unsigned char>(raw[lead]))) ++lead;
    out.push_back({trim(raw), static_cast<int>(start + lead)});
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return out;
}

std::optional<Mnemonic> parse_annotation(const Field& f, int line) {
  std::string_view t = f.text;
  if (!t.starts_with("name=")) throw SourceError(line, f.column0 + 1, "expected 'name=MNEMONIC'");
  t.remove_prefix(5);
  return parse_mnemonic_at(trim(t), line, f.column0 + 5);
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == text.npos ? text.npos : nl - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != line.npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!trim(line).empty()) fn(line, line_no);
    if (nl == text.npos) break;
    start = nl + 1;
  }
}

bool parse_int(std::string_view s, int& out) {
  s = trim(s);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

Justification parse_justification(const Field& f, int line, int step_id,
                                  const std::set<int>& defined) {
  std::string_view t = f.text;
  auto fail = [&](const std::string& msg) { throw SourceError(line, f.column0 + 1, msg); };
  auto open = t.find('(');
  if (open == t.npos || t.back() != ')') fail("justification must look like kind(args)");
  std::string_view kind = trim(t.substr(0, open));
  std::string_view body = t.substr(open + 1, t.size() - open - 2);

  Justification j;
  static const std::map<std::string_view, JustificationKind> kinds = {
      {"axiom", JustificationKind::axiom},     {"rule1", JustificationKind::rule1},
      {"rule2", JustificationKind::rule2},     {"rule3", JustificationKind::rule3},
      {"rewrite", JustificationKind::rewrite}, {"converse", JustificationKind::converse},
      {"d3", JustificationKind::d3},
  };
  auto it = kinds.find(kind);
  if (it == kinds.end()) fail("unknown justification '" + std::string(kind) + "'");
  j.kind = it->second;

  std::vector<std::string_view> args;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    args.push_back(trim(body.substr(start, comma == body.npos ? body.npos : comma - start)));
    if (comma == body.npos) break;
    start = comma + 1;
  }
  if (args.size() == 1 && args[0].empty()) args.clear();

  if (j.kind == JustificationKind::axiom) {
    if (args.size() != 1 || args[0] != "A2") fail("axiom justification must be axiom(A2)");
    j.licenses.emplace_back("A2");
    return j;
  }
  if (args.empty()) fail("justification cites no step");

  auto reference = [&](std::string_view a) {
    int ref = 0;
    if (!parse_int(a, ref)) fail("expected a step id, got '" + std::string(a) + "'");
    if (ref >= step_id || !defined.contains(ref))
      throw DanglingReference(line, f.column0 + 1,
                              "step " + std::to_string(step_id) + " cites undefined step " +
                                  std::to_string(ref));
    j.inputs.push_back(ref);
  };
  auto license = [&](std::string_view a) {
    if (!find_license(a)) fail("unknown fact license '" + std::string(a) + "'");
    j.licenses.emplace_back(a);
  };

  reference(args[0]);
  switch (j.kind) {
    case JustificationKind::rule3:
    case JustificationKind::d3:
      if (args.size() != 1) fail(std::string(kind) + " takes exactly one step");
      break;
    case JustificationKind::rule1:
    case JustificationKind::rule2:
      if (args.size() != 2) fail(std::string(kind) + " takes a step and one license or step");
      if (args[1].find('.') == std::string_view::npos) reference(args[1]);
      else license(args[1]);
      break;
    case JustificationKind::converse:
      if (args.size() != 2) fail("converse takes a step and one license");
      license(args[1]);
      break;
    case JustificationKind::rewrite:
      if (args.size() < 2) fail("rewrite needs at least one license");
      for (std::size_t i = 1; i < args.size(); ++i) license(args[i]);
      break;
    case JustificationKind::axiom: break;
  }
  return j;
}

}  // namespace

ParsedWff parse_wff(std::string_view text) { return parse_wff_at(text, 1, 0); }

ConditionalWff parse_conditional(std::string_view text) { return parse_conditional_at(text, 1, 0); }

Proposition parse_proposition(std::string_view text) { return Parser(text).single_proposition(); }

std::string render(const Term& t) { return (t.complemented ? "non_" : "") + t.atom; }

std::string render(const Proposition& p) {
  std::string out;
  if (p.negated) out += "~";
  if (p.modality == Modality::necessary) out += "[]";
  if (p.modality == Modality::possible) out += "<>";
  if (p.body_negated) out += "~";
  out += keyword(p.quantifier);
  if (p.inner_negated) out += "~";
  out += "(" + render(p.subject) + "," + render(p.predicate) + ")";
  return out;
}

std::string render(const ConditionalWff& c) {
  std::string out;
  for (std::size_t i = 0; i < c.premises.size(); ++i) {
    if (i) out += " & ";
    out += render(c.premises[i]);
  }
  return out + " -> " + render(c.conclusion);
}

std::string print_wff(const ConditionalWff& c) { return render(canonicalize(c)); }
std::string print_wff(const Proposition& p) { return render(canonicalize(p)); }

Mnemonic parse_mnemonic(std::string_view text) { return parse_mnemonic_at(trim(text), 1, 0); }

std::string print_mnemonic(const Mnemonic& m) {
  auto mod = [](Modality x) -> std::string {
    switch (x) {
      case Modality::necessary: return "[]";
      case Modality::possible: return "<>";
      case Modality::none: return "";
    }
    return "";
  };
  std::string out;
  out += mod(m.major_mod);
  out += letter(m.major);
  out += mod(m.minor_mod);
  out += letter(m.minor);
  out += mod(m.concl_mod);
  out += letter(m.conclusion);
  out += "-" + std::to_string(m.figure);
  return out;
}

bool looks_like_mnemonic(std::string_view text) {
  text = trim(text);
  std::size_t pos = 0;
  auto eat = [&](std::string_view tok) {
    if (text.substr(pos, tok.size()) != tok) return false;
    pos += tok.size();
    return true;
  };
  for (int i = 0; i < 3; ++i) {
    (void)(eat("[]") || eat("<>") || eat("□") || eat("◇") || eat("◊"));
    if (pos >= text.size() || !std::isupper(static_cast<unsigned char>(text[pos]))) return false;
    ++pos;
  }
  if (!eat("-")) return false;
  if (pos >= text.size()) return false;
  while (pos < text.size())
    if (!std::isdigit(static_cast<unsigned char>(text[pos++]))) return false;
  return true;
}

ConditionalWff expand_mnemonic(const Mnemonic& m) {
  if (m.figure < 1 || m.figure > 4) throw Error("figure must be 1-4");
  std::string s, p, mid;
  switch (m.figure) {
    case 1: s = "p", p = "w", mid = "n"; break;
    case 2: s = "p", p = "n", mid = "w"; break;
    default: s = "n", p = "w", mid = "p"; break;
  }
  bool major_m_first = m.figure == 1 || m.figure == 3;
  bool minor_s_first = m.figure == 1 || m.figure == 2;
  Proposition major = major_m_first ? Proposition(m.major, Term(mid), Term(p), m.major_mod)
                                    : Proposition(m.major, Term(p), Term(mid), m.major_mod);
  Proposition minor = minor_s_first ? Proposition(m.minor, Term(s), Term(mid), m.minor_mod)
                                    : Proposition(m.minor, Term(mid), Term(s), m.minor_mod);
  Proposition concl(m.conclusion, Term(s), Term(p), m.concl_mod);
  return ConditionalWff({std::move(major), std::move(minor)}, std::move(concl));
}

std::optional<Mnemonic> name_of(const ConditionalWff& input) {
  ConditionalWff c = canonicalize(input);
  auto roles = syllogism_roles(c);
  if (!roles) return std::nullopt;
  std::map<std::string, bool> flag;
  auto consistent = [&](const Term& t) {
    auto [it, inserted] = flag.emplace(t.atom, t.complemented);
    return inserted || it->second == t.complemented;
  };
  for (const auto& pr : c.premises)
    if (!consistent(pr.subject) || !consistent(pr.predicate)) return std::nullopt;
  if (!consistent(c.conclusion.subject) || !consistent(c.conclusion.predicate)) return std::nullopt;

  const auto& maj = c.premises[roles->major];
  const auto& min = c.premises[roles->minor];
  return Mnemonic{maj.modality,          maj.quantifier,          min.modality, min.quantifier,
                  c.conclusion.modality, c.conclusion.quantifier, roles->figure};
}

DerivationScript parse_proof_script(std::string_view text, std::string label) {
  DerivationScript script;
  script.label = std::move(label);
  std::set<int> defined;
  int last_id = 0;
  for_each_line(text, [&](std::string_view line, int line_no) {
    auto fields = split_fields(line);
    if (fields.size() < 3 || fields.size() > 4)
      throw SourceError(line_no, 1, "expected 'ID | WFF | JUSTIFICATION [| name=MNEMONIC]'");
    DerivationStep step;
    step.line = line_no;
    if (!parse_int(fields[0].text, step.id) || step.id <= 0)
      throw SourceError(line_no, fields[0].column0 + 1, "step id must be a positive integer");
    if (step.id <= last_id)
      throw SourceError(line_no, fields[0].column0 + 1, "step ids must be strictly increasing");
    step.wff = parse_conditional_at(fields[1].text, line_no, fields[1].column0);
    step.justification = parse_justification(fields[2], line_no, step.id, defined);
    if (fields.size() == 4) step.name = parse_annotation(fields[3], line_no);
    last_id = step.id;
    defined.insert(step.id);
    script.steps.push_back(std::move(step));
  });
  if (script.steps.empty()) throw SourceError(1, 1, "proof script has no steps");
  return script;
}

Discourse parse_discourse(std::string_view text) {
  Discourse d;
  for_each_line(text, [&](std::string_view line, int line_no) {
    auto fields = split_fields(line);
    if (fields.size() > 2) throw SourceError(line_no, 1, "expected 'WFF [| name=MNEMONIC]'");
    DiscourseLink link;
    link.line = line_no;
    link.wff = parse_conditional_at(fields[0].text, line_no, fields[0].column0);
    if (fields.size() == 2) link.name = parse_annotation(fields[1], line_no);
    d.links.push_back(std::move(link));
  });
  if (d.links.empty()) throw SourceError(1, 1, "discourse has no syllogisms");
  return d;
}

}  // namespace syl
