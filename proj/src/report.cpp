#include "syllogism/report.hpp"

#include <sstream>

namespace syl {

nlohmann::json to_json(const KripkeModel& m) {
  nlohmann::json worlds = nlohmann::json::array();
  for (const auto& w : m.worlds) {
    nlohmann::json ext = nlohmann::json::object();
    for (const auto& [atom, members] : w.extensions) ext[atom] = std::vector<int>(members.begin(), members.end());
    worlds.push_back(std::move(ext));
  }
  return {{"domain", m.domain_size}, {"worlds", std::move(worlds)}, {"actual", m.actual}};
}

KripkeModel kripke_model_from_json(const nlohmann::json& j) {
  KripkeModel m;
  m.domain_size = j.at("domain").get<int>();
  m.actual = j.at("actual").get<std::size_t>();
  for (const auto& w : j.at("worlds")) {
    World world;
    for (const auto& [atom, members] : w.items()) {
      auto& ext = world.extensions[atom];
      for (int e : members.get<std::vector<int>>()) {
        if (e < 1 || e > m.domain_size) throw Error("element " + std::to_string(e) + " outside the domain");
        ext.insert(e);
      }
    }
    m.worlds.push_back(std::move(world));
  }
  if (m.worlds.empty() || m.actual >= m.worlds.size()) throw Error("actual world index out of range");
  return m;
}

nlohmann::json to_json(const SearchBounds& b) {
  return {{"max_domain", b.max_domain},
          {"max_worlds", b.max_worlds},
          {"rigid", b.rigid},
          {"existential_import", b.existential_import}};
}

nlohmann::json to_json(const Verdict& v) {
  return {{"status", std::string(keyword(v.status))},
          {"countermodel", v.countermodel ? to_json(*v.countermodel) : nlohmann::json(nullptr)},
          {"bounds", to_json(v.bounds)}};
}

std::string describe(const KripkeModel& m) {
  std::ostringstream out;
  out << "domain {";
  for (int i = 1; i <= m.domain_size; ++i) out << (i > 1 ? "," : "") << i;
  out << "}\n";
  for (std::size_t i = 0; i < m.worlds.size(); ++i) {
    out << "world " << i << (i == m.actual ? " (actual):" : ":");
    for (const auto& [atom, members] : m.worlds[i].extensions) {
      out << " " << atom << "={";
      bool first = true;
      for (int e : members) {
        out << (first ? "" : ",") << e;
        first = false;
      }
      out << "}";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace syl
