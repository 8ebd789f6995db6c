#pragma once

#include <string>

#include <json.hpp>

#include "syllogism/finite_semantics.hpp"

namespace syl {

// {"domain": n, "worlds": [{"atom": [members...]}, ...], "actual": i}
nlohmann::json to_json(const KripkeModel& m);
KripkeModel kripke_model_from_json(const nlohmann::json& j);

// {"max_domain", "max_worlds", "rigid", "existential_import"}
nlohmann::json to_json(const SearchBounds& b);

// {"status", "countermodel" (null when valid), "bounds"}
nlohmann::json to_json(const Verdict& v);

// Human-readable model, one world per line.
std::string describe(const KripkeModel& m);

}  // namespace syl
