#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pocka/guarded.hpp"
#include "pocka/litmus.hpp"
#include "pocka/semantics.hpp"

namespace pocka {

nlohmann::json bounds_json(const Bounds& b);
// {"schema":1,"pomsets":[...sorted text forms...],"bounds":{...}}
nlohmann::json language_json(const PomsetLanguage& l, const Bounds& b);
nlohmann::json verdict_json(const Pomset& u, const GuardVerdict& v);
nlohmann::json derivation_json(const Derivation& d);
nlohmann::json litmus_json(const LitmusReport& r, const Bounds& b);

// Hasse diagram; state nodes boxed, action nodes oval, violating nodes red.
std::string render_dot(const Pomset& u, const std::vector<Violation>& violations = {},
                       const std::string& name = "pomset");

std::vector<std::string> sorted_texts(const PomsetLanguage& l);

} // namespace pocka
