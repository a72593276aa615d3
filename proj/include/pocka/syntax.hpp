#pragma once

#include <string>
#include <string_view>

#include "pocka/obs.hpp"
#include "pocka/pomset.hpp"
#include "pocka/term.hpp"

namespace pocka {

// Observations: bot | top | v == n | !p | p & q | p \/ q (also p | q), parentheses.
ObsTerm parse_obs(std::string_view text);
// Terms: 0 | 1 | v := n | v := w | obs | <{v:n,...}> | e + f | e ; f | e || f | e* | (e).
// Precedence * > ; > || > +; observation operators bind tighter than ';'.
// On the right of ':=' an identifier is a variable; numbers and 'quoted' tokens are values.
Term parse_term(std::string_view text);
// Pomsets: eps | [x:=1] | <{x:1,y:0}> | p ; q | p || q | (p), with ';' binding tighter.
Pomset parse_pomset(std::string_view text);
State parse_state(std::string_view text);

std::string render_value(const Val& n);
std::string render_state(const State& s);
std::string render_action(const Action& a);
std::string render_label(const Label& l);
std::string render_obs(const ObsTerm& p);
std::string render_term(const Term& e);
std::string render_pomset(const Pomset& p);

} // namespace pocka
