#pragma once

#include <cstddef>
#include <vector>

#include "pocka/pomset.hpp"
#include "pocka/term.hpp"

namespace pocka {

struct Bounds {
    std::size_t star_bound = 2;
    std::size_t pad_bound = 1;
    std::size_t split_bound = 2;
    std::size_t node_guard = kDefaultNodeGuard;
    std::size_t max_iterations = 10000;
};

// BKA semantics over Act and State letters; observations must be reified first.
PomsetLanguage sem_bka(const Term& e, const Bounds& b);
// Unclosed POCKA semantics with every State* factor truncated to pad_bound states.
PomsetLanguage sem_unclosed(const Term& e, const Universe& u, const Bounds& b);

// Least language containing l closed under the ground hypotheses, within node_guard.
PomsetLanguage close(const PomsetLanguage& l, const std::vector<Hypothesis>& hs, const Bounds& b);
// Same fixpoint with pomset-level exchange rewrites added to the rule set.
PomsetLanguage close_with_exchange(const PomsetLanguage& l, const std::vector<Hypothesis>& hs, const Bounds& b);
// Fixpoint of single exchange steps (U||V).(W||X) from (U.W)||(V.X); an oracle for close_exch.
PomsetLanguage exchange_rewrite_closure(const PomsetLanguage& l, const Bounds& b);
// alpha <= alpha . alpha for every state of u.
std::vector<Hypothesis> contr_hypotheses(const Universe& u);
std::vector<Hypothesis> contr_hypotheses(const std::vector<State>& states);

PomsetLanguage close_exch(const PomsetLanguage& l, const Bounds& b = {});
PomsetLanguage close_contr(const PomsetLanguage& l, const Bounds& b = {});
PomsetLanguage close_both(const PomsetLanguage& l, const Bounds& b = {});
PomsetLanguage sem_pocka(const Term& e, const Universe& u, const Bounds& b);

Term reify(const Term& e, const Universe& u);
Term pad_transform(const Term& e, const Universe& u);

// v in the unclosed semantics of e with unbounded State* padding and unbounded star.
bool unclosed_member(const Pomset& v, const Term& e, const Universe& u, const Bounds& b);
// Some V in the unclosed semantics of e with v subsumed by V.
bool exch_member(const Pomset& v, const Term& e, const Universe& u, const Bounds& b);
// p in the exch+contr closure of the unclosed semantics of e.
bool closed_member(const Pomset& p, const Term& e, const Universe& u, const Bounds& b);

} // namespace pocka
