#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "pocka/obs.hpp"
#include "pocka/pomset.hpp"
#include "pocka/semantics.hpp"
#include "pocka/term.hpp"

namespace pocka {

struct LitmusSpec {
    Universe universe;
    ObsTerm pre;
    Term thread0;
    Term thread1;
    ObsTerm post;
};

// Throws UsageError unless the universe has x, y, r0, r1 and 0, 1 and both threads are
// star-free sequences of actions.
void validate_litmus(const LitmusSpec& spec);
std::vector<Action> thread_actions(const Term& thread);

// Sections pre:, thread0:, thread1:, post: and optionally vars:, vals:. A universe passed
// in takes precedence over the file's.
LitmusSpec parse_litmus(std::string_view text, const std::optional<Universe>& universe = std::nullopt);

Term build_litmus_term(const LitmusSpec& spec);

struct PBinding {
    std::size_t u1, u2, v1, v2, w;
};

struct PReport {
    bool holds = false;
    std::optional<PBinding> binding;
    std::optional<int> violated_clause; // 1: no node binding, 2: every binding fails the ordering clause
};

PReport check_property_p(const Pomset& u);

// v := k ; v' := k' may be swapped when v != v' and neither k nor k' is v or v'.
bool swappable(const Action& a, const Action& b);
// Closes l under swapping two actions of a Seq node that are separated only by state leaves.
PomsetLanguage swap_closure(const PomsetLanguage& l, const Universe& u, const Bounds& b = {});
// The sum of all reorderings of a thread reachable by swaps.
Term swap_variants(const Term& thread);

struct LitmusReport {
    bool p_universal = true;
    std::optional<Pomset> p_counterexample;
    PomsetLanguage guarded_witnesses;
    std::size_t unclosed_size = 0;
    std::size_t closed_size = 0;
    std::size_t completions_checked = 0;
};

// Enumerates the bounded semantics, checks P on its unclosed part and collects guarded
// members of the closed semantics. Guarded pomsets with extra state nodes are found by
// completing every action skeleton of the closure and testing closed_member.
LitmusReport run_litmus(const LitmusSpec& spec, const Bounds& b, bool swap = false);

} // namespace pocka
