#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pocka/pomset.hpp"

namespace pocka {

// Alternating q1, a1, ..., an, q(n+1); indices are nodes of poset_view(u).
struct Path {
    Var var;
    std::vector<std::size_t> nodes;
};

struct Violation {
    std::string property; // "A1" .. "A7"
    std::vector<std::size_t> nodes;
    std::string detail;
};

struct Derivation {
    std::string rule; // "state", "action", "seq", "par"
    Pomset result;
    std::vector<Derivation> premises;
};

struct GuardVerdict {
    bool guarded = false;
    std::vector<Violation> violations;
    std::optional<Derivation> derivation;
};

// The latest node strictly before i (resp. the earliest strictly after), if unique.
std::optional<std::size_t> predecessor(const PosetView& pv, std::size_t i);
std::optional<std::size_t> successor(const PosetView& pv, std::size_t i);

// Checks P1 and P2 for p as a path from `from` to `to`.
bool is_path(const PosetView& pv, const Path& p, std::size_t from, std::size_t to);

// First path for v in depth-first order; both endpoints must be state nodes.
std::optional<Path> find_path(const PosetView& pv, const Var& v, std::size_t from, std::size_t to);
std::optional<Path> find_path(const Pomset& u, const Var& v, std::size_t from, std::size_t to);

GuardVerdict check_guarded(const Pomset& u);

// Nodes c with a <= c <= b that are comparable to every node above a.
std::vector<std::size_t> bottlenecks(const Pomset& u, std::size_t a, std::size_t b);

struct GuardedOptions {
    // Restricts the letters used by the first two rules; merged states are unrestricted.
    std::optional<std::vector<State>> states;
    std::optional<std::vector<Action>> actions;
    std::size_t node_guard = kDefaultNodeGuard;
};

// How each member was first produced.
struct GuardedStep {
    std::string rule;
    std::vector<Pomset> premises;
};
using GuardedCatalog = std::map<Pomset, GuardedStep>;

GuardedCatalog enumerate_guarded_catalog(const Universe& u, std::size_t n, const GuardedOptions& opt = {});
PomsetLanguage enumerate_guarded(const Universe& u, std::size_t n, const GuardedOptions& opt = {});
Derivation explain(const GuardedCatalog& cat, const Pomset& p);

// A derivation found by splitting u at state nodes and, for parallel parts, guessing how
// the end states divide between the branches.
std::optional<Derivation> derive_guarded(const Pomset& u);

// Verdict with the derivation filled in when p is in the catalog.
GuardVerdict check_guarded(const Pomset& u, const GuardedCatalog& cat);

// All guarded pomsets whose action nodes induce exactly `skeleton` and whose minimum is alpha.
PomsetLanguage guarded_completions(const Pomset& skeleton, const State& alpha);

} // namespace pocka
