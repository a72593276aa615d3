#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pocka {

using Var = std::string;
using Val = std::string;

// Partial map Var -> Val, kept sorted by variable name.
class State {
public:
    State() = default;
    State(std::initializer_list<std::pair<Var, Val>> entries);
    explicit State(std::vector<std::pair<Var, Val>> entries);

    const Val* find(const Var& v) const;
    bool defines(const Var& v) const { return find(v) != nullptr; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const std::vector<std::pair<Var, Val>>& entries() const { return entries_; }
    std::vector<Var> domain() const;

    // Returns a copy with v set to n (overwriting).
    State with(const Var& v, const Val& n) const;

    friend bool operator==(const State& a, const State& b) { return a.entries_ == b.entries_; }
    // Domain (as a sorted variable list) first, then values.
    friend std::strong_ordering operator<=>(const State& a, const State& b);

private:
    std::vector<std::pair<Var, Val>> entries_;
};

struct Action {
    enum class Kind { Const, Copy };
    Kind kind = Kind::Const;
    Var target;
    std::string source; // the value for Const, the source variable for Copy

    static Action assign(Var v, Val n) { return {Kind::Const, std::move(v), std::move(n)}; }
    static Action copy(Var v, Var w) { return {Kind::Copy, std::move(v), std::move(w)}; }

    friend bool operator==(const Action&, const Action&) = default;
    friend std::strong_ordering operator<=>(const Action&, const Action&) = default;
};

// Finite sets of variables and values; both are kept in lexicographic order.
class Universe {
public:
    Universe(std::vector<Var> vars, std::vector<Val> vals);

    const std::vector<Var>& vars() const;
    const std::vector<Val>& vals() const;
    bool has_var(const Var& v) const;
    bool has_val(const Val& n) const;
    bool contains(const State& s) const;
    bool contains(const Action& a) const;

    // All partial states in canonical order; cached.
    const std::vector<State>& states() const;
    std::size_t state_count() const;
    // Position of s in states(); throws UsageError if s is not over this universe.
    std::size_t index_of(const State& s) const;

    // Every action v := n and v := w over the universe.
    std::vector<Action> actions() const;

    friend bool operator==(const Universe& a, const Universe& b);

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

// alpha <= beta: alpha is at least as defined as beta and agrees with it.
bool refines(const State& alpha, const State& beta);
std::optional<State> merge(const State& alpha, const State& beta);
std::optional<State> update(const State& alpha, const Action& a);
std::vector<State> all_states(const Universe& u);

} // namespace pocka
