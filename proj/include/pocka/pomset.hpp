#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "pocka/state.hpp"

namespace pocka {

using Label = std::variant<Action, State>;

inline bool is_state(const Label& l) { return std::holds_alternative<State>(l); }
inline bool is_action(const Label& l) { return std::holds_alternative<Action>(l); }
inline const State& as_state(const Label& l) { return std::get<State>(l); }
inline const Action& as_action(const Label& l) { return std::get<Action>(l); }

// Canonical series-parallel term: Seq children are never Seq or Empty, Par children are
// never Par or Empty and are sorted. Two pomsets are isomorphic iff their terms are equal.
class Pomset {
public:
    enum class Kind { Empty, Leaf, Seq, Par };

    Pomset();
    static Pomset leaf(Label l);
    static Pomset seq(std::vector<Pomset> parts);
    static Pomset par(std::vector<Pomset> parts);

    Kind kind() const { return node_->kind; }
    bool empty() const { return node_->kind == Kind::Empty; }
    const Label& label() const { return node_->label; }
    const std::vector<Pomset>& children() const { return node_->children; }
    std::size_t size() const { return node_->size; }
    std::size_t hash() const { return node_->hash; }
    std::size_t state_count() const { return node_->states; }

    friend bool operator==(const Pomset& a, const Pomset& b);
    // Orders by size, then shape, then labels.
    friend std::strong_ordering operator<=>(const Pomset& a, const Pomset& b);

private:
    struct Node {
        Kind kind = Kind::Empty;
        Label label;
        std::vector<Pomset> children;
        std::size_t size = 0;
        std::size_t states = 0;
        std::size_t hash = 0;
    };
    explicit Pomset(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Pomset make(Kind k, Label l, std::vector<Pomset> children);
    std::shared_ptr<const Node> node_;
};

using PomsetLanguage = std::set<Pomset>;

Pomset compose_seq(const Pomset& u, const Pomset& v);
Pomset compose_par(const Pomset& u, const Pomset& v);
PomsetLanguage lang_seq(const PomsetLanguage& a, const PomsetLanguage& b);
PomsetLanguage lang_par(const PomsetLanguage& a, const PomsetLanguage& b);

// Leaf labels in depth-first order; this order is a linear extension of the pomset.
std::vector<Label> leaf_labels(const Pomset& p);
// Sub-pomset induced by the leaves whose depth-first index is in mask.
Pomset restrict_to(const Pomset& p, std::uint64_t mask);

// Labelled poset view; node i is the i-th leaf in depth-first order. At most 64 nodes.
struct PosetView {
    std::vector<Label> labels;
    std::vector<std::uint64_t> up;   // bit j of up[i]: i <= j
    std::vector<std::uint64_t> down; // bit j of down[i]: j <= i

    std::size_t size() const { return labels.size(); }
    bool leq(std::size_t i, std::size_t j) const { return (up[i] >> j) & 1u; }
    bool lt(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
    bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }
};

PosetView poset_view(const Pomset& p);

// u is more sequential than v: a label- and order-preserving bijection S_v -> S_u exists.
bool subsumes(const Pomset& u, const Pomset& v);
// u is a contraction of v: a surjection S_v -> S_u with conditions (i)-(iii).
bool contracts_to(const Pomset& u, const Pomset& v);

// A pomset with exactly one hole.
class PomsetContext {
public:
    enum class Kind { Hole, Seq, Par };

    static PomsetContext hole();
    // before . inner . after
    static PomsetContext in_seq(Pomset before, PomsetContext inner, Pomset after);
    // sibling || inner
    static PomsetContext in_par(Pomset sibling, PomsetContext inner);

    Kind kind() const { return kind_; }
    const Pomset& before() const { return a_; }
    const Pomset& after() const { return b_; }
    const Pomset& sibling() const { return a_; }
    const PomsetContext& inner() const { return *inner_; }

private:
    Kind kind_ = Kind::Hole;
    Pomset a_, b_;
    std::shared_ptr<const PomsetContext> inner_;
};

Pomset plug(const PomsetContext& c, const Pomset& u);

// All (A, B) with A . B = w, and all (A, B) with A || B = w; trivial splits included.
std::vector<std::pair<Pomset, Pomset>> seq_cuts(const Pomset& w);
std::vector<std::pair<Pomset, Pomset>> par_splits(const Pomset& w);

// All (C, X) with X non-empty and C[X] = w.
std::vector<std::pair<PomsetContext, Pomset>> decompositions(const Pomset& w);
// All C with C[Empty] = w (the hole placed anywhere in w).
std::vector<PomsetContext> insertion_contexts(const Pomset& w);

inline constexpr std::size_t kDefaultNodeGuard = 12;

PomsetLanguage subsumption_downset(const Pomset& v, std::size_t node_guard = kDefaultNodeGuard);
PomsetLanguage contraction_downset(const Pomset& v, std::size_t node_guard = kDefaultNodeGuard);

std::vector<Label> universe_labels(const Universe& u);
// All canonical sp-pomsets with at most n nodes over the given labels, Empty included.
PomsetLanguage enumerate_sp(const std::vector<Label>& labels, std::size_t n,
                            std::size_t node_guard = kDefaultNodeGuard);
PomsetLanguage enumerate_sp(const Universe& u, std::size_t n, std::size_t node_guard = kDefaultNodeGuard);

} // namespace pocka

template <>
struct std::hash<pocka::Pomset> {
    std::size_t operator()(const pocka::Pomset& p) const noexcept { return p.hash(); }
};
