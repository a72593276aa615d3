#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "pocka/state.hpp"

namespace pocka {

class ObsTerm {
public:
    enum class Kind { Bot, Top, Test, Not, And, Or };

    static ObsTerm bot();
    static ObsTerm top();
    static ObsTerm test(Var v, Val n);
    static ObsTerm negate(ObsTerm p);
    static ObsTerm conj(ObsTerm p, ObsTerm q);
    static ObsTerm disj(ObsTerm p, ObsTerm q);

    Kind kind() const { return node_->kind; }
    const Var& var() const { return node_->var; }
    const Val& val() const { return node_->val; }
    const ObsTerm& lhs() const { return node_->args[0]; }
    const ObsTerm& rhs() const { return node_->args[1]; }
    std::size_t depth() const;

    friend bool operator==(const ObsTerm& a, const ObsTerm& b);

private:
    struct Node {
        Kind kind;
        Var var;
        Val val;
        std::vector<ObsTerm> args;
    };
    explicit ObsTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// pi_alpha: conjunction of v == alpha(v); top for the empty state.
ObsTerm as_observation(const State& s);
// Big disjunction/conjunction; bot/top when empty.
ObsTerm disj_all(const std::vector<ObsTerm>& ps);
ObsTerm conj_all(const std::vector<ObsTerm>& ps);

// A set of states of one universe, stored as a bitset over Universe::states().
class DownSet {
public:
    explicit DownSet(Universe u);
    DownSet(Universe u, const std::vector<State>& members);

    static DownSet full(Universe u);

    const Universe& universe() const { return u_; }
    bool contains(const State& s) const;
    bool contains_index(std::size_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1u; }
    void insert_index(std::size_t i) { bits_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    std::size_t size() const;
    bool empty() const { return size() == 0; }
    std::vector<State> members() const;
    bool is_down_closed() const;

    DownSet operator|(const DownSet& o) const;
    DownSet operator&(const DownSet& o) const;
    bool subset_of(const DownSet& o) const;

    friend bool operator==(const DownSet& a, const DownSet& b) { return a.bits_ == b.bits_; }
    friend bool operator<(const DownSet& a, const DownSet& b) { return a.bits_ < b.bits_; }

private:
    Universe u_;
    std::vector<std::uint64_t> bits_;
};

DownSet denote(const ObsTerm& p, const Universe& u);
// The largest down-set disjoint from y; throws UsageError when y is not down-closed.
DownSet pseudocomplement(const DownSet& y);
// Members of denote(p), canonically ordered.
std::vector<State> normal_form(const ObsTerm& p, const Universe& u);
bool obs_equiv(const ObsTerm& p, const ObsTerm& q, const Universe& u);
bool obs_leq(const ObsTerm& p, const ObsTerm& q, const Universe& u);

} // namespace pocka
