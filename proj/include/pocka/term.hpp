#pragma once

#include <memory>
#include <vector>

#include "pocka/obs.hpp"
#include "pocka/state.hpp"

namespace pocka {

// POCKA terms. State atoms stand for pi_alpha in the unclosed semantics and for the
// single state-labelled letter alpha in the BKA semantics.
class Term {
public:
    enum class Kind { Zero, One, Act, Obs, State, Plus, Dot, Par, Star };

    static Term zero();
    static Term one();
    static Term act(Action a);
    static Term obs(ObsTerm p);
    static Term state(State s);
    static Term plus(Term e, Term f);
    static Term dot(Term e, Term f);
    static Term par(Term e, Term f);
    // A padding star is unrolled up to pad_bound instead of star_bound.
    static Term star(Term e, bool padding = false);

    Kind kind() const { return node_->kind; }
    const Action& action() const { return node_->action; }
    const ObsTerm& observation() const { return *node_->obs; }
    const State& state_label() const { return node_->state; }
    const Term& lhs() const { return node_->args[0]; }
    const Term& rhs() const { return node_->args[1]; }
    const Term& body() const { return node_->args[0]; }
    bool padding() const { return node_->padding; }
    bool is_atom() const;
    std::size_t atom_count() const;
    const void* id() const { return node_.get(); }

    friend bool operator==(const Term& a, const Term& b);

private:
    struct Node {
        Kind kind;
        Action action;
        std::shared_ptr<const ObsTerm> obs;
        State state;
        std::vector<Term> args;
        bool padding = false;
    };
    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

Term sum_all(const std::vector<Term>& es);
Term dot_all(const std::vector<Term>& es);

struct Hypothesis {
    Term lhs;
    Term rhs; // lhs <= rhs
};

} // namespace pocka
