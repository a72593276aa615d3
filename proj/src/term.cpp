#include "pocka/term.hpp"

namespace pocka {

Term Term::zero() {
    static const Term t(std::make_shared<const Node>(Node{Kind::Zero, {}, nullptr, {}, {}}));
    return t;
}

Term Term::one() {
    static const Term t(std::make_shared<const Node>(Node{Kind::One, {}, nullptr, {}, {}}));
    return t;
}

Term Term::act(Action a) { return Term(std::make_shared<const Node>(Node{Kind::Act, std::move(a), nullptr, {}, {}})); }

Term Term::obs(ObsTerm p) {
    return Term(std::make_shared<const Node>(
        Node{Kind::Obs, {}, std::make_shared<const ObsTerm>(std::move(p)), {}, {}}));
}

Term Term::state(State s) { return Term(std::make_shared<const Node>(Node{Kind::State, {}, nullptr, std::move(s), {}})); }

Term Term::plus(Term e, Term f) {
    return Term(std::make_shared<const Node>(Node{Kind::Plus, {}, nullptr, {}, {std::move(e), std::move(f)}}));
}

Term Term::dot(Term e, Term f) {
    return Term(std::make_shared<const Node>(Node{Kind::Dot, {}, nullptr, {}, {std::move(e), std::move(f)}}));
}

Term Term::par(Term e, Term f) {
    return Term(std::make_shared<const Node>(Node{Kind::Par, {}, nullptr, {}, {std::move(e), std::move(f)}}));
}

Term Term::star(Term e, bool padding) {
    return Term(std::make_shared<const Node>(Node{Kind::Star, {}, nullptr, {}, {std::move(e)}, padding}));
}

bool Term::is_atom() const {
    return kind() == Kind::Act || kind() == Kind::Obs || kind() == Kind::State;
}

std::size_t Term::atom_count() const {
    if (is_atom()) return 1;
    std::size_t n = 0;
    for (const auto& a : node_->args) n += a.atom_count();
    return n;
}

bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    if (x.kind != y.kind || x.padding != y.padding) return false;
    switch (x.kind) {
    case Term::Kind::Act:
        return x.action == y.action;
    case Term::Kind::Obs:
        return *x.obs == *y.obs;
    case Term::Kind::State:
        return x.state == y.state;
    default:
        return x.args == y.args;
    }
}

Term sum_all(const std::vector<Term>& es) {
    if (es.empty()) return Term::zero();
    Term out = es[0];
    for (std::size_t i = 1; i < es.size(); ++i) out = Term::plus(out, es[i]);
    return out;
}

Term dot_all(const std::vector<Term>& es) {
    if (es.empty()) return Term::one();
    Term out = es[0];
    for (std::size_t i = 1; i < es.size(); ++i) out = Term::dot(out, es[i]);
    return out;
}

} // namespace pocka
