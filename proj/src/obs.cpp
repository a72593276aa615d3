#include "pocka/obs.hpp"

#include <algorithm>
#include <bit>

#include "pocka/error.hpp"

namespace pocka {

ObsTerm ObsTerm::bot() {
    static const ObsTerm t(std::make_shared<const Node>(Node{Kind::Bot, {}, {}, {}}));
    return t;
}

ObsTerm ObsTerm::top() {
    static const ObsTerm t(std::make_shared<const Node>(Node{Kind::Top, {}, {}, {}}));
    return t;
}

ObsTerm ObsTerm::test(Var v, Val n) {
    return ObsTerm(std::make_shared<const Node>(Node{Kind::Test, std::move(v), std::move(n), {}}));
}

ObsTerm ObsTerm::negate(ObsTerm p) {
    return ObsTerm(std::make_shared<const Node>(Node{Kind::Not, {}, {}, {std::move(p)}}));
}

ObsTerm ObsTerm::conj(ObsTerm p, ObsTerm q) {
    return ObsTerm(std::make_shared<const Node>(Node{Kind::And, {}, {}, {std::move(p), std::move(q)}}));
}

ObsTerm ObsTerm::disj(ObsTerm p, ObsTerm q) {
    return ObsTerm(std::make_shared<const Node>(Node{Kind::Or, {}, {}, {std::move(p), std::move(q)}}));
}

std::size_t ObsTerm::depth() const {
    std::size_t d = 0;
    for (const auto& a : node_->args) d = std::max(d, a.depth() + 1);
    return d;
}

bool operator==(const ObsTerm& a, const ObsTerm& b) {
    if (a.node_ == b.node_) return true;
    return a.node_->kind == b.node_->kind && a.node_->var == b.node_->var && a.node_->val == b.node_->val &&
           a.node_->args == b.node_->args;
}

ObsTerm as_observation(const State& s) {
    std::vector<ObsTerm> tests;
    for (const auto& [v, n] : s.entries()) tests.push_back(ObsTerm::test(v, n));
    return conj_all(tests);
}

ObsTerm disj_all(const std::vector<ObsTerm>& ps) {
    if (ps.empty()) return ObsTerm::bot();
    ObsTerm out = ps[0];
    for (std::size_t i = 1; i < ps.size(); ++i) out = ObsTerm::disj(out, ps[i]);
    return out;
}

ObsTerm conj_all(const std::vector<ObsTerm>& ps) {
    if (ps.empty()) return ObsTerm::top();
    ObsTerm out = ps[0];
    for (std::size_t i = 1; i < ps.size(); ++i) out = ObsTerm::conj(out, ps[i]);
    return out;
}

DownSet::DownSet(Universe u) : u_(std::move(u)), bits_((u_.state_count() + 63) / 64, 0) {}

DownSet::DownSet(Universe u, const std::vector<State>& members) : DownSet(std::move(u)) {
    for (const auto& s : members) insert_index(u_.index_of(s));
}

DownSet DownSet::full(Universe u) {
    DownSet d(std::move(u));
    for (std::size_t i = 0; i < d.u_.state_count(); ++i) d.insert_index(i);
    return d;
}

bool DownSet::contains(const State& s) const {
    if (!u_.contains(s)) return false;
    return contains_index(u_.index_of(s));
}

std::size_t DownSet::size() const {
    std::size_t n = 0;
    for (auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::vector<State> DownSet::members() const {
    std::vector<State> out;
    const auto& states = u_.states();
    for (std::size_t i = 0; i < states.size(); ++i)
        if (contains_index(i)) out.push_back(states[i]);
    return out;
}

bool DownSet::is_down_closed() const {
    const auto& states = u_.states();
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (!contains_index(i)) continue;
        // One-step extensions suffice: every refinement is reached by defining variables one at a time.
        for (const auto& v : u_.vars()) {
            if (states[i].defines(v)) continue;
            for (const auto& n : u_.vals())
                if (!contains_index(u_.index_of(states[i].with(v, n)))) return false;
        }
    }
    return true;
}

DownSet DownSet::operator|(const DownSet& o) const {
    DownSet out = *this;
    for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] |= o.bits_[i];
    return out;
}

DownSet DownSet::operator&(const DownSet& o) const {
    DownSet out = *this;
    for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] &= o.bits_[i];
    return out;
}

bool DownSet::subset_of(const DownSet& o) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & ~o.bits_[i]) return false;
    return true;
}

DownSet denote(const ObsTerm& p, const Universe& u) {
    switch (p.kind()) {
    case ObsTerm::Kind::Bot:
        return DownSet(u);
    case ObsTerm::Kind::Top:
        return DownSet::full(u);
    case ObsTerm::Kind::Test: {
        if (!u.has_var(p.var())) throw UsageError("unknown variable '" + p.var() + "'");
        if (!u.has_val(p.val())) throw UsageError("unknown value '" + p.val() + "'");
        DownSet d(u);
        const auto& states = u.states();
        for (std::size_t i = 0; i < states.size(); ++i) {
            const Val* n = states[i].find(p.var());
            if (n && *n == p.val()) d.insert_index(i);
        }
        return d;
    }
    case ObsTerm::Kind::Not:
        return pseudocomplement(denote(p.lhs(), u));
    case ObsTerm::Kind::And:
        return denote(p.lhs(), u) & denote(p.rhs(), u);
    case ObsTerm::Kind::Or:
        return denote(p.lhs(), u) | denote(p.rhs(), u);
    }
    return DownSet(u);
}

DownSet pseudocomplement(const DownSet& y) {
    if (!y.is_down_closed()) throw UsageError("pseudocomplement of a set that is not down-closed");
    const Universe& u = y.universe();
    const auto& states = u.states();
    DownSet out(u);
    for (std::size_t i = 0; i < states.size(); ++i) {
        bool hit = false;
        for (std::size_t j = 0; j < states.size() && !hit; ++j)
            if (y.contains_index(j) && refines(states[j], states[i])) hit = true;
        if (!hit) out.insert_index(i);
    }
    return out;
}

std::vector<State> normal_form(const ObsTerm& p, const Universe& u) { return denote(p, u).members(); }

bool obs_equiv(const ObsTerm& p, const ObsTerm& q, const Universe& u) { return denote(p, u) == denote(q, u); }

bool obs_leq(const ObsTerm& p, const ObsTerm& q, const Universe& u) {
    return denote(p, u).subset_of(denote(q, u));
}

} // namespace pocka
