#include "pocka/semantics.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

#include "pocka/error.hpp"
#include "pocka/syntax.hpp"

namespace pocka {

namespace {

void enforce_guard(const PomsetLanguage& l, const Term& e, const Bounds& b) {
    for (const auto& p : l)
        if (p.size() > b.node_guard)
            throw SizeError("subterm '" + render_term(e) + "' denotes a pomset with " + std::to_string(p.size()) +
                            " nodes, above node guard " + std::to_string(b.node_guard));
}

PomsetLanguage star_of(const PomsetLanguage& body, std::size_t bound, const Term& e, const Bounds& b) {
    PomsetLanguage acc{Pomset()};
    PomsetLanguage power{Pomset()};
    for (std::size_t i = 0; i < bound; ++i) {
        power = lang_seq(power, body);
        enforce_guard(power, e, b);
        std::size_t before = acc.size();
        acc.insert(power.begin(), power.end());
        if (acc.size() == before) break;
    }
    return acc;
}

PomsetLanguage sem_bka_rec(const Term& e, const Bounds& b) {
    PomsetLanguage out;
    switch (e.kind()) {
    case Term::Kind::Zero:
        return out;
    case Term::Kind::One:
        return {Pomset()};
    case Term::Kind::Act:
        return {Pomset::leaf(e.action())};
    case Term::Kind::State:
        return {Pomset::leaf(e.state_label())};
    case Term::Kind::Obs:
        throw UsageError("sem_bka needs state letters; reify observation '" + render_term(e) + "' first");
    case Term::Kind::Plus: {
        out = sem_bka_rec(e.lhs(), b);
        auto r = sem_bka_rec(e.rhs(), b);
        out.insert(r.begin(), r.end());
        return out;
    }
    case Term::Kind::Dot:
        out = lang_seq(sem_bka_rec(e.lhs(), b), sem_bka_rec(e.rhs(), b));
        break;
    case Term::Kind::Par:
        out = lang_par(sem_bka_rec(e.lhs(), b), sem_bka_rec(e.rhs(), b));
        break;
    case Term::Kind::Star:
        return star_of(sem_bka_rec(e.body(), b), e.padding() ? b.pad_bound : b.star_bound, e, b);
    }
    enforce_guard(out, e, b);
    return out;
}

PomsetLanguage paddings(const Universe& u, std::size_t k) {
    PomsetLanguage acc{Pomset()};
    PomsetLanguage power{Pomset()};
    PomsetLanguage single;
    for (const auto& s : u.states()) single.insert(Pomset::leaf(s));
    for (std::size_t i = 0; i < k; ++i) {
        power = lang_seq(power, single);
        acc.insert(power.begin(), power.end());
    }
    return acc;
}

struct UnclosedEval {
    const Universe& u;
    const Bounds& b;
    PomsetLanguage pads;

    PomsetLanguage padded(const PomsetLanguage& core, const Term& e) {
        auto out = lang_seq(lang_seq(pads, core), pads);
        enforce_guard(out, e, b);
        return out;
    }

    PomsetLanguage eval(const Term& e) {
        PomsetLanguage out;
        switch (e.kind()) {
        case Term::Kind::Zero:
            return out;
        case Term::Kind::One:
            return {Pomset()};
        case Term::Kind::Act:
            if (!u.contains(e.action())) throw UsageError("action '" + render_term(e) + "' is not over the universe");
            return padded({Pomset::leaf(e.action())}, e);
        case Term::Kind::Obs: {
            PomsetLanguage core;
            for (const auto& s : normal_form(e.observation(), u)) core.insert(Pomset::leaf(s));
            return padded(core, e);
        }
        case Term::Kind::State: {
            if (!u.contains(e.state_label())) throw UsageError("state '" + render_term(e) + "' is not over the universe");
            PomsetLanguage core;
            for (const auto& s : u.states())
                if (refines(s, e.state_label())) core.insert(Pomset::leaf(s));
            return padded(core, e);
        }
        case Term::Kind::Plus: {
            out = eval(e.lhs());
            auto r = eval(e.rhs());
            out.insert(r.begin(), r.end());
            return out;
        }
        case Term::Kind::Dot:
            out = lang_seq(eval(e.lhs()), eval(e.rhs()));
            break;
        case Term::Kind::Par:
            out = lang_par(eval(e.lhs()), eval(e.rhs()));
            break;
        case Term::Kind::Star:
            return star_of(eval(e.body()), e.padding() ? b.pad_bound : b.star_bound, e, b);
        }
        enforce_guard(out, e, b);
        return out;
    }
};

void exchange_steps(const Pomset& w, const std::function<void(const Pomset&)>& emit) {
    for (const auto& [c, x] : decompositions(w))
        for (const auto& [a, bb] : par_splits(x))
            for (const auto& [u0, w0] : seq_cuts(a))
                for (const auto& [v0, x0] : seq_cuts(bb))
                    emit(plug(c, compose_seq(compose_par(u0, v0), compose_par(w0, x0))));
}

PomsetLanguage close_impl(const PomsetLanguage& l, const std::vector<Hypothesis>& hs, const Bounds& b, bool exch) {
    struct Ground {
        PomsetLanguage lhs, rhs;
        bool rhs_empty;
    };
    std::vector<Ground> gs;
    for (const auto& h : hs) {
        Ground g{sem_bka(h.lhs, b), sem_bka(h.rhs, b), false};
        g.rhs_empty = g.rhs.count(Pomset()) > 0;
        gs.push_back(std::move(g));
    }
    PomsetLanguage result = l;
    bool changed = true;
    std::size_t passes = 0;
    auto add = [&](const Pomset& p) {
        if (p.size() <= b.node_guard && result.insert(p).second) changed = true;
    };
    auto fire = [&](const Ground& g, const PomsetContext& c) {
        for (const auto& y : g.rhs)
            if (!result.count(plug(c, y))) return;
        for (const auto& z : g.lhs) add(plug(c, z));
    };
    while (changed) {
        if (++passes > b.max_iterations) throw SizeError("closure did not converge within the iteration cap");
        changed = false;
        std::vector<Pomset> snapshot(result.begin(), result.end());
        for (const auto& w : snapshot) {
            if (exch) exchange_steps(w, add);
            if (gs.empty()) continue;
            auto decs = decompositions(w);
            for (const auto& g : gs) {
                for (const auto& [c, x] : decs)
                    if (g.rhs.count(x)) fire(g, c);
                if (g.rhs_empty)
                    for (const auto& c : insertion_contexts(w)) fire(g, c);
            }
        }
    }
    return result;
}

} // namespace

PomsetLanguage sem_bka(const Term& e, const Bounds& b) { return sem_bka_rec(e, b); }

PomsetLanguage sem_unclosed(const Term& e, const Universe& u, const Bounds& b) {
    UnclosedEval ev{u, b, paddings(u, b.pad_bound)};
    return ev.eval(e);
}

PomsetLanguage close(const PomsetLanguage& l, const std::vector<Hypothesis>& hs, const Bounds& b) {
    return close_impl(l, hs, b, false);
}

PomsetLanguage close_with_exchange(const PomsetLanguage& l, const std::vector<Hypothesis>& hs, const Bounds& b) {
    return close_impl(l, hs, b, true);
}

PomsetLanguage exchange_rewrite_closure(const PomsetLanguage& l, const Bounds& b) { return close_impl(l, {}, b, true); }

std::vector<Hypothesis> contr_hypotheses(const std::vector<State>& states) {
    std::vector<Hypothesis> out;
    for (const auto& s : states) out.push_back({Term::state(s), Term::dot(Term::state(s), Term::state(s))});
    return out;
}

std::vector<Hypothesis> contr_hypotheses(const Universe& u) { return contr_hypotheses(u.states()); }

PomsetLanguage close_exch(const PomsetLanguage& l, const Bounds& b) {
    PomsetLanguage out;
    for (const auto& p : l) {
        auto d = subsumption_downset(p, b.node_guard);
        out.insert(d.begin(), d.end());
    }
    return out;
}

PomsetLanguage close_contr(const PomsetLanguage& l, const Bounds& b) {
    PomsetLanguage out;
    for (const auto& p : l) {
        auto d = contraction_downset(p, b.node_guard);
        out.insert(d.begin(), d.end());
    }
    return out;
}

PomsetLanguage close_both(const PomsetLanguage& l, const Bounds& b) { return close_contr(close_exch(l, b), b); }

PomsetLanguage sem_pocka(const Term& e, const Universe& u, const Bounds& b) {
    return close_both(sem_unclosed(e, u, b), b);
}

Term reify(const Term& e, const Universe& u) {
    switch (e.kind()) {
    case Term::Kind::Zero:
    case Term::Kind::One:
    case Term::Kind::Act:
        return e;
    case Term::Kind::Obs: {
        std::vector<Term> parts;
        for (const auto& s : normal_form(e.observation(), u)) parts.push_back(Term::state(s));
        return sum_all(parts);
    }
    case Term::Kind::State: {
        std::vector<Term> parts;
        for (const auto& s : u.states())
            if (refines(s, e.state_label())) parts.push_back(Term::state(s));
        return sum_all(parts);
    }
    case Term::Kind::Plus:
        return Term::plus(reify(e.lhs(), u), reify(e.rhs(), u));
    case Term::Kind::Dot:
        return Term::dot(reify(e.lhs(), u), reify(e.rhs(), u));
    case Term::Kind::Par:
        return Term::par(reify(e.lhs(), u), reify(e.rhs(), u));
    case Term::Kind::Star:
        return Term::star(reify(e.body(), u), e.padding());
    }
    return e;
}

Term pad_transform(const Term& e, const Universe& u) {
    switch (e.kind()) {
    case Term::Kind::Zero:
    case Term::Kind::One:
        return e;
    case Term::Kind::Act:
    case Term::Kind::Obs:
    case Term::Kind::State: {
        std::vector<Term> letters;
        for (const auto& s : u.states()) letters.push_back(Term::state(s));
        Term g = Term::star(sum_all(letters), true);
        return Term::dot(Term::dot(g, e), g);
    }
    case Term::Kind::Plus:
        return Term::plus(pad_transform(e.lhs(), u), pad_transform(e.rhs(), u));
    case Term::Kind::Dot:
        return Term::dot(pad_transform(e.lhs(), u), pad_transform(e.rhs(), u));
    case Term::Kind::Par:
        return Term::par(pad_transform(e.lhs(), u), pad_transform(e.rhs(), u));
    case Term::Kind::Star:
        return Term::star(pad_transform(e.body(), u), e.padding());
    }
    return e;
}

namespace {

using ActionBag = std::vector<Action>;

// Possible action multisets of the members of a term, when finitely many.
struct Signature {
    bool finite = true;
    std::set<ActionBag> bags;
};

constexpr std::size_t kMaxSignature = 4096;

class Matcher {
public:
    Matcher(const Universe& u, bool subsumed) : u_(u), subsumed_(subsumed) {}

    bool match(const Pomset& w, const Term& e) {
        Key key{e.id(), w};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool r = compute(w, e);
        memo_.emplace(std::move(key), r);
        return r;
    }

private:
    struct Key {
        const void* term;
        Pomset w;
        bool operator==(const Key& o) const { return term == o.term && w == o.w; }
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            return std::hash<const void*>()(k.term) * 31 + k.w.hash();
        }
    };

    bool compute(const Pomset& w, const Term& e) {
        if (w.size() < min_size(e)) return false;
        switch (e.kind()) {
        case Term::Kind::Zero:
            return false;
        case Term::Kind::One:
            return w.empty();
        case Term::Kind::Act:
        case Term::Kind::Obs:
        case Term::Kind::State:
            return match_atom(w, e);
        case Term::Kind::Plus:
            return match(w, e.lhs()) || match(w, e.rhs());
        case Term::Kind::Dot:
            for (const auto& [a, b] : seq_cuts(w))
                if (match(a, e.lhs()) && match(b, e.rhs())) return true;
            return false;
        case Term::Kind::Star:
            if (w.empty()) return true;
            for (const auto& [a, b] : seq_cuts(w))
                if (!a.empty() && match(a, e.body()) && match(b, e)) return true;
            return false;
        case Term::Kind::Par:
            return subsumed_ ? match_par_subsumed(w, e) : match_par_exact(w, e);
        }
        return false;
    }

    bool match_par_exact(const Pomset& w, const Term& e) {
        for (const auto& [a, b] : par_splits(w))
            if (match(a, e.lhs()) && match(b, e.rhs())) return true;
        return false;
    }

    bool match_par_subsumed(const Pomset& w, const Term& e) {
        if (w.empty()) return match(w, e.lhs()) && match(w, e.rhs());
        const PosetView view = poset_view(w);
        std::vector<std::size_t> acts, sts;
        for (std::size_t i = 0; i < view.size(); ++i) (is_state(view.labels[i]) ? sts : acts).push_back(i);
        const Signature& sl = signature(e.lhs());
        const Signature& sr = signature(e.rhs());
        const std::size_t ml = min_size(e.lhs()), mr = min_size(e.rhs());
        std::set<std::pair<Pomset, Pomset>> tried;
        for (std::uint64_t am = 0; am < (std::uint64_t{1} << acts.size()); ++am) {
            std::uint64_t left_acts = 0;
            ActionBag bl, br;
            for (std::size_t k = 0; k < acts.size(); ++k) {
                const Action& a = as_action(view.labels[acts[k]]);
                if ((am >> k) & 1u) {
                    left_acts |= std::uint64_t{1} << acts[k];
                    bl.push_back(a);
                } else {
                    br.push_back(a);
                }
            }
            std::sort(bl.begin(), bl.end());
            std::sort(br.begin(), br.end());
            if (sl.finite && !sl.bags.count(bl)) continue;
            if (sr.finite && !sr.bags.count(br)) continue;
            for (std::uint64_t sm = 0; sm < (std::uint64_t{1} << sts.size()); ++sm) {
                std::uint64_t left = left_acts;
                for (std::size_t k = 0; k < sts.size(); ++k)
                    if ((sm >> k) & 1u) left |= std::uint64_t{1} << sts[k];
                std::size_t nl = static_cast<std::size_t>(std::popcount(left));
                if (nl < ml || view.size() - nl < mr) continue;
                const std::uint64_t all = (view.size() == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << view.size()) - 1;
                Pomset a = restrict_to(w, left), b = restrict_to(w, all & ~left);
                if (!tried.emplace(a, b).second) continue;
                if (match(a, e.lhs()) && match(b, e.rhs())) return true;
            }
        }
        return false;
    }

    bool match_atom(const Pomset& w, const Term& e) {
        std::vector<const Pomset*> leaves;
        if (w.kind() == Pomset::Kind::Leaf) {
            leaves.push_back(&w);
        } else if (w.kind() == Pomset::Kind::Seq) {
            for (const auto& c : w.children()) {
                if (c.kind() != Pomset::Kind::Leaf) return false;
                leaves.push_back(&c);
            }
        } else {
            return false;
        }
        std::size_t actions = 0;
        bool hit = false;
        for (const Pomset* l : leaves) {
            const Label& lab = l->label();
            if (is_action(lab)) {
                ++actions;
                if (e.kind() != Term::Kind::Act || as_action(lab) != e.action()) return false;
                continue;
            }
            const State& s = as_state(lab);
            if (!u_.contains(s)) return false;
            if (e.kind() == Term::Kind::Obs && !hit) hit = obs_set(e).contains(s);
            if (e.kind() == Term::Kind::State && !hit) hit = refines(s, e.state_label());
        }
        if (e.kind() == Term::Kind::Act) return actions == 1;
        return actions == 0 && hit;
    }

    const DownSet& obs_set(const Term& e) {
        auto it = obs_cache_.find(e.id());
        if (it == obs_cache_.end()) it = obs_cache_.emplace(e.id(), denote(e.observation(), u_)).first;
        return it->second;
    }

    std::size_t min_size(const Term& e) {
        if (auto it = min_cache_.find(e.id()); it != min_cache_.end()) return it->second;
        std::size_t r = 0;
        switch (e.kind()) {
        case Term::Kind::Zero:
            r = SIZE_MAX / 4;
            break;
        case Term::Kind::One:
        case Term::Kind::Star:
            r = 0;
            break;
        case Term::Kind::Act:
        case Term::Kind::Obs:
        case Term::Kind::State:
            r = 1;
            break;
        case Term::Kind::Plus:
            r = std::min(min_size(e.lhs()), min_size(e.rhs()));
            break;
        case Term::Kind::Dot:
        case Term::Kind::Par:
            r = std::min(SIZE_MAX / 4, min_size(e.lhs()) + min_size(e.rhs()));
            break;
        }
        min_cache_[e.id()] = r;
        return r;
    }

    const Signature& signature(const Term& e) {
        if (auto it = sig_cache_.find(e.id()); it != sig_cache_.end()) return it->second;
        Signature s;
        switch (e.kind()) {
        case Term::Kind::Zero:
            break;
        case Term::Kind::One:
        case Term::Kind::Obs:
        case Term::Kind::State:
            s.bags.insert(ActionBag{});
            break;
        case Term::Kind::Act:
            s.bags.insert({e.action()});
            break;
        case Term::Kind::Plus: {
            const Signature& a = signature(e.lhs());
            const Signature& b = signature(e.rhs());
            s.finite = a.finite && b.finite;
            if (s.finite) {
                s.bags = a.bags;
                s.bags.insert(b.bags.begin(), b.bags.end());
            }
            break;
        }
        case Term::Kind::Dot:
        case Term::Kind::Par: {
            const Signature a = signature(e.lhs());
            const Signature& b = signature(e.rhs());
            s.finite = a.finite && b.finite;
            if (s.finite) {
                for (const auto& x : a.bags)
                    for (const auto& y : b.bags) {
                        ActionBag z = x;
                        z.insert(z.end(), y.begin(), y.end());
                        std::sort(z.begin(), z.end());
                        s.bags.insert(std::move(z));
                    }
                if (s.bags.size() > kMaxSignature) {
                    s.finite = false;
                    s.bags.clear();
                }
            }
            break;
        }
        case Term::Kind::Star: {
            const Signature& a = signature(e.body());
            s.finite = a.finite && std::all_of(a.bags.begin(), a.bags.end(), [](const ActionBag& x) { return x.empty(); });
            if (s.finite) s.bags.insert(ActionBag{});
            break;
        }
        }
        return sig_cache_[e.id()] = std::move(s);
    }

    const Universe& u_;
    bool subsumed_;
    std::unordered_map<Key, bool, KeyHash> memo_;
    std::unordered_map<const void*, DownSet> obs_cache_;
    std::unordered_map<const void*, std::size_t> min_cache_;
    std::unordered_map<const void*, Signature> sig_cache_;
};

void check_member_size(const Pomset& p) {
    if (p.size() > 64) throw SizeError("membership search supports at most 64 nodes");
}

Pomset expand_states(const Pomset& p, const std::vector<std::size_t>& mult, std::size_t& next) {
    switch (p.kind()) {
    case Pomset::Kind::Empty:
        return p;
    case Pomset::Kind::Leaf:
        if (!is_state(p.label())) return p;
        return Pomset::seq(std::vector<Pomset>(mult[next++], p));
    case Pomset::Kind::Seq:
    case Pomset::Kind::Par: {
        std::vector<Pomset> parts;
        for (const auto& c : p.children()) parts.push_back(expand_states(c, mult, next));
        return p.kind() == Pomset::Kind::Seq ? Pomset::seq(std::move(parts)) : Pomset::par(std::move(parts));
    }
    }
    return p;
}

} // namespace

bool unclosed_member(const Pomset& v, const Term& e, const Universe& u, const Bounds&) {
    check_member_size(v);
    Matcher m(u, false);
    return m.match(v, e);
}

bool exch_member(const Pomset& v, const Term& e, const Universe& u, const Bounds&) {
    check_member_size(v);
    Matcher m(u, true);
    return m.match(v, e);
}

bool closed_member(const Pomset& p, const Term& e, const Universe& u, const Bounds& b) {
    check_member_size(p);
    const std::size_t k = p.state_count();
    const std::size_t top = std::max<std::size_t>(1, b.split_bound);
    if (p.size() - k + k * top > 64) throw SizeError("membership search supports at most 64 nodes after splitting");
    Matcher m(u, true);
    std::vector<std::size_t> mult(k, 1);
    while (true) {
        std::size_t next = 0;
        if (m.match(expand_states(p, mult, next), e)) return true;
        std::size_t i = 0;
        while (i < k && mult[i] == top) mult[i++] = 1;
        if (i == k) return false;
        ++mult[i];
    }
}

} // namespace pocka
