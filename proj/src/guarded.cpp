#include "pocka/guarded.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "pocka/error.hpp"

namespace pocka {

namespace {

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

std::uint64_t all_mask(std::size_t n) { return n == 64 ? ~std::uint64_t{0} : bit(n) - 1; }

bool is_state_node(const PosetView& pv, std::size_t i) { return is_state(pv.labels[i]); }

const Val* value_at(const PosetView& pv, std::size_t i, const Var& v) {
    return as_state(pv.labels[i]).find(v);
}

// The value of v after action a, given the state q before it.
std::optional<Val> step_value(const Action& a, const State& q, const Var& v) {
    if (a.target == v) {
        if (a.kind == Action::Kind::Const) return a.source;
        if (const Val* w = q.find(a.source)) return *w;
    }
    if (const Val* w = q.find(v)) return *w;
    return std::nullopt;
}

std::optional<std::size_t> minimum(const PosetView& pv) {
    for (std::size_t i = 0; i < pv.size(); ++i)
        if (pv.up[i] == all_mask(pv.size())) return i;
    return std::nullopt;
}

std::optional<std::size_t> maximum(const PosetView& pv) {
    for (std::size_t i = 0; i < pv.size(); ++i)
        if (pv.down[i] == all_mask(pv.size())) return i;
    return std::nullopt;
}

std::vector<std::size_t> nodes_of(std::uint64_t m) {
    std::vector<std::size_t> out;
    while (m) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

bool path_search(const PosetView& pv, const Var& v, std::size_t q, std::size_t to,
                 std::uint64_t& dead, std::vector<std::size_t>& out) {
    out.push_back(q);
    if (q == to) return true;
    const State& sq = as_state(pv.labels[q]);
    for (std::size_t a = 0; a < pv.size(); ++a) {
        if (!is_action(pv.labels[a]) || !pv.lt(q, a) || !pv.leq(a, to)) continue;
        auto p = predecessor(pv, a);
        if (!p || *p != q) continue;
        auto s = successor(pv, a);
        if (!s || !is_state_node(pv, *s) || !pv.leq(*s, to) || (dead & bit(*s))) continue;
        auto want = step_value(as_action(pv.labels[a]), sq, v);
        const Val* got = value_at(pv, *s, v);
        if (!want || !got || *want != *got) continue;
        out.push_back(a);
        if (path_search(pv, v, *s, to, dead, out)) return true;
        out.pop_back();
        // The value at a state node is fixed, so a failed node fails for every route.
        dead |= bit(*s);
    }
    out.pop_back();
    return false;
}

void require_state_nodes(const PosetView& pv, std::size_t from, std::size_t to) {
    if (from >= pv.size() || to >= pv.size()) throw UsageError("path endpoint out of range");
    if (!is_state_node(pv, from) || !is_state_node(pv, to))
        throw UsageError("path endpoints must be state nodes");
}

std::vector<Pomset> parts(const Pomset& p) {
    if (p.kind() == Pomset::Kind::Seq) return p.children();
    return {p};
}

Pomset middle(const std::vector<Pomset>& ps) {
    return Pomset::seq(std::vector<Pomset>(ps.begin() + 1, ps.end() - 1));
}

// Every (a0, a1) with a0 (+) a1 = alpha.
std::vector<std::pair<State, State>> splits(const State& alpha) {
    std::vector<std::pair<State, State>> out;
    const auto& es = alpha.entries();
    std::size_t total = 1;
    for (std::size_t i = 0; i < es.size(); ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<std::pair<Var, Val>> l, r;
        std::size_t c = code;
        for (const auto& e : es) {
            std::size_t d = c % 3;
            c /= 3;
            if (d != 1) l.push_back(e);
            if (d != 0) r.push_back(e);
        }
        out.emplace_back(State(std::move(l)), State(std::move(r)));
    }
    return out;
}

std::set<Pomset> complete(const Pomset& s, const State& alpha) {
    std::set<Pomset> out;
    switch (s.kind()) {
    case Pomset::Kind::Empty:
        out.insert(Pomset::leaf(alpha));
        break;
    case Pomset::Kind::Leaf: {
        if (!is_action(s.label())) throw UsageError("skeleton must contain actions only");
        if (auto beta = update(alpha, as_action(s.label())))
            out.insert(Pomset::seq({Pomset::leaf(alpha), s, Pomset::leaf(*beta)}));
        break;
    }
    case Pomset::Kind::Seq: {
        std::set<Pomset> cur{Pomset::leaf(alpha)};
        for (const auto& c : s.children()) {
            std::set<Pomset> next;
            for (const auto& p : cur) {
                auto ps = parts(p);
                for (const auto& q : complete(c, as_state(ps.back().label()))) {
                    auto qs = parts(q);
                    std::vector<Pomset> all = ps;
                    all.insert(all.end(), qs.begin() + 1, qs.end());
                    next.insert(Pomset::seq(std::move(all)));
                }
            }
            cur = std::move(next);
        }
        out = std::move(cur);
        break;
    }
    case Pomset::Kind::Par: {
        const auto& cs = s.children();
        std::size_t k = cs.size();
        // Two groups; the first child always goes to the left group.
        for (std::uint64_t g = 0; g < (std::uint64_t{1} << (k - 1)) - 1; ++g) {
            std::vector<Pomset> left{cs[0]}, right;
            for (std::size_t i = 1; i < k; ++i) ((g >> (i - 1)) & 1u ? left : right).push_back(cs[i]);
            Pomset lp = Pomset::par(left), rp = Pomset::par(right);
            for (const auto& [a0, a1] : splits(alpha)) {
                auto l0 = complete(lp, a0);
                if (l0.empty()) continue;
                auto l1 = complete(rp, a1);
                for (const auto& p0 : l0) {
                    auto ps0 = parts(p0);
                    for (const auto& p1 : l1) {
                        auto ps1 = parts(p1);
                        auto end = merge(as_state(ps0.back().label()), as_state(ps1.back().label()));
                        if (!end) continue;
                        out.insert(Pomset::seq({Pomset::leaf(alpha),
                                                Pomset::par({middle(ps0), middle(ps1)}),
                                                Pomset::leaf(*end)}));
                    }
                }
            }
        }
        break;
    }
    }
    return out;
}

} // namespace

std::optional<std::size_t> predecessor(const PosetView& pv, std::size_t i) {
    std::uint64_t below = pv.down[i] & ~bit(i);
    if (!below) return std::nullopt;
    for (std::size_t j : nodes_of(below))
        if ((pv.down[j] & below) == below) return j;
    return std::nullopt;
}

std::optional<std::size_t> successor(const PosetView& pv, std::size_t i) {
    std::uint64_t above = pv.up[i] & ~bit(i);
    if (!above) return std::nullopt;
    for (std::size_t j : nodes_of(above))
        if ((pv.up[j] & above) == above) return j;
    return std::nullopt;
}

bool is_path(const PosetView& pv, const Path& p, std::size_t from, std::size_t to) {
    const auto& ns = p.nodes;
    if (ns.empty() || ns.size() % 2 == 0) return false;
    for (std::size_t i : ns)
        if (i >= pv.size()) return false;
    if (ns.front() != from || ns.back() != to || !pv.leq(from, to)) return false;
    for (std::size_t i = 0; i < ns.size(); i += 2)
        if (!is_state_node(pv, ns[i])) return false;
    if (!value_at(pv, from, p.var)) return false;
    for (std::size_t i = 1; i < ns.size(); i += 2) {
        std::size_t q = ns[i - 1], a = ns[i], s = ns[i + 1];
        // P1
        if (!is_action(pv.labels[a]) || !pv.leq(from, a) || !pv.leq(a, to)) return false;
        if (i + 2 < ns.size() && !pv.leq(a, ns[i + 2])) return false;
        // P2
        auto pr = predecessor(pv, a);
        auto su = successor(pv, a);
        if (!pr || *pr != q || !su || *su != s) return false;
        auto want = step_value(as_action(pv.labels[a]), as_state(pv.labels[q]), p.var);
        const Val* got = value_at(pv, s, p.var);
        if (!want || !got || *want != *got) return false;
    }
    return true;
}

std::optional<Path> find_path(const PosetView& pv, const Var& v, std::size_t from, std::size_t to) {
    require_state_nodes(pv, from, to);
    if (!pv.leq(from, to) || !value_at(pv, from, v)) return std::nullopt;
    std::uint64_t dead = 0;
    std::vector<std::size_t> nodes;
    if (!path_search(pv, v, from, to, dead, nodes)) return std::nullopt;
    return Path{v, std::move(nodes)};
}

std::optional<Path> find_path(const Pomset& u, const Var& v, std::size_t from, std::size_t to) {
    return find_path(poset_view(u), v, from, to);
}

GuardVerdict check_guarded(const Pomset& u) {
    GuardVerdict r;
    auto add = [&](std::string prop, std::vector<std::size_t> nodes, std::string detail = {}) {
        r.violations.push_back({std::move(prop), std::move(nodes), std::move(detail)});
    };
    if (u.empty()) {
        add("A1", {}, "empty pomset");
        return r;
    }
    PosetView pv = poset_view(u);
    const std::size_t n = pv.size();

    // A1
    auto mn = minimum(pv);
    auto mx = maximum(pv);
    if (!mn) {
        std::vector<std::size_t> mins;
        for (std::size_t i = 0; i < n; ++i)
            if ((pv.down[i] & ~bit(i)) == 0) mins.push_back(i);
        add("A1", mins, "no minimum");
    } else if (!is_state_node(pv, *mn)) {
        add("A1", {*mn}, "minimum is an action");
    }
    if (!mx) {
        std::vector<std::size_t> maxs;
        for (std::size_t i = 0; i < n; ++i)
            if ((pv.up[i] & ~bit(i)) == 0) maxs.push_back(i);
        add("A1", maxs, "no maximum");
    } else if (!is_state_node(pv, *mx)) {
        add("A1", {*mx}, "maximum is an action");
    }

    std::uint64_t actions = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (is_action(pv.labels[i])) actions |= bit(i);

    // A2
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_state_node(pv, i)) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (!is_state_node(pv, j) || !pv.lt(i, j)) continue;
            if ((pv.up[i] & pv.down[j] & actions) == 0) add("A2", {i, j});
        }
    }

    std::vector<std::optional<std::size_t>> pred(n), succ(n);
    for (std::size_t a = 0; a < n; ++a) {
        if (!is_action(pv.labels[a])) continue;
        pred[a] = predecessor(pv, a);
        succ[a] = successor(pv, a);
        if (pred[a] && !is_state_node(pv, *pred[a])) pred[a].reset();
        if (succ[a] && !is_state_node(pv, *succ[a])) succ[a].reset();
    }

    // A3
    for (std::size_t a = 0; a < n; ++a) {
        if (!is_action(pv.labels[a])) continue;
        if (!pred[a]) add("A3", {a}, "no state predecessor");
        if (!succ[a]) add("A3", {a}, "no state successor");
    }

    // A4
    if (mx && is_state_node(pv, *mx)) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!is_state_node(pv, i)) continue;
            for (const auto& v : as_state(pv.labels[i]).domain())
                if (!find_path(pv, v, i, *mx)) add("A4", {i, *mx}, v);
        }
    }

    // A5, A6
    for (std::size_t a = 0; a < n; ++a) {
        if (!is_action(pv.labels[a])) continue;
        const Action& act = as_action(pv.labels[a]);
        if (act.kind == Action::Kind::Const) {
            const Val* got = succ[a] ? value_at(pv, *succ[a], act.target) : nullptr;
            if (!got || *got != act.source) {
                std::vector<std::size_t> ns{a};
                if (succ[a]) ns.push_back(*succ[a]);
                add("A5", ns);
            }
        } else {
            bool ok = pred[a] && succ[a];
            if (ok) {
                const Val* pv1 = value_at(pv, *pred[a], act.source);
                const Val* sv = value_at(pv, *succ[a], act.target);
                const Val* sv1 = value_at(pv, *succ[a], act.source);
                ok = pv1 && sv && sv1 && *sv == *pv1 && *sv1 == *pv1;
            }
            if (!ok) {
                std::vector<std::size_t> ns;
                if (pred[a]) ns.push_back(*pred[a]);
                ns.push_back(a);
                if (succ[a]) ns.push_back(*succ[a]);
                add("A6", ns);
            }
        }
    }

    // A7
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_state_node(pv, i)) continue;
        for (const auto& v : as_state(pv.labels[i]).domain()) {
            std::vector<std::size_t> sources;
            if (mn && is_state_node(pv, *mn) && value_at(pv, *mn, v)) sources.push_back(*mn);
            for (std::size_t a = 0; a < n; ++a)
                if (is_action(pv.labels[a]) && as_action(pv.labels[a]).target == v && succ[a])
                    sources.push_back(*succ[a]);
            bool ok = false;
            for (std::size_t s : sources)
                if (pv.leq(s, i) && find_path(pv, v, s, i)) {
                    ok = true;
                    break;
                }
            if (!ok) add("A7", {i}, v);
        }
    }

    r.guarded = r.violations.empty();
    return r;
}

GuardVerdict check_guarded(const Pomset& u, const GuardedCatalog& cat) {
    GuardVerdict r = check_guarded(u);
    if (r.guarded && cat.count(u)) r.derivation = explain(cat, u);
    return r;
}

std::vector<std::size_t> bottlenecks(const Pomset& u, std::size_t a, std::size_t b) {
    PosetView pv = poset_view(u);
    if (a >= pv.size() || b >= pv.size()) throw UsageError("node out of range");
    std::vector<std::size_t> out;
    if (!pv.leq(a, b)) return out;
    for (std::size_t c = 0; c < pv.size(); ++c) {
        if (!pv.leq(a, c) || !pv.leq(c, b)) continue;
        bool ok = true;
        for (std::size_t d : nodes_of(pv.up[a]))
            if (!pv.comparable(c, d)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(c);
    }
    return out;
}

GuardedCatalog enumerate_guarded_catalog(const Universe& u, std::size_t n, const GuardedOptions& opt) {
    if (n > opt.node_guard)
        throw SizeError("enumerate_guarded size " + std::to_string(n) + " exceeds node guard " +
                        std::to_string(opt.node_guard));
    std::vector<State> states = opt.states ? *opt.states : u.states();
    std::vector<Action> acts = opt.actions ? *opt.actions : u.actions();
    for (const auto& s : states)
        if (!u.contains(s)) throw UsageError("state outside the universe");
    for (const auto& a : acts)
        if (!u.contains(a)) throw UsageError("action outside the universe");

    GuardedCatalog cat;
    std::vector<Pomset> order;
    auto add = [&](const Pomset& p, std::string rule, std::vector<Pomset> prem) {
        if (p.size() > n) return;
        if (cat.emplace(p, GuardedStep{std::move(rule), std::move(prem)}).second) order.push_back(p);
    };
    if (n >= 1)
        for (const auto& s : states) add(Pomset::leaf(s), "state", {});
    if (n >= 3)
        for (const auto& s : states)
            for (const auto& a : acts)
                if (auto t = update(s, a))
                    add(Pomset::seq({Pomset::leaf(s), Pomset::leaf(a), Pomset::leaf(*t)}), "action", {});

    // Members of size >= 3, indexed by their end states.
    std::map<State, std::vector<Pomset>> by_first, by_last;
    std::vector<Pomset> composite;
    for (std::size_t i = 0; i < order.size(); ++i) {
        Pomset x = order[i];
        if (x.size() < 3) continue;
        auto xs = parts(x);
        const State& xf = as_state(xs.front().label());
        const State& xl = as_state(xs.back().label());
        by_first[xf].push_back(x);
        by_last[xl].push_back(x);
        composite.push_back(x);

        auto glue = [&](const Pomset& a, const Pomset& b) {
            if (a.size() + b.size() - 1 > n) return;
            auto as = parts(a), bs = parts(b);
            as.insert(as.end(), bs.begin() + 1, bs.end());
            add(Pomset::seq(std::move(as)), "seq", {a, b});
        };
        // Copy: the loops below may append to these vectors.
        for (const auto& y : std::vector<Pomset>(by_first[xl])) glue(x, y);
        for (const auto& y : std::vector<Pomset>(by_last[xf]))
            if (!(y == x)) glue(y, x);

        for (const auto& y : std::vector<Pomset>(composite)) {
            if (x.size() + y.size() - 2 > n) continue;
            auto ys = parts(y);
            auto f = merge(xf, as_state(ys.front().label()));
            auto l = merge(xl, as_state(ys.back().label()));
            if (!f || !l) continue;
            add(Pomset::seq({Pomset::leaf(*f), Pomset::par({middle(xs), middle(ys)}), Pomset::leaf(*l)}),
                "par", {x, y});
        }
    }
    return cat;
}

PomsetLanguage enumerate_guarded(const Universe& u, std::size_t n, const GuardedOptions& opt) {
    PomsetLanguage out;
    for (const auto& [p, step] : enumerate_guarded_catalog(u, n, opt)) out.insert(p);
    return out;
}

Derivation explain(const GuardedCatalog& cat, const Pomset& p) {
    auto it = cat.find(p);
    if (it == cat.end()) throw UsageError("pomset not in the guarded catalog");
    Derivation d{it->second.rule, p, {}};
    for (const auto& q : it->second.premises) d.premises.push_back(explain(cat, q));
    return d;
}

std::optional<Derivation> derive_guarded(const Pomset& u) {
    if (u.kind() == Pomset::Kind::Leaf)
        return is_state(u.label()) ? std::optional<Derivation>(Derivation{"state", u, {}}) : std::nullopt;
    if (u.kind() != Pomset::Kind::Seq) return std::nullopt;
    auto ps = parts(u);
    if (ps.size() < 3 || ps.front().kind() != Pomset::Kind::Leaf || ps.back().kind() != Pomset::Kind::Leaf ||
        !is_state(ps.front().label()) || !is_state(ps.back().label()))
        return std::nullopt;
    const State& alpha = as_state(ps.front().label());
    const State& beta = as_state(ps.back().label());
    if (ps.size() == 3 && ps[1].kind() == Pomset::Kind::Leaf) {
        if (!is_action(ps[1].label())) return std::nullopt;
        auto t = update(alpha, as_action(ps[1].label()));
        if (t && *t == beta) return Derivation{"action", u, {}};
        return std::nullopt;
    }
    if (ps.size() > 3) {
        for (std::size_t i = 2; i + 2 < ps.size(); ++i) {
            if (ps[i].kind() != Pomset::Kind::Leaf || !is_state(ps[i].label())) continue;
            Pomset l = Pomset::seq(std::vector<Pomset>(ps.begin(), ps.begin() + i + 1));
            Pomset r = Pomset::seq(std::vector<Pomset>(ps.begin() + i, ps.end()));
            if (!check_guarded(l).guarded || !check_guarded(r).guarded) continue;
            auto dl = derive_guarded(l);
            if (!dl) continue;
            auto dr = derive_guarded(r);
            if (!dr) continue;
            return Derivation{"seq", u, {std::move(*dl), std::move(*dr)}};
        }
        return std::nullopt;
    }
    if (ps[1].kind() != Pomset::Kind::Par) return std::nullopt;
    const auto& cs = ps[1].children();
    std::size_t k = cs.size();
    auto bsplits = splits(beta);
    for (std::uint64_t g = 0; g < (std::uint64_t{1} << (k - 1)) - 1; ++g) {
        std::vector<Pomset> left{cs[0]}, right;
        for (std::size_t i = 1; i < k; ++i) ((g >> (i - 1)) & 1u ? left : right).push_back(cs[i]);
        Pomset lp = Pomset::par(left), rp = Pomset::par(right);
        for (const auto& [a0, a1] : splits(alpha))
            for (const auto& [b0, b1] : bsplits) {
                Pomset l = Pomset::seq({Pomset::leaf(a0), lp, Pomset::leaf(b0)});
                if (!check_guarded(l).guarded) continue;
                Pomset r = Pomset::seq({Pomset::leaf(a1), rp, Pomset::leaf(b1)});
                if (!check_guarded(r).guarded) continue;
                auto dl = derive_guarded(l);
                if (!dl) continue;
                auto dr = derive_guarded(r);
                if (!dr) continue;
                return Derivation{"par", u, {std::move(*dl), std::move(*dr)}};
            }
    }
    return std::nullopt;
}

PomsetLanguage guarded_completions(const Pomset& skeleton, const State& alpha) {
    auto s = complete(skeleton, alpha);
    return PomsetLanguage(s.begin(), s.end());
}

} // namespace pocka
