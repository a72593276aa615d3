// Generators and brute-force oracles shared by the test binaries. The oracles work from
// the definitions directly and share no code with the library beyond the value types.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pocka/obs.hpp"
#include "pocka/pomset.hpp"
#include "pocka/state.hpp"
#include "pocka/term.hpp"

namespace testing {

using namespace pocka;
using Rng = std::mt19937_64;

inline Pomset L(const Label& l) { return Pomset::leaf(l); }
inline Pomset S(State s) { return Pomset::leaf(std::move(s)); }
inline Pomset A(const Var& v, const Val& n) { return Pomset::leaf(Action::assign(v, n)); }
inline Pomset C(const Var& v, const Var& w) { return Pomset::leaf(Action::copy(v, w)); }
inline Pomset seq(std::vector<Pomset> ps) { return Pomset::seq(std::move(ps)); }
inline Pomset par(std::vector<Pomset> ps) { return Pomset::par(std::move(ps)); }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
    return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
}

inline std::size_t below(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

// ---------------------------------------------------------------- generators

inline ObsTerm random_obs(Rng& rng, const Universe& u, int depth) {
    std::size_t k = depth <= 0 ? below(rng, 3) : below(rng, 7);
    switch (k) {
    case 0: return ObsTerm::test(pick(rng, u.vars()), pick(rng, u.vals()));
    case 1: return below(rng, 2) ? ObsTerm::top() : ObsTerm::bot();
    case 2: return ObsTerm::test(pick(rng, u.vars()), pick(rng, u.vals()));
    case 3:
    case 4: return ObsTerm::negate(random_obs(rng, u, depth - 1));
    case 5: return ObsTerm::conj(random_obs(rng, u, depth - 1), random_obs(rng, u, depth - 1));
    default: return ObsTerm::disj(random_obs(rng, u, depth - 1), random_obs(rng, u, depth - 1));
    }
}

inline Action random_action(Rng& rng, const Universe& u) {
    if (below(rng, 3) == 0) return Action::copy(pick(rng, u.vars()), pick(rng, u.vars()));
    return Action::assign(pick(rng, u.vars()), pick(rng, u.vals()));
}

inline State random_state(Rng& rng, const Universe& u) { return pick(rng, u.states()); }

struct TermGen {
    bool obs = true;
    bool states = false;
    bool stars = true;
    bool par = true;
    int obs_depth = 1;
};

inline Term random_term(Rng& rng, const Universe& u, int depth, const TermGen& g = {}) {
    if (depth <= 0 || below(rng, 4) == 0) {
        std::size_t k = below(rng, 10);
        if (k == 0) return Term::zero();
        if (k == 1) return Term::one();
        if (k <= 4 && g.obs) return Term::obs(random_obs(rng, u, g.obs_depth));
        if (k == 5 && g.states) return Term::state(random_state(rng, u));
        return Term::act(random_action(rng, u));
    }
    std::size_t k = below(rng, 4);
    if (k == 0) return Term::plus(random_term(rng, u, depth - 1, g), random_term(rng, u, depth - 1, g));
    if (k == 1 || (!g.par && k == 2)) return Term::dot(random_term(rng, u, depth - 1, g), random_term(rng, u, depth - 1, g));
    if (k == 2) return Term::par(random_term(rng, u, depth - 1, g), random_term(rng, u, depth - 1, g));
    if (g.stars) return Term::star(random_term(rng, u, depth - 1, g));
    return Term::dot(random_term(rng, u, depth - 1, g), random_term(rng, u, depth - 1, g));
}

inline Pomset random_pomset(Rng& rng, const std::vector<Label>& labels, std::size_t size) {
    if (size == 0) return Pomset();
    if (size == 1) return Pomset::leaf(pick(rng, labels));
    std::size_t k = 1 + below(rng, size - 1);
    Pomset a = random_pomset(rng, labels, k), b = random_pomset(rng, labels, size - k);
    return below(rng, 2) ? compose_seq(a, b) : compose_par(a, b);
}

// ---------------------------------------------------------------- poset oracle

struct Poset {
    std::vector<Label> labels;
    std::vector<std::vector<bool>> leq;
    std::size_t size() const { return labels.size(); }
};

inline Poset oracle_poset(const Pomset& p) {
    Poset out;
    switch (p.kind()) {
    case Pomset::Kind::Empty:
        return out;
    case Pomset::Kind::Leaf:
        out.labels = {p.label()};
        out.leq = {{true}};
        return out;
    default:
        break;
    }
    std::vector<Poset> cs;
    std::size_t n = 0;
    for (const auto& c : p.children()) {
        cs.push_back(oracle_poset(c));
        n += cs.back().size();
    }
    out.leq.assign(n, std::vector<bool>(n, false));
    std::size_t off = 0;
    std::vector<std::size_t> offs;
    for (const auto& c : cs) {
        offs.push_back(off);
        for (std::size_t i = 0; i < c.size(); ++i) {
            out.labels.push_back(c.labels[i]);
            for (std::size_t j = 0; j < c.size(); ++j) out.leq[off + i][off + j] = c.leq[i][j];
        }
        off += c.size();
    }
    if (p.kind() == Pomset::Kind::Seq)
        for (std::size_t a = 0; a < cs.size(); ++a)
            for (std::size_t b = a + 1; b < cs.size(); ++b)
                for (std::size_t i = 0; i < cs[a].size(); ++i)
                    for (std::size_t j = 0; j < cs[b].size(); ++j) out.leq[offs[a] + i][offs[b] + j] = true;
    return out;
}

inline bool oracle_subsumes(const Pomset& u, const Pomset& v) {
    Poset pu = oracle_poset(u), pv = oracle_poset(v);
    if (pu.size() != pv.size()) return false;
    std::vector<std::size_t> h(pu.size());
    std::iota(h.begin(), h.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < pv.size() && ok; ++i) ok = pv.labels[i] == pu.labels[h[i]];
        for (std::size_t i = 0; i < pv.size() && ok; ++i)
            for (std::size_t j = 0; j < pv.size() && ok; ++j)
                if (pv.leq[i][j] && !pu.leq[h[i]][h[j]]) ok = false;
        if (ok) return true;
    } while (std::next_permutation(h.begin(), h.end()));
    return false;
}

inline bool oracle_contracts(const Pomset& u, const Pomset& v) {
    Poset pu = oracle_poset(u), pv = oracle_poset(v);
    const std::size_t m = pv.size(), n = pu.size();
    if (n > m) return false;
    if (m == 0) return n == 0;
    if (n == 0) return false;
    std::vector<std::size_t> h(m, 0);
    while (true) {
        std::vector<bool> hit(n, false);
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
            hit[h[i]] = true;
            ok = pv.labels[i] == pu.labels[h[i]];
        }
        for (std::size_t i = 0; i < n && ok; ++i) ok = hit[i];
        for (std::size_t i = 0; i < m && ok; ++i)
            for (std::size_t j = 0; j < m && ok; ++j) {
                if (pv.leq[i][j] && !pu.leq[h[i]][h[j]]) ok = false;
                if (ok && pu.leq[h[i]][h[j]]) {
                    bool both = is_state(pv.labels[i]) && is_state(pv.labels[j]);
                    if (both) ok = pv.leq[i][j] || pv.leq[j][i];
                    else ok = pv.leq[i][j];
                }
            }
        if (ok) return true;
        std::size_t k = 0;
        while (k < m && h[k] == n - 1) h[k++] = 0;
        if (k == m) return false;
        ++h[k];
    }
}

// Least set containing the leaves and closed under binary composition, up to n nodes.
inline std::set<Pomset> oracle_sp(const std::vector<Label>& labels, std::size_t n) {
    std::set<Pomset> all{Pomset()};
    for (const auto& l : labels) all.insert(Pomset::leaf(l));
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Pomset> cur(all.begin(), all.end());
        for (const auto& a : cur)
            for (const auto& b : cur) {
                if (a.empty() || b.empty() || a.size() + b.size() > n) continue;
                changed |= all.insert(compose_seq(a, b)).second;
                changed |= all.insert(compose_par(a, b)).second;
            }
    }
    return all;
}

// ---------------------------------------------------------------- state and observation oracles

inline bool oracle_refines(const State& a, const State& b) {
    for (const auto& [v, n] : b.entries()) {
        bool found = false;
        for (const auto& [w, m] : a.entries())
            if (w == v) found = (m == n);
        if (!found) return false;
    }
    return true;
}

using StateSet = std::set<State>;

inline bool down_closed(const StateSet& y, const std::vector<State>& all) {
    for (const auto& b : y)
        for (const auto& a : all)
            if (oracle_refines(a, b) && !y.count(a)) return false;
    return true;
}

// The union of every down-closed set disjoint from y, by enumerating subsets.
inline StateSet oracle_pseudocomplement(const StateSet& y, const std::vector<State>& all) {
    StateSet out;
    const std::size_t n = all.size();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        StateSet z;
        bool disjoint = true;
        for (std::size_t i = 0; i < n; ++i)
            if ((m >> i) & 1u) {
                z.insert(all[i]);
                if (y.count(all[i])) disjoint = false;
            }
        if (disjoint && down_closed(z, all)) out.insert(z.begin(), z.end());
    }
    return out;
}

inline StateSet oracle_denote(const ObsTerm& p, const std::vector<State>& all) {
    switch (p.kind()) {
    case ObsTerm::Kind::Bot: return {};
    case ObsTerm::Kind::Top: return StateSet(all.begin(), all.end());
    case ObsTerm::Kind::Test: {
        StateSet out;
        for (const auto& s : all) {
            const Val* w = s.find(p.var());
            if (w && *w == p.val()) out.insert(s);
        }
        return out;
    }
    case ObsTerm::Kind::Not: return oracle_pseudocomplement(oracle_denote(p.lhs(), all), all);
    case ObsTerm::Kind::And: {
        StateSet a = oracle_denote(p.lhs(), all), b = oracle_denote(p.rhs(), all), out;
        for (const auto& s : a)
            if (b.count(s)) out.insert(s);
        return out;
    }
    case ObsTerm::Kind::Or: {
        StateSet a = oracle_denote(p.lhs(), all), b = oracle_denote(p.rhs(), all);
        a.insert(b.begin(), b.end());
        return a;
    }
    }
    return {};
}

inline StateSet as_set(const DownSet& d) {
    auto m = d.members();
    return StateSet(m.begin(), m.end());
}

// ---------------------------------------------------------------- path and property oracles

// Predecessor per the definition: the latest node strictly before i.
inline std::optional<std::size_t> oracle_pred(const Poset& p, std::size_t i) {
    for (std::size_t c = 0; c < p.size(); ++c) {
        if (c == i || !p.leq[c][i]) continue;
        bool latest = true;
        for (std::size_t d = 0; d < p.size(); ++d)
            if (d != i && p.leq[d][i] && !p.leq[d][c]) latest = false;
        if (latest) return c;
    }
    return std::nullopt;
}

inline std::optional<std::size_t> oracle_succ(const Poset& p, std::size_t i) {
    for (std::size_t c = 0; c < p.size(); ++c) {
        if (c == i || !p.leq[i][c]) continue;
        bool earliest = true;
        for (std::size_t d = 0; d < p.size(); ++d)
            if (d != i && p.leq[i][d] && !p.leq[c][d]) earliest = false;
        if (earliest) return c;
    }
    return std::nullopt;
}

// Does any path for v from `from` to `to` exist? Explores all alternating sequences.
inline bool oracle_path_exists(const Poset& p, const Var& v, std::size_t from, std::size_t to) {
    if (!p.leq[from][to] || !as_state(p.labels[from]).find(v)) return false;
    std::function<bool(std::size_t)> go = [&](std::size_t q) {
        if (q == to) return true;
        for (std::size_t a = 0; a < p.size(); ++a) {
            if (!is_action(p.labels[a]) || !p.leq[from][a] || !p.leq[a][to]) continue;
            if (oracle_pred(p, a) != std::optional<std::size_t>(q)) continue;
            auto s = oracle_succ(p, a);
            if (!s || !is_state(p.labels[*s])) continue;
            const Action& act = as_action(p.labels[a]);
            const State& sq = as_state(p.labels[q]);
            const State& ss = as_state(p.labels[*s]);
            std::optional<Val> want;
            if (act.target == v && act.kind == Action::Kind::Const) want = act.source;
            else if (act.target == v && sq.find(act.source)) want = *sq.find(act.source);
            else if (sq.find(v)) want = *sq.find(v);
            if (!want || !ss.find(v) || *ss.find(v) != *want) continue;
            if (go(*s)) return true;
        }
        return false;
    };
    return go(from);
}

// Property P by trying every 5-tuple of nodes.
inline bool oracle_property_p(const Pomset& u) {
    Poset p = oracle_poset(u);
    const std::size_t n = p.size();
    auto act_is = [&](std::size_t i, const Action& a) { return is_action(p.labels[i]) && as_action(p.labels[i]) == a; };
    auto targets = [&](std::size_t z, const char* v) { return is_action(p.labels[z]) && as_action(p.labels[z]).target == v; };
    for (std::size_t u1 = 0; u1 < n; ++u1)
        for (std::size_t u2 = 0; u2 < n; ++u2)
            for (std::size_t v1 = 0; v1 < n; ++v1)
                for (std::size_t v2 = 0; v2 < n; ++v2)
                    for (std::size_t w = 0; w < n; ++w) {
                        if (!act_is(u1, Action::assign("x", "1")) || !act_is(u2, Action::assign("y", "1")) ||
                            !act_is(v1, Action::copy("r0", "y")) || !act_is(v2, Action::copy("r1", "x")))
                            continue;
                        if (!is_state(p.labels[w])) continue;
                        const State& sw = as_state(p.labels[w]);
                        if (!sw.find("r0") || *sw.find("r0") != "0" || !sw.find("r1") || *sw.find("r1") != "0") continue;
                        if (!p.leq[u1][v1] || !p.leq[v1][w] || !p.leq[u2][v2] || !p.leq[v2][w]) continue;
                        bool ok = true;
                        for (std::size_t z = 0; z < n && ok; ++z) {
                            if (targets(z, "x") && !p.leq[z][u1]) ok = false;
                            if (targets(z, "y") && !p.leq[z][u2]) ok = false;
                            if (targets(z, "r0") && !p.leq[z][v1]) ok = false;
                            if (targets(z, "r1") && !p.leq[z][v2]) ok = false;
                        }
                        if (ok) return true;
                    }
    return false;
}

} // namespace testing
