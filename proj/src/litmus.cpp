#include "pocka/litmus.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "pocka/error.hpp"
#include "pocka/guarded.hpp"
#include "pocka/syntax.hpp"

namespace pocka {

namespace {

void collect_actions(const Term& t, std::vector<Action>& out) {
    switch (t.kind()) {
    case Term::Kind::One:
        return;
    case Term::Kind::Act:
        out.push_back(t.action());
        return;
    case Term::Kind::Dot:
        collect_actions(t.lhs(), out);
        collect_actions(t.rhs(), out);
        return;
    default:
        throw UsageError("litmus threads must be sequences of actions");
    }
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',' || c == ' ' || c == '\t') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

std::uint64_t action_mask(const PosetView& pv) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < pv.size(); ++i)
        if (is_action(pv.labels[i])) m |= std::uint64_t{1} << i;
    return m;
}

// Every rearrangement of a sequence reachable by adjacent swaps.
std::set<std::vector<Action>> reorderings(const std::vector<Action>& seq) {
    std::set<std::vector<Action>> seen{seq};
    std::vector<std::vector<Action>> todo{seq};
    while (!todo.empty()) {
        auto cur = todo.back();
        todo.pop_back();
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            if (!swappable(cur[i], cur[i + 1])) continue;
            auto nxt = cur;
            std::swap(nxt[i], nxt[i + 1]);
            if (seen.insert(nxt).second) todo.push_back(nxt);
        }
    }
    return seen;
}

// Applies every single swap inside p; results appended to out.
void swaps_in(const Pomset& p, std::vector<Pomset>& out) {
    if (p.kind() == Pomset::Kind::Leaf || p.empty()) return;
    const auto& cs = p.children();
    if (p.kind() == Pomset::Kind::Seq) {
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (cs[i].kind() != Pomset::Kind::Leaf || !is_action(cs[i].label())) continue;
            for (std::size_t j = i + 1; j < cs.size(); ++j) {
                if (cs[j].kind() != Pomset::Kind::Leaf) break;
                if (is_state(cs[j].label())) continue;
                if (swappable(as_action(cs[i].label()), as_action(cs[j].label()))) {
                    auto v = cs;
                    std::swap(v[i], v[j]);
                    out.push_back(Pomset::seq(std::move(v)));
                }
                break;
            }
        }
    }
    for (std::size_t i = 0; i < cs.size(); ++i) {
        std::vector<Pomset> inner;
        swaps_in(cs[i], inner);
        for (auto& q : inner) {
            auto v = cs;
            v[i] = q;
            out.push_back(p.kind() == Pomset::Kind::Seq ? Pomset::seq(std::move(v)) : Pomset::par(std::move(v)));
        }
    }
}

} // namespace

std::vector<Action> thread_actions(const Term& thread) {
    std::vector<Action> out;
    collect_actions(thread, out);
    return out;
}

void validate_litmus(const LitmusSpec& spec) {
    const Universe& u = spec.universe;
    for (const char* v : {"x", "y", "r0", "r1"})
        if (!u.has_var(v)) throw UsageError(std::string("litmus universe lacks variable ") + v);
    for (const char* n : {"0", "1"})
        if (!u.has_val(n)) throw UsageError(std::string("litmus universe lacks value ") + n);
    for (const Term* t : {&spec.thread0, &spec.thread1})
        for (const auto& a : thread_actions(*t))
            if (!u.contains(a)) throw UsageError("thread action " + render_action(a) + " is outside the universe");
    denote(spec.pre, u);
    denote(spec.post, u);
}

LitmusSpec parse_litmus(std::string_view text, const std::optional<Universe>& universe) {
    std::map<std::string, std::string> sec;
    std::string current;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::string t = trim(line);
        if (t.empty()) continue;
        auto colon = t.find(':');
        if (colon != std::string::npos && (colon + 1 == t.size() || t[colon + 1] != '=')) {
            std::string key = trim(t.substr(0, colon));
            if (key == "vars" || key == "vals" || key == "pre" || key == "thread0" || key == "thread1" ||
                key == "post") {
                if (sec.count(key)) throw UsageError("duplicate section " + key + " on line " + std::to_string(lineno));
                current = key;
                sec[key] = trim(t.substr(colon + 1));
                continue;
            }
        }
        if (current.empty()) throw UsageError("text outside a section on line " + std::to_string(lineno));
        sec[current] += " " + t;
    }
    for (const char* k : {"pre", "thread0", "thread1", "post"})
        if (!sec.count(k)) throw UsageError(std::string("litmus file lacks section ") + k + ":");

    std::optional<Universe> uni = universe;
    if (!uni) {
        if (!sec.count("vars") || !sec.count("vals"))
            throw UsageError("no universe: give vars:/vals: sections or --vars/--vals");
        uni = Universe(split_list(sec["vars"]), split_list(sec["vals"]));
    }
    LitmusSpec spec{*uni, parse_obs(sec["pre"]), parse_term(sec["thread0"]), parse_term(sec["thread1"]),
                    parse_obs(sec["post"])};
    validate_litmus(spec);
    return spec;
}

Term build_litmus_term(const LitmusSpec& spec) {
    validate_litmus(spec);
    return Term::dot(Term::dot(Term::obs(spec.pre), Term::par(spec.thread0, spec.thread1)), Term::obs(spec.post));
}

PReport check_property_p(const Pomset& u) {
    PReport r;
    if (u.empty()) {
        r.violated_clause = 1;
        return r;
    }
    PosetView pv = poset_view(u);
    const std::size_t n = pv.size();
    auto is_act = [&](std::size_t i, const char* v, const char* k, Action::Kind kind) {
        if (!is_action(pv.labels[i])) return false;
        const Action& a = as_action(pv.labels[i]);
        return a.kind == kind && a.target == v && a.source == k;
    };
    std::vector<std::size_t> U1, U2, V1, V2, W;
    for (std::size_t i = 0; i < n; ++i) {
        if (is_act(i, "x", "1", Action::Kind::Const)) U1.push_back(i);
        if (is_act(i, "y", "1", Action::Kind::Const)) U2.push_back(i);
        if (is_act(i, "r0", "y", Action::Kind::Copy)) V1.push_back(i);
        if (is_act(i, "r1", "x", Action::Kind::Copy)) V2.push_back(i);
        if (is_state(pv.labels[i])) {
            const State& s = as_state(pv.labels[i]);
            const Val* a = s.find("r0");
            const Val* b = s.find("r1");
            if (a && b && *a == "0" && *b == "0") W.push_back(i);
        }
    }
    auto below_all = [&](const char* var, std::size_t bound) {
        for (std::size_t z = 0; z < n; ++z)
            if (is_action(pv.labels[z]) && as_action(pv.labels[z]).target == var && !pv.leq(z, bound)) return false;
        return true;
    };
    bool clause1 = false;
    for (auto u1 : U1)
        for (auto v1 : V1) {
            if (!pv.leq(u1, v1)) continue;
            for (auto u2 : U2)
                for (auto v2 : V2) {
                    if (!pv.leq(u2, v2)) continue;
                    for (auto w : W) {
                        if (!pv.leq(v1, w) || !pv.leq(v2, w)) continue;
                        clause1 = true;
                        if (below_all("x", u1) && below_all("y", u2) && below_all("r0", v1) && below_all("r1", v2)) {
                            r.holds = true;
                            r.binding = PBinding{u1, u2, v1, v2, w};
                            return r;
                        }
                    }
                }
        }
    r.violated_clause = clause1 ? 2 : 1;
    return r;
}

bool swappable(const Action& a, const Action& b) {
    if (a.target == b.target) return false;
    for (const Action* c : {&a, &b})
        if (c->kind == Action::Kind::Copy && (c->source == a.target || c->source == b.target)) return false;
    return true;
}

PomsetLanguage swap_closure(const PomsetLanguage& l, const Universe& u, const Bounds& b) {
    for (const auto& p : l)
        for (const auto& lab : leaf_labels(p))
            if (is_action(lab) && !u.contains(as_action(lab)))
                throw UsageError("action " + render_action(as_action(lab)) + " is outside the universe");
    PomsetLanguage out = l;
    std::vector<Pomset> todo(l.begin(), l.end());
    std::size_t steps = 0;
    while (!todo.empty()) {
        Pomset p = todo.back();
        todo.pop_back();
        if (p.size() > b.node_guard)
            throw SizeError("swap closure met a pomset above the node guard " + std::to_string(b.node_guard));
        std::vector<Pomset> next;
        swaps_in(p, next);
        for (auto& q : next)
            if (out.insert(q).second) {
                if (++steps > b.max_iterations) throw SizeError("swap closure exceeded the iteration cap");
                todo.push_back(q);
            }
    }
    return out;
}

Term swap_variants(const Term& thread) {
    std::vector<Term> alts;
    for (const auto& seq : reorderings(thread_actions(thread))) {
        std::vector<Term> ts;
        for (const auto& a : seq) ts.push_back(Term::act(a));
        alts.push_back(dot_all(ts));
    }
    return sum_all(alts);
}

LitmusReport run_litmus(const LitmusSpec& spec, const Bounds& b, bool swap) {
    const Universe& u = spec.universe;
    Term t = build_litmus_term(spec);
    Term target = swap ? Term::dot(Term::dot(Term::obs(spec.pre),
                                             Term::par(swap_variants(spec.thread0), swap_variants(spec.thread1))),
                                   Term::obs(spec.post))
                       : t;

    LitmusReport r;
    PomsetLanguage unclosed;
    try {
        unclosed = sem_unclosed(t, u, b);
        if (swap) unclosed = swap_closure(unclosed, u, b);
    } catch (const SizeError& e) {
        throw SizeError(std::string(e.what()) + "; lower --pad-bound (0 is the default for litmus runs)");
    }
    r.unclosed_size = unclosed.size();
    for (const auto& p : unclosed)
        if (!check_property_p(p).holds) {
            r.p_universal = false;
            if (!r.p_counterexample) r.p_counterexample = p;
        }

    PomsetLanguage closed = close_both(unclosed, b);
    r.closed_size = closed.size();
    for (const auto& p : closed)
        if (check_guarded(p).guarded) r.guarded_witnesses.insert(p);

    // Action skeletons of the closure; every guarded member of the semantics completes one.
    PomsetLanguage skeletons;
    for (const auto& p : closed) skeletons.insert(restrict_to(p, action_mask(poset_view(p))));
    DownSet pre = denote(spec.pre, u), post = denote(spec.post, u);
    for (const auto& s : skeletons)
        for (const auto& alpha : pre.members())
            for (const auto& g : guarded_completions(s, alpha)) {
                if (r.guarded_witnesses.count(g)) continue;
                // A guarded member has its extrema as the only states below or above every action.
                const auto ps = g.kind() == Pomset::Kind::Seq ? g.children() : std::vector<Pomset>{g};
                if (!post.contains(as_state(ps.back().label()))) continue;
                if (g.size() > b.node_guard) continue;
                ++r.completions_checked;
                if (closed_member(g, target, u, b)) r.guarded_witnesses.insert(g);
            }
    return r;
}

} // namespace pocka
