#include "pocka/pomset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <unordered_map>

#include "pocka/error.hpp"

namespace pocka {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t hash_label(const Label& l) {
    std::hash<std::string> hs;
    std::size_t h = l.index();
    if (const auto* a = std::get_if<Action>(&l)) {
        h = mix(h, static_cast<std::size_t>(a->kind));
        h = mix(h, hs(a->target));
        h = mix(h, hs(a->source));
    } else {
        for (const auto& [v, n] : std::get<State>(l).entries()) {
            h = mix(h, hs(v));
            h = mix(h, hs(n));
        }
    }
    return h;
}

} // namespace

Pomset::Pomset() {
    static const std::shared_ptr<const Node> empty = std::make_shared<const Node>();
    node_ = empty;
}

Pomset Pomset::make(Kind k, Label l, std::vector<Pomset> children) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->hash = mix(0, static_cast<std::size_t>(k));
    if (k == Kind::Leaf) {
        n->size = 1;
        n->states = is_state(l) ? 1 : 0;
        n->hash = mix(n->hash, hash_label(l));
    }
    for (const auto& c : children) {
        n->size += c.size();
        n->states += c.state_count();
        n->hash = mix(n->hash, c.hash());
    }
    n->label = std::move(l);
    n->children = std::move(children);
    return Pomset(std::move(n));
}

Pomset Pomset::leaf(Label l) { return make(Kind::Leaf, std::move(l), {}); }

Pomset Pomset::seq(std::vector<Pomset> parts) {
    std::vector<Pomset> flat;
    for (auto& p : parts) {
        if (p.kind() == Kind::Seq)
            flat.insert(flat.end(), p.children().begin(), p.children().end());
        else if (!p.empty())
            flat.push_back(std::move(p));
    }
    if (flat.empty()) return Pomset();
    if (flat.size() == 1) return flat[0];
    return make(Kind::Seq, Action{}, std::move(flat));
}

Pomset Pomset::par(std::vector<Pomset> parts) {
    std::vector<Pomset> flat;
    for (auto& p : parts) {
        if (p.kind() == Kind::Par)
            flat.insert(flat.end(), p.children().begin(), p.children().end());
        else if (!p.empty())
            flat.push_back(std::move(p));
    }
    if (flat.empty()) return Pomset();
    if (flat.size() == 1) return flat[0];
    std::sort(flat.begin(), flat.end());
    return make(Kind::Par, Action{}, std::move(flat));
}

bool operator==(const Pomset& a, const Pomset& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->hash != b.node_->hash) return false;
    return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const Pomset& a, const Pomset& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    if (a.kind() == Pomset::Kind::Leaf) return a.label() <=> b.label();
    const auto& x = a.children();
    const auto& y = b.children();
    if (auto c = x.size() <=> y.size(); c != 0) return c;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (auto c = x[i] <=> y[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

Pomset compose_seq(const Pomset& u, const Pomset& v) { return Pomset::seq({u, v}); }
Pomset compose_par(const Pomset& u, const Pomset& v) { return Pomset::par({u, v}); }

PomsetLanguage lang_seq(const PomsetLanguage& a, const PomsetLanguage& b) {
    PomsetLanguage out;
    for (const auto& x : a)
        for (const auto& y : b) out.insert(compose_seq(x, y));
    return out;
}

PomsetLanguage lang_par(const PomsetLanguage& a, const PomsetLanguage& b) {
    PomsetLanguage out;
    for (const auto& x : a)
        for (const auto& y : b) out.insert(compose_par(x, y));
    return out;
}

namespace {

void collect_labels(const Pomset& p, std::vector<Label>& out) {
    if (p.kind() == Pomset::Kind::Leaf) {
        out.push_back(p.label());
        return;
    }
    for (const auto& c : p.children()) collect_labels(c, out);
}

Pomset restrict_rec(const Pomset& p, std::uint64_t mask, std::size_t& offset) {
    switch (p.kind()) {
    case Pomset::Kind::Empty:
        return p;
    case Pomset::Kind::Leaf: {
        bool keep = (mask >> offset) & 1u;
        ++offset;
        return keep ? p : Pomset();
    }
    case Pomset::Kind::Seq:
    case Pomset::Kind::Par: {
        std::vector<Pomset> parts;
        parts.reserve(p.children().size());
        for (const auto& c : p.children()) parts.push_back(restrict_rec(c, mask, offset));
        return p.kind() == Pomset::Kind::Seq ? Pomset::seq(std::move(parts)) : Pomset::par(std::move(parts));
    }
    }
    return Pomset();
}

// Fills labels and up-sets; returns the bitmask of the nodes of p.
std::uint64_t build_view(const Pomset& p, PosetView& view) {
    switch (p.kind()) {
    case Pomset::Kind::Empty:
        return 0;
    case Pomset::Kind::Leaf: {
        std::size_t i = view.labels.size();
        view.labels.push_back(p.label());
        view.up.push_back(std::uint64_t{1} << i);
        return std::uint64_t{1} << i;
    }
    case Pomset::Kind::Par: {
        std::uint64_t all = 0;
        for (const auto& c : p.children()) all |= build_view(c, view);
        return all;
    }
    case Pomset::Kind::Seq: {
        std::vector<std::uint64_t> masks;
        for (const auto& c : p.children()) masks.push_back(build_view(c, view));
        std::uint64_t later = 0;
        for (std::size_t k = masks.size(); k-- > 0;) {
            for (std::uint64_t m = masks[k]; m; m &= m - 1) view.up[std::countr_zero(m)] |= later;
            later |= masks[k];
        }
        return later;
    }
    }
    return 0;
}

} // namespace

std::vector<Label> leaf_labels(const Pomset& p) {
    std::vector<Label> out;
    collect_labels(p, out);
    return out;
}

Pomset restrict_to(const Pomset& p, std::uint64_t mask) {
    std::size_t offset = 0;
    return restrict_rec(p, mask, offset);
}

PosetView poset_view(const Pomset& p) {
    if (p.size() > 64) throw SizeError("pomset has more than 64 nodes");
    PosetView view;
    build_view(p, view);
    view.down.assign(view.size(), 0);
    for (std::size_t i = 0; i < view.size(); ++i)
        for (std::uint64_t m = view.up[i]; m; m &= m - 1) view.down[std::countr_zero(m)] |= std::uint64_t{1} << i;
    return view;
}

namespace {

struct BijectionSearch {
    const PosetView& u;
    const PosetView& v;
    std::vector<std::vector<std::size_t>> candidates;
    std::vector<std::size_t> h;
    std::uint64_t used = 0;

    bool run(std::size_t i) {
        if (i == v.size()) return true;
        for (std::size_t c : candidates[i]) {
            if ((used >> c) & 1u) continue;
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k)
                if (v.leq(k, i) && !u.leq(h[k], c)) ok = false;
            if (!ok) continue;
            h[i] = c;
            used |= std::uint64_t{1} << c;
            if (run(i + 1)) return true;
            used &= ~(std::uint64_t{1} << c);
        }
        return false;
    }
};

} // namespace

bool subsumes(const Pomset& u, const Pomset& v) {
    if (u.size() != v.size() || u.state_count() != v.state_count()) return false;
    if (u == v) return true;
    PosetView pu = poset_view(u);
    PosetView pv = poset_view(v);
    {
        auto a = pu.labels, b = pv.labels;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    BijectionSearch s{pu, pv, {}, std::vector<std::size_t>(pv.size()), 0};
    s.candidates.resize(pv.size());
    for (std::size_t i = 0; i < pv.size(); ++i) {
        int dv = std::popcount(pv.down[i]), uv = std::popcount(pv.up[i]);
        for (std::size_t j = 0; j < pu.size(); ++j)
            if (pu.labels[j] == pv.labels[i] && std::popcount(pu.down[j]) >= dv && std::popcount(pu.up[j]) >= uv)
                s.candidates[i].push_back(j);
        if (s.candidates[i].empty()) return false;
    }
    return s.run(0);
}

namespace {

struct SurjectionSearch {
    const PosetView& u;
    const PosetView& v;
    std::vector<std::vector<std::size_t>> candidates;
    std::vector<std::size_t> h;
    std::vector<std::size_t> hits;
    std::size_t covered = 0;

    bool compatible(std::size_t k, std::size_t i, std::size_t c) const {
        std::size_t hk = h[k];
        if (v.leq(k, i) && !u.leq(hk, c)) return false;
        if (v.leq(i, k) && !u.leq(c, hk)) return false;
        bool both_states = is_state(v.labels[k]) && is_state(v.labels[i]);
        if (u.leq(hk, c)) {
            if (both_states ? !v.comparable(k, i) : !v.leq(k, i)) return false;
        }
        if (u.leq(c, hk)) {
            if (both_states ? !v.comparable(k, i) : !v.leq(i, k)) return false;
        }
        return true;
    }

    bool run(std::size_t i) {
        if (u.size() - covered > v.size() - i) return false;
        if (i == v.size()) return covered == u.size();
        for (std::size_t c : candidates[i]) {
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k) ok = compatible(k, i, c);
            if (!ok) continue;
            h[i] = c;
            if (hits[c]++ == 0) ++covered;
            if (run(i + 1)) return true;
            if (--hits[c] == 0) --covered;
        }
        return false;
    }
};

} // namespace

bool contracts_to(const Pomset& u, const Pomset& v) {
    if (u.size() > v.size() || u.size() - u.state_count() != v.size() - v.state_count()) return false;
    if (u == v) return true;
    PosetView pu = poset_view(u);
    PosetView pv = poset_view(v);
    SurjectionSearch s{pu, pv, {}, std::vector<std::size_t>(pv.size()), std::vector<std::size_t>(pu.size()), 0};
    s.candidates.resize(pv.size());
    for (std::size_t i = 0; i < pv.size(); ++i) {
        for (std::size_t j = 0; j < pu.size(); ++j)
            if (pu.labels[j] == pv.labels[i]) s.candidates[i].push_back(j);
        if (s.candidates[i].empty()) return false;
    }
    return s.run(0);
}

PomsetContext PomsetContext::hole() { return PomsetContext(); }

PomsetContext PomsetContext::in_seq(Pomset before, PomsetContext inner, Pomset after) {
    PomsetContext c;
    c.kind_ = Kind::Seq;
    c.a_ = std::move(before);
    c.b_ = std::move(after);
    c.inner_ = std::make_shared<const PomsetContext>(std::move(inner));
    return c;
}

PomsetContext PomsetContext::in_par(Pomset sibling, PomsetContext inner) {
    PomsetContext c;
    c.kind_ = Kind::Par;
    c.a_ = std::move(sibling);
    c.inner_ = std::make_shared<const PomsetContext>(std::move(inner));
    return c;
}

Pomset plug(const PomsetContext& c, const Pomset& u) {
    switch (c.kind()) {
    case PomsetContext::Kind::Hole:
        return u;
    case PomsetContext::Kind::Seq:
        return Pomset::seq({c.before(), plug(c.inner(), u), c.after()});
    case PomsetContext::Kind::Par:
        return Pomset::par({c.sibling(), plug(c.inner(), u)});
    }
    return u;
}

namespace {

Pomset seq_range(const std::vector<Pomset>& cs, std::size_t lo, std::size_t hi) {
    return Pomset::seq(std::vector<Pomset>(cs.begin() + static_cast<std::ptrdiff_t>(lo),
                                           cs.begin() + static_cast<std::ptrdiff_t>(hi)));
}

// Sub-multisets of Par children, as (selected, rest), proper and non-empty, without repeats.
std::vector<std::pair<Pomset, Pomset>> proper_par_splits(const std::vector<Pomset>& cs) {
    if (cs.size() > 20) throw SizeError("parallel node too wide for context enumeration");
    std::set<std::pair<Pomset, Pomset>> seen;
    std::vector<std::pair<Pomset, Pomset>> out;
    const std::uint64_t full = (std::uint64_t{1} << cs.size()) - 1;
    for (std::uint64_t m = 1; m < full; ++m) {
        std::vector<Pomset> sel, rest;
        for (std::size_t i = 0; i < cs.size(); ++i) ((m >> i) & 1u ? sel : rest).push_back(cs[i]);
        std::pair<Pomset, Pomset> key{Pomset::par(std::move(sel)), Pomset::par(std::move(rest))};
        if (seen.insert(key).second) out.push_back(key);
    }
    return out;
}

void inner_decompositions(const Pomset& w, std::vector<std::pair<PomsetContext, Pomset>>& out) {
    const auto& cs = w.children();
    if (w.kind() == Pomset::Kind::Seq) {
        const std::size_t k = cs.size();
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j <= k; ++j) {
                if (i == 0 && j == k) continue;
                out.emplace_back(
                    PomsetContext::in_seq(seq_range(cs, 0, i), PomsetContext::hole(), seq_range(cs, j, k)),
                    seq_range(cs, i, j));
            }
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<std::pair<PomsetContext, Pomset>> sub;
            inner_decompositions(cs[i], sub);
            Pomset before = seq_range(cs, 0, i), after = seq_range(cs, i + 1, k);
            for (auto& [c, x] : sub) out.emplace_back(PomsetContext::in_seq(before, std::move(c), after), std::move(x));
        }
    } else if (w.kind() == Pomset::Kind::Par) {
        for (auto& [sel, rest] : proper_par_splits(cs)) out.emplace_back(PomsetContext::in_par(rest, PomsetContext::hole()), sel);
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (i > 0 && cs[i] == cs[i - 1]) continue;
            std::vector<Pomset> others(cs.begin(), cs.end());
            others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
            Pomset sib = Pomset::par(std::move(others));
            std::vector<std::pair<PomsetContext, Pomset>> sub;
            inner_decompositions(cs[i], sub);
            for (auto& [c, x] : sub) out.emplace_back(PomsetContext::in_par(sib, std::move(c)), std::move(x));
        }
    }
}

void inner_insertions(const Pomset& w, std::vector<PomsetContext>& out) {
    const auto& cs = w.children();
    const Pomset none;
    if (w.kind() == Pomset::Kind::Seq) {
        const std::size_t k = cs.size();
        for (std::size_t p = 1; p < k; ++p)
            out.push_back(PomsetContext::in_seq(seq_range(cs, 0, p), PomsetContext::hole(), seq_range(cs, p, k)));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j <= k; ++j) {
                if (i == 0 && j == k) continue;
                out.push_back(PomsetContext::in_seq(seq_range(cs, 0, i),
                                                    PomsetContext::in_par(seq_range(cs, i, j), PomsetContext::hole()),
                                                    seq_range(cs, j, k)));
            }
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<PomsetContext> sub;
            inner_insertions(cs[i], sub);
            Pomset before = seq_range(cs, 0, i), after = seq_range(cs, i + 1, k);
            for (auto& c : sub) out.push_back(PomsetContext::in_seq(before, std::move(c), after));
        }
    } else if (w.kind() == Pomset::Kind::Par) {
        for (auto& [sel, rest] : proper_par_splits(cs)) {
            out.push_back(PomsetContext::in_par(rest, PomsetContext::in_seq(sel, PomsetContext::hole(), none)));
            out.push_back(PomsetContext::in_par(rest, PomsetContext::in_seq(none, PomsetContext::hole(), sel)));
        }
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (i > 0 && cs[i] == cs[i - 1]) continue;
            std::vector<Pomset> others(cs.begin(), cs.end());
            others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
            Pomset sib = Pomset::par(std::move(others));
            std::vector<PomsetContext> sub;
            inner_insertions(cs[i], sub);
            for (auto& c : sub) out.push_back(PomsetContext::in_par(sib, std::move(c)));
        }
    }
}

} // namespace

std::vector<std::pair<Pomset, Pomset>> seq_cuts(const Pomset& w) {
    if (w.empty()) return {{w, w}};
    if (w.kind() != Pomset::Kind::Seq) return {{Pomset(), w}, {w, Pomset()}};
    const auto& cs = w.children();
    std::vector<std::pair<Pomset, Pomset>> out;
    for (std::size_t p = 0; p <= cs.size(); ++p) out.emplace_back(seq_range(cs, 0, p), seq_range(cs, p, cs.size()));
    return out;
}

std::vector<std::pair<Pomset, Pomset>> par_splits(const Pomset& w) {
    if (w.empty()) return {{w, w}};
    if (w.kind() != Pomset::Kind::Par) return {{Pomset(), w}, {w, Pomset()}};
    auto out = proper_par_splits(w.children());
    out.emplace_back(Pomset(), w);
    out.emplace_back(w, Pomset());
    return out;
}

std::vector<std::pair<PomsetContext, Pomset>> decompositions(const Pomset& w) {
    std::vector<std::pair<PomsetContext, Pomset>> out;
    if (w.empty()) return out;
    out.emplace_back(PomsetContext::hole(), w);
    inner_decompositions(w, out);
    return out;
}

std::vector<PomsetContext> insertion_contexts(const Pomset& w) {
    std::vector<PomsetContext> out;
    if (w.empty()) {
        out.push_back(PomsetContext::hole());
        return out;
    }
    const Pomset none;
    out.push_back(PomsetContext::in_seq(w, PomsetContext::hole(), none));
    out.push_back(PomsetContext::in_seq(none, PomsetContext::hole(), w));
    out.push_back(PomsetContext::in_par(w, PomsetContext::hole()));
    inner_insertions(w, out);
    return out;
}

namespace {

// All sp-orders on a node subset that extend the order of a fixed view.
class ExtensionGenerator {
public:
    explicit ExtensionGenerator(const PosetView& v) : v_(v) {}

    const std::vector<Pomset>& generate(std::uint64_t mask) {
        if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
        std::set<Pomset> out;
        if (std::popcount(mask) == 1) {
            out.insert(Pomset::leaf(v_.labels[std::countr_zero(mask)]));
        } else {
            // Sequential: the first block is down-closed in mask and is not itself sequential.
            for (std::uint64_t a = (mask - 1) & mask; a; a = (a - 1) & mask) {
                if (!down_closed(a, mask)) continue;
                const auto first = generate(a);
                const auto& rest = generate(mask & ~a);
                for (const auto& x : first) {
                    if (x.kind() == Pomset::Kind::Seq) continue;
                    for (const auto& y : rest) out.insert(compose_seq(x, y));
                }
            }
            // Parallel: the block holding the lowest node is a union of comparability components.
            std::uint64_t low = mask & (~mask + 1);
            for (std::uint64_t a = mask; a; a = (a - 1) & mask) {
                if (!(a & low) || a == mask || !independent(a, mask & ~a)) continue;
                const auto first = generate(a);
                const auto& rest = generate(mask & ~a);
                for (const auto& x : first) {
                    if (x.kind() == Pomset::Kind::Par) continue;
                    for (const auto& y : rest) out.insert(compose_par(x, y));
                }
            }
        }
        return memo_[mask] = std::vector<Pomset>(out.begin(), out.end());
    }

private:
    bool down_closed(std::uint64_t a, std::uint64_t mask) const {
        for (std::uint64_t m = a; m; m &= m - 1)
            if ((v_.down[std::countr_zero(m)] & mask) & ~a) return false;
        return true;
    }
    bool independent(std::uint64_t a, std::uint64_t b) const {
        for (std::uint64_t m = a; m; m &= m - 1) {
            std::size_t i = std::countr_zero(m);
            if ((v_.up[i] | v_.down[i]) & b) return false;
        }
        return true;
    }

    const PosetView& v_;
    std::unordered_map<std::uint64_t, std::vector<Pomset>> memo_;
};

std::vector<Pomset> shrink_runs(const Pomset& p) {
    switch (p.kind()) {
    case Pomset::Kind::Empty:
    case Pomset::Kind::Leaf:
        return {p};
    case Pomset::Kind::Par: {
        std::vector<Pomset> acc{Pomset()};
        for (const auto& c : p.children()) {
            std::vector<Pomset> next;
            for (const auto& x : shrink_runs(c))
                for (const auto& a : acc) next.push_back(compose_par(a, x));
            acc = std::move(next);
        }
        return acc;
    }
    case Pomset::Kind::Seq: {
        const auto& cs = p.children();
        std::vector<Pomset> acc{Pomset()};
        for (std::size_t i = 0; i < cs.size();) {
            std::vector<Pomset> options;
            std::size_t j = i + 1;
            if (cs[i].kind() == Pomset::Kind::Leaf && is_state(cs[i].label())) {
                while (j < cs.size() && cs[j] == cs[i]) ++j;
                for (std::size_t len = 1; len <= j - i; ++len)
                    options.push_back(Pomset::seq(std::vector<Pomset>(len, cs[i])));
            } else {
                options = shrink_runs(cs[i]);
            }
            std::vector<Pomset> next;
            for (const auto& a : acc)
                for (const auto& x : options) next.push_back(compose_seq(a, x));
            acc = std::move(next);
            i = j;
        }
        return acc;
    }
    }
    return {p};
}

void check_guard(const Pomset& v, std::size_t guard) {
    if (v.size() > guard)
        throw SizeError("pomset with " + std::to_string(v.size()) + " nodes exceeds node guard " +
                        std::to_string(guard));
}

} // namespace

PomsetLanguage subsumption_downset(const Pomset& v, std::size_t node_guard) {
    check_guard(v, node_guard);
    if (v.empty()) return {v};
    PosetView view = poset_view(v);
    ExtensionGenerator gen(view);
    const std::uint64_t all = view.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << view.size()) - 1;
    const auto& res = gen.generate(all);
    return PomsetLanguage(res.begin(), res.end());
}

PomsetLanguage contraction_downset(const Pomset& v, std::size_t node_guard) {
    check_guard(v, node_guard);
    auto res = shrink_runs(v);
    return PomsetLanguage(res.begin(), res.end());
}

std::vector<Label> universe_labels(const Universe& u) {
    std::vector<Label> out;
    for (const auto& a : u.actions()) out.emplace_back(a);
    for (const auto& s : u.states()) out.emplace_back(s);
    return out;
}

PomsetLanguage enumerate_sp(const std::vector<Label>& labels, std::size_t n, std::size_t node_guard) {
    if (n > node_guard) throw SizeError("enumerate_sp size exceeds node guard");
    std::vector<std::vector<Pomset>> all(n + 1), nonseq(n + 1), nonpar(n + 1);
    all[0].push_back(Pomset());
    if (n >= 1) {
        std::set<Label> distinct(labels.begin(), labels.end());
        for (const auto& l : distinct) {
            Pomset p = Pomset::leaf(l);
            all[1].push_back(p);
            nonseq[1].push_back(p);
            nonpar[1].push_back(p);
        }
    }
    for (std::size_t k = 2; k <= n; ++k) {
        for (std::size_t i = 1; i < k; ++i)
            for (const auto& x : nonseq[i])
                for (const auto& y : all[k - i]) {
                    Pomset p = compose_seq(x, y);
                    all[k].push_back(p);
                    nonpar[k].push_back(p);
                }
        for (std::size_t i = 1; i < k; ++i)
            for (const auto& x : nonpar[i])
                for (const auto& y : all[k - i]) {
                    const Pomset& least = y.kind() == Pomset::Kind::Par ? y.children().front() : y;
                    if (least < x) continue;
                    Pomset p = compose_par(x, y);
                    all[k].push_back(p);
                    nonseq[k].push_back(p);
                }
    }
    PomsetLanguage out;
    for (auto& bucket : all) out.insert(bucket.begin(), bucket.end());
    return out;
}

PomsetLanguage enumerate_sp(const Universe& u, std::size_t n, std::size_t node_guard) {
    return enumerate_sp(universe_labels(u), n, node_guard);
}

} // namespace pocka
