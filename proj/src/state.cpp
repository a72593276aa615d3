#include "pocka/state.hpp"

#include <algorithm>
#include <map>

#include "pocka/error.hpp"

namespace pocka {

namespace {

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (!alpha(s[0])) return false;
    return std::all_of(s.begin(), s.end(), [&](char c) { return alpha(c) || digit(c); });
}

bool is_value_token(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
               c == '-' || c == '.';
    });
}

constexpr std::size_t kMaxStates = std::size_t{1} << 22;

} // namespace

State::State(std::initializer_list<std::pair<Var, Val>> entries)
    : State(std::vector<std::pair<Var, Val>>(entries)) {}

State::State(std::vector<std::pair<Var, Val>> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    for (std::size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i].first == entries_[i - 1].first)
            throw UsageError("state assigns variable '" + entries_[i].first + "' twice");
}

const Val* State::find(const Var& v) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                               [](const auto& e, const Var& key) { return e.first < key; });
    if (it == entries_.end() || it->first != v) return nullptr;
    return &it->second;
}

std::vector<Var> State::domain() const {
    std::vector<Var> out;
    out.reserve(entries_.size());
    for (const auto& [v, n] : entries_) out.push_back(v);
    return out;
}

State State::with(const Var& v, const Val& n) const {
    State out = *this;
    auto it = std::lower_bound(out.entries_.begin(), out.entries_.end(), v,
                               [](const auto& e, const Var& key) { return e.first < key; });
    if (it != out.entries_.end() && it->first == v)
        it->second = n;
    else
        out.entries_.insert(it, {v, n});
    return out;
}

std::strong_ordering operator<=>(const State& a, const State& b) {
    const auto& x = a.entries_;
    const auto& y = b.entries_;
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i)
        if (auto c = x[i].first <=> y[i].first; c != 0) return c;
    if (auto c = x.size() <=> y.size(); c != 0) return c;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (auto c = x[i].second <=> y[i].second; c != 0) return c;
    return std::strong_ordering::equal;
}

struct Universe::Impl {
    std::vector<Var> vars;
    std::vector<Val> vals;
    std::vector<State> states;
    std::vector<std::uint32_t> position; // mixed-radix code -> index into states
};

namespace {

std::size_t state_code(const Universe& u, const State& s) {
    const auto& vars = u.vars();
    const auto& vals = u.vals();
    std::size_t code = 0;
    std::size_t j = 0;
    const auto& es = s.entries();
    for (const auto& v : vars) {
        code *= vals.size() + 1;
        if (j < es.size() && es[j].first == v) {
            auto it = std::lower_bound(vals.begin(), vals.end(), es[j].second);
            if (it == vals.end() || *it != es[j].second)
                throw UsageError("value '" + es[j].second + "' is not in the universe");
            code += static_cast<std::size_t>(it - vals.begin()) + 1;
            ++j;
        }
    }
    if (j != es.size()) throw UsageError("variable '" + es[j].first + "' is not in the universe");
    return code;
}

} // namespace

Universe::Universe(std::vector<Var> vars, std::vector<Val> vals) {
    auto impl = std::make_shared<Impl>();
    if (vars.empty() || vals.empty()) throw UsageError("universe needs at least one variable and one value");
    std::sort(vars.begin(), vars.end());
    std::sort(vals.begin(), vals.end());
    if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
        throw UsageError("duplicate variable in universe");
    if (std::adjacent_find(vals.begin(), vals.end()) != vals.end())
        throw UsageError("duplicate value in universe");
    for (const auto& v : vars)
        if (!is_identifier(v)) throw UsageError("invalid variable name '" + v + "'");
    for (const auto& n : vals)
        if (!is_value_token(n)) throw UsageError("invalid value token '" + n + "'");

    std::size_t count = 1;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        count *= vals.size() + 1;
        if (count > kMaxStates) throw SizeError("universe has too many states");
    }
    impl->vars = std::move(vars);
    impl->vals = std::move(vals);

    // Enumerate by mixed-radix code, then sort into canonical order.
    const std::size_t base = impl->vals.size() + 1;
    std::vector<std::pair<State, std::size_t>> tagged;
    tagged.reserve(count);
    for (std::size_t code = 0; code < count; ++code) {
        std::vector<std::pair<Var, Val>> es;
        std::size_t c = code;
        for (std::size_t i = impl->vars.size(); i-- > 0;) {
            std::size_t digit = c % base;
            c /= base;
            if (digit) es.emplace_back(impl->vars[i], impl->vals[digit - 1]);
        }
        tagged.emplace_back(State(std::move(es)), code);
    }
    std::sort(tagged.begin(), tagged.end());
    impl->position.assign(count, 0);
    impl->states.reserve(count);
    for (std::size_t i = 0; i < tagged.size(); ++i) {
        impl->position[tagged[i].second] = static_cast<std::uint32_t>(i);
        impl->states.push_back(std::move(tagged[i].first));
    }
    impl_ = std::move(impl);
}

const std::vector<Var>& Universe::vars() const { return impl_->vars; }
const std::vector<Val>& Universe::vals() const { return impl_->vals; }

bool Universe::has_var(const Var& v) const {
    return std::binary_search(impl_->vars.begin(), impl_->vars.end(), v);
}

bool Universe::has_val(const Val& n) const {
    return std::binary_search(impl_->vals.begin(), impl_->vals.end(), n);
}

bool Universe::contains(const State& s) const {
    for (const auto& [v, n] : s.entries())
        if (!has_var(v) || !has_val(n)) return false;
    return true;
}

bool Universe::contains(const Action& a) const {
    if (!has_var(a.target)) return false;
    return a.kind == Action::Kind::Const ? has_val(a.source) : has_var(a.source);
}

const std::vector<State>& Universe::states() const { return impl_->states; }
std::size_t Universe::state_count() const { return impl_->states.size(); }

std::size_t Universe::index_of(const State& s) const { return impl_->position[state_code(*this, s)]; }

std::vector<Action> Universe::actions() const {
    std::vector<Action> out;
    for (const auto& v : impl_->vars) {
        for (const auto& n : impl_->vals) out.push_back(Action::assign(v, n));
        for (const auto& w : impl_->vars) out.push_back(Action::copy(v, w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool operator==(const Universe& a, const Universe& b) {
    return a.impl_ == b.impl_ || (a.impl_->vars == b.impl_->vars && a.impl_->vals == b.impl_->vals);
}

bool refines(const State& alpha, const State& beta) {
    for (const auto& [v, n] : beta.entries()) {
        const Val* m = alpha.find(v);
        if (!m || *m != n) return false;
    }
    return true;
}

std::optional<State> merge(const State& alpha, const State& beta) {
    std::vector<std::pair<Var, Val>> out;
    const auto& x = alpha.entries();
    const auto& y = beta.entries();
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.push_back(y[j++]);
        } else {
            if (x[i].second != y[j].second) return std::nullopt;
            out.push_back(x[i]);
            ++i;
            ++j;
        }
    }
    return State(std::move(out));
}

std::optional<State> update(const State& alpha, const Action& a) {
    if (a.kind == Action::Kind::Const) return alpha.with(a.target, a.source);
    const Val* n = alpha.find(a.source);
    if (!n) return std::nullopt;
    return alpha.with(a.target, *n);
}

std::vector<State> all_states(const Universe& u) { return u.states(); }

} // namespace pocka
