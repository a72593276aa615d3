#include "pocka/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pocka/syntax.hpp"

namespace pocka {

using nlohmann::json;

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string node_text(const Label& l) {
    if (is_action(l)) return render_action(as_action(l));
    const State& s = as_state(l);
    if (s.empty()) return "{}";
    std::string out;
    for (const auto& [v, n] : s.entries()) {
        if (!out.empty()) out += ", ";
        out += v + "=" + render_value(n);
    }
    return out;
}

} // namespace

std::vector<std::string> sorted_texts(const PomsetLanguage& l) {
    std::vector<std::string> out;
    out.reserve(l.size());
    for (const auto& p : l) out.push_back(render_pomset(p));
    std::sort(out.begin(), out.end());
    return out;
}

json bounds_json(const Bounds& b) {
    return json{{"star_bound", b.star_bound},
                {"pad_bound", b.pad_bound},
                {"split_bound", b.split_bound},
                {"node_guard", b.node_guard}};
}

json language_json(const PomsetLanguage& l, const Bounds& b) {
    return json{{"schema", 1}, {"pomsets", sorted_texts(l)}, {"bounds", bounds_json(b)}};
}

json derivation_json(const Derivation& d) {
    json prem = json::array();
    for (const auto& p : d.premises) prem.push_back(derivation_json(p));
    return json{{"rule", d.rule}, {"result", render_pomset(d.result)}, {"premises", prem}};
}

json verdict_json(const Pomset& u, const GuardVerdict& v) {
    json nodes = json::array();
    if (!u.empty())
        for (const auto& l : leaf_labels(u)) nodes.push_back(render_label(l));
    json viol = json::array();
    for (const auto& x : v.violations) {
        json j{{"property", x.property}, {"nodes", x.nodes}};
        if (!x.detail.empty()) j["detail"] = x.detail;
        viol.push_back(j);
    }
    json out{{"schema", 1}, {"pomset", render_pomset(u)}, {"nodes", nodes}, {"guarded", v.guarded},
             {"violations", viol}};
    if (v.derivation) out["derivation"] = derivation_json(*v.derivation);
    return out;
}

json litmus_json(const LitmusReport& r, const Bounds& b) {
    json out{{"schema", 1},
             {"p_universal", r.p_universal},
             {"guarded_witnesses", sorted_texts(r.guarded_witnesses)},
             {"bounds", bounds_json(b)},
             {"unclosed_size", r.unclosed_size},
             {"closed_size", r.closed_size},
             {"completions_checked", r.completions_checked}};
    if (r.p_counterexample) out["p_counterexample"] = render_pomset(*r.p_counterexample);
    return out;
}

std::string render_dot(const Pomset& u, const std::vector<Violation>& violations, const std::string& name) {
    std::ostringstream o;
    o << "digraph \"" << dot_escape(name) << "\" {\n  rankdir=LR;\n";
    if (u.empty()) {
        o << "}\n";
        return o.str();
    }
    PosetView pv = poset_view(u);
    std::map<std::size_t, std::vector<std::string>> marks;
    for (const auto& v : violations)
        for (std::size_t i : v.nodes) {
            auto& m = marks[i];
            if (std::find(m.begin(), m.end(), v.property) == m.end()) m.push_back(v.property);
        }
    for (std::size_t i = 0; i < pv.size(); ++i) {
        o << "  n" << i << " [label=\"" << dot_escape(node_text(pv.labels[i])) << "\", shape="
          << (is_state(pv.labels[i]) ? "box" : "oval");
        if (auto it = marks.find(i); it != marks.end()) {
            std::string tags;
            for (const auto& t : it->second) tags += (tags.empty() ? "" : ",") + t;
            o << ", color=red, xlabel=\"" << tags << "\"";
        }
        o << "];\n";
    }
    for (std::size_t i = 0; i < pv.size(); ++i)
        for (std::size_t j = 0; j < pv.size(); ++j) {
            if (!pv.lt(i, j)) continue;
            bool cover = true;
            for (std::size_t k = 0; k < pv.size() && cover; ++k)
                if (pv.lt(i, k) && pv.lt(k, j)) cover = false;
            if (cover) o << "  n" << i << " -> n" << j << ";\n";
        }
    o << "}\n";
    return o.str();
}

} // namespace pocka
