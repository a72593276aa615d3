// pocka: command-line front end.
//
// Exit codes: 0 success, 1 negative verdict, 2 usage or parse error, 3 size guard hit.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pocka/error.hpp"
#include "pocka/guarded.hpp"
#include "pocka/litmus.hpp"
#include "pocka/obs.hpp"
#include "pocka/render.hpp"
#include "pocka/semantics.hpp"
#include "pocka/syntax.hpp"

using namespace pocka;

namespace {

struct Config {
    std::vector<std::string> vars;
    std::vector<std::string> vals;
    Bounds bounds;
    std::string format = "text";
};

std::optional<Universe> universe_of(const Config& c) {
    if (c.vars.empty() && c.vals.empty()) return std::nullopt;
    return Universe(c.vars, c.vals);
}

Universe need_universe(const Config& c) {
    auto u = universe_of(c);
    if (!u) throw UsageError("this command needs --vars and --vals");
    return *u;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

void no_dot(const Config& c, const char* cmd) {
    if (c.format == "dot") throw UsageError(std::string("dot output is not available for ") + cmd);
}

std::string state_list(const std::vector<State>& ss) {
    std::string out;
    for (const auto& s : ss) out += (out.empty() ? "" : " ") + render_state(s);
    return out;
}

std::vector<std::string> state_texts(const std::vector<State>& ss) {
    std::vector<std::string> out;
    for (const auto& s : ss) out.push_back(render_state(s));
    return out;
}

int cmd_oa_nf(const Config& c, const std::string& text) {
    no_dot(c, "oa-nf");
    Universe u = need_universe(c);
    auto nf = normal_form(parse_obs(text), u);
    std::vector<ObsTerm> terms;
    for (const auto& s : nf) terms.push_back(as_observation(s));
    std::string obs = render_obs(disj_all(terms));
    if (c.format == "json") {
        std::cout << nlohmann::json{{"schema", 1}, {"normal_form", state_texts(nf)}, {"observation", obs}}.dump(2)
                  << "\n";
    } else {
        std::cout << obs << "\n";
    }
    return 0;
}

int cmd_oa_equiv(const Config& c, const std::string& lhs, const std::string& rhs) {
    no_dot(c, "oa-equiv");
    Universe u = need_universe(c);
    DownSet a = denote(parse_obs(lhs), u), b = denote(parse_obs(rhs), u);
    std::vector<State> only_l, only_r;
    for (const auto& s : u.states()) {
        bool x = a.contains(s), y = b.contains(s);
        if (x && !y) only_l.push_back(s);
        if (y && !x) only_r.push_back(s);
    }
    bool eq = only_l.empty() && only_r.empty();
    if (c.format == "json") {
        std::cout << nlohmann::json{{"schema", 1},
                                    {"equivalent", eq},
                                    {"left_only", state_texts(only_l)},
                                    {"right_only", state_texts(only_r)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << (eq ? "equivalent" : "not equivalent") << "\n";
        if (!only_l.empty()) std::cout << "  only left:  " << state_list(only_l) << "\n";
        if (!only_r.empty()) std::cout << "  only right: " << state_list(only_r) << "\n";
    }
    return eq ? 0 : 1;
}

int cmd_sem(const Config& c, const std::string& text) {
    Universe u = need_universe(c);
    PomsetLanguage l = sem_pocka(parse_term(text), u, c.bounds);
    if (c.format == "json") {
        std::cout << language_json(l, c.bounds).dump(2) << "\n";
    } else if (c.format == "dot") {
        std::size_t i = 0;
        for (const auto& p : l) std::cout << render_dot(p, {}, "p" + std::to_string(i++));
    } else {
        const auto& b = c.bounds;
        std::cout << "# bounded semantics: " << l.size() << " pomsets (star_bound=" << b.star_bound
                  << ", pad_bound=" << b.pad_bound << ", node_guard=" << b.node_guard << ")\n";
        for (const auto& t : sorted_texts(l)) std::cout << t << "\n";
    }
    return 0;
}

int cmd_member(const Config& c, const std::string& pom, const std::string& term) {
    Universe u = need_universe(c);
    Pomset p = parse_pomset(pom);
    Term e = parse_term(term);
    bool m = closed_member(p, e, u, c.bounds);
    if (c.format == "json") {
        std::cout << nlohmann::json{{"schema", 1},
                                    {"member", m},
                                    {"pomset", render_pomset(p)},
                                    {"term", render_term(e)},
                                    {"bounds", bounds_json(c.bounds)}}
                         .dump(2)
                  << "\n";
    } else if (c.format == "dot") {
        std::cout << render_dot(p);
    } else {
        std::cout << (m ? "member" : "not a member") << "\n";
    }
    return m ? 0 : 1;
}

int cmd_guarded(const Config& c, const std::string& pom, bool derive) {
    Pomset p = parse_pomset(pom);
    GuardVerdict v = check_guarded(p);
    if (v.guarded && derive) v.derivation = derive_guarded(p);
    if (c.format == "json") {
        std::cout << verdict_json(p, v).dump(2) << "\n";
    } else if (c.format == "dot") {
        std::cout << render_dot(p, v.violations);
    } else {
        std::cout << (v.guarded ? "guarded" : "not guarded") << "\n";
        auto labels = p.empty() ? std::vector<Label>{} : leaf_labels(p);
        for (const auto& x : v.violations) {
            std::cout << "  " << x.property << ":";
            for (std::size_t i : x.nodes) std::cout << " " << i << "=" << render_label(labels[i]);
            if (!x.detail.empty()) std::cout << " (" << x.detail << ")";
            std::cout << "\n";
        }
        if (v.derivation) {
            std::function<void(const Derivation&, int)> pr = [&](const Derivation& d, int depth) {
                std::cout << std::string(2 * depth + 2, ' ') << d.rule << ": " << render_pomset(d.result) << "\n";
                for (const auto& q : d.premises) pr(q, depth + 1);
            };
            std::cout << "derivation:\n";
            pr(*v.derivation, 0);
        }
    }
    return v.guarded ? 0 : 1;
}

int cmd_litmus(const Config& c, const std::string& file, bool swap) {
    LitmusSpec spec = parse_litmus(read_file(file), universe_of(c));
    LitmusReport r = run_litmus(spec, c.bounds, swap);
    if (c.format == "json") {
        std::cout << litmus_json(r, c.bounds).dump(2) << "\n";
    } else if (c.format == "dot") {
        std::size_t i = 0;
        for (const auto& w : r.guarded_witnesses) std::cout << render_dot(w, {}, "witness" + std::to_string(i++));
    } else {
        std::cout << "p_universal: " << (r.p_universal ? "true" : "false") << "\n";
        if (r.guarded_witnesses.empty()) {
            std::cout << "guarded_witnesses: []\n";
        } else {
            std::cout << "guarded_witnesses:\n";
            for (const auto& t : sorted_texts(r.guarded_witnesses)) std::cout << "  - " << t << "\n";
        }
        std::cout << "# pad_bound=" << c.bounds.pad_bound << ", unclosed=" << r.unclosed_size
                  << ", closed=" << r.closed_size << ", completions checked=" << r.completions_checked << "\n";
    }
    return r.guarded_witnesses.empty() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Partially observable concurrent Kleene algebra toolkit"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a key = value file");

    Config c;
    app.add_option("--vars", c.vars, "Variables, comma separated")->delimiter(',');
    app.add_option("--vals", c.vals, "Values, comma separated")->delimiter(',');
    auto* pad = app.add_option("--pad-bound", c.bounds.pad_bound, "Maximum padding states per State* factor")
                    ->capture_default_str();
    app.add_option("--star-bound", c.bounds.star_bound, "Maximum unrolling of e*")->capture_default_str();
    app.add_option("--split-bound", c.bounds.split_bound, "Copies per state node in membership")
        ->capture_default_str();
    app.add_option("--node-guard", c.bounds.node_guard, "Largest pomset a bounded computation may build")
        ->capture_default_str();
    app.add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "dot"}))
        ->capture_default_str();

    std::string a1, a2;
    bool swap = false, derive = false;
    auto* nf = app.add_subcommand("oa-nf", "Normal form of an observation");
    nf->add_option("obs", a1)->required();
    auto* eq = app.add_subcommand("oa-equiv", "Decide equivalence of two observations");
    eq->add_option("lhs", a1)->required();
    eq->add_option("rhs", a2)->required();
    auto* sem = app.add_subcommand("sem", "Bounded closed semantics of a term");
    sem->add_option("term", a1)->required();
    auto* mem = app.add_subcommand("member", "Membership of a pomset in the closed semantics of a term");
    mem->add_option("pomset", a1)->required();
    mem->add_option("term", a2)->required();
    auto* gd = app.add_subcommand("guarded", "Check properties A1-A7 of a pomset");
    gd->add_option("pomset", a1)->required();
    gd->add_flag("--derive", derive, "Also search for a derivation from the guarded rules");
    auto* lit = app.add_subcommand("litmus", "Run the litmus pipeline on a spec file");
    lit->add_option("specfile", a1)->required();
    lit->add_flag("--swap", swap, "Add the assignment swap rewrite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*nf) return cmd_oa_nf(c, a1);
        if (*eq) return cmd_oa_equiv(c, a1, a2);
        if (*sem) return cmd_sem(c, a1);
        if (*mem) return cmd_member(c, a1, a2);
        if (*gd) return cmd_guarded(c, a1, derive);
        if (*lit) {
            if (pad->count() == 0) c.bounds.pad_bound = 0;
            return cmd_litmus(c, a1, swap);
        }
    } catch (const SizeError& e) {
        std::cerr << "size limit: " << e.what() << "\n";
        return 3;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
