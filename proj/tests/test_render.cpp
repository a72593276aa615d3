#include "doctest.h"
#include "support.hpp"

#include "pocka/render.hpp"
#include "pocka/syntax.hpp"

using namespace testing;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto i = s.find(needle); i != std::string::npos; i = s.find(needle, i + 1)) ++n;
    return n;
}

} // namespace

TEST_CASE("language json") {
    Bounds b;
    nlohmann::json e = language_json({}, b);
    CHECK(e["schema"] == 1);
    CHECK(e["pomsets"].is_array());
    CHECK(e["pomsets"].empty());
    CHECK(e["bounds"]["star_bound"] == b.star_bound);
    CHECK(e["bounds"]["pad_bound"] == b.pad_bound);
    CHECK(e["bounds"]["split_bound"] == b.split_bound);
    CHECK(e["bounds"]["node_guard"] == b.node_guard);

    PomsetLanguage l{seq({A("y", "1"), A("x", "1")}), A("x", "1")};
    nlohmann::json j = language_json(l, b);
    CHECK(j["pomsets"] == nlohmann::json::array({"[x:=1]", "[y:=1] ; [x:=1]"}));
}

TEST_CASE("verdict json") {
    Pomset ok = S(State{{"x", "0"}});
    nlohmann::json v = verdict_json(ok, check_guarded(ok));
    CHECK(v["schema"] == 1);
    CHECK(v["guarded"] == true);
    CHECK(v["violations"].empty());
    CHECK(v["nodes"].size() == 1);

    Pomset bad = A("x", "1");
    nlohmann::json w = verdict_json(bad, check_guarded(bad));
    CHECK(w["guarded"] == false);
    REQUIRE_FALSE(w["violations"].empty());
    CHECK(w["violations"][0]["property"].get<std::string>().front() == 'A');
    CHECK(parse_pomset(w["pomset"].get<std::string>()) == bad);
}

TEST_CASE("dot output") {
    std::string one = render_dot(S(State{{"x", "0"}}));
    CHECK(count(one, "shape=box") == 1);
    CHECK(count(one, "shape=oval") == 0);
    CHECK(count(one, "->") == 0);

    Pomset p = seq({S(State{{"x", "0"}}), par({A("x", "1"), A("y", "1")}), S(State{})});
    std::string d = render_dot(p);
    CHECK(count(d, "shape=box") == 2);
    CHECK(count(d, "shape=oval") == 2);
    CHECK(count(d, "->") == 4);
    CHECK(count(d, "color=red") == 0);

    // only covering edges are drawn
    CHECK(count(render_dot(seq({A("x", "1"), A("x", "0"), A("y", "1")})), "->") == 2);

    std::vector<Violation> vs{{"A5", {1, 2}, ""}, {"A7", {2}, ""}};
    std::string r = render_dot(p, vs);
    CHECK(count(r, "color=red") == 2);
    CHECK(count(r, "xlabel=\"A5,A7\"") == 1);
    CHECK(render_dot(Pomset()) == "digraph \"pomset\" {\n  rankdir=LR;\n}\n");
}
