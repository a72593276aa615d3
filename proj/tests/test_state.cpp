#include "doctest.h"
#include "support.hpp"

#include "pocka/error.hpp"
#include "pocka/syntax.hpp"

using namespace testing;

TEST_CASE("refines") {
    CHECK(refines(State{{"x", "1"}, {"y", "0"}}, State{{"x", "1"}}));
    CHECK_FALSE(refines(State{{"x", "1"}}, State{{"x", "1"}, {"y", "0"}}));
    Universe u({"x", "y"}, {"0", "1"});
    for (const auto& a : u.states()) CHECK(refines(a, State{}));
}

TEST_CASE("merge") {
    CHECK(merge(State{{"x", "1"}}, State{{"y", "2"}}) == State{{"x", "1"}, {"y", "2"}});
    CHECK_FALSE(merge(State{{"x", "1"}}, State{{"x", "2"}}).has_value());
    CHECK(merge(State{{"x", "2"}}, State{{"x", "2"}, {"y", "3"}}) == State{{"x", "2"}, {"y", "3"}});
}

TEST_CASE("update") {
    CHECK(update(State{{"x", "0"}}, Action::assign("x", "1")) == State{{"x", "1"}});
    CHECK_FALSE(update(State{}, Action::copy("y", "x")).has_value());
    CHECK(update(State{{"x", "2"}, {"y", "3"}}, Action::copy("y", "x")) == State{{"x", "2"}, {"y", "2"}});
    // a constant assignment extends the domain
    CHECK(update(State{}, Action::assign("x", "1")) == State{{"x", "1"}});
}

TEST_CASE("all_states") {
    Universe u1({"x"}, {"0", "1"});
    CHECK(all_states(u1) == std::vector<State>{State{}, State{{"x", "0"}}, State{{"x", "1"}}});
    CHECK(all_states(Universe({"x", "y"}, {"0", "1"})).size() == 9);
    CHECK(all_states(Universe({"x"}, {"0"})) == std::vector<State>{State{}, State{{"x", "0"}}});
    CHECK(all_states(Universe({"x", "y", "r0", "r1"}, {"0", "1"})).size() == 81);
}

TEST_CASE("universe validation") {
    CHECK_THROWS_AS(Universe({}, {"0"}), UsageError);
    CHECK_THROWS_AS(Universe({"x"}, {}), UsageError);
    CHECK_THROWS_AS(Universe({"x", "x"}, {"0"}), UsageError);
    Universe u({"y", "x"}, {"1", "0"});
    CHECK(u.vars() == std::vector<Var>{"x", "y"});
    CHECK(u.contains(Action::copy("x", "y")));
    CHECK_FALSE(u.contains(Action::assign("z", "0")));
    CHECK_THROWS_AS(u.index_of(State{{"z", "0"}}), UsageError);
}

TEST_CASE("as_observation") {
    CHECK(as_observation(State{}) == ObsTerm::top());
    CHECK(as_observation(State{{"x", "1"}}) == ObsTerm::test("x", "1"));
    CHECK(render_obs(as_observation(State{{"x", "1"}, {"y", "0"}})) == "x == 1 & y == 0");
}

TEST_CASE("refines is a partial order") {
    Universe u({"x", "y"}, {"0", "1", "2"});
    const auto& all = u.states();
    for (const auto& a : all) {
        CHECK(refines(a, a));
        for (const auto& b : all) {
            CHECK(refines(a, b) == oracle_refines(a, b));
            if (refines(a, b) && refines(b, a)) CHECK(a == b);
            for (const auto& c : all)
                if (refines(a, b) && refines(b, c)) CHECK(refines(a, c));
        }
    }
}

TEST_CASE("merge is the least common refinement") {
    Universe u({"x", "y"}, {"0", "1"});
    const auto& all = u.states();
    for (const auto& a : all) {
        CHECK(merge(a, a) == a);
        for (const auto& b : all) {
            auto m = merge(a, b);
            CHECK(m == merge(b, a));
            bool common = false;
            for (const auto& c : all) {
                if (!refines(c, a) || !refines(c, b)) continue;
                common = true;
                REQUIRE(m.has_value());
                CHECK(refines(c, *m));
            }
            CHECK(common == m.has_value());
            if (m) CHECK((refines(*m, a) && refines(*m, b)));
        }
    }
}

TEST_CASE("refinement, denotation and obs_leq agree") {
    Universe u({"x", "y"}, {"0", "1"});
    for (const auto& a : u.states())
        for (const auto& b : u.states()) {
            bool r = refines(a, b);
            CHECK(denote(as_observation(b), u).contains(a) == r);
            CHECK(obs_leq(as_observation(a), as_observation(b), u) == r);
        }
}
