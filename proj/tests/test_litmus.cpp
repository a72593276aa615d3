#include "doctest.h"
#include "litmus_samples.hpp"

#include "pocka/error.hpp"
#include "pocka/guarded.hpp"
#include "pocka/semantics.hpp"

using namespace testing;

namespace {

const char* kSpec = R"(vars: x, y, r0, r1
vals: 0, 1
pre: r0 == 0 & r1 == 0
thread0: x := 1 ; r0 := y
thread1: y := 1 ; r1 := x
post: !(r0 == 1 \/ r1 == 1)
)";

State st(std::initializer_list<std::pair<Var, Val>> es) { return State(es); }

// gamma1 . alpha . ((g2 . x:=1 . g3 . r0:=y . g4) || (g5 . y:=1 . g6 . r1:=x . g7)) . delta . gamma8
Pomset semantics_example() {
    Pomset t0 = seq({S(st({{"x", "0"}})), A("x", "1"), S(st({{"x", "1"}})), C("r0", "y"), S(st({{"y", "0"}}))});
    Pomset t1 = seq({S(st({})), A("y", "1"), S(st({{"x", "1"}, {"y", "1"}})), C("r1", "x"), S(st({{"r1", "1"}}))});
    return seq({S(st({{"x", "1"}})), S(st({{"r0", "0"}, {"r1", "0"}})), par({t0, t1}),
                S(st({{"r0", "0"}, {"r1", "0"}, {"x", "1"}})), S(st({{"y", "1"}}))});
}

Pomset tprime_witness() {
    State al{{"r0", "0"}, {"r1", "0"}};
    State be{{"r0", "0"}, {"r1", "0"}, {"x", "1"}, {"y", "1"}};
    State ga{{"r0", "1"}, {"r1", "1"}, {"x", "1"}, {"y", "1"}};
    return seq({S(al), par({A("x", "1"), A("y", "1")}), S(be), par({C("r0", "y"), C("r1", "x")}), S(ga)});
}

Pomset swap_witness() {
    State al{{"r0", "0"}, {"r1", "0"}, {"x", "0"}, {"y", "0"}};
    State be{{"r0", "0"}, {"r1", "0"}, {"x", "1"}, {"y", "0"}};
    State ga{{"r0", "0"}, {"r1", "0"}, {"x", "1"}, {"y", "1"}};
    return seq({S(al), C("r0", "y"), S(al), C("r1", "x"), S(al), A("x", "1"), S(be), A("y", "1"), S(ga)});
}

Bounds pad0() {
    Bounds b;
    b.pad_bound = 0;
    return b;
}

} // namespace

TEST_CASE("property P examples") {
    Pomset ex = semantics_example();
    CHECK(ex.size() == 14);
    PReport r = check_property_p(ex);
    CHECK(r.holds);
    REQUIRE(r.binding.has_value());
    PosetView pv = poset_view(ex);
    CHECK(as_action(pv.labels[r.binding->u1]) == Action::assign("x", "1"));
    CHECK(as_state(pv.labels[r.binding->w]) == st({{"r0", "0"}, {"r1", "0"}, {"x", "1"}}));
    CHECK(unclosed_member(ex, store_buffering(), litmus_universe(), Bounds{}));

    PReport one = check_property_p(S(st({{"x", "1"}})));
    CHECK_FALSE(one.holds);
    CHECK(one.violated_clause == 1);
    PReport sw = check_property_p(swap_witness());
    CHECK_FALSE(sw.holds);
    CHECK_FALSE(sw.binding.has_value());
}

TEST_CASE("property P ordering clause") {
    // every binding exists but a second x assignment comes after u1
    Pomset p = seq({par({seq({A("x", "1"), C("r0", "y")}), seq({A("y", "1"), C("r1", "x")})}),
                    S(st({{"r0", "0"}, {"r1", "0"}})), A("x", "0")});
    PReport r = check_property_p(p);
    CHECK_FALSE(r.holds);
    CHECK(r.violated_clause == 2);
}

TEST_CASE("property P against the tuple oracle") {
    Rng rng(51);
    std::vector<Label> labels{Action::assign("x", "1"), Action::assign("y", "1"), Action::copy("r0", "y"),
                              Action::copy("r1", "x"), Action::assign("x", "0"), st({{"r0", "0"}, {"r1", "0"}}),
                              st({{"r0", "1"}})};
    std::size_t holds = 0, fails = 0;
    SampleParams sparse{0.1, 0.5};
    for (int i = 0; i < 400; ++i) {
        // half plain random pomsets, half sampled members with extra nodes attached
        Pomset p = random_pomset(rng, labels, 5 + below(rng, 6));
        if (i % 2) {
            Pomset q = sample_unclosed(rng, sparse), extra = random_pomset(rng, labels, 1 + below(rng, 2));
            p = below(rng, 3) == 0 ? compose_par(q, extra) : below(rng, 2) ? compose_seq(q, extra) : compose_seq(extra, q);
        }
        PReport r = check_property_p(p);
        CHECK(r.holds == oracle_property_p(p));
        CHECK(r.holds == r.binding.has_value());
        CHECK(r.holds != r.violated_clause.has_value());
        (r.holds ? holds : fails) += 1;
    }
    CHECK(holds > 50);
    CHECK(fails > 50);
    for (int i = 0; i < 100; ++i) {
        Pomset p = sample_unclosed(rng);
        CHECK(check_property_p(p).holds);
        CHECK(oracle_property_p(p));
    }
}

TEST_CASE("sampled pomsets belong to the unclosed semantics") {
    Rng rng(52);
    Term t = store_buffering();
    for (int i = 0; i < 40; ++i) CHECK(unclosed_member(sample_unclosed(rng), t, litmus_universe(), Bounds{}));
}

TEST_CASE("P is preserved by subsumption and contraction") {
    Rng rng(53);
    for (int i = 0; i < 60; ++i) {
        Pair s = subsumption_pair(rng);
        CHECK(subsumes(s.lower, s.upper));
        CHECK(check_property_p(s.lower).holds);
        Pair c = contraction_pair(rng);
        CHECK(contracts_to(c.lower, c.upper));
        CHECK(check_property_p(c.lower).holds);
    }
}

TEST_CASE("P excludes guardedness") {
    Rng rng(54);
    for (int i = 0; i < 60; ++i) {
        Pair c = contraction_pair(rng);
        for (const auto& p : {c.lower, c.upper})
            if (check_property_p(p).holds) CHECK_FALSE(check_guarded(p).guarded);
    }
    CHECK_FALSE(check_guarded(semantics_example()).guarded);
}

TEST_CASE("parse_litmus and build_litmus_term") {
    LitmusSpec s = parse_litmus(kSpec);
    CHECK(s.universe == litmus_universe());
    CHECK(build_litmus_term(s) == store_buffering());
    CHECK(thread_actions(s.thread0) == std::vector<Action>{Action::assign("x", "1"), Action::copy("r0", "y")});

    LitmusSpec e = parse_litmus("pre: top\nthread0: 1\nthread1: 1\npost: top\n", litmus_universe());
    CHECK(build_litmus_term(e) == parse_term("top ; (1 || 1) ; top"));

    std::string pos = kSpec;
    pos.replace(pos.find("post:"), std::string::npos, "post: r0 == 1 \\/ r1 == 1\n");
    CHECK(build_litmus_term(parse_litmus(pos)) ==
          parse_term("(r0 == 0 & r1 == 0) ; ((x := 1 ; r0 := y) || (y := 1 ; r1 := x)) ; (r0 == 1 \\/ r1 == 1)"));
}

TEST_CASE("parse_litmus errors") {
    CHECK_THROWS_AS(parse_litmus("pre: top\nthread0: 1\nthread1: 1\n", litmus_universe()), UsageError);
    CHECK_THROWS_AS(parse_litmus("pre: top\nthread0: 1\nthread1: 1\npost: top\n"), UsageError);
    CHECK_THROWS_AS(parse_litmus("pre: top\nthread0: (x := 1)*\nthread1: 1\npost: top\n", litmus_universe()),
                    UsageError);
    CHECK_THROWS_AS(parse_litmus("pre: top\nthread0: x := 1 || y := 1\nthread1: 1\npost: top\n", litmus_universe()),
                    UsageError);
    CHECK_THROWS_AS(parse_litmus("pre: top\nthread0: z := 1\nthread1: 1\npost: top\n", litmus_universe()),
                    UsageError);
    CHECK_THROWS(parse_litmus("pre: top &\nthread0: 1\nthread1: 1\npost: top\n", litmus_universe()));
    CHECK_THROWS_AS(parse_litmus("vars: x\nvals: 0, 1\npre: top\nthread0: 1\nthread1: 1\npost: top\n"), UsageError);
}

TEST_CASE("swap rewrite") {
    CHECK(swappable(Action::copy("r0", "y"), Action::copy("r1", "x")));
    CHECK_FALSE(swappable(Action::assign("x", "1"), Action::assign("x", "2")));
    CHECK_FALSE(swappable(Action::assign("x", "1"), Action::copy("r1", "x")));
    CHECK(swappable(Action::assign("x", "1"), Action::assign("y", "1")));
    const Universe& u = litmus_universe();
    Pomset ab = seq({C("r0", "y"), C("r1", "x")});
    CHECK(swap_closure({ab}, u) == PomsetLanguage{ab, seq({C("r1", "x"), C("r0", "y")})});
    Pomset xx = seq({A("x", "1"), A("x", "0")});
    CHECK(swap_closure({xx}, u) == PomsetLanguage{xx});
    // state leaves between the two actions stay in place
    Pomset mid = seq({A("x", "1"), S(st({})), A("y", "1")});
    CHECK(swap_closure({mid}, u).count(seq({A("y", "1"), S(st({})), A("x", "1")})));
    Term v = swap_variants(parse_term("x := 1 ; r0 := y"));
    CHECK(sem_bka(v, Bounds{}) == PomsetLanguage{seq({A("x", "1"), C("r0", "y")}), seq({C("r0", "y"), A("x", "1")})});
}

TEST_CASE("run_litmus on store buffering") {
    LitmusSpec s = parse_litmus(kSpec);
    LitmusReport r = run_litmus(s, pad0());
    CHECK(r.p_universal);
    CHECK(r.guarded_witnesses.empty());
    CHECK(r.unclosed_size > 0);
    CHECK(r.closed_size >= r.unclosed_size);

    LitmusReport w = run_litmus(s, pad0(), true);
    CHECK(w.guarded_witnesses.count(swap_witness()));
    for (const auto& g : w.guarded_witnesses) CHECK(check_guarded(g).guarded);
}

TEST_CASE("t prime witness") {
    std::string pos = kSpec;
    pos.replace(pos.find("post:"), std::string::npos, "post: r0 == 1 \\/ r1 == 1\n");
    Term tp = build_litmus_term(parse_litmus(pos));
    Pomset w = tprime_witness();
    CHECK(closed_member(w, tp, litmus_universe(), Bounds{}));
    CHECK(check_guarded(w).guarded);
    CHECK_FALSE(closed_member(w, store_buffering(), litmus_universe(), Bounds{}));
}

TEST_CASE("run_litmus with an empty precondition") {
    LitmusSpec s = parse_litmus("pre: bot\nthread0: 1\nthread1: 1\npost: top\n", litmus_universe());
    LitmusReport r = run_litmus(s, pad0());
    CHECK(r.unclosed_size == 0);
    CHECK(r.p_universal);
    CHECK(r.guarded_witnesses.empty());
}

TEST_CASE("emptiness verdict is stable as padding grows") {
    // one variable, one thread: the final state must disagree with the assignment
    const Universe u({"r0"}, {"0", "1"});
    auto witnesses = [&](const char* text, std::size_t k) {
        Bounds b;
        b.pad_bound = k;
        std::size_t n = 0;
        for (const auto& p : close_both(sem_unclosed(parse_term(text), u, b), b)) n += check_guarded(p).guarded;
        return n;
    };
    for (std::size_t k = 0; k <= 1; ++k) {
        CHECK(witnesses("r0 == 0 ; r0 := 1 ; r0 == 0", k) == 0);
        CHECK(witnesses("r0 == 0 ; r0 := 1 ; r0 == 1", k) > 0);
    }
}
