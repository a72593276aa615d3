// Random members of the unclosed semantics of the store-buffering test, and pairs drawn
// from their subsumption and contraction downsets.
#pragma once

#include "support.hpp"

#include "pocka/litmus.hpp"
#include "pocka/syntax.hpp"

namespace testing {

inline const Universe& litmus_universe() {
    static const Universe u({"x", "y", "r0", "r1"}, {"0", "1"});
    return u;
}

inline Term store_buffering() {
    return parse_term("(r0 == 0 & r1 == 0) ; ((x := 1 ; r0 := y) || (y := 1 ; r1 := x)) ; !(r0 == 1 \\/ r1 == 1)");
}

struct SampleParams {
    double pad = 0.3;       // chance that a padding slot holds a state
    double duplicate = 0.5; // chance that a padding state copies its neighbour
};

// One padded slot sequence around a single letter.
inline std::vector<Pomset> padded(Rng& rng, const Pomset& letter, const SampleParams& sp) {
    std::bernoulli_distribution pad(sp.pad), dup(sp.duplicate);
    const auto& states = litmus_universe().states();
    auto filler = [&]() {
        if (is_state(letter.label()) && dup(rng)) return letter;
        return S(pick(rng, states));
    };
    std::vector<Pomset> out;
    if (pad(rng)) out.push_back(filler());
    out.push_back(letter);
    if (pad(rng)) out.push_back(filler());
    return out;
}

inline Pomset sample_unclosed(Rng& rng, const SampleParams& sp = {}) {
    std::vector<State> ends;
    for (const auto& s : litmus_universe().states()) {
        const Val* a = s.find("r0");
        const Val* b = s.find("r1");
        if (a && b && *a == "0" && *b == "0") ends.push_back(s);
    }
    auto chain = [&](std::vector<Pomset> letters) {
        std::vector<Pomset> parts;
        for (const auto& l : letters)
            for (auto& p : padded(rng, l, sp)) parts.push_back(std::move(p));
        return seq(parts);
    };
    Pomset t0 = chain({A("x", "1"), C("r0", "y")});
    Pomset t1 = chain({A("y", "1"), C("r1", "x")});
    return compose_seq(compose_seq(chain({S(pick(rng, ends))}), par({t0, t1})), chain({S(pick(rng, ends))}));
}

inline const Pomset& pick_from(Rng& rng, const PomsetLanguage& l) {
    auto it = l.begin();
    std::advance(it, static_cast<long>(below(rng, l.size())));
    return *it;
}

struct Pair {
    Pomset lower; // the more sequential or contracted one
    Pomset upper;
};

inline constexpr std::size_t kSampleGuard = 18;

// w subsumes u for a sampled u.
inline Pair subsumption_pair(Rng& rng, const SampleParams& sp = {}) {
    Pomset u = sample_unclosed(rng, sp);
    return {pick_from(rng, subsumption_downset(u, kSampleGuard)), u};
}

// v is a contraction of w, where w is itself subsumed by a sampled pomset.
inline Pair contraction_pair(Rng& rng, const SampleParams& sp = {}) {
    Pomset w = subsumption_pair(rng, sp).lower;
    return {pick_from(rng, contraction_downset(w, kSampleGuard)), w};
}

} // namespace testing
