#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/error.hpp"
#include "core/sequential.hpp"

using namespace nonloc;

namespace {

const HiddenValue UND = HiddenValue::Undetermined;
const HiddenValue POT_M = HiddenValue::PotentialMinus;
const HiddenValue POT_P = HiddenValue::PotentialPlus;
const HiddenValue ACT_M = HiddenValue::ActualMinus;
const HiddenValue ACT_P = HiddenValue::ActualPlus;

// the running example state: a1 potential +, a2 undetermined, b1 actual -,
// b2 potential -
PureState example_state() { return PureState::make(POT_P, UND, ACT_M, POT_M); }

Rational prob_of(const Transition& t, Outcome o, const PureState& s) {
    return t.probability({o, s});
}

}  // namespace

TEST_CASE("hidden value classification is total and mutually exclusive") {
    for (int v = 0; v < 5; ++v) {
        HiddenValue value = static_cast<HiddenValue>(v);
        int classes = (is_undetermined(value) ? 1 : 0) +
                      (is_potential(value) ? 1 : 0) + (is_actual(value) ? 1 : 0);
        CHECK(classes == 1);
    }
    CHECK(hidden_sign(POT_P) == Outcome::Plus);
    CHECK(hidden_sign(ACT_M) == Outcome::Minus);
    CHECK_THROWS_AS(hidden_sign(UND), Error);
    CHECK(flip_potential(POT_P) == POT_M);
    CHECK_THROWS_AS(flip_potential(ACT_P), Error);
}

TEST_CASE("exactly 625 pure states, indexable both ways") {
    for (int i = 0; i < NUM_PURE_STATES; ++i) {
        CHECK(PureState::from_index(i).index() == i);
    }
    CHECK_THROWS_AS(PureState::from_index(625), Error);
    CHECK(PureState::all_undetermined().index() == 0);
}

TEST_CASE("pure state serialization") {
    CHECK(example_state().to_string() == "a1:+ a2:0 b1:-- b2:-");
    CHECK(PureState::parse("a1:+ a2:0 b1:-- b2:-") == example_state());
    CHECK(PureState::parse("b2:- b1:-- a2:0 a1:+") == example_state());
    CHECK(PureState::parse("a1:++ a2:++ b1:++ b2:++") ==
          PureState::make(ACT_P, ACT_P, ACT_P, ACT_P));
    CHECK_THROWS_AS(PureState::parse("a1:+ a2:0 b1:--"), Error);
    CHECK_THROWS_AS(PureState::parse("a1:+ a1:+ b1:- b2:-"), Error);
    CHECK_THROWS_AS(PureState::parse("a1:* a2:0 b1:- b2:-"), Error);
    for (int i = 0; i < NUM_PURE_STATES; ++i) {
        PureState s = PureState::from_index(i);
        CHECK(PureState::parse(s.to_string()) == s);
    }
}

TEST_CASE("outcome distributions follow the hidden value") {
    PureState s = example_state();
    CHECK(outcome_distribution(s, ObservableId::A1) ==
          Dist<Outcome>::point(Outcome::Plus));
    auto a2 = outcome_distribution(s, ObservableId::A2);
    CHECK(a2.probability(Outcome::Minus) == Rational(1, 2));
    CHECK(a2.probability(Outcome::Plus) == Rational(1, 2));
    CHECK(outcome_distribution(s, ObservableId::B1) ==
          Dist<Outcome>::point(Outcome::Minus));
    CHECK(outcome_distribution(s, ObservableId::B2) ==
          Dist<Outcome>::point(Outcome::Minus));

    PureState fresh = PureState::all_undetermined();
    for (ObservableId m : ALL_OBSERVABLES) {
        auto d = outcome_distribution(fresh, m);
        CHECK(d.probability(Outcome::Minus) == Rational(1, 2));
        CHECK(d.probability(Outcome::Plus) == Rational(1, 2));
    }
}

TEST_CASE("measuring A1 on the example state: certain +1, partner untouched") {
    Transition t = measure(example_state(), ObservableId::A1);
    CHECK(t.size() == 1);
    CHECK(prob_of(t, Outcome::Plus,
                  PureState::make(ACT_P, UND, ACT_M, POT_M)) == Rational(1));
}

TEST_CASE("measuring A2 on the example state: random outcome, a1 may flip") {
    // The outcome actualizes with its own sign (+1 -> actual +); the
    // potential a1 flips with probability 1/2 either way.
    Transition t = measure(example_state(), ObservableId::A2);
    CHECK(t.size() == 4);
    CHECK(prob_of(t, Outcome::Plus,
                  PureState::make(POT_P, ACT_P, ACT_M, POT_M)) == Rational(1, 4));
    CHECK(prob_of(t, Outcome::Plus,
                  PureState::make(POT_M, ACT_P, ACT_M, POT_M)) == Rational(1, 4));
    CHECK(prob_of(t, Outcome::Minus,
                  PureState::make(POT_P, ACT_M, ACT_M, POT_M)) == Rational(1, 4));
    CHECK(prob_of(t, Outcome::Minus,
                  PureState::make(POT_M, ACT_M, ACT_M, POT_M)) == Rational(1, 4));
}

TEST_CASE("measuring B1 on the example state: certain -1, b2 may flip") {
    Transition t = measure(example_state(), ObservableId::B1);
    CHECK(t.size() == 2);
    CHECK(prob_of(t, Outcome::Minus,
                  PureState::make(POT_P, UND, ACT_M, POT_M)) == Rational(1, 2));
    CHECK(prob_of(t, Outcome::Minus,
                  PureState::make(POT_P, UND, ACT_M, POT_P)) == Rational(1, 2));
}

TEST_CASE("measuring B2 on the example state: certain -1, single post-state") {
    Transition t = measure(example_state(), ObservableId::B2);
    CHECK(t.size() == 1);
    CHECK(prob_of(t, Outcome::Minus,
                  PureState::make(POT_P, UND, ACT_M, ACT_M)) == Rational(1));
}

TEST_CASE("the all-undetermined state transitions by the fixed table") {
    PureState fresh = PureState::all_undetermined();

    Transition a1 = measure(fresh, ObservableId::A1);
    CHECK(prob_of(a1, Outcome::Minus,
                  PureState::make(ACT_M, UND, POT_M, POT_M)) == Rational(1, 2));
    CHECK(prob_of(a1, Outcome::Plus,
                  PureState::make(ACT_P, UND, POT_P, POT_P)) == Rational(1, 2));

    Transition a2 = measure(fresh, ObservableId::A2);
    CHECK(prob_of(a2, Outcome::Minus,
                  PureState::make(UND, ACT_M, POT_M, POT_P)) == Rational(1, 2));
    CHECK(prob_of(a2, Outcome::Plus,
                  PureState::make(UND, ACT_P, POT_P, POT_M)) == Rational(1, 2));

    Transition b1 = measure(fresh, ObservableId::B1);
    CHECK(prob_of(b1, Outcome::Minus,
                  PureState::make(POT_M, POT_M, ACT_M, UND)) == Rational(1, 2));
    CHECK(prob_of(b1, Outcome::Plus,
                  PureState::make(POT_P, POT_P, ACT_P, UND)) == Rational(1, 2));

    Transition b2 = measure(fresh, ObservableId::B2);
    CHECK(prob_of(b2, Outcome::Minus,
                  PureState::make(POT_M, POT_P, UND, ACT_M)) == Rational(1, 2));
    CHECK(prob_of(b2, Outcome::Plus,
                  PureState::make(POT_P, POT_M, UND, ACT_P)) == Rational(1, 2));
}

TEST_CASE("transition outcome marginal equals outcome_distribution, all cases") {
    for (int i = 0; i < NUM_PURE_STATES; ++i) {
        PureState s = PureState::from_index(i);
        for (ObservableId m : ALL_OBSERVABLES) {
            auto lifted = measure(s, m).map(
                [](const std::pair<Outcome, PureState>& branch) {
                    return branch.first;
                });
            CHECK(lifted == outcome_distribution(s, m));
        }
    }
}

TEST_CASE("actual values never change under any measurement") {
    for (int i = 0; i < NUM_PURE_STATES; ++i) {
        PureState s = PureState::from_index(i);
        if (s == PureState::all_undetermined()) continue;
        for (ObservableId m : ALL_OBSERVABLES) {
            Transition t = measure(s, m);
            for (const auto& [branch, p] : t.entries()) {
                for (ObservableId x : ALL_OBSERVABLES) {
                    if (is_actual(s.value(x))) {
                        CHECK(branch.second.value(x) == s.value(x));
                    }
                }
            }
        }
    }
}

TEST_CASE("actual values survive whole sequences in every branch") {
    // Single-step preservation over all 625 states (above) is the inductive
    // core; this drives full branch trees and checks the final states. No
    // rule ever writes a potential value outside the all-undetermined
    // special case, so a lost actual value cannot be restored midway.
    auto sequences_of = [](int length) {
        std::vector<std::vector<ObservableId>> out;
        std::size_t count = 1;
        for (int i = 0; i < length; ++i) count *= 4;
        for (std::size_t code = 0; code < count; ++code) {
            std::vector<ObservableId> seq(length);
            std::size_t c = code;
            for (int i = 0; i < length; ++i) {
                seq[i] = static_cast<ObservableId>(c % 4);
                c /= 4;
            }
            out.push_back(std::move(seq));
        }
        return out;
    };
    auto preserved = [](const PureState& initial, const PureState& final_state) {
        for (ObservableId x : ALL_OBSERVABLES) {
            if (is_actual(initial.value(x)) &&
                final_state.value(x) != initial.value(x)) {
                return false;
            }
        }
        return true;
    };

    auto depth3 = sequences_of(3);
    for (int i = 0; i < NUM_PURE_STATES; ++i) {
        PureState initial = PureState::from_index(i);
        Ensemble e = Ensemble::point(initial);
        bool ok = true;
        for (const auto& seq : depth3) {
            SequenceResult r = run_sequence(e, seq);
            for (const auto& [branch, p] : r.branches.entries()) {
                ok = ok && preserved(initial, branch.second);
            }
        }
        CHECK(ok);
    }

    auto depth5 = sequences_of(5);
    for (int i = 0; i < NUM_PURE_STATES; i += 125) {
        PureState initial = PureState::from_index(i);
        Ensemble e = Ensemble::point(initial);
        bool ok = true;
        for (const auto& seq : depth5) {
            SequenceResult r = run_sequence(e, seq);
            for (const auto& [branch, p] : r.branches.entries()) {
                ok = ok && preserved(initial, branch.second);
            }
        }
        CHECK(ok);
    }
}

TEST_CASE("measure_ensemble is the linear lift of measure") {
    // point mass reduces to measure
    Ensemble point = Ensemble::point(example_state());
    auto lifted = measure_ensemble(point, ObservableId::B1);
    CHECK(lifted.at(Outcome::Minus).first == Rational(1));
    CHECK(lifted.count(Outcome::Plus) == 0);

    // uniform mixture over the measured value conditions exactly
    PureState plus = PureState::make(POT_P, UND, UND, UND);
    PureState minus = PureState::make(POT_M, UND, UND, UND);
    Ensemble blend = mix<PureState>(
        {{Rational(1, 2), Ensemble::point(plus)},
         {Rational(1, 2), Ensemble::point(minus)}});
    auto split = measure_ensemble(blend, ObservableId::A1);
    CHECK(split.at(Outcome::Plus).first == Rational(1, 2));
    CHECK(split.at(Outcome::Minus).first == Rational(1, 2));
    CHECK(split.at(Outcome::Plus).second ==
          Ensemble::point(PureState::make(ACT_P, UND, UND, UND)));
    CHECK(split.at(Outcome::Minus).second ==
          Ensemble::point(PureState::make(ACT_M, UND, UND, UND)));

    // outcome probabilities always sum to 1
    Rational total;
    for (const auto& [o, entry] : split) total += entry.first;
    CHECK(total == Rational(1));
}

TEST_CASE("run_sequence: empty sequence is the identity") {
    Ensemble e = Ensemble::point(example_state());
    SequenceResult r = run_sequence(e, {});
    CHECK(r.branches.size() == 1);
    CHECK(r.branches.probability({{}, example_state()}) == Rational(1));
}

TEST_CASE("run_sequence: A1 then B1 from fresh shows the correlated block") {
    Ensemble fresh = Ensemble::point(PureState::all_undetermined());
    auto d = run_sequence(fresh, {ObservableId::A1, ObservableId::B1})
                 .outcome_distribution();
    CHECK(d.probability({Outcome::Plus, Outcome::Plus}) == Rational(1, 2));
    CHECK(d.probability({Outcome::Minus, Outcome::Minus}) == Rational(1, 2));
    CHECK(d.probability({Outcome::Plus, Outcome::Minus}) == Rational(0));
    CHECK(d.probability({Outcome::Minus, Outcome::Plus}) == Rational(0));
}

TEST_CASE("run_sequence: repeating a measurement repeats its outcome") {
    Ensemble fresh = Ensemble::point(PureState::all_undetermined());
    auto d = run_sequence(fresh, {ObservableId::A1, ObservableId::A1})
                 .outcome_distribution();
    CHECK(d.probability({Outcome::Plus, Outcome::Plus}) == Rational(1, 2));
    CHECK(d.probability({Outcome::Minus, Outcome::Minus}) == Rational(1, 2));
}

TEST_CASE("branch probabilities always sum to exactly 1") {
    Ensemble fresh = Ensemble::point(PureState::all_undetermined());
    std::vector<std::vector<ObservableId>> sequences = {
        {ObservableId::A1},
        {ObservableId::A1, ObservableId::B2, ObservableId::A2},
        {ObservableId::B1, ObservableId::B2, ObservableId::A1, ObservableId::A2},
        {ObservableId::A2, ObservableId::A2, ObservableId::B1, ObservableId::B1,
         ObservableId::B2},
    };
    for (const auto& seq : sequences) {
        CHECK(run_sequence(fresh, seq).branches.total() == Rational(1));
        CHECK(run_sequence(Ensemble::point(example_state()), seq)
                  .branches.total() == Rational(1));
    }
}

TEST_CASE("sample_sequence matches the deterministic branch when unique") {
    Ensemble e = Ensemble::point(
        PureState::make(ACT_P, ACT_M, ACT_P, ACT_M));
    SeedStream stream(11);
    auto [outcomes, final_state] = sample_sequence(
        e, {ObservableId::A1, ObservableId::A2, ObservableId::B2}, stream);
    CHECK(outcomes == std::vector<Outcome>{Outcome::Plus, Outcome::Minus,
                                           Outcome::Minus});
    CHECK(final_state == PureState::make(ACT_P, ACT_M, ACT_P, ACT_M));
}

TEST_CASE("sample_sequence is reproducible per seed") {
    Ensemble fresh = Ensemble::point(PureState::all_undetermined());
    std::vector<ObservableId> seq = {ObservableId::A1, ObservableId::B1,
                                     ObservableId::A2, ObservableId::B2};
    SeedStream s1(777), s2(777);
    for (int i = 0; i < 200; ++i) {
        CHECK(sample_sequence(fresh, seq, s1) == sample_sequence(fresh, seq, s2));
    }
}
