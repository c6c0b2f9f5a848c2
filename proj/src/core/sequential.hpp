#pragma once

#include "core/dist.hpp"
#include "core/pairwise.hpp"
#include "core/rational.hpp"
#include "core/report.hpp"
#include "core/rng.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nonloc {

/// Hidden value attached to one observable in a pure state of the
/// sequential toy theory. Potential values are reproduced by measurement
/// but may flip sign when the same party's other observable is measured;
/// actual values are permanent.
enum class HiddenValue : std::uint8_t {
    Undetermined = 0,
    PotentialMinus = 1,
    PotentialPlus = 2,
    ActualMinus = 3,
    ActualPlus = 4,
};

inline bool is_undetermined(HiddenValue v) { return v == HiddenValue::Undetermined; }
inline bool is_potential(HiddenValue v) {
    return v == HiddenValue::PotentialMinus || v == HiddenValue::PotentialPlus;
}
inline bool is_actual(HiddenValue v) {
    return v == HiddenValue::ActualMinus || v == HiddenValue::ActualPlus;
}

/// The sign carried by a potential or actual value.
Outcome hidden_sign(HiddenValue v);

inline HiddenValue potential(Outcome o) {
    return o == Outcome::Plus ? HiddenValue::PotentialPlus
                              : HiddenValue::PotentialMinus;
}
inline HiddenValue actual(Outcome o) {
    return o == Outcome::Plus ? HiddenValue::ActualPlus
                              : HiddenValue::ActualMinus;
}

HiddenValue flip_potential(HiddenValue v);

/// Serialization token: 0, -, +, --, ++.
const char* hidden_value_token(HiddenValue v);

constexpr int NUM_PURE_STATES = 625;  // 5^4

/// A pure state: one hidden value per observable.
struct PureState {
    std::array<HiddenValue, 4> values{};  // indexed by ObservableId

    HiddenValue value(ObservableId id) const {
        return values[static_cast<int>(id)];
    }
    void set(ObservableId id, HiddenValue v) {
        values[static_cast<int>(id)] = v;
    }

    static PureState all_undetermined() { return PureState{}; }
    static PureState make(HiddenValue a1, HiddenValue a2, HiddenValue b1,
                          HiddenValue b2) {
        return PureState{{a1, a2, b1, b2}};
    }

    /// Base-5 index in [0, 625).
    int index() const;
    static PureState from_index(int index);

    /// "a1:+ a2:0 b1:-- b2:-" with tokens 0, +, -, ++, --.
    std::string to_string() const;
    static PureState parse(std::string_view text);

    friend bool operator==(const PureState& a, const PureState& b) {
        return a.values == b.values;
    }
    friend bool operator<(const PureState& a, const PureState& b) {
        return a.values < b.values;
    }
};

/// Mixed state: probabilistic ensemble of pure states.
using Ensemble = Dist<PureState>;

/// Joint distribution over (outcome, post-measurement state) for one
/// measurement on one pure state.
using Transition = Dist<std::pair<Outcome, PureState>>;

/// Transition-rule variants. Standard implements the theory; the other two
/// are deliberate corruptions used to prove the verifiers can detect a
/// broken rule set.
enum class MeasurementRules {
    Standard,
    /// Potential values behave like actual ones: the same-party partner
    /// flip never happens. Makes the theory signaling.
    PotentialAsActual,
    /// The measured observable keeps its old hidden value instead of
    /// becoming actual. Breaks nondisturbance.
    SkipActualization,
};

/// Rule 1: undetermined values give each outcome probability 1/2; potential
/// and actual values reproduce their sign with certainty.
Dist<Outcome> outcome_distribution(const PureState& s, ObservableId m);

/// Rules 2 and 3: the full (outcome, post-state) distribution. On the
/// all-undetermined state this is the fixed post-measurement table; on any
/// other state the measured value is actualized to the outcome and the
/// same-party partner, when potential, flips its sign with probability 1/2.
Transition measure(const PureState& s, ObservableId m,
                   MeasurementRules rules = MeasurementRules::Standard);

/// Law of total probability over the ensemble: outcome probabilities and
/// exactly conditioned posteriors.
std::map<Outcome, std::pair<Rational, Ensemble>> measure_ensemble(
    const Ensemble& e, ObservableId m,
    MeasurementRules rules = MeasurementRules::Standard);

/// Exact branch tree of a measurement sequence: each branch is the outcome
/// tuple together with the final pure state; identical branches are merged.
struct SequenceResult {
    std::vector<ObservableId> sequence;
    Dist<std::pair<std::vector<Outcome>, PureState>> branches;

    /// Marginal over the outcome tuples.
    Dist<std::vector<Outcome>> outcome_distribution() const;
};

SequenceResult run_sequence(const Ensemble& e0,
                            const std::vector<ObservableId>& seq,
                            MeasurementRules rules = MeasurementRules::Standard);

/// Single Monte Carlo rollout, deterministic given the stream state.
std::pair<std::vector<Outcome>, PureState> sample_sequence(
    const Ensemble& e0, const std::vector<ObservableId>& seq, SeedStream& stream,
    MeasurementRules rules = MeasurementRules::Standard);

/// Exhaustive nondisturbance check: every initial pure state, every
/// sequence of length 2..max_len over all four observables (sequences
/// without a repeated observable pass vacuously), every branch of nonzero
/// probability: repeated measurements of the same observable must agree.
Report check_nondisturbance(int max_len,
                            MeasurementRules rules = MeasurementRules::Standard);

/// Same check restricted to all sequences of exactly `length` from the
/// given initial states; used for spot checks beyond the exhaustive depth.
Report check_nondisturbance_at(int length, const std::vector<int>& state_indices,
                               MeasurementRules rules = MeasurementRules::Standard);

/// Exhaustive no-signaling check: for every initial pure state and both
/// role assignments, the receiving party's outcome-tuple distribution is
/// exactly equal across all interleavings with every other-party sequence
/// (including the empty one).
Report check_no_signaling(int max_receiver, int max_other,
                          MeasurementRules rules = MeasurementRules::Standard);

/// The four (A_i, B_j) outcome tables obtained by measuring the pair on the
/// all-undetermined state, in both time orders.
struct FreshCorrelations {
    /// Indexed by 2*(i-1) + (j-1); entries indexed by pair_cell(a_i, b_j).
    std::array<PairTable, 4> tables;
    std::array<bool, 4> orders_agree;
};

FreshCorrelations fresh_state_correlations();

/// Verifier wrapper: checks fresh_state_correlations against the PR-box
/// tables in both time orders and prints the four tables.
Report correlations_report();

}  // namespace nonloc
