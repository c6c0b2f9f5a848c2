#pragma once

#include "core/dist.hpp"
#include "core/rational.hpp"
#include "core/report.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace nonloc {

/// The four basic +-1-valued observables; A1, A2 belong to Alice and
/// B1, B2 to Bob. Canonical order A1 < A2 < B1 < B2.
enum class ObservableId : int { A1 = 0, A2 = 1, B1 = 2, B2 = 3 };

enum class Party { Alice, Bob };

inline Party party(ObservableId id) {
    return static_cast<int>(id) < 2 ? Party::Alice : Party::Bob;
}

const char* observable_name(ObservableId id);
std::optional<ObservableId> observable_from_name(std::string_view name);

constexpr std::array<ObservableId, 4> ALL_OBSERVABLES = {
    ObservableId::A1, ObservableId::A2, ObservableId::B1, ObservableId::B2};

/// A +-1 measurement outcome.
enum class Outcome : int { Minus = -1, Plus = 1 };

inline int outcome_value(Outcome o) { return static_cast<int>(o); }
inline int outcome_bit(Outcome o) { return o == Outcome::Plus ? 1 : 0; }
inline Outcome outcome_from_bit(int bit) {
    return bit ? Outcome::Plus : Outcome::Minus;
}
inline Outcome flip(Outcome o) {
    return o == Outcome::Plus ? Outcome::Minus : Outcome::Plus;
}

constexpr std::array<Outcome, 2> BOTH_OUTCOMES = {Outcome::Minus, Outcome::Plus};

using OutcomePair = std::pair<Outcome, Outcome>;

/// Unordered pair of distinct observables, held in canonical order.
/// Exactly six exist; index() enumerates them as
/// (A1,A2), (A1,B1), (A1,B2), (A2,B1), (A2,B2), (B1,B2).
struct PairKey {
    ObservableId first;
    ObservableId second;

    PairKey(ObservableId a, ObservableId b);

    int index() const;
    static PairKey from_index(int index);

    bool contains(ObservableId id) const { return id == first || id == second; }
    ObservableId other(ObservableId id) const { return id == first ? second : first; }

    /// Cross-party pair (one Alice observable, one Bob observable).
    bool crosses_parties() const { return party(first) != party(second); }

    std::string name() const;

    friend bool operator==(const PairKey& a, const PairKey& b) {
        return a.first == b.first && a.second == b.second;
    }
};

constexpr int NUM_PAIRS = 6;

/// Joint outcome weights for one observable pair, indexed by
/// 2*bit(first outcome) + bit(second outcome). Raw rationals rather than a
/// Dist so that candidate states with broken normalization can be held and
/// reported on.
using PairTable = std::array<Rational, 4>;

inline int pair_cell(Outcome x, Outcome y) {
    return 2 * outcome_bit(x) + outcome_bit(y);
}

/// A state of the pairwise toy theory: one joint outcome table per
/// observable pair. Valid states have every table normalized and all
/// single-observable marginals consistent across pairs (validate()).
struct PairwiseState {
    std::array<PairTable, NUM_PAIRS> tables;

    const PairTable& table(const PairKey& key) const { return tables[key.index()]; }
    PairTable& table(const PairKey& key) { return tables[key.index()]; }

    Rational probability(const PairKey& key, Outcome x, Outcome y) const {
        return tables[key.index()][pair_cell(x, y)];
    }

    friend bool operator==(const PairwiseState& a, const PairwiseState& b) {
        return a.tables == b.tables;
    }
};

/// One line of validate() output.
struct ValidationCheck {
    enum class Kind { Normalization, LocalMarginal, NoSignaling };
    Kind kind;
    bool passed;
    std::string description;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_passed() const;
    Report to_report() const;
};

/// Checks every table for nonnegativity and exact normalization, and every
/// (observable, pair, pair) marginal equality. Failures are report entries,
/// never exceptions. Marginal equalities where both counterpart observables
/// belong to the opposite party are flagged as no-signaling equations.
ValidationReport validate(const PairwiseState& s);

/// The common single-observable marginal. Throws InconsistentState if the
/// containing pairs disagree (or a table is not normalized).
Dist<Outcome> marginal(const PairwiseState& s, ObservableId x);

/// E(X,Y) = sum over outcome pairs of (product of outcomes) * probability.
Rational correlator(const PairwiseState& s, const PairKey& key);

/// Coefficient signs for (E(A1,B1), E(A1,B2), E(A2,B1), E(A2,B2)).
using SignPattern = std::array<int, 4>;

struct ChshResult {
    Rational value;        // max |S| over the eight odd-minus sign patterns
    SignPattern pattern;   // a pattern achieving it
    std::array<Rational, 4> correlators;  // E(A1,B1), E(A1,B2), E(A2,B1), E(A2,B2)
};

/// Evaluates S = +-E(A1,B1) +- E(A1,B2) +- E(A2,B1) +- E(A2,B2) over the
/// eight patterns with exactly one or exactly three minus signs and returns
/// the maximum |S| with the first achieving pattern.
ChshResult chsh(const PairwiseState& s);

/// Uniform joint table over the four outcome pairs.
PairTable uniform_pair_table();

/// The PR-box cross-party table for (A_i, B_j): outcomes perfectly
/// correlated except for (A2, B2), which is perfectly anticorrelated;
/// each consistent pair has probability 1/2.
PairTable pr_box_cross_table(int alice_index, int bob_index);

/// The PR-box state: the four cross-party tables are the PR-box tables and
/// the two local joints default to the uniform distribution over the four
/// outcome pairs. Any other local joints with uniform marginals may be
/// supplied instead.
PairwiseState pr_box_state(
    const std::optional<PairTable>& alice_local = std::nullopt,
    const std::optional<PairTable>& bob_local = std::nullopt);

/// All four single-observable values deterministic: a product state with
/// point-mass marginals given by the assignment.
PairwiseState deterministic_state(const std::array<Outcome, 4>& assignment);

/// Product state of independent single-observable marginals.
PairwiseState product_state(const std::array<Dist<Outcome>, 4>& marginals);

/// The party's local joint relabeled over the four symbols
/// 2*bit(first) + bit(second) in {0,1,2,3}; its two marginals under this
/// injection equal the party's single-observable marginals.
Dist<int> joint_observable(const PairwiseState& s, Party p);

/// Tablewise convex combination; weights must sum to exactly 1.
PairwiseState mix_states(
    const std::vector<std::pair<Rational, PairwiseState>>& components);

/// A deterministic global assignment of outcomes to all four observables,
/// i.e. a vertex of the local polytope. 16 exist.
struct Assignment {
    std::array<Outcome, 4> values;  // indexed by ObservableId

    Outcome value(ObservableId id) const { return values[static_cast<int>(id)]; }
    int index() const;
    static Assignment from_index(int index);
    std::string to_string() const;

    friend bool operator==(const Assignment& a, const Assignment& b) {
        return a.values == b.values;
    }
    friend bool operator<(const Assignment& a, const Assignment& b) {
        return a.index() < b.index();
    }
};

struct ChshWitness {
    Rational value;
    SignPattern pattern;
};

/// Outcome of the exact local-hidden-variable feasibility decision.
struct LhvVerdict {
    bool feasible;
    /// Distribution over the 16 deterministic assignments whose pairwise
    /// pushforwards reproduce all six tables exactly; present iff feasible.
    std::optional<Dist<Assignment>> witness;
    /// A CHSH violation certifying infeasibility, when one exists.
    std::optional<ChshWitness> chsh_witness;
    /// Set when the state is infeasible but no CHSH pattern exceeds 2.
    bool no_chsh_witness = false;
};

/// Pushes a global assignment distribution forward to all six pair tables.
PairwiseState pushforward(const Dist<Assignment>& global);

/// Decides by exact rational linear feasibility whether a global joint
/// distribution over the 16 assignments reproduces all six tables. The
/// returned witness is re-verified against the state before returning.
LhvVerdict lhv_feasibility(const PairwiseState& s);

}  // namespace nonloc
