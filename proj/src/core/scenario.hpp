#pragma once

#include "core/pairwise.hpp"
#include "core/quantum.hpp"
#include "core/report.hpp"
#include "core/sequential.hpp"

#include <optional>
#include <string>
#include <utility>

namespace nonloc {

/// One parsed scenario document. The JSON envelope carries a version tag,
/// a theory selector and the theory's payload:
///   pairwise   -> "state": one object per observable pair, outcome-pair
///                 keys like "(+1,-1)" mapping to rational strings
///   sequential -> "initial": list of [rational, pure-state string] pairs,
///                 "sequence": list of observable names
///   quantum    -> "matrix_a"/"matrix_b": rows of complex entries
struct Scenario {
    enum class Theory { Pairwise, Sequential, Quantum };

    int version = 1;
    Theory theory = Theory::Pairwise;

    std::optional<PairwiseState> pairwise;

    std::optional<Ensemble> initial;
    std::vector<ObservableId> sequence;

    std::optional<std::pair<Matrix, Matrix>> matrices;
};

/// Throws Error{ParseError} on malformed documents.
Scenario parse_scenario(const std::string& text);

/// Canonical form: emit(parse(x)) is stable and parse(emit(s)) == s.
std::string emit_scenario(const Scenario& s);

Scenario make_pairwise_scenario(const PairwiseState& state);
Scenario make_sequential_scenario(const Ensemble& initial,
                                  const std::vector<ObservableId>& sequence);
Scenario make_quantum_scenario(const Matrix& a, const Matrix& b);

/// Full branch distribution of the scenario's sequence, exact.
Report simulate_exact(const Scenario& s);

/// Monte Carlo rollouts with per-branch empirical frequencies, exact
/// probabilities and normal-approximation deviations.
Report simulate_sample(const Scenario& s, std::uint64_t draws, std::uint64_t seed);

}  // namespace nonloc
