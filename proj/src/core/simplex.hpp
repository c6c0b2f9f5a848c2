#pragma once

#include "core/rational.hpp"

#include <optional>
#include <vector>

namespace nonloc {

/// Exact feasibility of { x >= 0 : A x = b } over the rationals.
///
/// Phase-one simplex: rows with negative b are sign-flipped, one artificial
/// variable is added per row, and the artificial total is minimized with
/// Bland's rule (anti-cycling). Feasible iff the optimum is zero; the basic
/// solution restricted to the original columns is returned as the witness.
/// Redundant consistent rows are fine (their artificials stay basic at 0).
std::optional<std::vector<Rational>> solve_feasibility(
    const std::vector<std::vector<Rational>>& a,
    const std::vector<Rational>& b);

}  // namespace nonloc
