#pragma once

#include "core/dist.hpp"
#include "core/pairwise.hpp"
#include "core/report.hpp"
#include "core/rng.hpp"
#include "core/sequential.hpp"

#include <array>
#include <optional>
#include <string>

namespace nonloc {

/// State of the PR-box-plus-memory model: two outcome bits per party, set
/// forever once written, plus the bookkeeping needed to evaluate the shared
/// PR box lazily (which observable index each party fed into the box first).
/// The box itself is stateless: outcomes are perfectly correlated unless
/// both parties use index 2, in which case they are anticorrelated, each
/// side marginally uniform.
struct MemoryBoxState {
    std::array<std::optional<Outcome>, 4> bits{};  // indexed by ObservableId
    std::array<int, 2> first_used{};  // per party; 0 = box not used yet, else 1|2

    static MemoryBoxState fresh() { return MemoryBoxState{}; }

    bool used(Party p) const { return first_used[p == Party::Alice ? 0 : 1] != 0; }

    std::string to_string() const;

    friend bool operator==(const MemoryBoxState& a, const MemoryBoxState& b) {
        return a.bits == b.bits && a.first_used == b.first_used;
    }
    friend bool operator<(const MemoryBoxState& a, const MemoryBoxState& b);
};

/// Exact (outcome, post-state) distribution for one measurement. The first
/// measurement on a party queries the PR box, stores the outcome in the
/// matching bit and initializes the party's other bit uniformly and
/// independently; later measurements reproduce the stored bit.
Dist<std::pair<Outcome, MemoryBoxState>> memory_box_transition(
    const MemoryBoxState& s, ObservableId m);

/// Sampling form of the transition, deterministic given the stream.
std::pair<Outcome, MemoryBoxState> memory_box_measure(const MemoryBoxState& s,
                                                      ObservableId m,
                                                      SeedStream& stream);

/// Exact outcome-tuple distribution of a measurement sequence from the
/// fresh memory-box state.
Dist<std::vector<Outcome>> memory_box_sequence(const std::vector<ObservableId>& seq);

/// Compares the sequential toy theory (from the all-undetermined state)
/// with the memory-box model (from the fresh state): every sequence of
/// length 1..max_len, exact outcome-tuple distributions. Each diverging
/// sequence is listed with both distributions and counted as a violation.
Report compare_models(int max_len);

}  // namespace nonloc
