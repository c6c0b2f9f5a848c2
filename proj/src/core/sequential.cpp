#include "core/sequential.hpp"

#include "core/error.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <thread>

namespace nonloc {

Outcome hidden_sign(HiddenValue v) {
    switch (v) {
        case HiddenValue::PotentialMinus:
        case HiddenValue::ActualMinus:
            return Outcome::Minus;
        case HiddenValue::PotentialPlus:
        case HiddenValue::ActualPlus:
            return Outcome::Plus;
        case HiddenValue::Undetermined:
            break;
    }
    throw Error(ErrorCode::BadArgument, "undetermined value has no sign");
}

HiddenValue flip_potential(HiddenValue v) {
    if (v == HiddenValue::PotentialMinus) return HiddenValue::PotentialPlus;
    if (v == HiddenValue::PotentialPlus) return HiddenValue::PotentialMinus;
    throw Error(ErrorCode::BadArgument, "flip of a non-potential value");
}

const char* hidden_value_token(HiddenValue v) {
    switch (v) {
        case HiddenValue::Undetermined: return "0";
        case HiddenValue::PotentialMinus: return "-";
        case HiddenValue::PotentialPlus: return "+";
        case HiddenValue::ActualMinus: return "--";
        case HiddenValue::ActualPlus: return "++";
    }
    return "?";
}

int PureState::index() const {
    int idx = 0;
    for (int i = 3; i >= 0; --i) idx = idx * 5 + static_cast<int>(values[i]);
    return idx;
}

PureState PureState::from_index(int index) {
    if (index < 0 || index >= NUM_PURE_STATES) {
        throw Error(ErrorCode::BadArgument, "pure-state index out of range");
    }
    PureState s;
    for (int i = 0; i < 4; ++i) {
        s.values[i] = static_cast<HiddenValue>(index % 5);
        index /= 5;
    }
    return s;
}

std::string PureState::to_string() const {
    static const char* const SLOT[4] = {"a1", "a2", "b1", "b2"};
    std::string out;
    for (int i = 0; i < 4; ++i) {
        if (i) out += ' ';
        out += SLOT[i];
        out += ':';
        out += hidden_value_token(values[i]);
    }
    return out;
}

PureState PureState::parse(std::string_view text) {
    static const char* const SLOT[4] = {"a1", "a2", "b1", "b2"};
    std::istringstream in{std::string(text)};
    PureState s;
    std::array<bool, 4> seen{};
    std::string field;
    while (in >> field) {
        auto colon = field.find(':');
        if (colon == std::string::npos) {
            throw Error(ErrorCode::ParseError,
                        "pure-state field \"" + field + "\" lacks ':'");
        }
        std::string slot = field.substr(0, colon);
        std::string token = field.substr(colon + 1);
        int slot_index = -1;
        for (int i = 0; i < 4; ++i) {
            if (slot == SLOT[i]) slot_index = i;
        }
        if (slot_index < 0) {
            throw Error(ErrorCode::ParseError, "unknown observable \"" + slot + "\"");
        }
        if (seen[slot_index]) {
            throw Error(ErrorCode::ParseError, "duplicate observable \"" + slot + "\"");
        }
        seen[slot_index] = true;
        bool found = false;
        for (int v = 0; v < 5 && !found; ++v) {
            if (token == hidden_value_token(static_cast<HiddenValue>(v))) {
                s.values[slot_index] = static_cast<HiddenValue>(v);
                found = true;
            }
        }
        if (!found) {
            throw Error(ErrorCode::ParseError,
                        "unknown hidden value token \"" + token + "\"");
        }
    }
    for (int i = 0; i < 4; ++i) {
        if (!seen[i]) {
            throw Error(ErrorCode::ParseError,
                        std::string("missing observable ") + SLOT[i]);
        }
    }
    return s;
}

namespace {

ObservableId partner_of(ObservableId m) {
    switch (m) {
        case ObservableId::A1: return ObservableId::A2;
        case ObservableId::A2: return ObservableId::A1;
        case ObservableId::B1: return ObservableId::B2;
        case ObservableId::B2: return ObservableId::B1;
    }
    throw Error(ErrorCode::Internal, "bad observable");
}

// Post-measurement states of the all-undetermined state, per observable and
// outcome. Each outcome has probability 1/2.
PureState fresh_post_state(ObservableId m, Outcome o) {
    const HiddenValue und = HiddenValue::Undetermined;
    switch (m) {
        case ObservableId::A1:
            return PureState::make(actual(o), und, potential(o), potential(o));
        case ObservableId::A2:
            return PureState::make(und, actual(o), potential(o), potential(flip(o)));
        case ObservableId::B1:
            return PureState::make(potential(o), potential(o), actual(o), und);
        case ObservableId::B2:
            return PureState::make(potential(o), potential(flip(o)), und, actual(o));
    }
    throw Error(ErrorCode::Internal, "bad observable");
}

}  // namespace

Dist<Outcome> outcome_distribution(const PureState& s, ObservableId m) {
    HiddenValue v = s.value(m);
    if (is_undetermined(v)) {
        return Dist<Outcome>::from_exact(
            {{Outcome::Minus, Rational(1, 2)}, {Outcome::Plus, Rational(1, 2)}});
    }
    return Dist<Outcome>::point(hidden_sign(v));
}

Transition measure(const PureState& s, ObservableId m, MeasurementRules rules) {
    std::map<std::pair<Outcome, PureState>, Rational> weights;

    if (s == PureState::all_undetermined()) {
        for (Outcome o : BOTH_OUTCOMES) {
            weights[{o, fresh_post_state(m, o)}] = Rational(1, 2);
        }
        return Transition::from_exact(weights);
    }

    Dist<Outcome> outcomes = outcome_distribution(s, m);
    ObservableId partner = partner_of(m);
    for (const auto& [o, p] : outcomes.entries()) {
        PureState base = s;
        if (rules != MeasurementRules::SkipActualization) base.set(m, actual(o));
        if (is_potential(s.value(partner)) &&
            rules != MeasurementRules::PotentialAsActual) {
            PureState flipped = base;
            flipped.set(partner, flip_potential(s.value(partner)));
            weights[{o, base}] += p * Rational(1, 2);
            weights[{o, flipped}] += p * Rational(1, 2);
        } else {
            weights[{o, base}] += p;
        }
    }
    return Transition::from_exact(weights);
}

std::map<Outcome, std::pair<Rational, Ensemble>> measure_ensemble(
    const Ensemble& e, ObservableId m, MeasurementRules rules) {
    std::map<Outcome, Rational> outcome_weight;
    std::map<Outcome, std::map<PureState, Rational>> posterior_weight;
    for (const auto& [state, w] : e.entries()) {
        Transition t = measure(state, m, rules);
        for (const auto& [branch, p] : t.entries()) {
            const auto& [o, post] = branch;
            outcome_weight[o] += w * p;
            posterior_weight[o][post] += w * p;
        }
    }
    std::map<Outcome, std::pair<Rational, Ensemble>> result;
    for (const auto& [o, total] : outcome_weight) {
        std::map<PureState, Rational> conditioned;
        for (const auto& [state, w] : posterior_weight[o]) {
            conditioned[state] = w / total;
        }
        result.emplace(o, std::make_pair(total, Ensemble::from_exact(conditioned)));
    }
    return result;
}

// ---------------------------------------------------------------------------
// Packed branch expansion. A branch is (outcome bits so far, pure state),
// packed as (bits << 10) | state_index; probabilities stay exact. Used by
// run_sequence and by the exhaustive verifiers.

namespace {

struct PackedTransition {
    std::uint8_t outcome_bit;
    std::uint16_t next;
    Rational p;
};

using TransitionTable =
    std::vector<std::array<std::vector<PackedTransition>, 4>>;  // [state][obs]

const TransitionTable& transitions(MeasurementRules rules) {
    static TransitionTable tables[3];
    static std::once_flag flags[3];
    int which = static_cast<int>(rules);
    std::call_once(flags[which], [&] {
        TransitionTable& t = tables[which];
        t.resize(NUM_PURE_STATES);
        for (int s = 0; s < NUM_PURE_STATES; ++s) {
            PureState state = PureState::from_index(s);
            for (int m = 0; m < 4; ++m) {
                Transition tr = measure(state, static_cast<ObservableId>(m), rules);
                for (const auto& [branch, p] : tr.entries()) {
                    t[s][m].push_back(
                        {static_cast<std::uint8_t>(outcome_bit(branch.first)),
                         static_cast<std::uint16_t>(branch.second.index()), p});
                }
            }
        }
    });
    return tables[which];
}

using BranchMap = std::vector<std::pair<std::uint32_t, Rational>>;  // sorted

BranchMap expand(std::uint16_t initial_state,
                 const std::vector<ObservableId>& seq,
                 const TransitionTable& table) {
    BranchMap cur;
    cur.emplace_back(initial_state, Rational(1));
    BranchMap next;
    for (std::size_t step = 0; step < seq.size(); ++step) {
        int m = static_cast<int>(seq[step]);
        next.clear();
        for (const auto& [key, p] : cur) {
            std::uint32_t state = key & 1023u;
            std::uint32_t bits = key >> 10;
            for (const PackedTransition& t : table[state][m]) {
                std::uint32_t nkey =
                    ((bits | (std::uint32_t(t.outcome_bit) << step)) << 10) | t.next;
                next.emplace_back(nkey, p * t.p);
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        cur.clear();
        for (auto& [key, p] : next) {
            if (!cur.empty() && cur.back().first == key) {
                cur.back().second += p;
            } else {
                cur.emplace_back(key, std::move(p));
            }
        }
    }
    return cur;
}

std::vector<Outcome> unpack_outcomes(std::uint32_t bits, std::size_t len) {
    std::vector<Outcome> outcomes(len);
    for (std::size_t i = 0; i < len; ++i) {
        outcomes[i] = outcome_from_bit((bits >> i) & 1u);
    }
    return outcomes;
}

std::string sequence_name(const std::vector<ObservableId>& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) out += ' ';
        out += observable_name(seq[i]);
    }
    return out;
}

std::string outcomes_name(const std::vector<Outcome>& outcomes) {
    std::string out;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (i) out += ' ';
        out += outcomes[i] == Outcome::Plus ? "+1" : "-1";
    }
    return out;
}

}  // namespace

Dist<std::vector<Outcome>> SequenceResult::outcome_distribution() const {
    return branches.map([](const auto& branch) { return branch.first; });
}

SequenceResult run_sequence(const Ensemble& e0,
                            const std::vector<ObservableId>& seq,
                            MeasurementRules rules) {
    if (seq.size() > 20) {
        throw Error(ErrorCode::BadArgument, "sequence too long");
    }
    const TransitionTable& table = transitions(rules);
    std::map<std::pair<std::vector<Outcome>, PureState>, Rational> acc;
    for (const auto& [state, w] : e0.entries()) {
        for (const auto& [key, p] :
             expand(static_cast<std::uint16_t>(state.index()), seq, table)) {
            acc[{unpack_outcomes(key >> 10, seq.size()),
                 PureState::from_index(key & 1023u)}] += w * p;
        }
    }
    SequenceResult result;
    result.sequence = seq;
    result.branches =
        Dist<std::pair<std::vector<Outcome>, PureState>>::from_exact(acc);
    return result;
}

std::pair<std::vector<Outcome>, PureState> sample_sequence(
    const Ensemble& e0, const std::vector<ObservableId>& seq, SeedStream& stream,
    MeasurementRules rules) {
    PureState state = e0.sample(stream);
    std::vector<Outcome> outcomes;
    outcomes.reserve(seq.size());
    for (ObservableId m : seq) {
        auto [o, post] = measure(state, m, rules).sample(stream);
        outcomes.push_back(o);
        state = post;
    }
    return {outcomes, state};
}

// ---------------------------------------------------------------------------
// Exhaustive verifiers. Work is partitioned across threads by initial state;
// per-state results are merged in state order so reports are deterministic.

namespace {

constexpr std::size_t TRACE_CAP = 10;

struct PerStateResult {
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::vector<std::string> traces;
};

template <typename Fn>
std::vector<PerStateResult> for_each_state(Fn&& body) {
    std::vector<PerStateResult> results(NUM_PURE_STATES);
    unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
    std::vector<std::thread> threads;
    std::size_t chunk = (NUM_PURE_STATES + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk;
        std::size_t hi = std::min<std::size_t>(lo + chunk, NUM_PURE_STATES);
        if (lo >= hi) break;
        threads.emplace_back([&, lo, hi] {
            for (std::size_t s = lo; s < hi; ++s) {
                body(static_cast<int>(s), results[s]);
            }
        });
    }
    for (auto& t : threads) t.join();
    return results;
}

Report merge_results(const std::vector<PerStateResult>& results,
                     std::vector<std::string> header) {
    Report report;
    report.lines = std::move(header);
    std::size_t shown = 0;
    for (const auto& r : results) {
        report.checked += r.checked;
        report.violations += r.violations;
        for (const auto& trace : r.traces) {
            if (shown < TRACE_CAP) {
                report.add(trace);
                ++shown;
            }
        }
    }
    if (report.violations > shown) {
        report.add("... " + std::to_string(report.violations - shown) +
                   " further traces omitted");
    }
    report.add("checked " + std::to_string(report.checked) + " cases, " +
               std::to_string(report.violations) + " violations");
    return report;
}

std::vector<std::vector<ObservableId>> all_sequences(
    const std::vector<ObservableId>& alphabet, int length) {
    std::vector<std::vector<ObservableId>> out;
    std::vector<ObservableId> seq(length, alphabet[0]);
    std::size_t count = 1;
    for (int i = 0; i < length; ++i) count *= alphabet.size();
    for (std::size_t code = 0; code < count; ++code) {
        std::size_t c = code;
        for (int i = 0; i < length; ++i) {
            seq[i] = alphabet[c % alphabet.size()];
            c /= alphabet.size();
        }
        out.push_back(seq);
    }
    return out;
}

bool has_repeat(const std::vector<ObservableId>& seq) {
    int seen = 0;
    for (ObservableId m : seq) {
        int bit = 1 << static_cast<int>(m);
        if (seen & bit) return true;
        seen |= bit;
    }
    return false;
}

// Checks one expanded (state, sequence) pair for repeat agreement.
void check_repeats(int state_index, const std::vector<ObservableId>& seq,
                   const TransitionTable& table, PerStateResult& out) {
    ++out.checked;
    if (!has_repeat(seq)) return;  // vacuously fine

    // positions of each observable in the sequence
    std::array<std::vector<int>, 4> positions;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        positions[static_cast<int>(seq[i])].push_back(static_cast<int>(i));
    }

    for (const auto& [key, p] :
         expand(static_cast<std::uint16_t>(state_index), seq, table)) {
        std::uint32_t bits = key >> 10;
        for (int m = 0; m < 4; ++m) {
            const auto& pos = positions[m];
            if (pos.size() < 2) continue;
            unsigned first = (bits >> pos[0]) & 1u;
            for (std::size_t k = 1; k < pos.size(); ++k) {
                if (((bits >> pos[k]) & 1u) != first) {
                    ++out.violations;
                    if (out.traces.size() < TRACE_CAP) {
                        out.traces.push_back(
                            "violation: state {" +
                            PureState::from_index(state_index).to_string() +
                            "} sequence [" + sequence_name(seq) + "] branch (" +
                            outcomes_name(unpack_outcomes(bits, seq.size())) +
                            ") prob " + p.to_string() + ": repeated " +
                            observable_name(static_cast<ObservableId>(m)) +
                            " disagrees");
                    }
                    goto next_branch;
                }
            }
        }
    next_branch:;
    }
}

}  // namespace

Report check_nondisturbance(int max_len, MeasurementRules rules) {
    if (max_len < 2) {
        throw Error(ErrorCode::BadArgument, "nondisturbance depth must be >= 2");
    }
    const TransitionTable& table = transitions(rules);
    std::vector<std::vector<ObservableId>> sequences;
    for (int len = 2; len <= max_len; ++len) {
        auto seqs = all_sequences({ALL_OBSERVABLES.begin(), ALL_OBSERVABLES.end()},
                                  len);
        sequences.insert(sequences.end(), seqs.begin(), seqs.end());
    }

    auto results = for_each_state([&](int state, PerStateResult& out) {
        for (const auto& seq : sequences) check_repeats(state, seq, table, out);
    });

    return merge_results(
        results,
        {"nondisturbance: all " + std::to_string(NUM_PURE_STATES) +
         " initial pure states x " + std::to_string(sequences.size()) +
         " sequences of length 2.." + std::to_string(max_len),
         "(sequences without a repeated observable pass vacuously)"});
}

Report check_nondisturbance_at(int length, const std::vector<int>& state_indices,
                               MeasurementRules rules) {
    if (length < 2) {
        throw Error(ErrorCode::BadArgument, "nondisturbance length must be >= 2");
    }
    const TransitionTable& table = transitions(rules);
    auto sequences =
        all_sequences({ALL_OBSERVABLES.begin(), ALL_OBSERVABLES.end()}, length);

    std::vector<PerStateResult> results(state_indices.size());
    for (std::size_t i = 0; i < state_indices.size(); ++i) {
        for (const auto& seq : sequences) {
            check_repeats(state_indices[i], seq, table, results[i]);
        }
    }
    return merge_results(
        results, {"nondisturbance spot check: " +
                  std::to_string(state_indices.size()) + " initial states x " +
                  std::to_string(sequences.size()) + " sequences of length " +
                  std::to_string(length)});
}

namespace {

// Receiver outcome-tuple marginal of the expanded branches, as a dense
// array over the receiver's outcome bits.
std::vector<Rational> receiver_marginal(const BranchMap& branches,
                                        const std::vector<int>& receiver_positions) {
    std::vector<Rational> dense(std::size_t(1) << receiver_positions.size());
    for (const auto& [key, p] : branches) {
        std::uint32_t bits = key >> 10;
        std::uint32_t packed = 0;
        for (std::size_t i = 0; i < receiver_positions.size(); ++i) {
            packed |= ((bits >> receiver_positions[i]) & 1u) << i;
        }
        dense[packed] += p;
    }
    return dense;
}

std::string marginal_name(const std::vector<Rational>& dense, std::size_t len) {
    std::string out;
    for (std::size_t code = 0; code < dense.size(); ++code) {
        if (code) out += ", ";
        out += "(";
        for (std::size_t i = 0; i < len; ++i) {
            if (i) out += ",";
            out += ((code >> i) & 1u) ? "+1" : "-1";
        }
        out += ")=" + dense[code].to_string();
    }
    return out;
}

}  // namespace

Report check_no_signaling(int max_receiver, int max_other, MeasurementRules rules) {
    if (max_receiver < 1 || max_other < 1) {
        throw Error(ErrorCode::BadArgument, "no-signaling depths must be >= 1");
    }
    const TransitionTable& table = transitions(rules);

    const std::vector<ObservableId> alice = {ObservableId::A1, ObservableId::A2};
    const std::vector<ObservableId> bob = {ObservableId::B1, ObservableId::B2};

    struct Direction {
        const char* receiver_name;
        std::vector<std::vector<ObservableId>> receiver_seqs;
        std::vector<std::vector<ObservableId>> other_seqs;  // includes empty
    };
    std::vector<Direction> directions(2);
    for (int d = 0; d < 2; ++d) {
        const auto& receiver = d == 0 ? bob : alice;
        const auto& other = d == 0 ? alice : bob;
        directions[d].receiver_name = d == 0 ? "Bob" : "Alice";
        for (int len = 1; len <= max_receiver; ++len) {
            auto seqs = all_sequences(receiver, len);
            directions[d].receiver_seqs.insert(directions[d].receiver_seqs.end(),
                                               seqs.begin(), seqs.end());
        }
        directions[d].other_seqs.push_back({});
        for (int len = 1; len <= max_other; ++len) {
            auto seqs = all_sequences(other, len);
            directions[d].other_seqs.insert(directions[d].other_seqs.end(),
                                            seqs.begin(), seqs.end());
        }
    }

    auto results = for_each_state([&](int state, PerStateResult& out) {
        for (const auto& dir : directions) {
            for (const auto& rseq : dir.receiver_seqs) {
                std::optional<std::vector<Rational>> reference;
                for (const auto& oseq : dir.other_seqs) {
                    const std::size_t n = rseq.size();
                    const std::size_t k = oseq.size();
                    // all interleavings: bit set = other-party slot
                    for (std::uint32_t mask = 0; mask < (1u << (n + k)); ++mask) {
                        if (__builtin_popcount(mask) != static_cast<int>(k)) {
                            continue;
                        }
                        std::vector<ObservableId> combined(n + k, ObservableId::A1);
                        std::vector<int> receiver_positions;
                        std::size_t ri = 0, oi = 0;
                        for (std::size_t pos = 0; pos < n + k; ++pos) {
                            if ((mask >> pos) & 1u) {
                                combined[pos] = oseq[oi++];
                            } else {
                                combined[pos] = rseq[ri++];
                                receiver_positions.push_back(
                                    static_cast<int>(pos));
                            }
                        }
                        auto branches = expand(
                            static_cast<std::uint16_t>(state), combined, table);
                        auto marg = receiver_marginal(branches, receiver_positions);
                        ++out.checked;
                        if (!reference) {
                            reference = marg;  // the other-party-free run
                        } else if (marg != *reference) {
                            ++out.violations;
                            if (out.traces.size() < TRACE_CAP) {
                                out.traces.push_back(
                                    std::string("violation: state {") +
                                    PureState::from_index(state).to_string() +
                                    "} " + dir.receiver_name + " sequence [" +
                                    sequence_name(rseq) +
                                    "] interleaved as [" +
                                    sequence_name(combined) + "]: marginal {" +
                                    marginal_name(marg, n) + "} vs reference {" +
                                    marginal_name(*reference, n) + "}");
                            }
                        }
                    }
                }
            }
        }
    });

    return merge_results(
        results,
        {"no-signaling: all " + std::to_string(NUM_PURE_STATES) +
         " initial pure states, receiver sequences up to length " +
         std::to_string(max_receiver) + ", other-party sequences up to length " +
         std::to_string(max_other) + ", all interleavings, both directions"});
}

FreshCorrelations fresh_state_correlations() {
    FreshCorrelations out;
    Ensemble fresh = Ensemble::point(PureState::all_undetermined());
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            ObservableId a = static_cast<ObservableId>(i);
            ObservableId b = static_cast<ObservableId>(2 + j);

            auto forward = run_sequence(fresh, {a, b}).outcome_distribution();
            auto backward = run_sequence(fresh, {b, a}).outcome_distribution();

            PairTable table_fwd, table_bwd;
            table_fwd.fill(Rational(0));
            table_bwd.fill(Rational(0));
            for (const auto& [outcomes, p] : forward.entries()) {
                table_fwd[pair_cell(outcomes[0], outcomes[1])] += p;
            }
            for (const auto& [outcomes, p] : backward.entries()) {
                table_bwd[pair_cell(outcomes[1], outcomes[0])] += p;
            }
            out.tables[2 * i + j] = table_fwd;
            out.orders_agree[2 * i + j] = table_fwd == table_bwd;
        }
    }
    return out;
}

Report correlations_report() {
    FreshCorrelations fresh = fresh_state_correlations();
    Report report;
    report.add("correlations from the all-undetermined state, both time orders:");
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const PairTable& table = fresh.tables[2 * i + j];
            PairTable expected = pr_box_cross_table(i + 1, j + 1);
            std::string name =
                std::string("(A") + std::to_string(i + 1) + ",B" +
                std::to_string(j + 1) + ")";
            for (Outcome x : BOTH_OUTCOMES) {
                for (Outcome y : BOTH_OUTCOMES) {
                    Rational got = table[pair_cell(x, y)];
                    Rational want = expected[pair_cell(x, y)];
                    ++report.checked;
                    bool ok = got == want;
                    if (!ok) ++report.violations;
                    report.add(std::string(ok ? "pass" : "FAIL") + " P" + name +
                               "(" + (x == Outcome::Plus ? "+1" : "-1") + "," +
                               (y == Outcome::Plus ? "+1" : "-1") + ") = " +
                               got.to_string() + " (PR box: " + want.to_string() +
                               ")");
                }
            }
            ++report.checked;
            if (!fresh.orders_agree[2 * i + j]) {
                ++report.violations;
                report.add("FAIL " + name + ": the two time orders disagree");
            } else {
                report.add("pass " + name + ": both time orders agree");
            }
        }
    }
    report.add("checked " + std::to_string(report.checked) + " cases, " +
               std::to_string(report.violations) + " violations");
    return report;
}

}  // namespace nonloc
