#include "core/pairwise.hpp"

#include "core/error.hpp"
#include "core/simplex.hpp"

#include <map>

namespace nonloc {

const char* observable_name(ObservableId id) {
    switch (id) {
        case ObservableId::A1: return "A1";
        case ObservableId::A2: return "A2";
        case ObservableId::B1: return "B1";
        case ObservableId::B2: return "B2";
    }
    return "?";
}

std::optional<ObservableId> observable_from_name(std::string_view name) {
    for (ObservableId id : ALL_OBSERVABLES) {
        if (name == observable_name(id)) return id;
    }
    return std::nullopt;
}

PairKey::PairKey(ObservableId a, ObservableId b) {
    if (a == b) {
        throw Error(ErrorCode::BadArgument, "pair of identical observables");
    }
    if (static_cast<int>(a) < static_cast<int>(b)) {
        first = a;
        second = b;
    } else {
        first = b;
        second = a;
    }
}

namespace {
constexpr int PAIR_FIRST[NUM_PAIRS] = {0, 0, 0, 1, 1, 2};
constexpr int PAIR_SECOND[NUM_PAIRS] = {1, 2, 3, 2, 3, 3};
}  // namespace

int PairKey::index() const {
    int i = static_cast<int>(first);
    int j = static_cast<int>(second);
    for (int k = 0; k < NUM_PAIRS; ++k) {
        if (PAIR_FIRST[k] == i && PAIR_SECOND[k] == j) return k;
    }
    throw Error(ErrorCode::Internal, "bad pair key");
}

PairKey PairKey::from_index(int index) {
    if (index < 0 || index >= NUM_PAIRS) {
        throw Error(ErrorCode::BadArgument, "pair index out of range");
    }
    return PairKey(static_cast<ObservableId>(PAIR_FIRST[index]),
                   static_cast<ObservableId>(PAIR_SECOND[index]));
}

std::string PairKey::name() const {
    return std::string(observable_name(first)) + "," + observable_name(second);
}

bool ValidationReport::all_passed() const {
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

Report ValidationReport::to_report() const {
    Report r;
    for (const auto& c : checks) {
        std::string tag = c.kind == ValidationCheck::Kind::Normalization
                              ? "normalization"
                              : (c.kind == ValidationCheck::Kind::NoSignaling
                                     ? "no-signaling"
                                     : "local-marginal");
        r.add(std::string(c.passed ? "pass" : "FAIL") + " [" + tag + "] " +
              c.description);
        ++r.checked;
        if (!c.passed) ++r.violations;
    }
    return r;
}

namespace {

// Marginal weight of outcome x for observable `obs` inside pair `key`,
// straight off the raw table (no normalization assumed).
Rational raw_marginal(const PairwiseState& s, const PairKey& key,
                      ObservableId obs, Outcome x) {
    Rational sum;
    for (Outcome y : BOTH_OUTCOMES) {
        sum += obs == key.first ? s.probability(key, x, y)
                                : s.probability(key, y, x);
    }
    return sum;
}

}  // namespace

ValidationReport validate(const PairwiseState& s) {
    ValidationReport report;
    for (int k = 0; k < NUM_PAIRS; ++k) {
        PairKey key = PairKey::from_index(k);
        const PairTable& table = s.tables[k];
        Rational total;
        bool nonneg = true;
        for (const Rational& w : table) {
            total += w;
            if (w.is_negative()) nonneg = false;
        }
        bool ok = nonneg && total == Rational(1);
        report.checks.push_back(
            {ValidationCheck::Kind::Normalization, ok,
             "P_{" + key.name() + "} nonnegative and sums to 1 (sum = " +
                 total.to_string() + ")"});
    }

    // One equality check per (observable X, containing pair, containing
    // pair) triple and outcome. The triple is a no-signaling equation when
    // both counterpart observables belong to the party opposite to X.
    for (ObservableId x : ALL_OBSERVABLES) {
        std::vector<PairKey> containing;
        for (int k = 0; k < NUM_PAIRS; ++k) {
            PairKey key = PairKey::from_index(k);
            if (key.contains(x)) containing.push_back(key);
        }
        for (std::size_t i = 0; i < containing.size(); ++i) {
            for (std::size_t j = i + 1; j < containing.size(); ++j) {
                const PairKey& p = containing[i];
                const PairKey& q = containing[j];
                bool no_signaling = party(p.other(x)) == party(q.other(x));
                for (Outcome o : BOTH_OUTCOMES) {
                    Rational lhs = raw_marginal(s, p, x, o);
                    Rational rhs = raw_marginal(s, q, x, o);
                    report.checks.push_back(
                        {no_signaling ? ValidationCheck::Kind::NoSignaling
                                      : ValidationCheck::Kind::LocalMarginal,
                         lhs == rhs,
                         std::string("marginal of ") + observable_name(x) + "=" +
                             (o == Outcome::Plus ? "+1" : "-1") + " from P_{" +
                             p.name() + "} vs P_{" + q.name() + "}: " +
                             lhs.to_string() + " vs " + rhs.to_string()});
                }
            }
        }
    }
    return report;
}

Dist<Outcome> marginal(const PairwiseState& s, ObservableId x) {
    std::optional<std::array<Rational, 2>> found;
    for (int k = 0; k < NUM_PAIRS; ++k) {
        PairKey key = PairKey::from_index(k);
        if (!key.contains(x)) continue;
        std::array<Rational, 2> m = {raw_marginal(s, key, x, Outcome::Minus),
                                     raw_marginal(s, key, x, Outcome::Plus)};
        if (found && *found != m) {
            throw Error(ErrorCode::InconsistentState,
                        std::string("inconsistent marginals for ") +
                            observable_name(x));
        }
        found = m;
    }
    if ((*found)[0].is_negative() || (*found)[1].is_negative() ||
        (*found)[0] + (*found)[1] != Rational(1)) {
        throw Error(ErrorCode::InconsistentState,
                    std::string("marginal of ") + observable_name(x) +
                        " is not a probability distribution");
    }
    std::map<Outcome, Rational> weights = {{Outcome::Minus, (*found)[0]},
                                           {Outcome::Plus, (*found)[1]}};
    return Dist<Outcome>::from_exact(weights);
}

Rational correlator(const PairwiseState& s, const PairKey& key) {
    Rational sum;
    for (Outcome x : BOTH_OUTCOMES) {
        for (Outcome y : BOTH_OUTCOMES) {
            Rational term = s.probability(key, x, y) *
                            Rational(outcome_value(x) * outcome_value(y));
            sum += term;
        }
    }
    return sum;
}

ChshResult chsh(const PairwiseState& s) {
    ChshResult result;
    result.correlators = {correlator(s, PairKey(ObservableId::A1, ObservableId::B1)),
                          correlator(s, PairKey(ObservableId::A1, ObservableId::B2)),
                          correlator(s, PairKey(ObservableId::A2, ObservableId::B1)),
                          correlator(s, PairKey(ObservableId::A2, ObservableId::B2))};
    // Single-minus patterns first, then their three-minus complements, so
    // ties resolve to the conventional form.
    bool first = true;
    for (int minuses : {1, 3}) {
        for (int mask = 0; mask < 16; ++mask) {
            if (__builtin_popcount(mask) != minuses) continue;
            SignPattern pattern;
            Rational value;
            for (int i = 0; i < 4; ++i) {
                pattern[i] = (mask >> i) & 1 ? -1 : 1;
                value += Rational(pattern[i]) * result.correlators[i];
            }
            Rational magnitude = value.abs();
            if (first || magnitude > result.value) {
                result.value = magnitude;
                result.pattern = pattern;
                first = false;
            }
        }
    }
    return result;
}

PairTable uniform_pair_table() {
    PairTable t;
    t.fill(Rational(1, 4));
    return t;
}

PairTable pr_box_cross_table(int alice_index, int bob_index) {
    if ((alice_index != 1 && alice_index != 2) ||
        (bob_index != 1 && bob_index != 2)) {
        throw Error(ErrorCode::BadArgument, "observable index must be 1 or 2");
    }
    bool anticorrelated = alice_index == 2 && bob_index == 2;
    PairTable t;
    for (Outcome a : BOTH_OUTCOMES) {
        for (Outcome b : BOTH_OUTCOMES) {
            bool equal = a == b;
            t[pair_cell(a, b)] =
                (equal != anticorrelated) ? Rational(1, 2) : Rational(0);
        }
    }
    return t;
}

namespace {

void require_uniform_marginals(const PairTable& table, const char* label) {
    Rational total;
    for (const Rational& w : table) {
        if (w.is_negative()) {
            throw Error(ErrorCode::BadArgument,
                        std::string(label) + " local joint has negative weight");
        }
        total += w;
    }
    bool ok = total == Rational(1);
    for (int bit = 0; bit < 2 && ok; ++bit) {
        Rational row = table[2 * bit] + table[2 * bit + 1];
        Rational col = table[bit] + table[bit + 2];
        ok = row == Rational(1, 2) && col == Rational(1, 2);
    }
    if (!ok) {
        throw Error(ErrorCode::BadArgument,
                    std::string(label) +
                        " local joint must be normalized with uniform marginals");
    }
}

}  // namespace

PairwiseState pr_box_state(const std::optional<PairTable>& alice_local,
                           const std::optional<PairTable>& bob_local) {
    PairTable a_local = alice_local.value_or(uniform_pair_table());
    PairTable b_local = bob_local.value_or(uniform_pair_table());
    require_uniform_marginals(a_local, "Alice");
    require_uniform_marginals(b_local, "Bob");

    PairwiseState s;
    s.table(PairKey(ObservableId::A1, ObservableId::A2)) = a_local;
    s.table(PairKey(ObservableId::B1, ObservableId::B2)) = b_local;
    s.table(PairKey(ObservableId::A1, ObservableId::B1)) = pr_box_cross_table(1, 1);
    s.table(PairKey(ObservableId::A1, ObservableId::B2)) = pr_box_cross_table(1, 2);
    s.table(PairKey(ObservableId::A2, ObservableId::B1)) = pr_box_cross_table(2, 1);
    s.table(PairKey(ObservableId::A2, ObservableId::B2)) = pr_box_cross_table(2, 2);
    return s;
}

PairwiseState deterministic_state(const std::array<Outcome, 4>& assignment) {
    PairwiseState s;
    for (int k = 0; k < NUM_PAIRS; ++k) {
        PairKey key = PairKey::from_index(k);
        PairTable t;
        t.fill(Rational(0));
        t[pair_cell(assignment[static_cast<int>(key.first)],
                    assignment[static_cast<int>(key.second)])] = Rational(1);
        s.tables[k] = t;
    }
    return s;
}

PairwiseState product_state(const std::array<Dist<Outcome>, 4>& marginals) {
    PairwiseState s;
    for (int k = 0; k < NUM_PAIRS; ++k) {
        PairKey key = PairKey::from_index(k);
        PairTable t;
        for (Outcome x : BOTH_OUTCOMES) {
            for (Outcome y : BOTH_OUTCOMES) {
                t[pair_cell(x, y)] =
                    marginals[static_cast<int>(key.first)].probability(x) *
                    marginals[static_cast<int>(key.second)].probability(y);
            }
        }
        s.tables[k] = t;
    }
    return s;
}

Dist<int> joint_observable(const PairwiseState& s, Party p) {
    PairKey key = p == Party::Alice ? PairKey(ObservableId::A1, ObservableId::A2)
                                    : PairKey(ObservableId::B1, ObservableId::B2);
    std::map<int, Rational> weights;
    for (Outcome x : BOTH_OUTCOMES) {
        for (Outcome y : BOTH_OUTCOMES) {
            weights[2 * outcome_bit(x) + outcome_bit(y)] = s.probability(key, x, y);
        }
    }
    return Dist<int>::from_exact(weights);
}

PairwiseState mix_states(
    const std::vector<std::pair<Rational, PairwiseState>>& components) {
    Rational total;
    PairwiseState out;
    for (const auto& [weight, state] : components) {
        if (weight.is_negative()) {
            throw Error(ErrorCode::BadWeights, "negative mixture weight");
        }
        total += weight;
        for (int k = 0; k < NUM_PAIRS; ++k) {
            for (int cell = 0; cell < 4; ++cell) {
                out.tables[k][cell] += weight * state.tables[k][cell];
            }
        }
    }
    if (total != Rational(1)) {
        throw Error(ErrorCode::BadWeights, "mixture weights do not sum to 1");
    }
    return out;
}

int Assignment::index() const {
    int idx = 0;
    for (int i = 0; i < 4; ++i) idx |= outcome_bit(values[i]) << i;
    return idx;
}

Assignment Assignment::from_index(int index) {
    if (index < 0 || index >= 16) {
        throw Error(ErrorCode::BadArgument, "assignment index out of range");
    }
    Assignment a;
    for (int i = 0; i < 4; ++i) a.values[i] = outcome_from_bit((index >> i) & 1);
    return a;
}

std::string Assignment::to_string() const {
    std::string out = "(";
    for (int i = 0; i < 4; ++i) {
        out += values[i] == Outcome::Plus ? "+1" : "-1";
        if (i < 3) out += ",";
    }
    return out + ")";
}

PairwiseState pushforward(const Dist<Assignment>& global) {
    PairwiseState s;
    for (const auto& [assignment, weight] : global.entries()) {
        for (int k = 0; k < NUM_PAIRS; ++k) {
            PairKey key = PairKey::from_index(k);
            s.tables[k][pair_cell(assignment.value(key.first),
                                  assignment.value(key.second))] += weight;
        }
    }
    return s;
}

LhvVerdict lhv_feasibility(const PairwiseState& s) {
    // One equation per (pair, outcome cell): the total weight of the
    // assignments matching that cell equals the table entry.
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (int k = 0; k < NUM_PAIRS; ++k) {
        PairKey key = PairKey::from_index(k);
        for (Outcome x : BOTH_OUTCOMES) {
            for (Outcome y : BOTH_OUTCOMES) {
                std::vector<Rational> row(16, Rational(0));
                for (int q = 0; q < 16; ++q) {
                    Assignment assignment = Assignment::from_index(q);
                    if (assignment.value(key.first) == x &&
                        assignment.value(key.second) == y) {
                        row[q] = Rational(1);
                    }
                }
                a.push_back(std::move(row));
                b.push_back(s.probability(key, x, y));
            }
        }
    }

    LhvVerdict verdict;
    auto solution = solve_feasibility(a, b);
    verdict.feasible = solution.has_value();
    if (verdict.feasible) {
        std::map<Assignment, Rational> weights;
        for (int q = 0; q < 16; ++q) {
            weights[Assignment::from_index(q)] = (*solution)[q];
        }
        Dist<Assignment> witness = Dist<Assignment>::from_exact(weights);
        if (!(pushforward(witness) == s)) {
            throw Error(ErrorCode::Internal,
                        "feasibility witness fails to reproduce the state");
        }
        verdict.witness = std::move(witness);
    } else {
        ChshResult c = chsh(s);
        if (c.value > Rational(2)) {
            verdict.chsh_witness = ChshWitness{c.value, c.pattern};
        } else {
            verdict.no_chsh_witness = true;
        }
    }
    return verdict;
}

}  // namespace nonloc
