#include "core/scenario.hpp"

#include "core/error.hpp"

#include <json.hpp>

#include <cmath>
#include <map>
#include <sstream>

namespace nonloc {

using nlohmann::json;

namespace {

std::string outcome_pair_key(Outcome x, Outcome y) {
    auto one = [](Outcome o) { return o == Outcome::Plus ? "+1" : "-1"; };
    return std::string("(") + one(x) + "," + one(y) + ")";
}

std::optional<std::pair<Outcome, Outcome>> parse_outcome_pair_key(
    const std::string& key) {
    for (Outcome x : BOTH_OUTCOMES) {
        for (Outcome y : BOTH_OUTCOMES) {
            if (key == outcome_pair_key(x, y)) return std::make_pair(x, y);
        }
    }
    return std::nullopt;
}

[[noreturn]] void parse_fail(const std::string& what) {
    throw Error(ErrorCode::ParseError, what);
}

json parse_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) parse_fail("document is not valid JSON");
    return doc;
}

PairwiseState state_from_json(const json& obj) {
    if (!obj.is_object()) parse_fail("\"state\" must be an object");
    PairwiseState state;
    std::array<bool, NUM_PAIRS> seen{};
    for (const auto& [key, table] : obj.items()) {
        int pair_index = -1;
        for (int k = 0; k < NUM_PAIRS; ++k) {
            if (key == PairKey::from_index(k).name()) pair_index = k;
        }
        if (pair_index < 0) parse_fail("unknown pair key \"" + key + "\"");
        seen[pair_index] = true;
        if (!table.is_object()) parse_fail("pair table must be an object");
        for (const auto& [cell_key, value] : table.items()) {
            auto cell = parse_outcome_pair_key(cell_key);
            if (!cell) parse_fail("unknown outcome pair \"" + cell_key + "\"");
            if (!value.is_string()) parse_fail("probabilities must be strings");
            state.tables[pair_index][pair_cell(cell->first, cell->second)] =
                Rational::parse(value.get<std::string>());
        }
    }
    for (int k = 0; k < NUM_PAIRS; ++k) {
        if (!seen[k]) {
            parse_fail("missing pair \"" + PairKey::from_index(k).name() + "\"");
        }
    }
    return state;
}

json state_to_json(const PairwiseState& state) {
    json obj = json::object();
    for (int k = 0; k < NUM_PAIRS; ++k) {
        PairKey key = PairKey::from_index(k);
        json table = json::object();
        for (Outcome x : BOTH_OUTCOMES) {
            for (Outcome y : BOTH_OUTCOMES) {
                table[outcome_pair_key(x, y)] =
                    state.tables[k][pair_cell(x, y)].to_string();
            }
        }
        obj[key.name()] = table;
    }
    return obj;
}

Ensemble ensemble_from_json(const json& arr) {
    if (!arr.is_array() || arr.empty()) {
        parse_fail("\"initial\" must be a nonempty array");
    }
    std::map<PureState, Rational> weights;
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_string() ||
            !item[1].is_string()) {
            parse_fail("ensemble entries must be [rational, state] string pairs");
        }
        weights[PureState::parse(item[1].get<std::string>())] +=
            Rational::parse(item[0].get<std::string>());
    }
    try {
        return Ensemble::from_exact(weights);
    } catch (const Error& e) {
        parse_fail(std::string("invalid ensemble: ") + e.what());
    }
}

json ensemble_to_json(const Ensemble& e) {
    json arr = json::array();
    for (const auto& [state, w] : e.entries()) {
        arr.push_back(json::array({w.to_string(), state.to_string()}));
    }
    return arr;
}

Matrix matrix_from_json(const json& rows) {
    if (!rows.is_array() || rows.empty()) {
        parse_fail("matrix must be a nonempty array of row strings");
    }
    std::ostringstream block;
    block << rows.size() << "\n";
    for (const auto& row : rows) {
        if (!row.is_string()) parse_fail("matrix rows must be strings");
        block << row.get<std::string>() << "\n";
    }
    std::istringstream in(block.str());
    return parse_matrix_block(in);
}

json matrix_to_json(const Matrix& m) {
    // format_matrix yields "dim\nrow\nrow...": keep the rows.
    std::istringstream lines(format_matrix(m));
    std::string line;
    std::getline(lines, line);  // dimension header
    json rows = json::array();
    while (std::getline(lines, line)) {
        if (!line.empty()) rows.push_back(line);
    }
    return rows;
}

std::string theory_name(Scenario::Theory t) {
    switch (t) {
        case Scenario::Theory::Pairwise: return "pairwise";
        case Scenario::Theory::Sequential: return "sequential";
        case Scenario::Theory::Quantum: return "quantum";
    }
    return "?";
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    json doc = parse_json(text);
    if (!doc.is_object()) parse_fail("document must be a JSON object");
    if (!doc.contains("version") || !doc["version"].is_number_integer()) {
        parse_fail("missing integer \"version\"");
    }
    Scenario s;
    s.version = doc["version"].get<int>();
    if (s.version != 1) parse_fail("unsupported version");
    if (!doc.contains("theory") || !doc["theory"].is_string()) {
        parse_fail("missing \"theory\" selector");
    }
    std::string theory = doc["theory"].get<std::string>();
    if (theory == "pairwise") {
        s.theory = Scenario::Theory::Pairwise;
        if (!doc.contains("state")) parse_fail("pairwise scenario needs \"state\"");
        s.pairwise = state_from_json(doc["state"]);
    } else if (theory == "sequential") {
        s.theory = Scenario::Theory::Sequential;
        if (!doc.contains("initial") || !doc.contains("sequence")) {
            parse_fail("sequential scenario needs \"initial\" and \"sequence\"");
        }
        s.initial = ensemble_from_json(doc["initial"]);
        if (!doc["sequence"].is_array()) parse_fail("\"sequence\" must be an array");
        for (const auto& item : doc["sequence"]) {
            if (!item.is_string()) parse_fail("sequence entries must be strings");
            auto id = observable_from_name(item.get<std::string>());
            if (!id) {
                parse_fail("unknown observable \"" + item.get<std::string>() + "\"");
            }
            s.sequence.push_back(*id);
        }
    } else if (theory == "quantum") {
        s.theory = Scenario::Theory::Quantum;
        if (!doc.contains("matrix_a") || !doc.contains("matrix_b")) {
            parse_fail("quantum scenario needs \"matrix_a\" and \"matrix_b\"");
        }
        Matrix a = matrix_from_json(doc["matrix_a"]);
        Matrix b = matrix_from_json(doc["matrix_b"]);
        if (a.rows() != b.rows()) {
            throw Error(ErrorCode::DimensionMismatch,
                        "matrix pair has mismatched dimensions");
        }
        s.matrices = std::make_pair(std::move(a), std::move(b));
    } else {
        parse_fail("unknown theory \"" + theory + "\"");
    }
    return s;
}

std::string emit_scenario(const Scenario& s) {
    json doc;
    doc["version"] = s.version;
    doc["theory"] = theory_name(s.theory);
    switch (s.theory) {
        case Scenario::Theory::Pairwise:
            doc["state"] = state_to_json(*s.pairwise);
            break;
        case Scenario::Theory::Sequential: {
            doc["initial"] = ensemble_to_json(*s.initial);
            json seq = json::array();
            for (ObservableId id : s.sequence) seq.push_back(observable_name(id));
            doc["sequence"] = seq;
            break;
        }
        case Scenario::Theory::Quantum:
            doc["matrix_a"] = matrix_to_json(s.matrices->first);
            doc["matrix_b"] = matrix_to_json(s.matrices->second);
            break;
    }
    return doc.dump(2) + "\n";
}

Scenario make_pairwise_scenario(const PairwiseState& state) {
    Scenario s;
    s.theory = Scenario::Theory::Pairwise;
    s.pairwise = state;
    return s;
}

Scenario make_sequential_scenario(const Ensemble& initial,
                                  const std::vector<ObservableId>& sequence) {
    Scenario s;
    s.theory = Scenario::Theory::Sequential;
    s.initial = initial;
    s.sequence = sequence;
    return s;
}

Scenario make_quantum_scenario(const Matrix& a, const Matrix& b) {
    Scenario s;
    s.theory = Scenario::Theory::Quantum;
    s.matrices = std::make_pair(a, b);
    return s;
}

namespace {

void require_sequential(const Scenario& s) {
    if (s.theory != Scenario::Theory::Sequential || !s.initial) {
        throw Error(ErrorCode::BadArgument,
                    "simulation needs a sequential scenario");
    }
}

std::string outcomes_label(const std::vector<Outcome>& outcomes) {
    std::string out = "(";
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (i) out += ",";
        out += outcomes[i] == Outcome::Plus ? "+1" : "-1";
    }
    return out + ")";
}

}  // namespace

Report simulate_exact(const Scenario& s) {
    require_sequential(s);
    SequenceResult result = run_sequence(*s.initial, s.sequence);

    Report report;
    std::string seq_label;
    for (std::size_t i = 0; i < s.sequence.size(); ++i) {
        if (i) seq_label += ' ';
        seq_label += observable_name(s.sequence[i]);
    }
    report.add("exact branch distribution for sequence [" + seq_label + "]");
    for (const auto& [branch, p] : result.branches.entries()) {
        report.add("branch " + outcomes_label(branch.first) + " state {" +
                   branch.second.to_string() + "} prob " + p.to_string());
        ++report.checked;
    }

    // Outcome-tuple marginal; for short sequences enumerate every tuple so
    // zero-probability entries are visible.
    auto marginal = result.outcome_distribution();
    report.add("outcome distribution:");
    if (s.sequence.size() <= 4) {
        std::size_t count = std::size_t(1) << s.sequence.size();
        for (std::size_t code = 0; code < count; ++code) {
            std::vector<Outcome> outcomes(s.sequence.size());
            for (std::size_t i = 0; i < s.sequence.size(); ++i) {
                outcomes[i] = outcome_from_bit((code >> i) & 1u);
            }
            report.add("  " + outcomes_label(outcomes) + ": " +
                       marginal.probability(outcomes).to_string());
        }
    } else {
        for (const auto& [outcomes, p] : marginal.entries()) {
            report.add("  " + outcomes_label(outcomes) + ": " + p.to_string());
        }
    }
    return report;
}

Report simulate_sample(const Scenario& s, std::uint64_t draws, std::uint64_t seed) {
    require_sequential(s);
    if (draws == 0) {
        throw Error(ErrorCode::BadArgument, "sample count must be positive");
    }
    SequenceResult exact = run_sequence(*s.initial, s.sequence);

    SeedStream stream(seed);
    std::map<std::pair<std::vector<Outcome>, PureState>, std::uint64_t> counts;
    for (std::uint64_t i = 0; i < draws; ++i) {
        counts[sample_sequence(*s.initial, s.sequence, stream)] += 1;
    }

    Report report;
    report.add("sampled " + std::to_string(draws) + " rollouts with seed " +
               std::to_string(seed));
    report.add("branch | exact | empirical | deviation/sigma");
    for (const auto& [branch, p] : exact.branches.entries()) {
        std::uint64_t n = counts.count(branch) ? counts.at(branch) : 0;
        double exact_p = p.to_double();
        double freq = static_cast<double>(n) / static_cast<double>(draws);
        double sigma =
            std::sqrt(exact_p * (1.0 - exact_p) / static_cast<double>(draws));
        std::ostringstream line;
        line.precision(6);
        line << outcomes_label(branch.first) << " {" << branch.second.to_string()
             << "} | " << p.to_string() << " | " << freq << " | ";
        if (sigma == 0.0) {
            line << (freq == exact_p ? "exact" : "IMPOSSIBLE");
        } else {
            line << (freq - exact_p) / sigma;
        }
        report.add(line.str());
        ++report.checked;
        if (sigma == 0.0 ? freq != exact_p
                         : std::abs(freq - exact_p) > 5.0 * sigma) {
            ++report.violations;
        }
    }
    // A rollout outside the exact support would be a sampler bug.
    for (const auto& [branch, n] : counts) {
        if (exact.branches.probability(branch).is_zero()) {
            ++report.violations;
            report.add("IMPOSSIBLE branch sampled " + std::to_string(n) +
                       " times: " + outcomes_label(branch.first));
        }
    }
    report.add(report.violations == 0
                   ? "all branches within 5 sigma of exact"
                   : "some branches deviate beyond 5 sigma");
    return report;
}

}  // namespace nonloc
