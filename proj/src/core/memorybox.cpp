#include "core/memorybox.hpp"

#include "core/error.hpp"

#include <map>
#include <tuple>

namespace nonloc {

namespace {

int party_slot(Party p) { return p == Party::Alice ? 0 : 1; }

// Observable index (1 or 2) within its party.
int obs_index(ObservableId m) { return static_cast<int>(m) % 2 + 1; }

ObservableId local_partner(ObservableId m) {
    switch (m) {
        case ObservableId::A1: return ObservableId::A2;
        case ObservableId::A2: return ObservableId::A1;
        case ObservableId::B1: return ObservableId::B2;
        case ObservableId::B2: return ObservableId::B1;
    }
    throw Error(ErrorCode::Internal, "bad observable");
}

ObservableId by_party_index(Party p, int index) {
    int base = p == Party::Alice ? 0 : 2;
    return static_cast<ObservableId>(base + index - 1);
}

int encode_bit(const std::optional<Outcome>& b) {
    return b ? (*b == Outcome::Plus ? 2 : 1) : 0;
}

}  // namespace

bool operator<(const MemoryBoxState& a, const MemoryBoxState& b) {
    auto key = [](const MemoryBoxState& s) {
        return std::make_tuple(encode_bit(s.bits[0]), encode_bit(s.bits[1]),
                               encode_bit(s.bits[2]), encode_bit(s.bits[3]),
                               s.first_used[0], s.first_used[1]);
    };
    return key(a) < key(b);
}

std::string MemoryBoxState::to_string() const {
    static const char* const SLOT[4] = {"a1", "a2", "b1", "b2"};
    std::string out;
    for (int i = 0; i < 4; ++i) {
        if (i) out += ' ';
        out += SLOT[i];
        out += ':';
        out += bits[i] ? (*bits[i] == Outcome::Plus ? "+1" : "-1") : "?";
    }
    return out;
}

Dist<std::pair<Outcome, MemoryBoxState>> memory_box_transition(
    const MemoryBoxState& s, ObservableId m) {
    using Branch = std::pair<Outcome, MemoryBoxState>;
    std::map<Branch, Rational> weights;

    Party p = party(m);
    if (s.used(p)) {
        // Replays the stored bit; both bits were set on first use.
        Outcome o = *s.bits[static_cast<int>(m)];
        weights[{o, s}] = Rational(1);
        return Dist<Branch>::from_exact(weights);
    }

    Party q = p == Party::Alice ? Party::Bob : Party::Alice;
    int i = obs_index(m);
    ObservableId partner = local_partner(m);

    if (!s.used(q)) {
        // First box use overall: this side's outcome is uniform.
        for (Outcome o : BOTH_OUTCOMES) {
            for (Outcome r : BOTH_OUTCOMES) {
                MemoryBoxState post = s;
                post.bits[static_cast<int>(m)] = o;
                post.bits[static_cast<int>(partner)] = r;
                post.first_used[party_slot(p)] = i;
                weights[{o, post}] = Rational(1, 4);
            }
        }
    } else {
        // The other party already queried the box with index j and got the
        // value stored in its first-used bit; the PR conditional fixes this
        // outcome (anticorrelated only for inputs 2,2).
        int j = s.first_used[party_slot(q)];
        Outcome v = *s.bits[static_cast<int>(by_party_index(q, j))];
        Outcome o = (i == 2 && j == 2) ? flip(v) : v;
        for (Outcome r : BOTH_OUTCOMES) {
            MemoryBoxState post = s;
            post.bits[static_cast<int>(m)] = o;
            post.bits[static_cast<int>(partner)] = r;
            post.first_used[party_slot(p)] = i;
            weights[{o, post}] = Rational(1, 2);
        }
    }
    return Dist<Branch>::from_exact(weights);
}

std::pair<Outcome, MemoryBoxState> memory_box_measure(const MemoryBoxState& s,
                                                      ObservableId m,
                                                      SeedStream& stream) {
    return memory_box_transition(s, m).sample(stream);
}

Dist<std::vector<Outcome>> memory_box_sequence(
    const std::vector<ObservableId>& seq) {
    using Branch = std::pair<std::vector<Outcome>, MemoryBoxState>;
    std::map<Branch, Rational> cur;
    cur[{{}, MemoryBoxState::fresh()}] = Rational(1);
    for (ObservableId m : seq) {
        std::map<Branch, Rational> next;
        for (const auto& [branch, p] : cur) {
            auto transition = memory_box_transition(branch.second, m);
            for (const auto& [step, q] : transition.entries()) {
                std::vector<Outcome> outcomes = branch.first;
                outcomes.push_back(step.first);
                next[Branch{std::move(outcomes), step.second}] += p * q;
            }
        }
        cur = std::move(next);
    }
    std::map<std::vector<Outcome>, Rational> marginal;
    for (const auto& [branch, p] : cur) marginal[branch.first] += p;
    return Dist<std::vector<Outcome>>::from_exact(marginal);
}

Report compare_models(int max_len) {
    if (max_len < 1) {
        throw Error(ErrorCode::BadArgument, "compare depth must be >= 1");
    }
    Report report;
    Ensemble fresh_toy = Ensemble::point(PureState::all_undetermined());

    std::vector<std::vector<ObservableId>> sequences;
    for (int len = 1; len <= max_len; ++len) {
        std::size_t count = 1;
        for (int i = 0; i < len; ++i) count *= 4;
        for (std::size_t code = 0; code < count; ++code) {
            std::vector<ObservableId> seq(len);
            std::size_t c = code;
            for (int i = 0; i < len; ++i) {
                seq[i] = static_cast<ObservableId>(c % 4);
                c /= 4;
            }
            sequences.push_back(std::move(seq));
        }
    }

    report.add("model comparison: sequential toy theory (all-undetermined start)"
               " vs PR-box memory model (fresh start)");
    report.add("sequences of length 1.." + std::to_string(max_len) + ": " +
               std::to_string(sequences.size()));

    for (const auto& seq : sequences) {
        auto toy = run_sequence(fresh_toy, seq).outcome_distribution();
        auto box = memory_box_sequence(seq);
        ++report.checked;
        if (toy != box) {
            ++report.violations;
            auto render = [](const Dist<std::vector<Outcome>>& d) {
                std::string out;
                for (const auto& [outcomes, p] : d.entries()) {
                    out += "(";
                    for (std::size_t i = 0; i < outcomes.size(); ++i) {
                        if (i) out += ",";
                        out += outcomes[i] == Outcome::Plus ? "+1" : "-1";
                    }
                    out += ")=" + p.to_string() + " ";
                }
                return out;
            };
            std::string name;
            for (std::size_t i = 0; i < seq.size(); ++i) {
                if (i) name += ' ';
                name += observable_name(seq[i]);
            }
            report.add("divergence: [" + name + "] toy {" + render(toy) +
                       "} box {" + render(box) + "}");
        }
    }
    if (report.violations == 0) {
        report.add("no divergences: the models agree exactly on every sequence");
    }
    report.add("checked " + std::to_string(report.checked) + " sequences, " +
               std::to_string(report.violations) + " divergences");
    return report;
}

}  // namespace nonloc
