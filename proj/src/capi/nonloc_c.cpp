#include "nonloc/nonloc.h"

#include "core/error.hpp"
#include "core/memorybox.hpp"
#include "core/pairwise.hpp"
#include "core/quantum.hpp"
#include "core/report.hpp"
#include "core/scenario.hpp"
#include "core/sequential.hpp"

#include <cstring>
#include <string>

using namespace nonloc;

struct nlc_state {
    PairwiseState state;
};

struct nlc_report {
    std::string body;
    std::uint64_t checked;
    std::uint64_t violations;
};

namespace {

thread_local std::string g_last_error;

nlc_status status_of(const Error& e) {
    switch (e.code()) {
        case ErrorCode::ParseError:
            return NLC_ERR_PARSE;
        case ErrorCode::AllZero:
        case ErrorCode::NegativeWeight:
        case ErrorCode::BadWeights:
        case ErrorCode::BadArgument:
            return NLC_ERR_BAD_ARGUMENT;
        case ErrorCode::InconsistentState:
            return NLC_ERR_INVALID_STATE;
        case ErrorCode::DimensionMismatch:
            return NLC_ERR_DIMENSION;
        case ErrorCode::NotHermitian:
            return NLC_ERR_NOT_HERMITIAN;
        case ErrorCode::DegenerateClustering:
            return NLC_ERR_DEGENERATE;
        case ErrorCode::EquivalenceViolation:
            return NLC_ERR_EQUIVALENCE;
        case ErrorCode::Internal:
            return NLC_ERR_INTERNAL;
    }
    return NLC_ERR_INTERNAL;
}

template <typename Fn>
nlc_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return NLC_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return NLC_ERR_INTERNAL;
    }
}

nlc_report* wrap(const Report& report) {
    return new nlc_report{report.body(), report.checked, report.violations};
}

std::string chsh_pattern_name(const SignPattern& pattern) {
    std::string out = "(";
    for (int i = 0; i < 4; ++i) {
        out += pattern[i] > 0 ? "+" : "-";
        if (i < 3) out += ",";
    }
    return out + ")";
}

Report chsh_report(const PairwiseState& s) {
    ChshResult result = chsh(s);
    Report report;
    static const char* const NAMES[4] = {"E(A1,B1)", "E(A1,B2)", "E(A2,B1)",
                                         "E(A2,B2)"};
    for (int i = 0; i < 4; ++i) {
        report.add(std::string(NAMES[i]) + " = " +
                   result.correlators[i].to_string());
    }
    report.add("best sign pattern " + chsh_pattern_name(result.pattern));
    report.add("CHSH value " + result.value.to_string());
    report.add(result.value > Rational(2)
                   ? "exceeds the classical bound 2"
                   : "within the classical bound 2");
    report.checked = 1;
    return report;
}

Report lhv_report(const PairwiseState& s, int expect) {
    LhvVerdict verdict = lhv_feasibility(s);
    Report report;
    ++report.checked;
    if (verdict.feasible) {
        report.add("FEASIBLE: a global joint distribution over the 16 "
                   "deterministic assignments reproduces all six tables");
        for (const auto& [assignment, w] : verdict.witness->entries()) {
            report.add("  " + assignment.to_string() + " -> " + w.to_string());
        }
    } else {
        if (verdict.chsh_witness) {
            report.add("INFEASIBLE; CHSH witness " +
                       verdict.chsh_witness->value.to_string() + " > 2 with pattern " +
                       chsh_pattern_name(verdict.chsh_witness->pattern));
        } else {
            report.add("INFEASIBLE; no CHSH witness (no odd-minus pattern "
                       "exceeds 2)");
        }
    }
    if (expect >= 0) {
        bool expected_feasible = expect == 1;
        if (verdict.feasible != expected_feasible) {
            ++report.violations;
            report.add(std::string("expectation missed: expected ") +
                       (expected_feasible ? "FEASIBLE" : "INFEASIBLE"));
        }
    }
    return report;
}

PairwiseState state_from_scenario_text(const char* text) {
    Scenario scenario = parse_scenario(text);
    if (scenario.theory != Scenario::Theory::Pairwise || !scenario.pairwise) {
        throw Error(ErrorCode::ParseError,
                    "expected a scenario with theory \"pairwise\"");
    }
    return *scenario.pairwise;
}

MeasurementRules rules_of(nlc_mutation m) {
    switch (m) {
        case NLC_RULES_STANDARD: return MeasurementRules::Standard;
        case NLC_RULES_POTENTIAL_AS_ACTUAL:
            return MeasurementRules::PotentialAsActual;
        case NLC_RULES_SKIP_ACTUALIZATION:
            return MeasurementRules::SkipActualization;
    }
    throw Error(ErrorCode::BadArgument, "unknown mutation id");
}

}  // namespace

extern "C" {

const char* nlc_version(void) { return "1.0.0"; }

const char* nlc_status_name(nlc_status status) {
    switch (status) {
        case NLC_OK: return "ok";
        case NLC_ERR_PARSE: return "parse error";
        case NLC_ERR_BAD_ARGUMENT: return "bad argument";
        case NLC_ERR_INVALID_STATE: return "invalid state";
        case NLC_ERR_DIMENSION: return "dimension mismatch";
        case NLC_ERR_NOT_HERMITIAN: return "not Hermitian";
        case NLC_ERR_DEGENERATE: return "degenerate clustering";
        case NLC_ERR_EQUIVALENCE: return "equivalence violation";
        case NLC_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* nlc_last_error(void) { return g_last_error.c_str(); }

void nlc_string_free(char* text) { delete[] text; }

nlc_status nlc_state_parse(const char* text, nlc_state** out) {
    if (!text || !out) return NLC_ERR_BAD_ARGUMENT;
    return guarded([&] { *out = new nlc_state{state_from_scenario_text(text)}; });
}

nlc_status nlc_state_pr_box(nlc_state** out) {
    if (!out) return NLC_ERR_BAD_ARGUMENT;
    return guarded([&] { *out = new nlc_state{pr_box_state()}; });
}

nlc_status nlc_state_emit(const nlc_state* state, char** out) {
    if (!state || !out) return NLC_ERR_BAD_ARGUMENT;
    return guarded([&] {
        std::string text = emit_scenario(make_pairwise_scenario(state->state));
        char* buffer = new char[text.size() + 1];
        std::memcpy(buffer, text.c_str(), text.size() + 1);
        *out = buffer;
    });
}

void nlc_state_free(nlc_state* state) { delete state; }

nlc_status nlc_report_validate(const nlc_state* state, nlc_report** out) {
    if (!state || !out) return NLC_ERR_BAD_ARGUMENT;
    return guarded([&] { *out = wrap(validate(state->state).to_report()); });
}

nlc_status nlc_report_chsh(const nlc_state* state, nlc_report** out) {
    if (!state || !out) return NLC_ERR_BAD_ARGUMENT;
    return guarded([&] { *out = wrap(chsh_report(state->state)); });
}

nlc_status nlc_report_lhv(const nlc_state* state, int expect, nlc_report** out) {
    if (!state || !out) return NLC_ERR_BAD_ARGUMENT;
    return guarded([&] { *out = wrap(lhv_report(state->state, expect)); });
}

nlc_status nlc_report_nondisturbance(int depth, nlc_mutation rules,
                                     nlc_report** out) {
    if (!out) return NLC_ERR_BAD_ARGUMENT;
    return guarded(
        [&] { *out = wrap(check_nondisturbance(depth, rules_of(rules))); });
}

nlc_status nlc_report_no_signaling(int receiver_depth, int other_depth,
                                   nlc_mutation rules, nlc_report** out) {
    if (!out) return NLC_ERR_BAD_ARGUMENT;
    return guarded([&] {
        *out = wrap(check_no_signaling(receiver_depth, other_depth,
                                       rules_of(rules)));
    });
}

nlc_status nlc_report_correlations(nlc_report** out) {
    if (!out) return NLC_ERR_BAD_ARGUMENT;
    return guarded([&] { *out = wrap(correlations_report()); });
}

nlc_status nlc_report_compare_models(int depth, nlc_report** out) {
    if (!out) return NLC_ERR_BAD_ARGUMENT;
    return guarded([&] { *out = wrap(compare_models(depth)); });
}

nlc_status nlc_report_simulate_exact(const char* scenario_text, nlc_report** out) {
    if (!scenario_text || !out) return NLC_ERR_BAD_ARGUMENT;
    return guarded(
        [&] { *out = wrap(simulate_exact(parse_scenario(scenario_text))); });
}

nlc_status nlc_report_simulate_sample(const char* scenario_text, uint64_t draws,
                                      uint64_t seed, nlc_report** out) {
    if (!scenario_text || !out) return NLC_ERR_BAD_ARGUMENT;
    return guarded([&] {
        *out = wrap(simulate_sample(parse_scenario(scenario_text), draws, seed));
    });
}

nlc_status nlc_report_lemma1_text(const char* matrix_pair_text, double tolerance,
                                  nlc_report** out) {
    if (!matrix_pair_text || !out) return NLC_ERR_BAD_ARGUMENT;
    return guarded([&] {
        double tau = tolerance > 0 ? tolerance : DEFAULT_TOLERANCE;
        auto [a, b] = parse_matrix_pair(matrix_pair_text);
        LemmaReport lemma =
            lemma1_report(spectral_decompose(a, tau), spectral_decompose(b, tau),
                          tau);
        *out = wrap(lemma_to_report(lemma, "matrix pair from input"));
    });
}

nlc_status nlc_report_lemma1_named(const char* name, uint64_t seed,
                                   double tolerance, nlc_report** out) {
    if (!name || !out) return NLC_ERR_BAD_ARGUMENT;
    return guarded([&] {
        double tau = tolerance > 0 ? tolerance : DEFAULT_TOLERANCE;
        std::string which = name;
        Matrix a, b;
        std::string label;
        if (which == "pauli-xz") {
            std::tie(a, b) = pauli_xz();
            label = "Pauli X vs Pauli Z";
        } else if (which == "random-commuting" || which == "random-generic") {
            SeedStream stream(seed);
            int dimension = 2 + static_cast<int>(
                                    stream.uniform_below(3).convert_to<int>());
            if (which == "random-commuting") {
                std::tie(a, b) = random_commuting_pair(dimension, stream);
                label = "random commuting pair, dimension " +
                        std::to_string(dimension) + ", seed " +
                        std::to_string(seed);
            } else {
                std::tie(a, b) = random_generic_pair(dimension, stream);
                label = "random generic pair, dimension " +
                        std::to_string(dimension) + ", seed " +
                        std::to_string(seed);
            }
        } else {
            throw Error(ErrorCode::BadArgument,
                        "unknown example \"" + which +
                            "\" (try pauli-xz, random-commuting, random-generic)");
        }
        LemmaReport lemma =
            lemma1_report(spectral_decompose(a, tau), spectral_decompose(b, tau),
                          tau);
        *out = wrap(lemma_to_report(lemma, label));
    });
}

const char* nlc_report_body(const nlc_report* report) {
    return report ? report->body.c_str() : "";
}

uint64_t nlc_report_checked(const nlc_report* report) {
    return report ? report->checked : 0;
}

uint64_t nlc_report_violations(const nlc_report* report) {
    return report ? report->violations : 0;
}

void nlc_report_free(nlc_report* report) { delete report; }

}  // extern "C"
