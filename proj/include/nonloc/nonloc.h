/* nonloc — exact simulators and verifiers for two nonlocal toy theories
 * and a commutativity lemma checker, behind a C API.
 *
 * All functions returning nlc_status put their result in an out-parameter
 * on NLC_OK and leave it untouched otherwise; nlc_last_error() carries the
 * detail message of the most recent failure on the calling thread. Every
 * object handed out (states, reports, strings) is owned by the caller and
 * released with the matching *_free function.
 */
#ifndef NONLOC_H
#define NONLOC_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nlc_status {
    NLC_OK = 0,
    NLC_ERR_PARSE = 1,
    NLC_ERR_BAD_ARGUMENT = 2,
    NLC_ERR_INVALID_STATE = 3,
    NLC_ERR_DIMENSION = 4,
    NLC_ERR_NOT_HERMITIAN = 5,
    NLC_ERR_DEGENERATE = 6,
    NLC_ERR_EQUIVALENCE = 7,
    NLC_ERR_INTERNAL = 8
} nlc_status;

/* Transition-rule mutations for the sequential-theory verifiers. */
typedef enum nlc_mutation {
    NLC_RULES_STANDARD = 0,
    NLC_RULES_POTENTIAL_AS_ACTUAL = 1, /* partner flip disabled */
    NLC_RULES_SKIP_ACTUALIZATION = 2   /* measured value not actualized */
} nlc_mutation;

typedef struct nlc_state nlc_state;   /* a parsed pairwise-theory state */
typedef struct nlc_report nlc_report; /* verifier / simulator output */

const char* nlc_version(void);
const char* nlc_status_name(nlc_status status);

/* Thread-local message for the most recent failing call. */
const char* nlc_last_error(void);

void nlc_string_free(char* text);

/* ---- pairwise-theory states ------------------------------------------- */

/* Parses a scenario document with theory "pairwise". */
nlc_status nlc_state_parse(const char* text, nlc_state** out);

/* The PR-box state (cross-party PR tables, uniform local joints). */
nlc_status nlc_state_pr_box(nlc_state** out);

/* Canonical scenario document for the state; caller frees. */
nlc_status nlc_state_emit(const nlc_state* state, char** out);

void nlc_state_free(nlc_state* state);

/* Normalization + marginal-consistency report (failures are report
 * entries, not errors). */
nlc_status nlc_report_validate(const nlc_state* state, nlc_report** out);

/* Correlators, best odd-minus sign pattern and CHSH value. */
nlc_status nlc_report_chsh(const nlc_state* state, nlc_report** out);

/* Exact local-hidden-variable feasibility. `expect` < 0: no expectation;
 * 0: expect infeasible; 1: expect feasible. A missed expectation counts as
 * a report violation. */
nlc_status nlc_report_lhv(const nlc_state* state, int expect, nlc_report** out);

/* ---- sequential-theory verifiers -------------------------------------- */

nlc_status nlc_report_nondisturbance(int depth, nlc_mutation rules,
                                     nlc_report** out);

nlc_status nlc_report_no_signaling(int receiver_depth, int other_depth,
                                   nlc_mutation rules, nlc_report** out);

/* Fresh-state correlation tables in both time orders vs the PR box. */
nlc_status nlc_report_correlations(nlc_report** out);

/* Sequential toy theory vs the PR-box memory model, exact, all sequences
 * of length <= depth. */
nlc_status nlc_report_compare_models(int depth, nlc_report** out);

/* ---- simulation -------------------------------------------------------- */

/* Scenario document with theory "sequential". */
nlc_status nlc_report_simulate_exact(const char* scenario_text, nlc_report** out);

nlc_status nlc_report_simulate_sample(const char* scenario_text, uint64_t draws,
                                      uint64_t seed, nlc_report** out);

/* ---- commutativity lemma ----------------------------------------------- */

/* Two plain-text matrix blocks (dimension line, then rows of complex
 * entries such as "0+0i 1+0i"). tolerance <= 0 selects the default. */
nlc_status nlc_report_lemma1_text(const char* matrix_pair_text, double tolerance,
                                  nlc_report** out);

/* Named examples: "pauli-xz", "random-commuting", "random-generic". */
nlc_status nlc_report_lemma1_named(const char* name, uint64_t seed,
                                   double tolerance, nlc_report** out);

/* ---- reports ------------------------------------------------------------ */

/* Body text (newline-terminated lines, no trailer); owned by the report. */
const char* nlc_report_body(const nlc_report* report);
uint64_t nlc_report_checked(const nlc_report* report);
uint64_t nlc_report_violations(const nlc_report* report);

void nlc_report_free(nlc_report* report);

#ifdef __cplusplus
}
#endif

#endif /* NONLOC_H */
