// Command-line front end for the nonloc shared library. Every subcommand
// goes through the C API; exit codes are 0 (clean), 1 (violations found),
// 2 (input error).

#include "nonloc/nonloc.h"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

constexpr int EXIT_CLEAN = 0;
constexpr int EXIT_VIOLATIONS = 1;
constexpr int EXIT_INPUT_ERROR = 2;

struct Options {
    std::string format = "text";
};

int fail_input(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return EXIT_INPUT_ERROR;
}

int fail_status(nlc_status status) {
    std::cerr << "error: " << nlc_status_name(status) << ": " << nlc_last_error()
              << "\n";
    return EXIT_INPUT_ERROR;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    out = buffer.str();
    return true;
}

// Prints the report per --format and frees it; returns the exit code.
int finish(const Options& opts, nlc_report* report) {
    uint64_t checked = nlc_report_checked(report);
    uint64_t violations = nlc_report_violations(report);
    std::string trailer = "# checked=" + std::to_string(checked) +
                          " violations=" + std::to_string(violations) +
                          " status=" + (violations == 0 ? "clean" : "violations");
    if (opts.format == "machine") {
        std::cout << trailer << "\n";
    } else {
        std::cout << nlc_report_body(report) << trailer << "\n";
    }
    nlc_report_free(report);
    return violations == 0 ? EXIT_CLEAN : EXIT_VIOLATIONS;
}

// Loads a pairwise state from a scenario file or the built-in PR box and
// rejects states that fail validation.
int load_state(const std::string& file, bool pr_box, nlc_state** out) {
    if (pr_box == !file.empty()) {
        return fail_input("give exactly one of a state file or --pr-box");
    }
    nlc_status status;
    if (pr_box) {
        status = nlc_state_pr_box(out);
        if (status != NLC_OK) return fail_status(status);
        return -1;
    }
    std::string text;
    if (!read_file(file, text)) return fail_input("cannot read " + file);
    status = nlc_state_parse(text.c_str(), out);
    if (status != NLC_OK) return fail_status(status);

    nlc_report* validation = nullptr;
    status = nlc_report_validate(*out, &validation);
    if (status != NLC_OK) return fail_status(status);
    if (nlc_report_violations(validation) != 0) {
        std::cerr << "error: invalid state:\n" << nlc_report_body(validation);
        nlc_report_free(validation);
        return EXIT_INPUT_ERROR;
    }
    nlc_report_free(validation);
    return -1;  // loaded
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact simulators and verifiers for two nonlocal toy theories"};
    app.require_subcommand(1);

    Options opts;
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();

    // ---- chsh ----
    std::string chsh_file;
    bool chsh_pr_box = false;
    auto* cmd_chsh = app.add_subcommand(
        "chsh", "correlators, best sign pattern and CHSH value of a state");
    cmd_chsh->add_option("file", chsh_file, "pairwise scenario file");
    cmd_chsh->add_flag("--pr-box", chsh_pr_box, "use the built-in PR-box state");

    // ---- validate ----
    std::string validate_file;
    auto* cmd_validate = app.add_subcommand(
        "validate", "normalization and marginal-consistency checks");
    cmd_validate->add_option("file", validate_file, "pairwise scenario file")
        ->required();

    // ---- state ----
    std::string state_file;
    bool state_pr_box = false;
    auto* cmd_state = app.add_subcommand(
        "state", "emit a pairwise state as a canonical scenario document");
    cmd_state->add_option("file", state_file, "pairwise scenario file");
    cmd_state->add_flag("--pr-box", state_pr_box, "emit the built-in PR-box state");

    // ---- verify ----
    bool verify_nondisturbance = false;
    bool verify_no_signaling = false;
    bool verify_correlations = false;
    int verify_depth = 4;
    int verify_bob = 2;
    int verify_alice = 2;
    std::string verify_mutate = "none";
    auto* cmd_verify =
        app.add_subcommand("verify", "exhaustive sequential-theory verifiers");
    cmd_verify->add_flag("--nondisturbance", verify_nondisturbance,
                         "repeated measurements must agree");
    cmd_verify->add_flag("--no-signaling", verify_no_signaling,
                         "receiver marginals independent of the other party");
    cmd_verify->add_flag("--correlations", verify_correlations,
                         "fresh-state correlations vs the PR box");
    cmd_verify->add_option("--depth", verify_depth, "nondisturbance depth")
        ->capture_default_str();
    cmd_verify->add_option("--bob", verify_bob, "receiver sequence depth")
        ->capture_default_str();
    cmd_verify->add_option("--alice", verify_alice, "other-party sequence depth")
        ->capture_default_str();
    cmd_verify
        ->add_option("--mutate", verify_mutate,
                     "corrupt the transition rules (verifiers must then fail)")
        ->check(CLI::IsMember({"none", "no-flip", "no-actualize"}))
        ->capture_default_str();

    // ---- simulate ----
    std::string sim_file;
    bool sim_exact = false;
    std::uint64_t sim_samples = 0;
    std::uint64_t sim_seed = 0;
    auto* cmd_simulate =
        app.add_subcommand("simulate", "run a sequential scenario");
    cmd_simulate->add_option("file", sim_file, "sequential scenario file")
        ->required();
    cmd_simulate->add_flag("--exact", sim_exact, "exact branch distribution");
    cmd_simulate->add_option("--sample", sim_samples, "Monte Carlo rollouts");
    cmd_simulate->add_option("--seed", sim_seed, "sampling seed")
        ->capture_default_str();

    // ---- lhv ----
    std::string lhv_file;
    bool lhv_pr_box = false;
    bool lhv_expect_feasible = false;
    bool lhv_expect_infeasible = false;
    auto* cmd_lhv = app.add_subcommand(
        "lhv", "exact local-hidden-variable feasibility of a state");
    cmd_lhv->add_option("file", lhv_file, "pairwise scenario file");
    cmd_lhv->add_flag("--pr-box", lhv_pr_box, "use the built-in PR-box state");
    cmd_lhv->add_flag("--expect-feasible", lhv_expect_feasible,
                      "exit 1 unless the verdict is FEASIBLE");
    cmd_lhv->add_flag("--expect-infeasible", lhv_expect_infeasible,
                      "exit 1 unless the verdict is INFEASIBLE");

    // ---- lemma1 ----
    std::string lemma_file;
    std::string lemma_example;
    std::uint64_t lemma_seed = 0;
    double lemma_tolerance = 0.0;
    auto* cmd_lemma = app.add_subcommand(
        "lemma1", "commutativity vs joint measurability and nondisturbance");
    cmd_lemma->add_option("file", lemma_file,
                          "matrix pair file (two plain-text blocks)");
    cmd_lemma
        ->add_option("--example", lemma_example,
                     "built-in example: pauli-xz, random-commuting, random-generic")
        ->check(CLI::IsMember({"pauli-xz", "random-commuting", "random-generic"}));
    cmd_lemma->add_option("--seed", lemma_seed, "seed for the random examples")
        ->capture_default_str();
    cmd_lemma->add_option("--tolerance", lemma_tolerance,
                          "numerical tolerance (default 1e-9)");

    // ---- compare-models ----
    int compare_depth = 3;
    auto* cmd_compare = app.add_subcommand(
        "compare-models", "sequential toy theory vs the PR-box memory model");
    cmd_compare->add_option("--depth", compare_depth, "maximum sequence length")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return EXIT_INPUT_ERROR;
    }

    nlc_status status;
    nlc_report* report = nullptr;

    if (*cmd_chsh) {
        nlc_state* state = nullptr;
        int rc = load_state(chsh_file, chsh_pr_box, &state);
        if (rc >= 0) return rc;
        status = nlc_report_chsh(state, &report);
        nlc_state_free(state);
        if (status != NLC_OK) return fail_status(status);
        return finish(opts, report);
    }

    if (*cmd_state) {
        nlc_state* state = nullptr;
        if (state_pr_box == !state_file.empty()) {
            return fail_input("give exactly one of a state file or --pr-box");
        }
        if (state_pr_box) {
            status = nlc_state_pr_box(&state);
        } else {
            std::string text;
            if (!read_file(state_file, text)) {
                return fail_input("cannot read " + state_file);
            }
            status = nlc_state_parse(text.c_str(), &state);
        }
        if (status != NLC_OK) return fail_status(status);
        char* text = nullptr;
        status = nlc_state_emit(state, &text);
        nlc_state_free(state);
        if (status != NLC_OK) return fail_status(status);
        std::cout << text;
        nlc_string_free(text);
        return EXIT_CLEAN;
    }

    if (*cmd_validate) {
        std::string text;
        if (!read_file(validate_file, text)) {
            return fail_input("cannot read " + validate_file);
        }
        nlc_state* state = nullptr;
        status = nlc_state_parse(text.c_str(), &state);
        if (status != NLC_OK) return fail_status(status);
        status = nlc_report_validate(state, &report);
        nlc_state_free(state);
        if (status != NLC_OK) return fail_status(status);
        return finish(opts, report);
    }

    if (*cmd_verify) {
        int modes = (verify_nondisturbance ? 1 : 0) +
                    (verify_no_signaling ? 1 : 0) + (verify_correlations ? 1 : 0);
        if (modes != 1) {
            return fail_input(
                "choose one of --nondisturbance, --no-signaling, --correlations");
        }
        nlc_mutation rules = NLC_RULES_STANDARD;
        if (verify_mutate == "no-flip") rules = NLC_RULES_POTENTIAL_AS_ACTUAL;
        if (verify_mutate == "no-actualize") rules = NLC_RULES_SKIP_ACTUALIZATION;
        if (verify_nondisturbance) {
            status = nlc_report_nondisturbance(verify_depth, rules, &report);
        } else if (verify_no_signaling) {
            status = nlc_report_no_signaling(verify_bob, verify_alice, rules,
                                             &report);
        } else {
            if (rules != NLC_RULES_STANDARD) {
                return fail_input("--mutate applies to the sequence verifiers");
            }
            status = nlc_report_correlations(&report);
        }
        if (status != NLC_OK) return fail_status(status);
        return finish(opts, report);
    }

    if (*cmd_simulate) {
        if (sim_exact == (sim_samples > 0)) {
            return fail_input("choose exactly one of --exact or --sample N");
        }
        std::string text;
        if (!read_file(sim_file, text)) {
            return fail_input("cannot read " + sim_file);
        }
        if (sim_exact) {
            status = nlc_report_simulate_exact(text.c_str(), &report);
        } else {
            status = nlc_report_simulate_sample(text.c_str(), sim_samples,
                                                sim_seed, &report);
        }
        if (status != NLC_OK) return fail_status(status);
        return finish(opts, report);
    }

    if (*cmd_lhv) {
        if (lhv_expect_feasible && lhv_expect_infeasible) {
            return fail_input("contradictory expectations");
        }
        nlc_state* state = nullptr;
        int rc = load_state(lhv_file, lhv_pr_box, &state);
        if (rc >= 0) return rc;
        int expect = lhv_expect_feasible ? 1 : (lhv_expect_infeasible ? 0 : -1);
        status = nlc_report_lhv(state, expect, &report);
        nlc_state_free(state);
        if (status != NLC_OK) return fail_status(status);
        return finish(opts, report);
    }

    if (*cmd_lemma) {
        if (lemma_example.empty() == lemma_file.empty()) {
            return fail_input("give exactly one of a matrix file or --example");
        }
        if (!lemma_file.empty()) {
            std::string text;
            if (!read_file(lemma_file, text)) {
                return fail_input("cannot read " + lemma_file);
            }
            status = nlc_report_lemma1_text(text.c_str(), lemma_tolerance, &report);
        } else {
            status = nlc_report_lemma1_named(lemma_example.c_str(), lemma_seed,
                                             lemma_tolerance, &report);
        }
        if (status != NLC_OK) return fail_status(status);
        return finish(opts, report);
    }

    if (*cmd_compare) {
        status = nlc_report_compare_models(compare_depth, &report);
        if (status != NLC_OK) return fail_status(status);
        return finish(opts, report);
    }

    return fail_input("no subcommand");
}
