#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nonloc/nonloc.h"

#include <string>

TEST_CASE("version and status names") {
    CHECK(std::string(nlc_version()) == "1.0.0");
    CHECK(std::string(nlc_status_name(NLC_OK)) == "ok");
    CHECK(std::string(nlc_status_name(NLC_ERR_PARSE)) == "parse error");
}

TEST_CASE("pr-box state: emit, parse, chsh") {
    nlc_state* state = nullptr;
    REQUIRE(nlc_state_pr_box(&state) == NLC_OK);

    char* text = nullptr;
    REQUIRE(nlc_state_emit(state, &text) == NLC_OK);
    std::string document(text);
    nlc_string_free(text);
    CHECK(document.find("\"theory\": \"pairwise\"") != std::string::npos);

    nlc_state* reparsed = nullptr;
    REQUIRE(nlc_state_parse(document.c_str(), &reparsed) == NLC_OK);

    nlc_report* report = nullptr;
    REQUIRE(nlc_report_chsh(reparsed, &report) == NLC_OK);
    std::string body(nlc_report_body(report));
    CHECK(body.find("CHSH value 4/1") != std::string::npos);
    CHECK(body.find("(+,+,+,-)") != std::string::npos);
    CHECK(nlc_report_violations(report) == 0);
    nlc_report_free(report);

    REQUIRE(nlc_report_validate(state, &report) == NLC_OK);
    CHECK(nlc_report_violations(report) == 0);
    CHECK(nlc_report_checked(report) == 30);  // 6 normalization + 24 marginal
    nlc_report_free(report);

    nlc_state_free(reparsed);
    nlc_state_free(state);
}

TEST_CASE("lhv verdict and expectation flags") {
    nlc_state* state = nullptr;
    REQUIRE(nlc_state_pr_box(&state) == NLC_OK);

    nlc_report* report = nullptr;
    REQUIRE(nlc_report_lhv(state, -1, &report) == NLC_OK);
    std::string body(nlc_report_body(report));
    CHECK(body.find("INFEASIBLE") != std::string::npos);
    CHECK(body.find("CHSH witness 4/1 > 2") != std::string::npos);
    CHECK(nlc_report_violations(report) == 0);
    nlc_report_free(report);

    // expecting feasibility turns the verdict into a violation
    REQUIRE(nlc_report_lhv(state, 1, &report) == NLC_OK);
    CHECK(nlc_report_violations(report) == 1);
    nlc_report_free(report);

    REQUIRE(nlc_report_lhv(state, 0, &report) == NLC_OK);
    CHECK(nlc_report_violations(report) == 0);
    nlc_report_free(report);

    nlc_state_free(state);
}

TEST_CASE("parse failures set the status and the error message") {
    nlc_state* state = nullptr;
    CHECK(nlc_state_parse("not json", &state) == NLC_ERR_PARSE);
    CHECK(std::string(nlc_last_error()).size() > 0);
    CHECK(nlc_state_parse(nullptr, &state) == NLC_ERR_BAD_ARGUMENT);

    nlc_report* report = nullptr;
    CHECK(nlc_report_nondisturbance(1, NLC_RULES_STANDARD, &report) ==
          NLC_ERR_BAD_ARGUMENT);
    CHECK(nlc_report_lemma1_named("nonsense", 0, 0.0, &report) ==
          NLC_ERR_BAD_ARGUMENT);
}

TEST_CASE("sequential verifiers through the C surface") {
    nlc_report* report = nullptr;
    REQUIRE(nlc_report_nondisturbance(2, NLC_RULES_STANDARD, &report) == NLC_OK);
    CHECK(nlc_report_violations(report) == 0);
    CHECK(nlc_report_checked(report) == 625u * 16u);
    nlc_report_free(report);

    REQUIRE(nlc_report_no_signaling(1, 1, NLC_RULES_STANDARD, &report) == NLC_OK);
    CHECK(nlc_report_violations(report) == 0);
    nlc_report_free(report);

    REQUIRE(nlc_report_no_signaling(2, 1, NLC_RULES_POTENTIAL_AS_ACTUAL,
                                    &report) == NLC_OK);
    CHECK(nlc_report_violations(report) > 0);
    nlc_report_free(report);

    REQUIRE(nlc_report_correlations(&report) == NLC_OK);
    CHECK(nlc_report_violations(report) == 0);
    nlc_report_free(report);

    REQUIRE(nlc_report_compare_models(2, &report) == NLC_OK);
    CHECK(nlc_report_checked(report) == 20);  // 4 + 16 sequences
    nlc_report_free(report);
}

TEST_CASE("simulation through the C surface") {
    const char* scenario = R"({
      "version": 1,
      "theory": "sequential",
      "initial": [["1/1", "a1:0 a2:0 b1:0 b2:0"]],
      "sequence": ["A1", "B1"]
    })";
    nlc_report* report = nullptr;
    REQUIRE(nlc_report_simulate_exact(scenario, &report) == NLC_OK);
    std::string body(nlc_report_body(report));
    CHECK(body.find("(+1,+1): 1/2") != std::string::npos);
    nlc_report_free(report);

    REQUIRE(nlc_report_simulate_sample(scenario, 5000, 42, &report) == NLC_OK);
    CHECK(nlc_report_violations(report) == 0);
    std::string first(nlc_report_body(report));
    nlc_report_free(report);
    REQUIRE(nlc_report_simulate_sample(scenario, 5000, 42, &report) == NLC_OK);
    CHECK(std::string(nlc_report_body(report)) == first);
    nlc_report_free(report);
}

TEST_CASE("lemma checks through the C surface") {
    nlc_report* report = nullptr;
    REQUIRE(nlc_report_lemma1_named("pauli-xz", 0, 0.0, &report) == NLC_OK);
    std::string body(nlc_report_body(report));
    CHECK(body.find("commutes:            no") != std::string::npos);
    CHECK(body.find("four-way agreement: yes") != std::string::npos);
    nlc_report_free(report);

    const char* pair_text =
        "2\n1+0i 0+0i\n0+0i -1+0i\n"
        "2\n2+0i 0+0i\n0+0i 5+0i\n";
    REQUIRE(nlc_report_lemma1_text(pair_text, 0.0, &report) == NLC_OK);
    CHECK(std::string(nlc_report_body(report)).find("commutes:            yes") !=
          std::string::npos);
    nlc_report_free(report);

    CHECK(nlc_report_lemma1_text("2\n1+0i 1+0i\n0+0i 1+0i\n2\n1+0i 0+0i\n0+0i 1+0i\n",
                                 0.0, &report) == NLC_ERR_NOT_HERMITIAN);
}
