#pragma once

#include "core/report.hpp"
#include "core/rng.hpp"

#include <Eigen/Dense>

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nonloc {

using Matrix = Eigen::MatrixXcd;

/// Largest singular value.
double operator_norm(const Matrix& m);

constexpr double DEFAULT_TOLERANCE = 1e-9;
constexpr double CLUSTER_GAP = 1e-6;
constexpr int MAX_DIMENSION = 8;

/// A Hermitian observable together with its spectral decomposition into
/// eigenvalue/projector pairs (eigenvalues clustered, projectors spanning
/// the clustered eigenspaces).
struct ProjectiveObservable {
    int dimension;
    Matrix matrix;
    std::vector<std::pair<double, Matrix>> spectrum;
};

/// Clusters eigenvalues with gap threshold CLUSTER_GAP and builds the
/// projectors. Throws NotHermitian when the input is not Hermitian within
/// tau, and DegenerateClustering when some eigenvalue gap is too close to
/// the clustering threshold to split unambiguously.
ProjectiveObservable spectral_decompose(const Matrix& h,
                                        double tau = DEFAULT_TOLERANCE);

struct CommuteResult {
    bool commutes;
    double residual;  // ||AB - BA|| in operator norm
};

CommuteResult commutes(const ProjectiveObservable& a,
                       const ProjectiveObservable& b,
                       double tau = DEFAULT_TOLERANCE);

struct PropertyAResult {
    bool holds;
    /// max over projector products of Hermiticity / idempotence deviation
    double product_residual;
    /// max deviation of the joint observable's marginals from the direct
    /// outcome distributions over the tomographic test states (when holds)
    double marginal_residual;
    /// the joint observable C built with the index injection (when holds)
    std::optional<Matrix> joint_observable;
};

PropertyAResult check_property_a(const ProjectiveObservable& a,
                                 const ProjectiveObservable& b,
                                 double tau = DEFAULT_TOLERANCE);

struct PropertyBResult {
    bool holds;
    double identity_ab;    // || sum_l P_l Q_m P_l - Q_m ||, max over m
    double identity_ba;    // || sum_m Q_m P_l Q_m - P_l ||, max over l
    /// smallest probability, over the test states, that the two A outcomes
    /// of the sequence ABA agree (and of the two B outcomes of BAB)
    double min_repeat_agreement;
};

PropertyBResult check_property_b(const ProjectiveObservable& a,
                                 const ProjectiveObservable& b,
                                 double tau = DEFAULT_TOLERANCE);

struct PropertyCResult {
    bool holds;            // the A-then-B direction, property (c) proper
    double channel_ab;     // max |P(B=m) direct - after nonselective A|
    double channel_ba;     // the reverse direction, reported separately
    double identity_ab;    // operator identity residual, A-then-B
    double identity_ba;
};

PropertyCResult check_property_c(const ProjectiveObservable& a,
                                 const ProjectiveObservable& b,
                                 double tau = DEFAULT_TOLERANCE);

struct LemmaReport {
    bool commutes;
    bool property_a;
    bool property_b;
    bool property_c;
    std::vector<std::pair<std::string, double>> residuals;
};

/// Runs all four checks and asserts the four booleans agree (the content
/// of the commutativity lemma). Disagreement raises EquivalenceViolation.
LemmaReport lemma1_report(const ProjectiveObservable& a,
                          const ProjectiveObservable& b,
                          double tau = DEFAULT_TOLERANCE);

/// Density matrices spanning the Hermitian operators on dimension d: the
/// computational basis states plus the pairwise superpositions with
/// relative phases 1 and i.
std::vector<Matrix> tomographic_states(int dimension);

/// Pauli X and Z.
std::pair<Matrix, Matrix> pauli_xz();

/// Random pair sharing an eigenbasis (Haar-style basis from the stream,
/// small integer spectra, so clustering sees genuine degeneracies).
std::pair<Matrix, Matrix> random_commuting_pair(int dimension, SeedStream& stream);

/// Two independent random Hermitian matrices; generically noncommuting.
std::pair<Matrix, Matrix> random_generic_pair(int dimension, SeedStream& stream);

/// Plain-text matrix format: a dimension line, then that many rows of
/// whitespace-separated complex entries like "1+0i" or "-0.5-2i"; a pair
/// file holds two such blocks.
Matrix parse_matrix_block(std::istream& in);
std::pair<Matrix, Matrix> parse_matrix_pair(const std::string& text);
std::string format_matrix(const Matrix& m);

/// Renders a LemmaReport; `label` names the pair in the header line.
Report lemma_to_report(const LemmaReport& lemma, const std::string& label);

}  // namespace nonloc
