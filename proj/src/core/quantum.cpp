#include "core/quantum.hpp"

#include "core/error.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

namespace nonloc {

using Complex = std::complex<double>;

double operator_norm(const Matrix& m) {
    if (m.rows() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

ProjectiveObservable spectral_decompose(const Matrix& h, double tau) {
    if (h.rows() != h.cols() || h.rows() < 1 || h.rows() > MAX_DIMENSION) {
        throw Error(ErrorCode::BadArgument,
                    "matrix must be square with dimension 1.." +
                        std::to_string(MAX_DIMENSION));
    }
    if (operator_norm(h - h.adjoint()) > tau) {
        throw Error(ErrorCode::NotHermitian, "matrix is not Hermitian");
    }
    const int n = static_cast<int>(h.rows());

    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    Eigen::VectorXd eigenvalues = solver.eigenvalues();  // ascending
    Matrix vectors = solver.eigenvectors();

    // Gaps well inside the threshold merge; gaps suspiciously close to it
    // are refused rather than split arbitrarily.
    for (int i = 0; i + 1 < n; ++i) {
        double gap = eigenvalues(i + 1) - eigenvalues(i);
        if (gap >= CLUSTER_GAP && gap < 10 * CLUSTER_GAP) {
            throw Error(ErrorCode::DegenerateClustering,
                        "eigenvalue gap " + std::to_string(gap) +
                            " is ambiguous at the clustering threshold");
        }
    }

    ProjectiveObservable out;
    out.dimension = n;
    out.matrix = h;
    int start = 0;
    while (start < n) {
        int end = start + 1;
        while (end < n && eigenvalues(end) - eigenvalues(end - 1) < CLUSTER_GAP) {
            ++end;
        }
        Matrix block = vectors.middleCols(start, end - start);
        Matrix projector = block * block.adjoint();
        double value = eigenvalues.segment(start, end - start).mean();
        out.spectrum.emplace_back(value, std::move(projector));
        start = end;
    }
    return out;
}

namespace {

void require_same_dimension(const ProjectiveObservable& a,
                            const ProjectiveObservable& b) {
    if (a.dimension != b.dimension) {
        throw Error(ErrorCode::DimensionMismatch,
                    "observables have dimensions " + std::to_string(a.dimension) +
                        " and " + std::to_string(b.dimension));
    }
}

}  // namespace

CommuteResult commutes(const ProjectiveObservable& a,
                       const ProjectiveObservable& b, double tau) {
    require_same_dimension(a, b);
    double residual = operator_norm(a.matrix * b.matrix - b.matrix * a.matrix);
    return {residual <= tau, residual};
}

std::vector<Matrix> tomographic_states(int dimension) {
    std::vector<Matrix> states;
    const Complex I(0.0, 1.0);
    for (int k = 0; k < dimension; ++k) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dimension);
        v(k) = 1.0;
        states.push_back(v * v.adjoint());
    }
    for (int k = 0; k < dimension; ++k) {
        for (int l = k + 1; l < dimension; ++l) {
            for (Complex phase : {Complex(1.0, 0.0), I}) {
                Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dimension);
                v(k) = 1.0 / std::sqrt(2.0);
                v(l) = phase / std::sqrt(2.0);
                states.push_back(v * v.adjoint());
            }
        }
    }
    return states;
}

PropertyAResult check_property_a(const ProjectiveObservable& a,
                                 const ProjectiveObservable& b, double tau) {
    require_same_dimension(a, b);
    PropertyAResult result{};

    double product_residual = 0.0;
    for (const auto& [la, p] : a.spectrum) {
        for (const auto& [mu, q] : b.spectrum) {
            Matrix r = p * q;
            product_residual = std::max(product_residual,
                                        operator_norm(r - r.adjoint()));
            product_residual = std::max(product_residual, operator_norm(r * r - r));
        }
    }
    result.product_residual = product_residual;
    result.holds = product_residual <= tau;
    result.marginal_residual = 0.0;
    if (!result.holds) return result;

    // Joint observable via the index injection
    // (lambda index, mu index) -> lambda index * (#mu) + mu index.
    const int num_mu = static_cast<int>(b.spectrum.size());
    Matrix joint = Matrix::Zero(a.dimension, a.dimension);
    for (std::size_t li = 0; li < a.spectrum.size(); ++li) {
        for (std::size_t mi = 0; mi < b.spectrum.size(); ++mi) {
            double label = static_cast<double>(li) * num_mu + static_cast<double>(mi);
            joint += label * (a.spectrum[li].second * b.spectrum[mi].second);
        }
    }
    if (operator_norm(joint - joint.adjoint()) > tau) {
        throw Error(ErrorCode::Internal,
                    "joint observable not Hermitian despite commuting projectors");
    }

    // Measuring the joint must reproduce both direct distributions as
    // marginals on every test state.
    double marginal_residual = 0.0;
    for (const Matrix& rho : tomographic_states(a.dimension)) {
        for (std::size_t li = 0; li < a.spectrum.size(); ++li) {
            double direct = (rho * a.spectrum[li].second).trace().real();
            double via_joint = 0.0;
            for (std::size_t mi = 0; mi < b.spectrum.size(); ++mi) {
                via_joint += (rho * a.spectrum[li].second * b.spectrum[mi].second)
                                 .trace()
                                 .real();
            }
            marginal_residual = std::max(marginal_residual,
                                         std::abs(direct - via_joint));
        }
        for (std::size_t mi = 0; mi < b.spectrum.size(); ++mi) {
            double direct = (rho * b.spectrum[mi].second).trace().real();
            double via_joint = 0.0;
            for (std::size_t li = 0; li < a.spectrum.size(); ++li) {
                via_joint += (rho * a.spectrum[li].second * b.spectrum[mi].second)
                                 .trace()
                                 .real();
            }
            marginal_residual = std::max(marginal_residual,
                                         std::abs(direct - via_joint));
        }
    }
    result.marginal_residual = marginal_residual;
    result.holds = marginal_residual <= tau;
    result.joint_observable = std::move(joint);
    return result;
}

PropertyBResult check_property_b(const ProjectiveObservable& a,
                                 const ProjectiveObservable& b, double tau) {
    require_same_dimension(a, b);
    PropertyBResult result{};

    double identity_ab = 0.0;
    for (const auto& [mu, q] : b.spectrum) {
        Matrix sum = Matrix::Zero(a.dimension, a.dimension);
        for (const auto& [la, p] : a.spectrum) sum += p * q * p;
        identity_ab = std::max(identity_ab, operator_norm(sum - q));
    }
    double identity_ba = 0.0;
    for (const auto& [la, p] : a.spectrum) {
        Matrix sum = Matrix::Zero(a.dimension, a.dimension);
        for (const auto& [mu, q] : b.spectrum) sum += q * p * q;
        identity_ba = std::max(identity_ba, operator_norm(sum - p));
    }
    result.identity_ab = identity_ab;
    result.identity_ba = identity_ba;
    result.holds = identity_ab <= tau && identity_ba <= tau;

    // Operational reading: probability that the repeated measurement in
    // ABA (and BAB) agrees with the first, over the test states.
    double min_agreement = 1.0;
    auto repeat_agreement = [&](const ProjectiveObservable& first,
                                const ProjectiveObservable& second,
                                const Matrix& rho) {
        double agree = 0.0;
        for (const auto& [la, p] : first.spectrum) {
            for (const auto& [mu, q] : second.spectrum) {
                agree += (p * q * p * rho * p * q * p).trace().real();
            }
        }
        return agree;
    };
    for (const Matrix& rho : tomographic_states(a.dimension)) {
        min_agreement = std::min(min_agreement, repeat_agreement(a, b, rho));
        min_agreement = std::min(min_agreement, repeat_agreement(b, a, rho));
    }
    result.min_repeat_agreement = min_agreement;
    if (result.holds && min_agreement < 1.0 - std::max(tau, 1e-9) * 100) {
        throw Error(ErrorCode::Internal,
                    "nondisturbance identities hold but ABA repeats disagree");
    }
    return result;
}

PropertyCResult check_property_c(const ProjectiveObservable& a,
                                 const ProjectiveObservable& b, double tau) {
    require_same_dimension(a, b);
    PropertyCResult result{};

    auto channel_residual = [&](const ProjectiveObservable& first,
                                const ProjectiveObservable& second) {
        double worst = 0.0;
        for (const Matrix& rho : tomographic_states(a.dimension)) {
            Matrix after = Matrix::Zero(a.dimension, a.dimension);
            for (const auto& [la, p] : first.spectrum) after += p * rho * p;
            for (const auto& [mu, q] : second.spectrum) {
                double direct = (rho * q).trace().real();
                double disturbed = (after * q).trace().real();
                worst = std::max(worst, std::abs(direct - disturbed));
            }
        }
        return worst;
    };
    auto identity_residual = [&](const ProjectiveObservable& first,
                                 const ProjectiveObservable& second) {
        double worst = 0.0;
        for (const auto& [mu, q] : second.spectrum) {
            Matrix sum = Matrix::Zero(a.dimension, a.dimension);
            for (const auto& [la, p] : first.spectrum) sum += p * q * p;
            worst = std::max(worst, operator_norm(sum - q));
        }
        return worst;
    };

    result.channel_ab = channel_residual(a, b);
    result.channel_ba = channel_residual(b, a);
    result.identity_ab = identity_residual(a, b);
    result.identity_ba = identity_residual(b, a);
    result.holds = result.channel_ab <= tau;

    bool identity_holds = result.identity_ab <= tau;
    if (identity_holds != result.holds) {
        throw Error(ErrorCode::Internal,
                    "channel check and operator identity disagree for property (c)");
    }
    return result;
}

LemmaReport lemma1_report(const ProjectiveObservable& a,
                          const ProjectiveObservable& b, double tau) {
    require_same_dimension(a, b);
    LemmaReport report{};

    CommuteResult comm = commutes(a, b, tau);
    PropertyAResult pa = check_property_a(a, b, tau);
    PropertyBResult pb = check_property_b(a, b, tau);
    PropertyCResult pc = check_property_c(a, b, tau);

    report.commutes = comm.commutes;
    report.property_a = pa.holds;
    report.property_b = pb.holds;
    report.property_c = pc.holds;
    report.residuals = {
        {"commutator", comm.residual},
        {"a.product", pa.product_residual},
        {"a.marginals", pa.marginal_residual},
        {"b.identity_ab", pb.identity_ab},
        {"b.identity_ba", pb.identity_ba},
        {"b.repeat_agreement", pb.min_repeat_agreement},
        {"c.channel_ab", pc.channel_ab},
        {"c.channel_ba", pc.channel_ba},
        {"c.identity_ab", pc.identity_ab},
        {"c.identity_ba", pc.identity_ba},
    };

    if (report.property_a != report.commutes ||
        report.property_b != report.commutes ||
        report.property_c != report.commutes) {
        std::ostringstream msg;
        msg << "equivalence broken: commutes=" << report.commutes
            << " a=" << report.property_a << " b=" << report.property_b
            << " c=" << report.property_c
            << " (commutator residual " << comm.residual << ")";
        throw Error(ErrorCode::EquivalenceViolation, msg.str());
    }
    return report;
}

std::pair<Matrix, Matrix> pauli_xz() {
    Matrix x(2, 2), z(2, 2);
    x << 0, 1, 1, 0;
    z << 1, 0, 0, -1;
    return {x, z};
}

namespace {

double gaussian(SeedStream& stream) {
    // Box-Muller on uniforms from the stream.
    double u1 = 0.0;
    while (u1 <= 1e-12) {
        u1 = static_cast<double>(stream.next_u64() >> 11) * 0x1.0p-53;
    }
    double u2 = static_cast<double>(stream.next_u64() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

Matrix random_unitary(int dimension, SeedStream& stream) {
    Matrix g(dimension, dimension);
    for (int r = 0; r < dimension; ++r) {
        for (int c = 0; c < dimension; ++c) {
            g(r, c) = Complex(gaussian(stream), gaussian(stream));
        }
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    return qr.householderQ();
}

}  // namespace

std::pair<Matrix, Matrix> random_commuting_pair(int dimension,
                                                SeedStream& stream) {
    Matrix u = random_unitary(dimension, stream);
    auto spectrum = [&] {
        Eigen::VectorXd d(dimension);
        for (int i = 0; i < dimension; ++i) {
            d(i) = static_cast<double>(
                static_cast<long long>(stream.uniform_below(5)) - 2);
        }
        return d;
    };
    Matrix a = u * spectrum().asDiagonal() * u.adjoint();
    Matrix b = u * spectrum().asDiagonal() * u.adjoint();
    // Symmetrize away the last rounding crumbs.
    a = Matrix((a + a.adjoint()) / 2.0);
    b = Matrix((b + b.adjoint()) / 2.0);
    return {a, b};
}

std::pair<Matrix, Matrix> random_generic_pair(int dimension, SeedStream& stream) {
    auto hermitian = [&] {
        Matrix g(dimension, dimension);
        for (int r = 0; r < dimension; ++r) {
            for (int c = 0; c < dimension; ++c) {
                g(r, c) = Complex(gaussian(stream), gaussian(stream));
            }
        }
        return Matrix((g + g.adjoint()) / 2.0);
    };
    return {hermitian(), hermitian()};
}

// ---------------------------------------------------------------------------
// Plain-text matrix format.

namespace {

Complex parse_complex(const std::string& token) {
    auto fail = [&] {
        throw Error(ErrorCode::ParseError,
                    "invalid complex entry \"" + token + "\"");
    };
    if (token.empty()) fail();
    std::string body = token;
    bool has_i = body.back() == 'i' || body.back() == 'I';
    if (has_i) body.pop_back();

    if (!has_i) {
        std::size_t pos = 0;
        double re = 0.0;
        try {
            re = std::stod(body, &pos);
        } catch (const std::exception&) {
            fail();
        }
        if (pos != body.size()) fail();
        return Complex(re, 0.0);
    }

    // Split at the last top-level +/- (not an exponent sign, not leading).
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        char c = body[k];
        if ((c == '+' || c == '-') &&
            body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    try {
        if (split == std::string::npos) {
            // Pure imaginary, e.g. "2i" or "-i".
            if (body.empty() || body == "+") return Complex(0.0, 1.0);
            if (body == "-") return Complex(0.0, -1.0);
            std::size_t pos = 0;
            double im = std::stod(body, &pos);
            if (pos != body.size()) fail();
            return Complex(0.0, im);
        }
        std::size_t pos = 0;
        double re = std::stod(body.substr(0, split), &pos);
        if (pos != split) fail();
        std::string im_part = body.substr(split);
        if (im_part == "+") return Complex(re, 1.0);
        if (im_part == "-") return Complex(re, -1.0);
        double im = std::stod(im_part, &pos);
        if (pos != im_part.size()) fail();
        return Complex(re, im);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail();
    }
    return {};
}

}  // namespace

Matrix parse_matrix_block(std::istream& in) {
    int dimension = 0;
    if (!(in >> dimension)) {
        throw Error(ErrorCode::ParseError, "missing matrix dimension header");
    }
    if (dimension < 1 || dimension > MAX_DIMENSION) {
        throw Error(ErrorCode::ParseError,
                    "matrix dimension must be 1.." + std::to_string(MAX_DIMENSION));
    }
    Matrix m(dimension, dimension);
    for (int r = 0; r < dimension; ++r) {
        for (int c = 0; c < dimension; ++c) {
            std::string token;
            if (!(in >> token)) {
                throw Error(ErrorCode::ParseError, "matrix block ended early");
            }
            m(r, c) = parse_complex(token);
        }
    }
    return m;
}

std::pair<Matrix, Matrix> parse_matrix_pair(const std::string& text) {
    std::istringstream in(text);
    Matrix a = parse_matrix_block(in);
    Matrix b = parse_matrix_block(in);
    if (a.rows() != b.rows()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "matrix pair has dimensions " + std::to_string(a.rows()) +
                        " and " + std::to_string(b.rows()));
    }
    return {a, b};
}

std::string format_matrix(const Matrix& m) {
    std::ostringstream out;
    out << m.rows() << "\n";
    out.precision(17);
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (c) out << " ";
            double re = m(r, c).real();
            double im = m(r, c).imag();
            out << re << (im < 0 ? "-" : "+") << std::abs(im) << "i";
        }
        out << "\n";
    }
    return out.str();
}

Report lemma_to_report(const LemmaReport& lemma, const std::string& label) {
    Report report;
    auto yesno = [](bool v) { return v ? "yes" : "no"; };
    report.add("commutativity lemma check: " + label);
    report.add(std::string("commutes:            ") + yesno(lemma.commutes));
    report.add(std::string("property (a) joint:  ") + yesno(lemma.property_a));
    report.add(std::string("property (b) symm:   ") + yesno(lemma.property_b));
    report.add(std::string("property (c) asymm:  ") + yesno(lemma.property_c));
    for (const auto& [name, value] : lemma.residuals) {
        std::ostringstream line;
        line.precision(6);
        line << "residual " << name << " = " << std::scientific << value;
        report.add(line.str());
    }
    report.checked = 4;
    report.violations = 0;  // four-way agreement was asserted upstream
    report.add("four-way agreement: yes");
    return report;
}

}  // namespace nonloc
