#include "bcfa/linalg.hpp"

#include <Eigen/Dense>

namespace bcfa {

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrixD& m) {
    const Eigen::Index rows = static_cast<Eigen::Index>(m.size());
    const Eigen::Index cols = rows ? static_cast<Eigen::Index>(m.front().size()) : 0;
    Eigen::MatrixXcd e(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) e(i, j) = m[i][j];
    return e;
}

}  // namespace

std::vector<double> singular_values(const ComplexMatrixD& m) {
    if (m.empty() || m.front().empty()) return {};
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
    const auto& s = svd.singularValues();
    return {s.data(), s.data() + s.size()};
}

double spectral_norm(const ComplexMatrixD& m) {
    auto s = singular_values(m);
    return s.empty() ? 0.0 : s.front();
}

ComplexMatrixD pseudo_inverse(const ComplexMatrixD& m) {
    if (m.empty() || m.front().empty()) return {};
    const Eigen::MatrixXcd e = to_eigen(m);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& s = svd.singularValues();
    const double cutoff = 1e-12 * (s.size() ? s(0) : 0.0);
    Eigen::VectorXd inv(s.size());
    for (Eigen::Index i = 0; i < s.size(); ++i) inv(i) = s(i) > cutoff ? 1.0 / s(i) : 0.0;
    const Eigen::MatrixXcd p = svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
    ComplexMatrixD out(static_cast<std::size_t>(p.rows()));
    for (Eigen::Index i = 0; i < p.rows(); ++i)
        for (Eigen::Index j = 0; j < p.cols(); ++j) out[static_cast<std::size_t>(i)].push_back(p(i, j));
    return out;
}

}  // namespace bcfa
