#include "adiachain/expm_reference.hpp"

#include <cmath>

#include "adiachain/errors.hpp"

namespace adiachain {

Eigen::MatrixXd expm_reference(const Eigen::MatrixXd& a) {
    if (a.rows() != a.cols() || a.rows() == 0) {
        throw InvalidInputError("expm_reference: matrix must be square and non-empty");
    }
    const Eigen::Index n = a.rows();
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();  // induced infinity norm
    int squarings = 0;
    if (norm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    }
    const Eigen::MatrixXd b = a / std::ldexp(1.0, squarings);

    Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd sum = term;
    for (int k = 1; k <= 64; ++k) {
        term = (term * b) / static_cast<double>(k);
        sum += term;
        if (term.cwiseAbs().maxCoeff() <= 1e-18 * sum.cwiseAbs().maxCoeff()) break;
    }
    for (int k = 0; k < squarings; ++k) sum = sum * sum;
    return sum;
}

}  // namespace adiachain
