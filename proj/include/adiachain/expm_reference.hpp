#ifndef ADIACHAIN_EXPM_REFERENCE_HPP
#define ADIACHAIN_EXPM_REFERENCE_HPP

#include <Eigen/Dense>

namespace adiachain {

// Dense matrix exponential by scaling and squaring with a Taylor series.
// Shares no code with the uniformization path, so the two routes can be
// cross-checked against each other.
Eigen::MatrixXd expm_reference(const Eigen::MatrixXd& a);

}  // namespace adiachain

#endif  // ADIACHAIN_EXPM_REFERENCE_HPP
