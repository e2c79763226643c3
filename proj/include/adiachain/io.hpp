#ifndef ADIACHAIN_IO_HPP
#define ADIACHAIN_IO_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "adiachain/chain.hpp"
#include "adiachain/generator.hpp"
#include "adiachain/glauber_ising.hpp"

namespace adiachain {

// Matrix file format, used repo-wide: first line an integer n, followed by
// n lines of n whitespace-separated decimal reals. Distribution files are a
// single line of reals. NaN and infinite entries are rejected, as is
// trailing content.

Eigen::MatrixXd read_matrix(const std::string& path);
StochasticMatrix read_stochastic_matrix(const std::string& path, double tol = kValidationTol);
Generator read_generator(const std::string& path, double tol = kValidationTol);
ProbabilityDistribution read_distribution(const std::string& path,
                                          double tol = kValidationTol);

void write_matrix(const std::string& path, const Eigen::MatrixXd& m);
void write_distribution(const std::string& path, const Eigen::VectorXd& v);

// Ising model file: lines of "n <count>", "beta <value>", "J <i> <j> <value>"
// and "h <i> <value>"; '#' starts a comment. n and beta are required.
IsingModel read_ising_model(const std::string& path);

// Doubles are serialized with 17 significant digits so files round-trip
// double-precision values exactly.
std::string format_double(double v);

// Writes to a temporary file in the same directory and renames it over the
// target, so partial runs never leave a corrupt file.
void atomic_write_text(const std::string& path, const std::string& content);

// Minimal CSV reader for the files this project writes: skips '#' comment
// lines, splits on commas.
std::vector<std::vector<std::string>> read_csv(const std::string& path);

}  // namespace adiachain

#endif  // ADIACHAIN_IO_HPP
