#include "adiachain/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <tuple>

namespace adiachain {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInputError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Strips '#' comments, then tokenizes on whitespace.
std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream words(line);
        std::string tok;
        while (words >> tok) tokens.push_back(tok);
    }
    return tokens;
}

double parse_real(const std::string& tok, const std::string& path) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(tok, &used);
    } catch (const std::exception&) {
        throw InvalidInputError(path + ": expected a number, got '" + tok + "'");
    }
    if (used != tok.size()) {
        throw InvalidInputError(path + ": trailing characters in number '" + tok + "'");
    }
    if (!std::isfinite(v)) {
        throw InvalidInputError(path + ": non-finite entry '" + tok + "' rejected");
    }
    return v;
}

long parse_integer(const std::string& tok, const std::string& path) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(tok, &used);
    } catch (const std::exception&) {
        throw InvalidInputError(path + ": expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) {
        throw InvalidInputError(path + ": trailing characters in integer '" + tok + "'");
    }
    return v;
}

}  // namespace

Eigen::MatrixXd read_matrix(const std::string& path) {
    const std::vector<std::string> tokens = tokenize(read_file(path));
    if (tokens.empty()) throw InvalidInputError(path + ": empty matrix file");
    const long n = parse_integer(tokens[0], path);
    if (n < 1 || n > static_cast<long>(kMaxStates)) {
        throw InvalidInputError(path + ": dimension " + std::to_string(n) +
                                " outside [1, " + std::to_string(kMaxStates) + "]");
    }
    const std::size_t expected = 1 + static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    if (tokens.size() != expected) {
        throw InvalidInputError(path + ": expected " + std::to_string(expected - 1) +
                                " entries for a " + std::to_string(n) + "x" + std::to_string(n) +
                                " matrix, found " + std::to_string(tokens.size() - 1));
    }
    Eigen::MatrixXd m(n, n);
    std::size_t k = 1;
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) m(i, j) = parse_real(tokens[k++], path);
    return m;
}

StochasticMatrix read_stochastic_matrix(const std::string& path, double tol) {
    return StochasticMatrix(read_matrix(path), tol);
}

Generator read_generator(const std::string& path, double tol) {
    return Generator(read_matrix(path), tol);
}

ProbabilityDistribution read_distribution(const std::string& path, double tol) {
    const std::vector<std::string> tokens = tokenize(read_file(path));
    if (tokens.empty()) throw InvalidInputError(path + ": empty distribution file");
    Eigen::VectorXd v(static_cast<Eigen::Index>(tokens.size()));
    for (std::size_t k = 0; k < tokens.size(); ++k) {
        v(static_cast<Eigen::Index>(k)) = parse_real(tokens[k], path);
    }
    return ProbabilityDistribution(std::move(v), tol);
}

void write_matrix(const std::string& path, const Eigen::MatrixXd& m) {
    std::ostringstream out;
    out << m.rows() << "\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << format_double(m(i, j));
        }
        out << "\n";
    }
    atomic_write_text(path, out.str());
}

void write_distribution(const std::string& path, const Eigen::VectorXd& v) {
    std::ostringstream out;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) out << ' ';
        out << format_double(v(i));
    }
    out << "\n";
    atomic_write_text(path, out.str());
}

IsingModel read_ising_model(const std::string& path) {
    std::istringstream lines(read_file(path));
    std::string line;
    long n = -1;
    double beta = -1.0;
    bool have_beta = false;
    std::vector<std::tuple<long, long, double>> couplings;
    std::vector<std::pair<long, double>> fields;
    while (std::getline(lines, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::string key;
        if (!(words >> key)) continue;
        std::vector<std::string> args;
        for (std::string tok; words >> tok;) args.push_back(tok);
        if (key == "n" && args.size() == 1) {
            n = parse_integer(args[0], path);
        } else if (key == "beta" && args.size() == 1) {
            beta = parse_real(args[0], path);
            have_beta = true;
        } else if (key == "J" && args.size() == 3) {
            couplings.emplace_back(parse_integer(args[0], path), parse_integer(args[1], path),
                                   parse_real(args[2], path));
        } else if (key == "h" && args.size() == 2) {
            fields.emplace_back(parse_integer(args[0], path), parse_real(args[1], path));
        } else {
            throw InvalidInputError(path + ": unrecognized model line starting with '" + key +
                                    "'");
        }
    }
    if (n < 1) throw InvalidInputError(path + ": missing or invalid spin count 'n'");
    if (!have_beta) throw InvalidInputError(path + ": missing inverse temperature 'beta'");
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd h = Eigen::VectorXd::Zero(n);
    for (const auto& [a, b, v] : couplings) {
        if (a < 0 || a >= n || b < 0 || b >= n || a == b) {
            throw InvalidInputError(path + ": coupling indices (" + std::to_string(a) + ", " +
                                    std::to_string(b) + ") out of range");
        }
        j(a, b) = v;
        j(b, a) = v;
    }
    for (const auto& [a, v] : fields) {
        if (a < 0 || a >= n) {
            throw InvalidInputError(path + ": field index " + std::to_string(a) +
                                    " out of range");
        }
        h(a) = v;
    }
    return IsingModel(std::move(j), std::move(h), beta);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void atomic_write_text(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open for writing: " + tmp);
        out << content;
        out.flush();
        if (!out) throw Error("write failed: " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw Error("rename failed for " + path + ": " + ec.message());
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
    std::istringstream lines(read_file(path));
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) row.push_back(cell);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace adiachain
