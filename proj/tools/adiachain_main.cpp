// Command-line front end: spectral analysis, Hamiltonian conversion, mixing
// and adiabatic experiments with CSV output and seeded instance generation.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "adiachain/adiabatic_continuous.hpp"
#include "adiachain/adiabatic_discrete.hpp"
#include "adiachain/glauber_ising.hpp"
#include "adiachain/hamiltonian.hpp"
#include "adiachain/io.hpp"
#include "adiachain/mixing.hpp"
#include "adiachain/random_chains.hpp"
#include "adiachain/spectral.hpp"
#include "adiachain/suite.hpp"

namespace {

using namespace adiachain;

// Exit codes: 0 success, 1 other failure, then one code per error class.
constexpr int kExitValidation = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitNumerical = 4;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

double env_tolerance(const char* name, double fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    char* end = nullptr;
    const double v = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !(v > 0.0)) {
        throw InvalidInputError(std::string(name) + ": expected a positive number, got '" +
                                raw + "'");
    }
    return v;
}

struct CurveCsv {
    std::string time_column;
    std::string value_column;
    std::vector<std::string> comments;
};

template <typename Curve>
void write_curve_csv(const std::string& path, const Curve& curve, const CurveCsv& layout) {
    std::ostringstream out;
    for (const std::string& comment : layout.comments) out << "# " << comment << "\n";
    out << layout.time_column << ',' << layout.value_column << "\n";
    for (const auto& [t, err] : curve) {
        out << format_double(static_cast<double>(t)) << ',' << format_double(err) << "\n";
    }
    atomic_write_text(path, out.str());
}

struct AnalyzeArgs {
    std::string input;
    std::string output;
    double eps = 0.25;
};

int run_analyze(const AnalyzeArgs& args) {
    const double load_tol = env_tolerance("ADIACHAIN_VALIDATION_TOL", kValidationTol);
    const double residual_tol = env_tolerance("ADIACHAIN_RESIDUAL_TOL", kResidualTol);
    const StochasticMatrix p = read_stochastic_matrix(args.input, load_tol);
    const ProbabilityDistribution pi = stationary_distribution(p, load_tol);
    const bool reversible = is_reversible(p, pi, residual_tol);
    const long t_mix = mixing_time(p, args.eps);

    std::vector<std::pair<std::string, std::string>> summary;
    summary.emplace_back("states", std::to_string(p.size()));
    summary.emplace_back("reversible", reversible ? "yes" : "no");
    summary.emplace_back("pi_min", fmt(pi.min_weight()));
    summary.emplace_back("t_mix(" + fmt(args.eps) + ")", std::to_string(t_mix));
    if (reversible) {
        const GapSummary gap = spectral_gap(reversible_spectrum(p, pi, residual_tol));
        summary.emplace_back("gap", fmt(gap.gap));
        summary.emplace_back("relaxation_time", fmt(gap.relaxation_time));
        if (args.eps < 0.5) {
            const auto [lower, upper] = mixing_time_bounds(gap, pi, args.eps);
            summary.emplace_back("t_mix_lower_bound", fmt(lower));
            summary.emplace_back("t_mix_upper_bound", fmt(upper));
        }
    }
    for (const auto& [key, value] : summary) std::cout << key << " = " << value << "\n";
    if (!args.output.empty()) {
        std::ostringstream out;
        out << "key,value\n";
        for (const auto& [key, value] : summary) out << key << ',' << value << "\n";
        atomic_write_text(args.output, out.str());
    }
    return 0;
}

struct ConvertArgs {
    std::string direction;
    std::string input;
    std::string output;
    std::string output_pi;
    double lambda0 = 0.0;
};

int run_convert(const ConvertArgs& args) {
    const double load_tol = env_tolerance("ADIACHAIN_VALIDATION_TOL", kValidationTol);
    const double residual_tol = env_tolerance("ADIACHAIN_RESIDUAL_TOL", kResidualTol);
    if (args.direction == "h2p") {
        const Hamiltonian h = validate_hamiltonian(read_matrix(args.input), load_tol);
        const ConversionResult conv = hamiltonian_to_chain(h);
        write_matrix(args.output, conv.chain.entries());
        if (!args.output_pi.empty()) write_distribution(args.output_pi, conv.stationary.weights());
        std::cout << "ground_energy = " << fmt(conv.ground_energy) << "\n"
                  << "hamiltonian_gap = " << fmt(conv.hamiltonian_gap) << "\n"
                  << "chain_gap = " << fmt(conv.chain_gap) << "\n";
        return 0;
    }
    if (args.direction == "p2h") {
        const StochasticMatrix p = read_stochastic_matrix(args.input, load_tol);
        const ProbabilityDistribution pi = stationary_distribution(p, load_tol);
        const Hamiltonian h = chain_to_hamiltonian(p, pi, args.lambda0, residual_tol);
        write_matrix(args.output, h.entries());
        if (!args.output_pi.empty()) write_distribution(args.output_pi, pi.weights());
        std::cout << "ground_energy = " << fmt(args.lambda0) << "\n";
        return 0;
    }
    throw InvalidInputError("convert: direction must be h2p or p2h, got '" + args.direction +
                            "'");
}

struct MixArgs {
    std::string input;
    std::string output;
    double eps = 0.25;
    bool continuous = false;
    long cap = kDefaultDiscreteCap;
    double t_cap = kDefaultContinuousCap;
    double resolution = 0.0;
};

int run_mix(const MixArgs& args) {
    const double load_tol = env_tolerance("ADIACHAIN_VALIDATION_TOL", kValidationTol);
    if (args.continuous) {
        const Generator q = read_generator(args.input, load_tol);
        const double t = mixing_time_continuous(q, args.eps, args.t_cap, args.resolution);
        std::cout << "t_mix(" << fmt(args.eps) << ") = " << fmt(t) << "\n";
        if (!args.output.empty()) {
            const double res =
                args.resolution > 0.0 ? args.resolution : 1e-3 * args.t_cap;
            const MixingCurve curve = tv_decay_curve(q, t, res);
            std::vector<std::pair<double, double>> rows;
            for (std::size_t i = 0; i < curve.times.size(); ++i) {
                rows.emplace_back(curve.times[i], curve.distances[i]);
            }
            write_curve_csv(args.output, rows, {"t", "distance", {}});
        }
        return 0;
    }
    const StochasticMatrix p = read_stochastic_matrix(args.input, load_tol);
    const long t = mixing_time(p, args.eps, args.cap);
    std::cout << "t_mix(" << fmt(args.eps) << ") = " << t << "\n";
    if (!args.output.empty()) {
        const ProbabilityDistribution pi = stationary_distribution(p, load_tol);
        const MixingCurve curve = tv_decay_curve(p, pi, t);
        std::vector<std::pair<double, double>> rows;
        for (std::size_t i = 0; i < curve.times.size(); ++i) {
            rows.emplace_back(curve.times[i], curve.distances[i]);
        }
        write_curve_csv(args.output, rows, {"t", "distance", {}});
    }
    return 0;
}

struct AdiabaticDiscreteArgs {
    std::string initial;
    std::string final_path;
    std::string output;
    double eps = 0.25;
    long cap = 0;
};

int run_adiabatic_discrete(const AdiabaticDiscreteArgs& args) {
    const double load_tol = env_tolerance("ADIACHAIN_VALIDATION_TOL", kValidationTol);
    const StochasticMatrix p_init = read_stochastic_matrix(args.initial, load_tol);
    const StochasticMatrix p_final = read_stochastic_matrix(args.final_path, load_tol);
    const DiscreteAdiabaticReport rep =
        discrete_experiment(p_init, p_final, args.eps, args.cap);
    std::cout << "measured_adiabatic_time = " << rep.measured_time << "\n"
              << "t_mix_half = " << rep.t_mix_half << "\n"
              << "K = " << rep.bound_k << "\n"
              << "K_approx = " << fmt(rep.approx_k) << "\n"
              << "T_bound = " << rep.theoretical_bound << "\n";
    if (!args.output.empty()) write_curve_csv(args.output, rep.error_curve, {"T", "error", {}});
    return 0;
}

struct AdiabaticContinuousArgs {
    std::string initial;
    std::string final_path;
    std::string output;
    double eps = 0.25;
    double t_cap = 0.0;
    double grid = 0.0;
    long steps = 0;
};

void print_continuous_report(const ContinuousAdiabaticReport& rep) {
    std::cout << "measured_adiabatic_time = " << fmt(rep.measured_time) << "\n"
              << "t_mix_half = " << fmt(rep.t_mix_half) << "\n"
              << "lambda = " << fmt(rep.lambda) << "\n"
              << "T_bound = " << fmt(rep.theoretical_bound) << "\n";
}

int run_adiabatic_continuous(const AdiabaticContinuousArgs& args) {
    const double load_tol = env_tolerance("ADIACHAIN_VALIDATION_TOL", kValidationTol);
    const Generator q_init = read_generator(args.initial, load_tol);
    const Generator q_final = read_generator(args.final_path, load_tol);
    ContinuousExperimentOptions opts;
    opts.t_cap = args.t_cap;
    opts.grid = args.grid;
    opts.steps = args.steps;
    const ContinuousAdiabaticReport rep = continuous_experiment(q_init, q_final, args.eps, opts);
    print_continuous_report(rep);
    if (!args.output.empty()) write_curve_csv(args.output, rep.error_curve, {"T", "error", {}});
    return 0;
}

struct IsingArgs {
    std::string initial;
    std::string final_path;
    std::string output;
    double eps = 0.25;
    double t_cap = 0.0;
    double grid = 0.0;
    long steps = 0;
};

void print_model_block(const char* label, const IsingModel& m) {
    std::cout << label << ".spins = " << m.spins() << "\n"
              << label << ".beta = " << fmt(m.inverse_temperature()) << "\n"
              << label << ".coupling_norm = " << fmt(m.couplings().cwiseAbs().maxCoeff()) << "\n"
              << label << ".field_norm = "
              << fmt(m.fields().size() ? m.fields().cwiseAbs().maxCoeff() : 0.0) << "\n";
}

int run_ising(const IsingArgs& args) {
    const IsingModel init = read_ising_model(args.initial);
    const IsingModel fin = read_ising_model(args.final_path);
    print_model_block("initial", init);
    print_model_block("final", fin);
    ContinuousExperimentOptions opts;
    opts.t_cap = args.t_cap;
    opts.grid = args.grid;
    opts.steps = args.steps;
    const ContinuousAdiabaticReport rep = adiabatic_ising_experiment(init, fin, args.eps, opts);
    print_continuous_report(rep);
    if (!args.output.empty()) write_curve_csv(args.output, rep.error_curve, {"T", "error", {}});
    return 0;
}

struct SuiteArgs {
    std::string output;
    std::uint64_t seed = kDefaultSuiteSeed;
};

int run_suite(const SuiteArgs& args) {
    const auto results = run_acceptance_suite(args.seed);
    int failures = 0;
    for (const auto& r : results) {
        std::cout << "[" << (r.passed ? "PASS" : "FAIL") << "] criterion " << r.index << " ("
                  << r.name << "): " << r.detail << "\n";
        if (!r.passed) ++failures;
    }
    std::cout << results.size() << " criteria, " << failures << " failed\n";
    if (!args.output.empty()) {
        std::ostringstream out;
        out << "# generator: " << kRngName << " seed=" << args.seed << "\n";
        out << "criterion,name,passed,detail\n";
        for (const auto& r : results) {
            std::string detail = r.detail;
            for (char& c : detail) {
                if (c == ',') c = ';';
            }
            out << r.index << ',' << r.name << ',' << (r.passed ? 1 : 0) << ',' << detail
                << "\n";
        }
        atomic_write_text(args.output, out.str());
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"adiachain: mixing, spectral and adiabatic analysis of finite Markov chains"};
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "Stationary law, spectral gap, mixing time and its two-sided bounds");
    analyze->add_option("--input", analyze_args.input, "transition matrix file")->required();
    analyze->add_option("--eps", analyze_args.eps, "mixing threshold")
        ->check(CLI::Range(1e-9, 1.0 - 1e-9));
    analyze->add_option("--output", analyze_args.output, "summary CSV path");

    ConvertArgs convert_args;
    CLI::App* convert = app.add_subcommand(
        "convert", "Convert between Hamiltonians and reversible chains");
    convert->add_option("--direction", convert_args.direction, "h2p or p2h")->required();
    convert->add_option("--input", convert_args.input, "input matrix file")->required();
    convert->add_option("--output", convert_args.output, "output matrix file")->required();
    convert->add_option("--output-pi", convert_args.output_pi,
                        "stationary distribution output file");
    convert->add_option("--lambda0", convert_args.lambda0,
                        "ground energy for p2h (must be < 1)");

    MixArgs mix_args;
    CLI::App* mix = app.add_subcommand("mix", "Worst-case total-variation mixing time");
    mix->add_option("--input", mix_args.input, "transition matrix or generator file")
        ->required();
    mix->add_option("--eps", mix_args.eps, "mixing threshold")
        ->check(CLI::Range(1e-9, 1.0 - 1e-9));
    mix->add_flag("--continuous", mix_args.continuous, "treat input as a generator");
    mix->add_option("--cap", mix_args.cap, "discrete step cap");
    mix->add_option("--t-cap", mix_args.t_cap, "continuous time cap");
    mix->add_option("--resolution", mix_args.resolution, "continuous time grid");
    mix->add_option("--output", mix_args.output, "decay curve CSV path");

    AdiabaticDiscreteArgs ad_args;
    CLI::App* ad = app.add_subcommand(
        "adiabatic-discrete", "Discrete adiabatic time against the K t_mix(eps/2) bound");
    ad->add_option("--initial", ad_args.initial, "initial transition matrix file")->required();
    ad->add_option("--final", ad_args.final_path, "final transition matrix file")->required();
    ad->add_option("--eps", ad_args.eps, "target accuracy")
        ->check(CLI::Range(1e-9, 1.0 - 1e-9));
    ad->add_option("--cap", ad_args.cap, "scan cap (0: use the theoretical bound)");
    ad->add_option("--output", ad_args.output, "error curve CSV path");

    AdiabaticContinuousArgs ac_args;
    CLI::App* ac = app.add_subcommand(
        "adiabatic-continuous",
        "Continuous adiabatic time against the lambda t_mix(eps/2)^2 / eps bound");
    ac->add_option("--initial", ac_args.initial, "initial generator file")->required();
    ac->add_option("--final", ac_args.final_path, "final generator file")->required();
    ac->add_option("--eps", ac_args.eps, "target accuracy")
        ->check(CLI::Range(1e-9, 1.0 - 1e-9));
    ac->add_option("--t-cap", ac_args.t_cap, "scan cap (0: derive from the bound)");
    ac->add_option("--grid", ac_args.grid, "scan grid (0: derive from the bound)");
    ac->add_option("--steps", ac_args.steps, "integration substeps (0: automatic)");
    ac->add_option("--output", ac_args.output, "error curve CSV path");

    IsingArgs ising_args;
    CLI::App* ising = app.add_subcommand(
        "ising", "Adiabatic experiment between two Glauber-Ising models");
    ising->add_option("--init", ising_args.initial, "initial model file")->required();
    ising->add_option("--final", ising_args.final_path, "final model file")->required();
    ising->add_option("--eps", ising_args.eps, "target accuracy")
        ->check(CLI::Range(1e-9, 1.0 - 1e-9));
    ising->add_option("--t-cap", ising_args.t_cap, "scan cap (0: derive from the bound)");
    ising->add_option("--grid", ising_args.grid, "scan grid (0: derive from the bound)");
    ising->add_option("--steps", ising_args.steps, "integration substeps (0: automatic)");
    ising->add_option("--output", ising_args.output, "error curve CSV path");

    SuiteArgs suite_args;
    CLI::App* suite = app.add_subcommand(
        "suite", "Run the full verification battery and report per-criterion results");
    suite->add_option("--seed", suite_args.seed, "base seed for generated instances");
    suite->add_option("--output", suite_args.output, "per-criterion CSV path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return run_analyze(analyze_args);
        if (convert->parsed()) return run_convert(convert_args);
        if (mix->parsed()) return run_mix(mix_args);
        if (ad->parsed()) return run_adiabatic_discrete(ad_args);
        if (ac->parsed()) return run_adiabatic_continuous(ac_args);
        if (ising->parsed()) return run_ising(ising_args);
        if (suite->parsed()) return run_suite(suite_args);
    } catch (const CapExceededError& e) {
        std::cerr << "error (cap exceeded): " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const NumericalError& e) {
        std::cerr << "error (numerical): " << e.what() << "\n";
        return kExitNumerical;
    } catch (const InvalidInputError& e) {
        std::cerr << "error (invalid input): " << e.what() << "\n";
        return kExitValidation;
    } catch (const StructureError& e) {
        std::cerr << "error (structure): " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
