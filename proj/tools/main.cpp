// Command-line workbench for harmonic univalent function classes built from
// the order-m integral operator: membership tests, operator transforms,
// extremal generators, distortion envelopes, neighborhood distances,
// convolution, deterministic sampling, plot data and full claim sweeps.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hum/io.hpp"
#include "hum/operator_class.hpp"
#include "hum/rng.hpp"
#include "hum/series.hpp"
#include "hum/verify.hpp"

namespace {

using hum::ClaimId;
using hum::ClaimReport;
using hum::ClassParams;
using hum::Convention;
using hum::HarmonicSeries;
using hum::SampleGrid;
using hum::io::format_double;
using hum::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitNegativeVerdict = 3;

struct ParamFlags {
    int m = 0;
    double alpha = 0.0;
    double beta = 0.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--m", m, "operator order m (>= 0)");
        cmd->add_option("--alpha", alpha, "class parameter alpha in [0, 1)");
        cmd->add_option("--beta", beta, "class parameter beta in [0, 1)");
    }
    ClassParams params() const { return ClassParams(m, alpha, beta); }
};

struct GridFlags {
    std::vector<double> radii = {0.1, 0.3, 0.5, 0.7, 0.9, 0.99};
    int angles = 256;

    void attach(CLI::App* cmd) {
        cmd->add_option("--radii", radii, "grid radii in (0, 1)")
            ->delimiter(',');
        cmd->add_option("--angles", angles, "angles per radius (>= 8)");
    }
    SampleGrid grid() const { return SampleGrid(radii, angles); }
};

std::vector<std::pair<int, double>> parse_indexed(
    const std::vector<std::string>& raw, const char* flag) {
    std::vector<std::pair<int, double>> out;
    for (const auto& item : raw) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw hum::ParseError(std::string(flag) + " expects v=value, got \"" +
                                  item + "\"");
        }
        try {
            out.emplace_back(std::stoi(item.substr(0, eq)),
                             std::stod(item.substr(eq + 1)));
        } catch (const std::exception&) {
            throw hum::ParseError(std::string(flag) + " expects v=value, got \"" +
                                  item + "\"");
        }
    }
    return out;
}

void emit(const std::string& output, const Json& j) {
    if (output.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        hum::io::write_file(output, j);
    }
}

int run_member(const std::string& input, const ParamFlags& flags) {
    const ClassParams params = flags.params();
    const HarmonicSeries f = hum::io::load_series(input);
    const double sum = hum::coefficient_sum(f, params);
    const double threshold = 1.0 - params.beta;
    const bool member = hum::is_member_sufficient(f, params);
    std::cout << "sum=" << format_double(sum)
              << " threshold=" << format_double(threshold)
              << " member=" << (member ? "true" : "false") << '\n';
    return member ? kExitOk : kExitNegativeVerdict;
}

int run_operator(const std::string& input, const std::string& output, int m) {
    const HarmonicSeries f = hum::io::load_series(input);
    hum::io::save_series(output, hum::apply_integral_operator(f, m));
    return kExitOk;
}

int run_extremal(const ParamFlags& flags, const std::string& kind, int v,
                 const std::string& output) {
    const ClassParams params = flags.params();
    HarmonicSeries point = kind == "g" ? hum::extreme_point_g(params, v)
                                       : hum::extreme_point_h(params, v);
    hum::io::save_series(output, point);
    return kExitOk;
}

int run_sharp(const ParamFlags& flags, const std::vector<std::string>& x_raw,
              const std::vector<std::string>& y_raw, const std::string& output) {
    const ClassParams params = flags.params();
    const auto x_pairs = parse_indexed(x_raw, "--x");
    const auto y_pairs = parse_indexed(y_raw, "--y");

    int max_x = 1, max_y = 0;
    for (const auto& [v, w] : x_pairs) {
        if (v < 2) throw hum::ParamOutOfRange("--x index must be >= 2");
        max_x = std::max(max_x, v);
    }
    for (const auto& [v, w] : y_pairs) {
        if (v < 1) throw hum::ParamOutOfRange("--y index must be >= 1");
        max_y = std::max(max_y, v);
    }
    std::vector<double> x(static_cast<std::size_t>(std::max(0, max_x - 1)), 0.0);
    std::vector<double> y(static_cast<std::size_t>(max_y), 0.0);
    for (const auto& [v, w] : x_pairs) x[static_cast<std::size_t>(v - 2)] = w;
    for (const auto& [v, w] : y_pairs) y[static_cast<std::size_t>(v - 1)] = w;

    hum::io::save_series(output, hum::sharp_function(params, x, y));
    return kExitOk;
}

int run_distort(const ParamFlags& flags, double b1,
                const std::vector<double>& radii, const std::string& input,
                int angles) {
    const ClassParams params = flags.params();
    if (input.empty()) {
        for (double r : radii) {
            const auto bounds = hum::distortion_bounds(params, b1, r);
            std::cout << "r=" << format_double(r)
                      << " lower=" << format_double(bounds.lower)
                      << " upper=" << format_double(bounds.upper) << '\n';
        }
        return kExitOk;
    }
    const HarmonicSeries f = hum::io::load_series(input);
    const ClaimReport report = hum::check_distortion(f, params, radii, angles);
    std::cout << "worst_margin=" << format_double(report.extremal_value)
              << " pass=" << (report.pass ? "true" : "false") << '\n';
    return report.pass ? kExitOk : kExitNegativeVerdict;
}

int run_radius(double beta, double b1, int max_v) {
    const auto radius = hum::convexity_radius(beta, b1, max_v);
    std::cout << "radius=" << format_double(radius.radius)
              << " argmin_v=" << radius.argmin_v << '\n';
    return kExitOk;
}

int run_neighborhood(const std::string& input, const std::string& other,
                     std::optional<double> delta) {
    const HarmonicSeries f = hum::io::load_series(input);
    const HarmonicSeries g = hum::io::load_series(other);
    const double distance = hum::neighborhood_distance(f, g);
    std::cout << "distance=" << format_double(distance);
    if (delta) {
        const bool within = distance <= *delta + hum::kCoefficientTolerance;
        std::cout << " within_delta=" << (within ? "true" : "false") << '\n';
        return within ? kExitOk : kExitNegativeVerdict;
    }
    std::cout << '\n';
    return kExitOk;
}

int run_convolve(const std::string& input, const std::string& other,
                 const std::string& output) {
    const HarmonicSeries f = hum::io::load_series(input);
    const HarmonicSeries g = hum::io::load_series(other);
    hum::io::save_series(output, hum::convolve(f, g));
    return kExitOk;
}

int run_sample(const ParamFlags& flags, int degree, std::uint64_t seed,
               const std::string& convention, const std::string& output) {
    const ClassParams params = flags.params();
    const Convention conv = convention == "general" ? Convention::General
                                                    : Convention::NegativeTHP;
    hum::io::save_series(output,
                         hum::random_member(params, degree, seed, conv));
    return kExitOk;
}

int run_render(const std::string& input, const ParamFlags& flags,
               const GridFlags& grid_flags, const std::string& output) {
    const ClassParams params = flags.params();
    const HarmonicSeries f = hum::io::load_series(input);
    const SampleGrid grid = grid_flags.grid();

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!output.empty()) {
        file.open(output);
        if (!file) throw hum::ParseError("cannot write \"" + output + "\"");
        out = &file;
    }

    *out << "r,theta,re_f,im_f,jacobian,class_functional,starlike_functional\n";
    int degenerate = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const hum::ComplexPoint z = grid.point(i);
        const double r = grid.radii[i / static_cast<std::size_t>(grid.angles_per_radius)];
        const double theta =
            2.0 * std::numbers::pi *
            static_cast<double>(i % static_cast<std::size_t>(grid.angles_per_radius)) /
            static_cast<double>(grid.angles_per_radius);
        const hum::Complex value = hum::evaluate(f, z);
        const double jac = hum::jacobian(f, z);
        const double functional = hum::class_functional(f, params, z);
        std::string starlike;
        try {
            starlike = format_double(hum::starlike_functional(f, z));
        } catch (const hum::DegenerateDenominator&) {
            ++degenerate;
        }
        *out << format_double(r) << ',' << format_double(theta) << ','
             << format_double(value.real()) << ',' << format_double(value.imag())
             << ',' << format_double(jac) << ',' << format_double(functional)
             << ',' << starlike << '\n';
    }
    *out << "# degenerate_denominator_count=" << degenerate << '\n';
    return kExitOk;
}

bool claim_gated(ClaimId id, const hum::WeightDiagnostics& diag, int m) {
    switch (id) {
    case ClaimId::SufficiencyFunctional:
    case ClaimId::ConvolutionClosure:
        return true;
    case ClaimId::Necessity:
        return m % 2 == 0;
    case ClaimId::Distortion:
        return diag.monotone_from_2;
    case ClaimId::SensePreserving:
    case ClaimId::Starlike:
    case ClaimId::NeighborhoodStarlike:
    case ClaimId::ConvexityDisc:
        return diag.dominates_v;
    }
    return false;
}

int run_verify_all(const ParamFlags& flags, const GridFlags& grid_flags,
                   long trials, std::uint64_t seed, int degree,
                   const std::string& output) {
    const ClassParams params = flags.params();
    const SampleGrid grid = grid_flags.grid();
    const auto diagnostics =
        hum::weight_dominance_diagnostics(params, std::max(2, degree));

    Json bundle;
    bundle["params"] = hum::io::params_to_json(params);
    bundle["degree"] = degree;
    bundle["trials"] = trials;
    bundle["seed"] = seed;
    bundle["grid"] = hum::io::grid_to_json(grid);
    bundle["tolerances"] = Json{{"functional", hum::kFunctionalTolerance},
                                {"coefficient", hum::kCoefficientTolerance},
                                {"denominator", hum::kDenominatorTolerance},
                                {"necessity_band", hum::kNecessityBand}};
    bundle["diagnostics"] = hum::io::diagnostics_to_json(diagnostics);

    std::vector<std::pair<ClaimId, ClaimReport>> reports;
    int claim_index = 0;
    auto next_seed = [&]() { return seed + static_cast<std::uint64_t>(claim_index++); };

    for (ClaimId id : {ClaimId::SufficiencyFunctional, ClaimId::SensePreserving,
                       ClaimId::Starlike, ClaimId::Distortion,
                       ClaimId::NeighborhoodStarlike}) {
        reports.emplace_back(
            id, hum::find_counterexample(id, params, trials, next_seed(), grid));
    }
    reports.emplace_back(ClaimId::ConvexityDisc,
                         hum::sweep_convexity(params, trials, next_seed()));
    reports.emplace_back(ClaimId::ConvolutionClosure,
                         hum::check_convolution_closure(params, params, trials,
                                                        next_seed()));
    if (params.m % 2 == 0) {
        reports.emplace_back(ClaimId::Necessity,
                             hum::sweep_necessity(params, trials, next_seed()));
    } else {
        bundle["necessity_skipped_odd_m"] = true;
    }

    Json claims;
    Json gated = Json::array();
    bool all_gated_pass = true;
    for (const auto& [id, report] : reports) {
        claims[hum::io::claim_name(id)] = hum::io::report_to_json(report);
        if (claim_gated(id, diagnostics, params.m)) {
            gated.push_back(hum::io::claim_name(id));
            all_gated_pass = all_gated_pass && report.pass;
        }
    }
    bundle["gated_claims"] = gated;
    bundle["claims"] = claims;
    bundle["all_gated_pass"] = all_gated_pass;

    emit(output, bundle);
    return all_gated_pass ? kExitOk : kExitNegativeVerdict;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for harmonic univalent function classes under the "
                 "order-m integral operator"};
    app.require_subcommand(1);

    ParamFlags member_params, extremal_params, sharp_params, distort_params,
        sample_params, render_params, verify_params;
    GridFlags render_grid, verify_grid;

    std::string input, output, other;
    std::string kind = "h", convention = "negative_thp";
    int m = 0, v = 2, degree = hum::kDefaultDegree, max_v = hum::kDefaultDegree;
    int angles = 256;
    long trials = 100;
    std::uint64_t seed = 0;
    double b1 = 0.0, beta = 0.0;
    std::vector<double> radii = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    std::vector<std::string> x_raw, y_raw;
    std::optional<double> delta;
    double delta_value = 0.0;

    auto* member = app.add_subcommand(
        "member", "coefficient membership test for a coefficient file");
    member->add_option("--input,-i", input)->required();
    member_params.attach(member);

    auto* op = app.add_subcommand(
        "operator", "apply the order-m integral operator to a coefficient file");
    op->add_option("--input,-i", input)->required();
    op->add_option("--output,-o", output)->required();
    op->add_option("--m", m, "operator order (>= 0)");

    auto* extremal = app.add_subcommand(
        "extremal", "write an extreme point h_v or g_v of the class");
    extremal->add_option("--kind", kind)->check(CLI::IsMember({"h", "g"}));
    extremal->add_option("--v", v, "coefficient index");
    extremal->add_option("--output,-o", output)->required();
    extremal_params.attach(extremal);

    auto* sharp = app.add_subcommand(
        "sharp", "write a boundary member from convex weights --x v=w --y v=w");
    sharp->add_option("--x", x_raw, "analytic weight, v=value (v >= 2)");
    sharp->add_option("--y", y_raw, "co-analytic weight, v=value (v >= 1)");
    sharp->add_option("--output,-o", output)->required();
    sharp_params.attach(sharp);

    auto* distort = app.add_subcommand(
        "distort", "distortion envelope per radius; with --input, check a file");
    distort->add_option("--b1", b1, "|b_1| for the envelope");
    distort->add_option("--r", radii, "radii in [0, 1)")->delimiter(',');
    distort->add_option("--input,-i", input);
    distort->add_option("--angles", angles);
    distort_params.attach(distort);

    auto* radius = app.add_subcommand(
        "radius", "disc radius on which members stay convex");
    radius->add_option("--beta", beta)->required();
    radius->add_option("--b1", b1);
    radius->add_option("--max-v", max_v);

    auto* neighborhood = app.add_subcommand(
        "neighborhood", "weighted coefficient distance between two files");
    neighborhood->add_option("--input,-i", input)->required();
    neighborhood->add_option("--other,-G", other)->required();
    auto* delta_opt = neighborhood->add_option("--delta", delta_value,
                                               "neighborhood radius to test");

    auto* convolve = app.add_subcommand(
        "convolve", "modulus convolution of two coefficient files");
    convolve->add_option("--input,-i", input)->required();
    convolve->add_option("--other,-G", other)->required();
    convolve->add_option("--output,-o", output)->required();

    auto* sample = app.add_subcommand(
        "sample", "deterministic random member of the class");
    sample->add_option("--degree", degree);
    sample->add_option("--seed", seed);
    sample->add_option("--convention", convention)
        ->check(CLI::IsMember({"general", "negative_thp"}));
    sample->add_option("--output,-o", output)->required();
    sample_params.attach(sample);

    auto* render = app.add_subcommand(
        "render", "CSV of f, Jacobian and functionals over a grid");
    render->add_option("--input,-i", input)->required();
    render->add_option("--output,-o", output);
    render_params.attach(render);
    render_grid.attach(render);

    auto* verify = app.add_subcommand(
        "verify-all", "run every claim checker for one parameter triple");
    verify->add_option("--trials", trials);
    verify->add_option("--seed", seed);
    verify->add_option("--degree", degree);
    verify->add_option("--output,-o", output);
    verify_params.attach(verify);
    verify_grid.attach(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (member->parsed()) return run_member(input, member_params);
        if (op->parsed()) return run_operator(input, output, m);
        if (extremal->parsed())
            return run_extremal(extremal_params, kind, v, output);
        if (sharp->parsed())
            return run_sharp(sharp_params, x_raw, y_raw, output);
        if (distort->parsed())
            return run_distort(distort_params, b1, radii, input, angles);
        if (radius->parsed()) return run_radius(beta, b1, max_v);
        if (neighborhood->parsed()) {
            if (delta_opt->count() > 0) delta = delta_value;
            return run_neighborhood(input, other, delta);
        }
        if (convolve->parsed()) return run_convolve(input, other, output);
        if (sample->parsed())
            return run_sample(sample_params, degree, seed, convention, output);
        if (render->parsed())
            return run_render(input, render_params, render_grid, output);
        if (verify->parsed())
            return run_verify_all(verify_params, verify_grid, trials, seed,
                                  degree, output);
    } catch (const hum::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
