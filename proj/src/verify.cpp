#include "hum/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace hum {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

WeightDiagnostics diagnostics_for(const ClassParams& params, int degree) {
    return weight_dominance_diagnostics(params, std::max(2, degree));
}

/// T(f) = sum_{v>=2} v (|a_v| + |b_v|) + |b_1|, the starlikeness
/// coefficient statistic capped by 1 in the neighborhood claim.
double starlike_coefficient_sum(const HarmonicSeries& f) {
    double t = std::abs(f.b(1));
    for (int v = 2; v <= f.degree(); ++v) {
        t += v * (std::abs(f.a(v)) + std::abs(f.b(v)));
    }
    return t;
}

HarmonicSeries scale_tails(const HarmonicSeries& f, double factor) {
    std::vector<Complex> a = f.a_coefficients();
    std::vector<Complex> b = f.b_coefficients();
    for (std::size_t i = 1; i < a.size(); ++i) a[i] *= factor;
    for (std::size_t i = 0; i < b.size(); ++i) b[i] *= factor;
    if (std::abs(b[0]) >= 1.0) {
        b[0] *= 0.995 / std::abs(b[0]);
    }
    return HarmonicSeries::from_coefficients(std::move(a), std::move(b),
                                             f.convention());
}

} // namespace

SampleGrid::SampleGrid(std::vector<double> radii_, int angles)
    : radii(std::move(radii_)), angles_per_radius(angles) {
    if (radii.empty()) {
        throw ParamOutOfRange("grid needs at least one radius");
    }
    for (double r : radii) {
        if (!(r > 0.0 && r < 1.0)) {
            throw ParamOutOfRange("grid radius must lie strictly in (0, 1)");
        }
    }
    if (angles_per_radius < 8) {
        throw ParamOutOfRange("grid needs at least 8 angles per radius");
    }
}

SampleGrid SampleGrid::default_grid() {
    return SampleGrid({0.1, 0.3, 0.5, 0.7, 0.9, 0.99}, 256);
}

ComplexPoint SampleGrid::point(std::size_t index) const {
    const std::size_t angles = static_cast<std::size_t>(angles_per_radius);
    const double r = radii[index / angles];
    const double theta = 2.0 * std::numbers::pi *
                         static_cast<double>(index % angles) /
                         static_cast<double>(angles);
    return {r * std::cos(theta), r * std::sin(theta)};
}

ClaimReport check_class_functional_min(const HarmonicSeries& f,
                                       const ClassParams& params,
                                       const SampleGrid& grid) {
    if (!is_member_sufficient(f, params)) {
        throw PreconditionViolated(
            "check_class_functional_min requires the coefficient test to hold");
    }
    ClaimReport report;
    report.claim_id = ClaimId::SufficiencyFunctional;
    report.tolerance = kFunctionalTolerance;
    report.grid = grid;
    report.diagnostics = diagnostics_for(params, f.degree());

    double min_value = kInf;
    std::size_t argmin = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double value = class_functional(f, params, grid.point(i));
        if (value < min_value) {
            min_value = value;
            argmin = i;
        }
    }
    report.extremal_value = min_value;
    report.pass = min_value >= params.beta - kFunctionalTolerance;
    if (!report.pass) {
        report.witness_point = grid.point(argmin);
        report.witness_function = f;
    }
    return report;
}

ClaimReport check_sense_preserving(const HarmonicSeries& f,
                                   const SampleGrid& grid) {
    ClaimReport report;
    report.claim_id = ClaimId::SensePreserving;
    report.grid = grid;

    double min_value = kInf;
    std::size_t argmin = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double value = jacobian(f, grid.point(i));
        if (value < min_value) {
            min_value = value;
            argmin = i;
        }
    }
    report.extremal_value = min_value;
    report.pass = min_value > 0.0;
    if (!report.pass) {
        report.witness_point = grid.point(argmin);
        report.witness_function = f;
    }
    return report;
}

ClaimReport check_starlike(const HarmonicSeries& f, const SampleGrid& grid) {
    if (f.convention() != Convention::NegativeTHP) {
        throw SignConventionViolation("check_starlike requires a NegativeTHP series");
    }
    ClaimReport report;
    report.claim_id = ClaimId::Starlike;
    report.tolerance = kFunctionalTolerance;
    report.grid = grid;

    double min_value = kInf;
    std::size_t argmin = 0;
    int skipped = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double value;
        try {
            value = starlike_functional(f, grid.point(i));
        } catch (const DegenerateDenominator&) {
            ++skipped;
            continue;
        }
        if (value < min_value) {
            min_value = value;
            argmin = i;
        }
    }
    if (min_value == kInf) {
        throw DegenerateDenominator(
            "starlike check skipped every grid point (f vanishes on the grid)");
    }
    report.skipped_points = skipped;
    report.extremal_value = min_value;
    report.pass = min_value > kFunctionalTolerance;
    if (!report.pass) {
        report.witness_point = grid.point(argmin);
        report.witness_function = f;
    }
    return report;
}

ClaimReport check_distortion(const HarmonicSeries& f, const ClassParams& params,
                             const std::vector<double>& radii, int angles) {
    if (!is_member_thp(f, params)) {
        throw PreconditionViolated("check_distortion requires a class member");
    }
    if (angles < 8) {
        throw ParamOutOfRange("distortion check needs at least 8 angles");
    }
    ClaimReport report;
    report.claim_id = ClaimId::Distortion;
    report.tolerance = kFunctionalTolerance;
    report.diagnostics = diagnostics_for(params, f.degree());

    const double b1 = std::abs(f.b(1));
    double worst_margin = kInf;
    std::optional<ComplexPoint> worst_point;
    for (double r : radii) {
        const DistortionBounds bounds = distortion_bounds(params, b1, r);
        double emp_min = kInf;
        double emp_max = -kInf;
        ComplexPoint at_min{}, at_max{};
        for (int k = 0; k < angles; ++k) {
            const double theta =
                2.0 * std::numbers::pi * static_cast<double>(k) / angles;
            const ComplexPoint z{r * std::cos(theta), r * std::sin(theta)};
            const double modulus = std::abs(evaluate(f, z));
            if (modulus < emp_min) {
                emp_min = modulus;
                at_min = z;
            }
            if (modulus > emp_max) {
                emp_max = modulus;
                at_max = z;
            }
        }
        const double upper_margin = bounds.upper - emp_max;
        const double lower_margin = emp_min - bounds.lower;
        if (upper_margin < worst_margin) {
            worst_margin = upper_margin;
            worst_point = at_max;
        }
        if (lower_margin < worst_margin) {
            worst_margin = lower_margin;
            worst_point = at_min;
        }
    }
    report.extremal_value = worst_margin;
    report.pass = worst_margin >= -kFunctionalTolerance;
    if (!report.pass) {
        report.witness_point = worst_point;
        report.witness_function = f;
    }
    return report;
}

ClaimReport check_convexity(const HarmonicSeries& f, const ClassParams& params,
                            double safety) {
    if (!is_member_thp(f, params)) {
        throw PreconditionViolated("check_convexity requires a class member");
    }
    if (!(safety > 0.0 && safety < 1.0)) {
        throw ParamOutOfRange("safety factor must lie in (0, 1)");
    }
    const double b1 = std::abs(f.b(1));
    if (1.0 - params.beta <= b1) {
        throw PreconditionViolated("convexity check needs 1 - beta > |b_1|");
    }
    ClaimReport report;
    report.claim_id = ClaimId::ConvexityDisc;
    report.tolerance = kFunctionalTolerance;
    report.diagnostics = diagnostics_for(params, f.degree());

    const ConvexityRadius radius =
        convexity_radius(params.beta, b1, std::max(2, f.degree()));
    const double slack =
        convexity_criterion_slack(f, params.beta, safety * radius.radius);
    report.extremal_value = slack;
    report.pass = slack >= -kFunctionalTolerance;
    if (!report.pass) {
        report.witness_function = f;
    }
    return report;
}

HarmonicSeries sample_neighbor(const HarmonicSeries& f, double delta,
                               DeterministicRng& rng) {
    if (f.convention() != Convention::NegativeTHP) {
        throw SignConventionViolation("sample_neighbor requires NegativeTHP");
    }
    if (delta < 0.0) {
        throw ParamOutOfRange("neighborhood radius delta must be >= 0");
    }
    if (delta == 0.0) return f;

    // Slot order: b_1 (distance weight 1), then a_v, b_v for v = 2..N
    // (distance weight v). Splitting the distance budget before dividing by
    // the weight keeps the total coefficient distance at most delta.
    const int degree = f.degree();
    const std::size_t slots = 1 + 2 * static_cast<std::size_t>(degree - 1);
    const std::vector<double> split = rng.convex_weights(slots);
    const double total = rng.uniform() * delta;

    std::vector<Complex> a = f.a_coefficients();
    std::vector<Complex> b = f.b_coefficients();

    auto perturb = [&](Complex stored, double allotment, double v_weight,
                       double cap) {
        const double step = allotment / v_weight;
        const double sign = rng.uniform_int(0, 1) == 0 ? -1.0 : 1.0;
        double magnitude = std::abs(stored) + sign * step;
        magnitude = std::clamp(magnitude, 0.0, cap);
        return Complex(-magnitude, 0.0);
    };

    std::size_t slot = 0;
    b[0] = perturb(b[0], split[slot++] * total, 1.0, 1.0 - 1e-9);
    for (int v = 2; v <= degree; ++v) {
        const std::size_t i = static_cast<std::size_t>(v - 1);
        const double vw = static_cast<double>(v);
        a[i] = perturb(a[i], split[slot++] * total, vw, kInf);
        b[i] = perturb(b[i], split[slot++] * total, vw, kInf);
    }
    return HarmonicSeries::from_coefficients(std::move(a), std::move(b),
                                             Convention::NegativeTHP);
}

ClaimReport check_neighborhood_starlike(const HarmonicSeries& f,
                                        const ClassParams& params, double delta,
                                        long trials, std::uint64_t seed) {
    if (!is_member_thp(f, params)) {
        throw PreconditionViolated(
            "check_neighborhood_starlike requires a class member");
    }
    if (delta < 0.0 || delta > params.beta) {
        throw PreconditionViolated("delta must satisfy 0 <= delta <= beta");
    }
    ClaimReport report;
    report.claim_id = ClaimId::NeighborhoodStarlike;
    report.tolerance = kCoefficientTolerance;
    report.diagnostics = diagnostics_for(params, f.degree());
    report.seed = seed;
    report.trials = trials;

    DeterministicRng rng(seed);
    double max_sum = -kInf;
    std::optional<HarmonicSeries> violator;
    for (long t = 0; t < trials; ++t) {
        const HarmonicSeries neighbor = sample_neighbor(f, delta, rng);
        const double sum = starlike_coefficient_sum(neighbor);
        if (sum > max_sum) {
            max_sum = sum;
            if (sum > 1.0 + kCoefficientTolerance && !violator) {
                violator = neighbor;
            }
        }
    }
    if (trials <= 0) max_sum = starlike_coefficient_sum(f);
    report.extremal_value = max_sum;
    report.pass = max_sum <= 1.0 + kCoefficientTolerance;
    if (!report.pass) {
        report.witness_function = violator;
    }
    return report;
}

ClaimReport check_convolution_closure(const ClassParams& params1,
                                      const ClassParams& params2, long trials,
                                      std::uint64_t seed) {
    if (params1.alpha > params2.alpha || params1.beta > params2.beta ||
        params1.m != params2.m) {
        throw PreconditionViolated(
            "convolution closure needs alpha1 <= alpha2, beta1 <= beta2, equal m");
    }
    ClaimReport report;
    report.claim_id = ClaimId::ConvolutionClosure;
    report.tolerance = kCoefficientTolerance;
    report.diagnostics = diagnostics_for(params1, kDefaultDegree);
    report.seed = seed;
    report.trials = trials;

    DeterministicRng rng(seed);
    double worst_margin = -kInf;
    std::optional<HarmonicSeries> violator;
    for (long t = 0; t < trials; ++t) {
        const std::uint64_t seed_f = rng.next_raw();
        const std::uint64_t seed_g = rng.next_raw();
        const HarmonicSeries f = random_member(params2, kDefaultDegree, seed_f,
                                               Convention::NegativeTHP);
        const HarmonicSeries g = random_member(params1, kDefaultDegree, seed_g,
                                               Convention::NegativeTHP);
        const HarmonicSeries product = convolve(f, g);
        const double margin =
            std::max(coefficient_sum(product, params2) - (1.0 - params2.beta),
                     coefficient_sum(product, params1) - (1.0 - params1.beta));
        if (margin > worst_margin) {
            worst_margin = margin;
            if (margin > kCoefficientTolerance && !violator) {
                violator = product;
            }
        }
    }
    report.extremal_value = worst_margin;
    report.pass = worst_margin <= kCoefficientTolerance;
    if (!report.pass) {
        report.witness_function = violator;
    }
    return report;
}

ClaimReport check_necessity(const HarmonicSeries& f, const ClassParams& params,
                            const std::vector<double>& approach) {
    if (f.convention() != Convention::NegativeTHP) {
        throw PreconditionViolated("check_necessity requires a NegativeTHP series");
    }
    if (params.m % 2 != 0) {
        throw PreconditionViolated(
            "check_necessity requires even m (odd m flips the real-axis signs)");
    }
    ClaimReport report;
    report.claim_id = ClaimId::Necessity;
    report.tolerance = kNecessityBand;
    report.diagnostics = diagnostics_for(params, f.degree());

    for (double r : approach) {
        if (!(r > 0.0 && r < 1.0)) {
            throw ParamOutOfRange("approach radii must lie in (0, 1)");
        }
        report.approach_values.push_back(class_functional(f, params, {r, 0.0}));
    }

    const double limit = 1.0 - coefficient_sum(f, params);
    const bool member = is_member_thp(f, params);
    report.extremal_value = limit;
    if (std::abs(limit - params.beta) <= kNecessityBand) {
        report.pass = true; // indeterminate band
    } else {
        report.pass = (limit >= params.beta) == member;
        if (!report.pass) {
            report.witness_function = f;
        }
    }
    return report;
}

namespace {

/// Signed distance from the claim's threshold; smaller = closer to failing.
double report_margin(const ClaimReport& report, const ClassParams& params) {
    switch (report.claim_id) {
    case ClaimId::SufficiencyFunctional:
        return report.extremal_value - params.beta;
    case ClaimId::SensePreserving:
    case ClaimId::Starlike:
    case ClaimId::Distortion:
        return report.extremal_value;
    case ClaimId::NeighborhoodStarlike:
        return 1.0 - report.extremal_value;
    default:
        return report.extremal_value;
    }
}

void reverify_witness(const ClaimReport& report, const ClassParams* params,
                      const std::vector<double>& radii, int angles) {
    if (report.pass) return;
    const HarmonicSeries& f = *report.witness_function;
    bool confirmed = false;
    switch (report.claim_id) {
    case ClaimId::SufficiencyFunctional:
        confirmed = class_functional(f, *params, *report.witness_point) <
                    params->beta - kFunctionalTolerance;
        break;
    case ClaimId::SensePreserving:
        confirmed = jacobian(f, *report.witness_point) <= 0.0;
        break;
    case ClaimId::Starlike:
        confirmed = starlike_functional(f, *report.witness_point) <=
                    kFunctionalTolerance;
        break;
    case ClaimId::Distortion: {
        const ComplexPoint z = *report.witness_point;
        const double r = std::hypot(z.re, z.im);
        const DistortionBounds bounds =
            distortion_bounds(*params, std::abs(f.b(1)), r);
        const double modulus = std::abs(evaluate(f, z));
        confirmed = modulus > bounds.upper + kFunctionalTolerance ||
                    modulus < bounds.lower - kFunctionalTolerance;
        break;
    }
    case ClaimId::NeighborhoodStarlike:
        confirmed =
            starlike_coefficient_sum(f) > 1.0 + kCoefficientTolerance;
        break;
    default:
        confirmed = true;
        break;
    }
    (void)radii;
    (void)angles;
    if (!confirmed) {
        throw Error("claim witness failed independent re-verification");
    }
}

} // namespace

ClaimReport find_counterexample(ClaimId claim, const ClassParams& params,
                                long trials, std::uint64_t seed,
                                const SampleGrid& grid) {
    switch (claim) {
    case ClaimId::SufficiencyFunctional:
    case ClaimId::SensePreserving:
    case ClaimId::Starlike:
    case ClaimId::Distortion:
    case ClaimId::NeighborhoodStarlike:
        break;
    default:
        throw PreconditionViolated(
            "find_counterexample supports the functional, sense-preserving, "
            "starlike, distortion and neighborhood claims");
    }

    const Convention convention = (claim == ClaimId::SufficiencyFunctional ||
                                   claim == ClaimId::SensePreserving)
                                      ? Convention::General
                                      : Convention::NegativeTHP;

    DeterministicRng rng(seed);
    std::optional<ClaimReport> tightest;
    double tightest_margin = kInf;

    for (long t = 0; t < trials; ++t) {
        const std::uint64_t member_seed = rng.next_raw();
        const std::uint64_t aux_seed = rng.next_raw();
        const HarmonicSeries f =
            random_member(params, kDefaultDegree, member_seed, convention);

        ClaimReport result;
        result.claim_id = claim;
        switch (claim) {
        case ClaimId::SufficiencyFunctional:
            result = check_class_functional_min(f, params, grid);
            break;
        case ClaimId::SensePreserving:
            result = check_sense_preserving(f, grid);
            break;
        case ClaimId::Starlike:
            result = check_starlike(f, grid);
            break;
        case ClaimId::Distortion:
            result = check_distortion(f, params, grid.radii,
                                      grid.angles_per_radius);
            break;
        case ClaimId::NeighborhoodStarlike:
            result = check_neighborhood_starlike(
                f, params, params.beta, kNeighborSamplesPerMember, aux_seed);
            break;
        default:
            break;
        }

        if (!result.pass) {
            if (!result.witness_function) result.witness_function = f;
            reverify_witness(result, &params, grid.radii,
                             grid.angles_per_radius);
            result.diagnostics = diagnostics_for(params, kDefaultDegree);
            result.seed = seed;
            result.trials = t + 1;
            return result;
        }
        const double margin = report_margin(result, params);
        if (margin < tightest_margin) {
            tightest_margin = margin;
            tightest = result;
            if (!tightest->witness_function) tightest->witness_function = f;
        }
    }

    ClaimReport report;
    report.claim_id = claim;
    if (tightest) report = *tightest;
    report.pass = true;
    report.diagnostics = diagnostics_for(params, kDefaultDegree);
    report.seed = seed;
    report.trials = trials;
    report.grid = grid;
    return report;
}

ClaimReport sweep_convexity(const ClassParams& params, long trials,
                            std::uint64_t seed, double safety) {
    DeterministicRng rng(seed);
    ClaimReport aggregate;
    aggregate.claim_id = ClaimId::ConvexityDisc;
    aggregate.pass = true;
    aggregate.tolerance = kFunctionalTolerance;
    aggregate.extremal_value = kInf;
    aggregate.seed = seed;
    aggregate.trials = trials;
    aggregate.diagnostics = diagnostics_for(params, kDefaultDegree);

    for (long t = 0; t < trials; ++t) {
        const HarmonicSeries f = random_member(params, kDefaultDegree,
                                               rng.next_raw(),
                                               Convention::NegativeTHP);
        const ClaimReport result = check_convexity(f, params, safety);
        if (result.extremal_value < aggregate.extremal_value) {
            aggregate.extremal_value = result.extremal_value;
            aggregate.witness_function = f;
        }
        if (!result.pass) {
            aggregate.pass = false;
            aggregate.witness_function = f;
            return aggregate;
        }
    }
    return aggregate;
}

ClaimReport sweep_necessity(const ClassParams& params, long trials,
                            std::uint64_t seed) {
    if (params.m % 2 != 0) {
        throw PreconditionViolated("necessity sweep requires even m");
    }
    DeterministicRng rng(seed);
    ClaimReport aggregate;
    aggregate.claim_id = ClaimId::Necessity;
    aggregate.pass = true;
    aggregate.tolerance = kNecessityBand;
    aggregate.extremal_value = kInf;
    aggregate.seed = seed;
    aggregate.trials = trials;
    aggregate.diagnostics = diagnostics_for(params, kDefaultDegree);

    for (long t = 0; t < trials; ++t) {
        HarmonicSeries f = random_member(params, kDefaultDegree, rng.next_raw(),
                                         Convention::NegativeTHP);
        if (t % 2 == 1) {
            f = scale_tails(f, 1.5); // push half the population past the budget
        }
        const ClaimReport result = check_necessity(f, params);
        const double separation = std::abs(result.extremal_value - params.beta);
        if (separation > kNecessityBand &&
            separation < aggregate.extremal_value) {
            aggregate.extremal_value = separation;
        }
        if (!result.pass) {
            aggregate.pass = false;
            aggregate.witness_function = f;
            return aggregate;
        }
    }
    return aggregate;
}

} // namespace hum
