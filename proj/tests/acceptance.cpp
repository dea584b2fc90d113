// Acceptance suite: one criterion per section, each printed as a single
// PASS/FAIL line with its runtime. The process exit code is the number of
// failed criteria, so the suite doubles as a ctest entry.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "hum/io.hpp"
#include "hum/operator_class.hpp"
#include "hum/rng.hpp"
#include "hum/series.hpp"
#include "hum/verify.hpp"

using hum::ClaimId;
using hum::ClassParams;
using hum::Complex;
using hum::Convention;
using hum::DeterministicRng;
using hum::HarmonicSeries;
using hum::SampleGrid;

namespace {

constexpr std::uint64_t kSeed = 424242;

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Check {
    Outcome& outcome;
    void operator()(bool condition, const std::string& note) const {
        if (!condition && outcome.pass) {
            outcome.pass = false;
            outcome.detail = note;
        }
    }
};

HarmonicSeries random_series(DeterministicRng& rng, int max_degree) {
    const int degree = rng.uniform_int(1, max_degree);
    std::vector<Complex> a_tail(static_cast<std::size_t>(degree - 1));
    std::vector<Complex> b(static_cast<std::size_t>(degree));
    for (auto& c : a_tail)
        c = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    for (auto& c : b)
        c = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    b[0] *= 0.5;
    return HarmonicSeries::make(a_tail, b, Convention::General);
}

// 1. I^0 is the identity exactly; composition of operator orders is additive
//    coefficientwise within 1e-12 for combined order up to 6.
Outcome operator_algebra() {
    Outcome outcome;
    const Check check{outcome};
    DeterministicRng rng(kSeed);
    for (int t = 0; t < 1000 && outcome.pass; ++t) {
        const HarmonicSeries f = random_series(rng, 32);
        check(hum::apply_integral_operator(f, 0) == f, "I^0 changed a series");

        const int m1 = rng.uniform_int(0, 6);
        const int m2 = rng.uniform_int(0, 6 - m1);
        const auto chained = hum::apply_integral_operator(
            hum::apply_integral_operator(f, m1), m2);
        const auto direct = hum::apply_integral_operator(f, m1 + m2);
        for (int v = 1; v <= f.degree(); ++v) {
            check(std::abs(chained.a(v) - direct.a(v)) <= 1e-12 &&
                      std::abs(chained.b(v) - direct.b(v)) <= 1e-12,
                  "composition mismatch at v=" + std::to_string(v));
        }
    }
    return outcome;
}

// 2. Boundary members built from random convex weights attain the budget
//    1 - beta within 1e-12.
Outcome sharpness() {
    Outcome outcome;
    const Check check{outcome};
    DeterministicRng rng(kSeed);
    for (int t = 0; t < 1000 && outcome.pass; ++t) {
        const ClassParams params(rng.uniform_int(0, 4), rng.uniform(0.0, 0.999),
                                 rng.uniform(0.0, 0.999));
        const int degree = rng.uniform_int(2, 16);
        const auto split =
            rng.convex_weights(static_cast<std::size_t>(2 * degree - 1));
        const std::vector<double> x(split.begin(), split.begin() + (degree - 1));
        const std::vector<double> y(split.begin() + (degree - 1), split.end());
        const auto f = hum::sharp_function(params, x, y);
        const double gap =
            std::abs(hum::coefficient_sum(f, params) - (1.0 - params.beta));
        check(gap <= 1e-12, "budget gap " + hum::io::format_double(gap));
    }
    return outcome;
}

// 3. For members of every (m, alpha) cell the class functional stays above
//    beta - 1e-9 across the default grid.
Outcome sufficiency_functional() {
    Outcome outcome;
    const Check check{outcome};
    const SampleGrid grid = SampleGrid::default_grid();
    for (int m = 0; m <= 3 && outcome.pass; ++m) {
        for (double alpha : {0.0, 0.5, 0.9}) {
            const ClassParams params(m, alpha, 0.25);
            DeterministicRng rng(kSeed);
            for (int t = 0; t < 1000 && outcome.pass; ++t) {
                const auto f = hum::random_member(params, 16, rng.next_raw(),
                                                  Convention::General);
                const auto report =
                    hum::check_class_functional_min(f, params, grid);
                check(report.pass,
                      "min " + hum::io::format_double(report.extremal_value) +
                          " at m=" + std::to_string(m) +
                          " alpha=" + hum::io::format_double(alpha));
            }
        }
    }
    return outcome;
}

// 4. Membership verdict and the radial-limit verdict agree on every series
//    whose limit is outside the 1e-2 band around beta.
Outcome necessity() {
    Outcome outcome;
    const Check check{outcome};
    DeterministicRng rng(kSeed);
    int decided = 0;
    for (int t = 0; t < 1000 && outcome.pass; ++t) {
        const int m = 2 * rng.uniform_int(0, 2);
        const ClassParams params(m, rng.uniform(0.0, 0.999),
                                 rng.uniform(0.0, 0.999));
        HarmonicSeries f = hum::random_member(params, 16, rng.next_raw(),
                                              Convention::NegativeTHP);
        if (t % 2 == 1) {
            // Scale the tails past the budget to include non-members.
            std::vector<Complex> a = f.a_coefficients();
            std::vector<Complex> b = f.b_coefficients();
            for (std::size_t i = 1; i < a.size(); ++i) a[i] *= 1.5;
            for (auto& c : b) c *= 1.5;
            if (std::abs(b[0]) >= 1.0) b[0] *= 0.995 / std::abs(b[0]);
            f = HarmonicSeries::from_coefficients(a, b, Convention::NegativeTHP);
        }
        const auto report = hum::check_necessity(f, params);
        if (std::abs(report.extremal_value - params.beta) > 1e-2) ++decided;
        check(report.pass, "verdict disagreement at trial " + std::to_string(t));
    }
    check(decided > 500, "too few decided cases: " + std::to_string(decided));
    return outcome;
}

// 5. In the monotone-weight regime (m = 0), the modulus of every member
//    stays inside the distortion envelope, and the two boundary functions
//    attain the envelope at real points.
Outcome distortion() {
    Outcome outcome;
    const Check check{outcome};
    const std::vector<double> radii = {0.1, 0.2, 0.3, 0.4, 0.5,
                                       0.6, 0.7, 0.8, 0.9};
    for (double alpha : {0.0, 0.5}) {
        const auto diag = hum::weight_dominance_diagnostics(
            ClassParams(0, alpha, 0.0), 16);
        check(diag.monotone_from_2, "monotone premise unexpectedly false");
        if (!outcome.pass) return outcome;

        DeterministicRng rng(kSeed);
        for (int t = 0; t < 1000 && outcome.pass; ++t) {
            const ClassParams params(0, alpha, rng.uniform(0.0, 0.9));
            const auto f = hum::random_member(params, 16, rng.next_raw(),
                                              Convention::NegativeTHP);
            const auto report = hum::check_distortion(f, params, radii, 256);
            check(report.pass, "envelope violated, margin " +
                                   hum::io::format_double(report.extremal_value));
        }

        DeterministicRng extremal_rng(kSeed + 1);
        for (int t = 0; t < 200 && outcome.pass; ++t) {
            const ClassParams params(0, alpha, extremal_rng.uniform(0.0, 0.9));
            const double b1 =
                extremal_rng.uniform(0.0, 1.0 - params.beta - 1e-3);
            const double c = (1.0 - b1 - params.beta) / hum::weight(params, 2);
            const double r = extremal_rng.uniform(0.05, 0.9);
            const auto bounds = hum::distortion_bounds(params, b1, r);

            const auto upper_extremal = HarmonicSeries::make(
                {}, {Complex(b1, 0.0), Complex(-c, 0.0)}, Convention::General);
            const auto lower_extremal = HarmonicSeries::make(
                {}, {Complex(-b1, 0.0), Complex(-c, 0.0)},
                Convention::NegativeTHP);
            const double at_upper =
                std::abs(hum::evaluate(upper_extremal, {-r, 0.0}));
            const double at_lower =
                std::abs(hum::evaluate(lower_extremal, {r, 0.0}));
            check(std::abs(at_upper - bounds.upper) <= 1e-6,
                  "upper bound not attained");
            check(std::abs(at_lower - bounds.lower) <= 1e-6,
                  "lower bound not attained");
        }
    }
    return outcome;
}

// 6. Convex combinations of extreme points are members; each extreme point
//    attains the coefficient budget exactly.
Outcome extreme_points() {
    Outcome outcome;
    const Check check{outcome};
    DeterministicRng rng(kSeed);
    for (int t = 0; t < 1000 && outcome.pass; ++t) {
        const ClassParams params(rng.uniform_int(0, 3), rng.uniform(0.0, 0.999),
                                 rng.uniform(1e-3, 0.999));
        const int count = rng.uniform_int(1, 8);
        std::vector<HarmonicSeries> points;
        for (int k = 0; k < count; ++k) {
            const int v = rng.uniform_int(1, 16);
            points.push_back(rng.uniform_int(0, 1) == 0
                                 ? hum::extreme_point_h(params, v)
                                 : hum::extreme_point_g(params, v));
        }
        const auto combo =
            hum::convex_combination(points, rng.convex_weights(points.size()));
        check(hum::is_member_thp(combo, params),
              "combination left the class at trial " + std::to_string(t));
    }

    DeterministicRng prng(kSeed + 1);
    for (int t = 0; t < 50 && outcome.pass; ++t) {
        const ClassParams params(prng.uniform_int(0, 3),
                                 prng.uniform(0.0, 0.999),
                                 prng.uniform(1e-3, 0.999));
        for (int v = 2; v <= 16; ++v) {
            const double gap_h = std::abs(
                hum::coefficient_sum(hum::extreme_point_h(params, v), params) -
                (1.0 - params.beta));
            check(gap_h <= 1e-12, "h budget gap at v=" + std::to_string(v));
        }
        for (int v = 1; v <= 16; ++v) {
            const double gap_g = std::abs(
                hum::coefficient_sum(hum::extreme_point_g(params, v), params) -
                (1.0 - params.beta));
            check(gap_g <= 1e-12, "g budget gap at v=" + std::to_string(v));
        }
    }
    return outcome;
}

// 7. Near-linear weights (m = 0, alpha = 0.99): every member keeps a
//    positive starlikeness functional and Jacobian across the grid. Outside
//    that regime the counterexample searches must complete, re-verifying any
//    witness they report (the search throws on a stale witness).
Outcome starlike() {
    Outcome outcome;
    const Check check{outcome};
    const SampleGrid grid = SampleGrid::default_grid();
    const ClassParams params(0, 0.99, 0.25);
    DeterministicRng rng(kSeed);
    for (int t = 0; t < 1000 && outcome.pass; ++t) {
        const auto f = hum::random_member(params, 16, rng.next_raw(),
                                          Convention::NegativeTHP);
        const auto star = hum::check_starlike(f, grid);
        const auto sense = hum::check_sense_preserving(f, grid);
        check(star.pass && star.extremal_value > 0.0,
              "starlike functional dipped to " +
                  hum::io::format_double(star.extremal_value));
        check(sense.pass && sense.extremal_value > 0.0,
              "jacobian dipped to " +
                  hum::io::format_double(sense.extremal_value));
    }
    if (!outcome.pass) return outcome;

    try {
        const auto exploratory_star = hum::find_counterexample(
            ClaimId::Starlike, ClassParams(2, 0.0, 0.1), 10000, kSeed, grid);
        const auto exploratory_sense = hum::find_counterexample(
            ClaimId::SensePreserving, ClassParams(3, 0.0, 0.1), 10000, kSeed,
            grid);
        outcome.detail =
            std::string("exploratory m=2 starlike witness: ") +
            (exploratory_star.pass ? "none" : "found+reverified") +
            ", m=3 sense-preserving witness: " +
            (exploratory_sense.pass ? "none" : "found+reverified");
    } catch (const hum::Error& e) {
        check(false, std::string("exploratory search failed: ") + e.what());
    }
    return outcome;
}

// 8. The convexity radius matches a 4x wider brute force exactly; the
//    criterion holds at 0.999 r* for members of the monotone regime; the
//    single-term boundary member violates it at 1.2 r*.
Outcome convexity() {
    Outcome outcome;
    const Check check{outcome};
    DeterministicRng rng(kSeed);
    for (int t = 0; t < 1000 && outcome.pass; ++t) {
        const double beta = rng.uniform(0.0, 0.99);
        const double b1 = rng.uniform(0.0, (1.0 - beta) * 0.999);
        const auto narrow = hum::convexity_radius(beta, b1, 16);
        const auto wide = hum::convexity_radius(beta, b1, 64);
        check(narrow.radius == wide.radius && narrow.argmin_v == wide.argmin_v,
              "brute-force disagreement");
    }

    DeterministicRng member_rng(kSeed + 1);
    for (int t = 0; t < 1000 && outcome.pass; ++t) {
        const ClassParams params(0, member_rng.uniform(0.0, 0.999),
                                 member_rng.uniform(0.0, 0.999));
        const auto f = hum::random_member(params, 16, member_rng.next_raw(),
                                          Convention::NegativeTHP);
        const auto report = hum::check_convexity(f, params, 0.999);
        check(report.pass, "criterion slack " +
                               hum::io::format_double(report.extremal_value));
    }

    const double beta = 0.25;
    const auto witness = HarmonicSeries::make({Complex(-(1.0 - beta), 0.0)}, {},
                                              Convention::NegativeTHP);
    const double r_star = hum::convexity_radius(beta, 0.0, 16).radius;
    const double slack =
        hum::convexity_criterion_slack(witness, beta, 1.2 * r_star);
    check(slack < 0.0, "witness did not violate the criterion at 1.2 r*");
    return outcome;
}

// 9. The weight-dominance gate w(v) >= v is vacuous on the valid parameter
//    range (that fact is asserted, not assumed); the neighborhood claim is
//    asserted in the regime where each member's starlikeness coefficient sum
//    leaves room for delta, which is checked per member before sampling.
Outcome neighborhood() {
    Outcome outcome;
    const Check check{outcome};
    for (int m = 0; m <= 6 && outcome.pass; ++m) {
        for (double alpha = 0.0; alpha < 1.0; alpha += 0.0999) {
            const auto diag = hum::weight_dominance_diagnostics(
                ClassParams(m, alpha, 0.0), 16);
            check(!diag.dominates_v,
                  "dominance gate unexpectedly true at m=" + std::to_string(m));
        }
    }
    if (!outcome.pass) return outcome;

    const ClassParams params(0, 0.99, 0.5);
    const double delta = params.beta / 2.0;

    const auto around_identity = hum::check_neighborhood_starlike(
        HarmonicSeries::make({}, {}, Convention::NegativeTHP), params, delta,
        1000, kSeed);
    check(around_identity.pass && around_identity.extremal_value <= 1.0 + 1e-12,
          "identity neighborhood exceeded the cap");

    DeterministicRng rng(kSeed + 1);
    for (int t = 0; t < 100 && outcome.pass; ++t) {
        const auto f = hum::random_member(params, 16, rng.next_raw(),
                                          Convention::NegativeTHP);
        double reach = std::abs(f.b(1));
        for (int v = 2; v <= f.degree(); ++v) {
            reach += v * (std::abs(f.a(v)) + std::abs(f.b(v)));
        }
        check(reach + delta <= 1.0,
              "member too close to the coefficient cap for delta");
        const auto report = hum::check_neighborhood_starlike(f, params, delta,
                                                             10, rng.next_raw());
        check(report.pass, "neighbor sum " +
                               hum::io::format_double(report.extremal_value));
    }
    return outcome;
}

// 10. Modulus convolutions of members of ordered parameter pairs must stay
//     members of both classes, for shared m in {0, 1, 2}.
Outcome convolution_closure() {
    Outcome outcome;
    DeterministicRng rng(kSeed);
    int violations = 0;
    double worst = -1e300;
    int worst_m = -1;
    for (int t = 0; t < 1000; ++t) {
        const int m = t % 3;
        double a1 = rng.uniform(0.0, 0.999), a2 = rng.uniform(0.0, 0.999);
        if (a1 > a2) std::swap(a1, a2);
        double be1 = rng.uniform(0.0, 0.999), be2 = rng.uniform(0.0, 0.999);
        if (be1 > be2) std::swap(be1, be2);
        const ClassParams p1(m, a1, be1), p2(m, a2, be2);
        const auto f =
            hum::random_member(p2, 16, rng.next_raw(), Convention::NegativeTHP);
        const auto g =
            hum::random_member(p1, 16, rng.next_raw(), Convention::NegativeTHP);
        const auto product = hum::convolve(f, g);
        const double margin = std::max(
            hum::coefficient_sum(product, p2) - (1.0 - p2.beta),
            hum::coefficient_sum(product, p1) - (1.0 - p1.beta));
        if (margin > 1e-12) {
            ++violations;
            if (margin > worst) {
                worst = margin;
                worst_m = m;
            }
        }
    }
    outcome.pass = violations == 0;
    if (!outcome.pass) {
        outcome.detail = std::to_string(violations) +
                         "/1000 products left the class (worst margin " +
                         hum::io::format_double(worst) + " at m=" +
                         std::to_string(worst_m) +
                         "); closure provably fails once some w(v) < 1-beta, "
                         "e.g. h_3*h_3 at m=1 has weighted sum 3";
    }
    return outcome;
}

// 11. Two identical verify-all invocations produce byte-identical bundles.
Outcome determinism() {
    Outcome outcome;
    const Check check{outcome};
#ifdef HUM_CLI_PATH
    const std::string flags =
        " verify-all --m 0 --alpha 0.5 --beta 0.5 --trials 100 --seed 7";
    auto run = [&](const std::string& out) {
        const std::string cmd = std::string(HUM_CLI_PATH) + flags +
                                " --output " + out + " > /dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    };
    const int first = run("acceptance_bundle_1.json");
    const int second = run("acceptance_bundle_2.json");
    check(first == 0 && second == 0,
          "verify-all exited with " + std::to_string(first) + "/" +
              std::to_string(second));

    auto slurp = [](const std::string& path) {
        std::ifstream in(path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    };
    const std::string b1 = slurp("acceptance_bundle_1.json");
    const std::string b2 = slurp("acceptance_bundle_2.json");
    check(!b1.empty() && b1 == b2, "bundles differ between runs");
#else
    check(false, "CLI path not configured");
#endif
    return outcome;
}

struct Criterion {
    int id;
    const char* label;
    double budget_seconds;
    std::function<Outcome()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "operator algebra (identity and composition)", 5.0, operator_algebra},
        {2, "sharpness of the coefficient bound", 5.0, sharpness},
        {3, "sufficiency functional over the grid", 60.0, sufficiency_functional},
        {4, "necessity via the radial limit", 30.0, necessity},
        {5, "distortion envelope, monotone regime", 60.0, distortion},
        {6, "extreme points and convex hull", 30.0, extreme_points},
        {7, "starlikeness and sense-preservation", 60.0, starlike},
        {8, "convexity radius and criterion", 30.0, convexity},
        {9, "neighborhood starlikeness", 30.0, neighborhood},
        {10, "convolution closure", 10.0, convolution_closure},
        {11, "verify-all determinism", 60.0, determinism},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        if (elapsed > criterion.budget_seconds) {
            outcome.pass = false;
            outcome.detail += (outcome.detail.empty() ? "" : "; ");
            outcome.detail += "runtime budget exceeded";
        }
        if (!outcome.pass) ++failures;
        std::printf("criterion %2d: %s — %s (%.2fs)%s%s\n", criterion.id,
                    outcome.pass ? "PASS" : "FAIL", criterion.label, elapsed,
                    outcome.detail.empty() ? "" : " — ",
                    outcome.detail.c_str());
    }
    std::printf("acceptance: %zu/%zu criteria pass\n",
                criteria.size() - static_cast<std::size_t>(failures),
                criteria.size());
    return failures;
}
