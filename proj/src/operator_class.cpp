#include "hum/operator_class.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hum/rng.hpp"

namespace hum {

namespace {

double convex_weight_total(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0) {
            throw WeightsNotConvex("negative convex weight " + std::to_string(w));
        }
        total += w;
    }
    return total;
}

void require_convex_total(double total) {
    if (std::abs(total - 1.0) > kCoefficientTolerance) {
        throw WeightsNotConvex("convex weights sum to " + std::to_string(total) +
                               ", expected 1");
    }
}

} // namespace

ClassParams::ClassParams(int m_, double alpha_, double beta_)
    : m(m_), alpha(alpha_), beta(beta_) {
    if (m < 0 || m > kMaxOperatorOrder) {
        throw ParamOutOfRange("operator order m must be in [0, " +
                              std::to_string(kMaxOperatorOrder) + "]");
    }
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw ParamOutOfRange("alpha must satisfy 0 <= alpha < 1");
    }
    if (!(beta >= 0.0 && beta < 1.0)) {
        throw ParamOutOfRange("beta must satisfy 0 <= beta < 1");
    }
}

double weight(int m, double alpha, int v) {
    return (1.0 + alpha * (v - 1)) / detail::pow_int(static_cast<double>(v), m);
}

double weight(const ClassParams& params, int v) {
    if (v < 1) {
        throw ParamOutOfRange("weight index v must be >= 1");
    }
    return weight(params.m, params.alpha, v);
}

HarmonicSeries apply_integral_operator(const HarmonicSeries& f, int m) {
    if (m < 0 || m > kMaxOperatorOrder) {
        throw ParamOutOfRange("operator order m must be in [0, " +
                              std::to_string(kMaxOperatorOrder) + "]");
    }
    if (m == 0) return f;

    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    std::vector<Complex> a = f.a_coefficients();
    std::vector<Complex> b = f.b_coefficients();
    for (int v = 1; v <= f.degree(); ++v) {
        const double scale = 1.0 / detail::pow_int(static_cast<double>(v), m);
        const std::size_t i = static_cast<std::size_t>(v - 1);
        if (v >= 2) a[i] *= scale;
        b[i] *= sign * scale;
    }

    // An odd m turns stored-negative b coefficients positive, which breaks
    // the NegativeTHP sign invariant; such results are tagged General.
    Convention convention = f.convention();
    if (convention == Convention::NegativeTHP && sign < 0.0) {
        for (const Complex& c : b) {
            if (c.real() > 0.0) {
                convention = Convention::General;
                break;
            }
        }
    }
    return HarmonicSeries::from_coefficients(std::move(a), std::move(b),
                                             convention);
}

double coefficient_sum(const HarmonicSeries& f, const ClassParams& params) {
    double sum = 0.0;
    for (int v = 2; v <= f.degree(); ++v) {
        sum += weight(params, v) * std::abs(f.a(v));
    }
    for (int v = 1; v <= f.degree(); ++v) {
        sum += weight(params, v) * std::abs(f.b(v));
    }
    return sum;
}

bool is_member_sufficient(const HarmonicSeries& f, const ClassParams& params) {
    return coefficient_sum(f, params) <= 1.0 - params.beta + kCoefficientTolerance;
}

bool is_member_thp(const HarmonicSeries& f, const ClassParams& params) {
    if (f.convention() != Convention::NegativeTHP) {
        throw SignConventionViolation("is_member_thp requires a NegativeTHP series");
    }
    return is_member_sufficient(f, params);
}

double class_functional(const HarmonicSeries& f, const ClassParams& params,
                        ComplexPoint z) {
    detail::require_in_disk(z);
    const Complex zc = z.value();
    if (std::abs(zc) <= 1e-12) {
        throw OriginExcluded("class functional is undefined at z = 0");
    }

    std::vector<Complex> a = f.a_coefficients();
    std::vector<Complex> b = f.b_coefficients();
    for (int v = 2; v <= f.degree(); ++v) {
        const double scale = 1.0 / detail::pow_int(static_cast<double>(v), params.m);
        a[static_cast<std::size_t>(v - 1)] *= scale;
        b[static_cast<std::size_t>(v - 1)] *= scale;
    }
    const double sign = (params.m % 2 == 0) ? 1.0 : -1.0;

    const Complex H = detail::power_sum(a, zc);
    const Complex G = detail::power_sum(b, zc);
    const Complex dH = detail::power_sum_derivative(a, zc);
    const Complex dG = detail::power_sum_derivative(b, zc);

    const Complex value = (1.0 - params.alpha) * (H + sign * std::conj(G)) / zc +
                          params.alpha * (dH + sign * std::conj(dG));
    return value.real();
}

HarmonicSeries sharp_function(const ClassParams& params,
                              const std::vector<double>& x,
                              const std::vector<double>& y) {
    require_convex_total(convex_weight_total(x) + convex_weight_total(y));

    const std::size_t degree = std::max<std::size_t>({1, x.size() + 1, y.size()});
    if (degree > static_cast<std::size_t>(kMaxDegree)) {
        throw ParamOutOfRange("sharp_function degree exceeds kMaxDegree");
    }
    std::vector<Complex> a(degree, Complex(0.0, 0.0));
    std::vector<Complex> b(degree, Complex(0.0, 0.0));
    a[0] = Complex(1.0, 0.0);

    const double budget = 1.0 - params.beta;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const int v = static_cast<int>(i) + 2;
        a[static_cast<std::size_t>(v - 1)] = budget / weight(params, v) * x[i];
    }
    for (std::size_t i = 0; i < y.size(); ++i) {
        const int v = static_cast<int>(i) + 1;
        b[static_cast<std::size_t>(v - 1)] = budget / weight(params, v) * y[i];
    }
    return HarmonicSeries::from_coefficients(std::move(a), std::move(b),
                                             Convention::General);
}

HarmonicSeries extreme_point_h(const ClassParams& params, int v) {
    if (v < 1 || v > kMaxDegree) {
        throw IndexOutOfRange("extreme_point_h index v = " + std::to_string(v));
    }
    if (v == 1) {
        return HarmonicSeries::make({}, {}, Convention::NegativeTHP);
    }
    std::vector<Complex> a_tail(static_cast<std::size_t>(v - 1), Complex(0.0, 0.0));
    a_tail.back() = Complex(-(1.0 - params.beta) / weight(params, v), 0.0);
    return HarmonicSeries::make(a_tail, {}, Convention::NegativeTHP);
}

HarmonicSeries extreme_point_g(const ClassParams& params, int v) {
    if (v < 1 || v > kMaxDegree) {
        throw IndexOutOfRange("extreme_point_g index v = " + std::to_string(v));
    }
    std::vector<Complex> b(static_cast<std::size_t>(v), Complex(0.0, 0.0));
    b.back() = Complex(-(1.0 - params.beta) / weight(params, v), 0.0);
    return HarmonicSeries::make({}, b, Convention::NegativeTHP);
}

HarmonicSeries convex_combination(const std::vector<HarmonicSeries>& points,
                                  const std::vector<double>& mus) {
    if (points.empty() || points.size() != mus.size()) {
        throw WeightsNotConvex("points and mus must be nonempty and equal-length");
    }
    require_convex_total(convex_weight_total(mus));

    int degree = 1;
    for (const auto& p : points) {
        if (p.convention() != Convention::NegativeTHP) {
            throw SignConventionViolation(
                "convex_combination requires NegativeTHP points");
        }
        degree = std::max(degree, p.degree());
    }

    std::vector<Complex> a(static_cast<std::size_t>(degree), Complex(0.0, 0.0));
    std::vector<Complex> b(static_cast<std::size_t>(degree), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        for (int v = 2; v <= p.degree(); ++v) {
            a[static_cast<std::size_t>(v - 1)] += mus[i] * p.a(v);
        }
        for (int v = 1; v <= p.degree(); ++v) {
            b[static_cast<std::size_t>(v - 1)] += mus[i] * p.b(v);
        }
    }
    // a_1 is the mu-combination of exact ones and must stay exactly 1.
    a[0] = Complex(1.0, 0.0);
    return HarmonicSeries::from_coefficients(std::move(a), std::move(b),
                                             Convention::NegativeTHP);
}

DistortionBounds distortion_bounds(const ClassParams& params, double b1_mag,
                                   double r) {
    if (!(b1_mag >= 0.0 && b1_mag < 1.0)) {
        throw ParamOutOfRange("|b_1| must lie in [0, 1)");
    }
    if (!(r >= 0.0 && r < 1.0)) {
        throw ParamOutOfRange("radius r must lie in [0, 1)");
    }
    if (b1_mag > 1.0 - params.beta) {
        throw ParamOutOfRange("|b_1| must not exceed 1 - beta");
    }
    const double tail = (1.0 - b1_mag - params.beta) / weight(params, 2) * r * r;
    return {(1.0 - b1_mag) * r - tail, (1.0 + b1_mag) * r + tail};
}

ConvexityRadius convexity_radius(double beta, double b1_mag, int max_v) {
    if (!(beta >= 0.0 && beta < 1.0) || !(b1_mag >= 0.0 && b1_mag < 1.0)) {
        throw ParamOutOfRange("beta and |b_1| must lie in [0, 1)");
    }
    if (max_v < 2) {
        throw ParamOutOfRange("max_v must be >= 2");
    }
    const double budget = 1.0 - beta - b1_mag;
    if (budget <= 0.0) {
        throw PreconditionViolated("convexity radius needs 1 - beta > |b_1|");
    }

    double best = 2.0;
    int best_v = 0;
    for (int v = 2; v <= max_v; ++v) {
        const double candidate = std::pow(budget / v, 1.0 / (v - 1));
        if (candidate < best) {
            best = candidate;
            best_v = v;
        }
    }
    return {best, best_v};
}

double convexity_criterion_slack(const HarmonicSeries& f, double beta,
                                 double r) {
    const double b1 = std::abs(f.b(1));
    double lhs = 0.0;
    double r_power = r; // r^{v-1}
    for (int v = 2; v <= f.degree(); ++v) {
        lhs += static_cast<double>(v) * v * (std::abs(f.a(v)) + std::abs(f.b(v))) *
               r_power;
        r_power *= r;
    }
    return (1.0 - beta - b1) - lhs;
}

HarmonicSeries random_member(const ClassParams& params, int degree,
                             std::uint64_t seed, Convention convention) {
    if (degree < 1 || degree > kMaxDegree) {
        throw ParamOutOfRange("random_member degree out of range");
    }
    DeterministicRng rng(seed);

    // Slots: a_2..a_N then b_1..b_N.
    const std::size_t n = static_cast<std::size_t>(degree);
    const std::size_t slots = 2 * n - 1;
    const std::vector<double> split = rng.convex_weights(slots);
    const double budget = rng.uniform() * (1.0 - params.beta);

    std::vector<Complex> a(n, Complex(0.0, 0.0));
    std::vector<Complex> b(n, Complex(0.0, 0.0));
    a[0] = Complex(1.0, 0.0);

    auto place = [&](std::vector<Complex>& coeffs, int v, double mass) {
        const double magnitude = mass / weight(params, v);
        if (convention == Convention::General) {
            const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
            coeffs[static_cast<std::size_t>(v - 1)] =
                magnitude * Complex(std::cos(phase), std::sin(phase));
        } else {
            coeffs[static_cast<std::size_t>(v - 1)] = Complex(-magnitude, 0.0);
        }
    };

    std::size_t slot = 0;
    for (int v = 2; v <= degree; ++v) place(a, v, split[slot++] * budget);
    for (int v = 1; v <= degree; ++v) place(b, v, split[slot++] * budget);

    return HarmonicSeries::from_coefficients(std::move(a), std::move(b),
                                             convention);
}

WeightDiagnostics weight_dominance_diagnostics(const ClassParams& params,
                                               int max_v) {
    if (max_v < 2) {
        throw ParamOutOfRange("diagnostics need max_v >= 2");
    }
    const double w2 = weight(params, 2);
    std::optional<int> first_dominance;
    std::optional<int> first_monotone;
    for (int v = 2; v <= max_v; ++v) {
        const double w = weight(params, v);
        if (!first_dominance && w < static_cast<double>(v)) first_dominance = v;
        if (!first_monotone && w < w2) first_monotone = v;
    }

    WeightDiagnostics diag{params, max_v, !first_dominance.has_value(),
                           !first_monotone.has_value(), std::nullopt};
    if (first_monotone) {
        diag.first_violation_v = first_monotone;
    } else if (first_dominance) {
        diag.first_violation_v = first_dominance;
    }
    return diag;
}

} // namespace hum
