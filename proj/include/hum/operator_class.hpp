#ifndef HUM_OPERATOR_CLASS_HPP
#define HUM_OPERATOR_CLASS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hum/series.hpp"

namespace hum {

/// Additive slack on exact coefficient identities and membership thresholds.
inline constexpr double kCoefficientTolerance = 1e-12;

/// Desk-scale cap on the operator order m.
inline constexpr int kMaxOperatorOrder = 64;

/// Default truncation order used by generators and sweeps.
inline constexpr int kDefaultDegree = 16;

/// Parameter triple (m, alpha, beta) of the class. The coefficient weight is
///
///   w(v) = v^{-m} (1 - alpha + alpha v),
///
/// and membership asks for the weighted tail sum to stay within 1 - beta.
struct ClassParams {
    int m;
    double alpha;
    double beta;

    /// Validates m >= 0, 0 <= alpha < 1, 0 <= beta < 1.
    ClassParams(int m, double alpha, double beta);
};

/// Raw coefficient weight v^{-m} (1 - alpha + alpha v), no range checks.
/// Computed as v^{-m} (1 + alpha (v-1)), which is exactly 1 at v = 1.
double weight(int m, double alpha, int v);

/// Weight under validated class parameters. weight(params, 1) == 1 exactly.
double weight(const ClassParams& params, int v);

/// Integral operator of order m: a_v -> v^{-m} a_v, b_v -> (-1)^m v^{-m} b_v
/// (the alternating sign is folded into the stored coefficients). m = 0 is
/// the identity. A NegativeTHP input stays NegativeTHP unless an odd m flips
/// nonzero b-coefficients positive, in which case the result is General.
HarmonicSeries apply_integral_operator(const HarmonicSeries& f, int m);

/// S = sum_{v=2..N} w(v) |a_v| + sum_{v=1..N} w(v) |b_v|  (a_1 excluded).
double coefficient_sum(const HarmonicSeries& f, const ClassParams& params);

/// Coefficient test S <= 1 - beta (+ tolerance). True guarantees membership
/// for any convention; false is conclusive only for NegativeTHP series.
bool is_member_sufficient(const HarmonicSeries& f, const ClassParams& params);

/// The same test restricted to NegativeTHP series, where it is necessary and
/// sufficient. Throws SignConventionViolation for General inputs.
bool is_member_thp(const HarmonicSeries& f, const ClassParams& params);

/// The class-defining functional
///
///   Re{ (1-a) (H(z) + s conj(G(z))) / z  +  a (H'(z) + s conj(G'(z))) },
///
/// where H, G are the order-m operator transforms of h, g and s = (-1)^m.
/// Membership in the class means this stays >= beta on the punctured disk.
/// Throws OriginExcluded for |z| <= 1e-12 and PointOutsideDisk for |z| >= 1.
double class_functional(const HarmonicSeries& f, const ClassParams& params,
                        ComplexPoint z);

/// Boundary family of the coefficient inequality: given convex weights
/// x_v (v = 2..) and y_v (v = 1..) summing to one,
///
///   f(z) = z + sum (1-beta)/w(v) x_v z^v + conj( sum (1-beta)/w(v) y_v z^v ),
///
/// whose coefficient sum equals 1 - beta exactly. Throws WeightsNotConvex
/// if the weights are negative or do not sum to one.
HarmonicSeries sharp_function(const ClassParams& params,
                              const std::vector<double>& x,
                              const std::vector<double>& y);

/// h_v(z) = z - (1-beta)/w(v) z^v (v >= 2; v = 1 degenerates to z).
HarmonicSeries extreme_point_h(const ClassParams& params, int v);

/// g_v(z) = z - (1-beta)/w(v) conj(z)^v (v >= 1).
HarmonicSeries extreme_point_g(const ClassParams& params, int v);

/// Coefficientwise convex combination of NegativeTHP series; mus must be
/// nonnegative and sum to one within tolerance.
HarmonicSeries convex_combination(const std::vector<HarmonicSeries>& points,
                                  const std::vector<double>& mus);

struct DistortionBounds {
    double lower;
    double upper;
};

/// Modulus envelope on |z| = r:
///
///   upper = (1+|b_1|) r + (1-|b_1|-beta) r^2 / w(2)
///   lower = (1-|b_1|) r - (1-|b_1|-beta) r^2 / w(2)
///
/// Requires b1_mag, r in [0, 1) and b1_mag + beta <= 1 (so lower <= upper).
DistortionBounds distortion_bounds(const ClassParams& params, double b1_mag,
                                   double r);

struct ConvexityRadius {
    double radius;
    int argmin_v;
};

/// min_{v=2..max_v} [ (1 - beta - |b_1|) / v ]^{1/(v-1)}, with the attaining
/// index. Independent of m and alpha. Requires 1 - beta > b1_mag.
ConvexityRadius convexity_radius(double beta, double b1_mag, int max_v);

/// Slack of the convexity criterion at radius r:
///   (1 - beta - |b_1|) - sum_{v>=2} v^2 (|a_v| + |b_v|) r^{v-1}.
/// Nonnegative slack certifies convexity of the image of |z| < r.
double convexity_criterion_slack(const HarmonicSeries& f, double beta,
                                 double r);

/// Deterministic member generator: splits a random fraction of the budget
/// 1 - beta across the coefficient slots (flat Dirichlet over a_2..a_N,
/// b_1..b_N) and divides each slot's mass by its weight, so the coefficient
/// sum never exceeds 1 - beta. General convention adds random phases.
HarmonicSeries random_member(const ClassParams& params, int degree,
                             std::uint64_t seed, Convention convention);

/// Exact per-parameter report on the two dominance premises that the
/// grid checkers gate their universal assertions on: w(v) >= v, and
/// w(v) >= w(2), for 2 <= v <= max_v. first_violation_v is the first index
/// breaking monotonicity when that flag is false, otherwise the first index
/// breaking dominance.
struct WeightDiagnostics {
    ClassParams params;
    int max_v;
    bool dominates_v;
    bool monotone_from_2;
    std::optional<int> first_violation_v;
};

WeightDiagnostics weight_dominance_diagnostics(const ClassParams& params,
                                               int max_v);

} // namespace hum

#endif
