#ifndef HUM_SERIES_HPP
#define HUM_SERIES_HPP

#include <complex>
#include <utility>
#include <vector>

#include "hum/errors.hpp"

namespace hum {

using Complex = std::complex<double>;

/// Quotients with |denominator| at or below this are treated as degenerate.
inline constexpr double kDenominatorTolerance = 1e-12;

/// Hard cap on truncation degree.
inline constexpr int kMaxDegree = 4096;

/// Coefficient sign convention of a series.
///
/// General stores arbitrary complex coefficients. NegativeTHP stores the
/// signed form f(z) = z - sum |a_v| z^v - sum |b_v| conj(z)^v: every tail
/// coefficient is real and nonpositive, so moduli can be read off directly.
enum class Convention { General, NegativeTHP };

/// A point z in the open unit disk.
struct ComplexPoint {
    double re = 0.0;
    double im = 0.0;

    Complex value() const { return Complex(re, im); }
    double abs2() const { return re * re + im * im; }
};

/// Truncated harmonic polynomial f = h + conj(g) with
///
///   h(z) = z + sum_{v=2..N} a_v z^v,   g(z) = sum_{v=1..N} b_v z^v,
///
/// normalized so that a_1 = 1 and |b_1| < 1. Instances are immutable values;
/// every operation on them is a pure function.
class HarmonicSeries {
public:
    /// Builds a series from tail coefficients. `a_tail` holds a_v for
    /// v = 2..La+1, `b` holds b_v for v = 1..Lb; the shorter list is
    /// zero-padded and a_1 = 1 is inserted. Under NegativeTHP, entries must
    /// be real; positive values are read as magnitudes and stored negated.
    static HarmonicSeries make(const std::vector<Complex>& a_tail,
                               const std::vector<Complex>& b,
                               Convention convention);

    /// Builds a series from full coefficient vectors a_v, b_v for v = 1..N.
    /// Requires a[0] == 1 exactly; NegativeTHP inputs must already carry
    /// their signs (no magnitude negation happens here).
    static HarmonicSeries from_coefficients(std::vector<Complex> a,
                                            std::vector<Complex> b,
                                            Convention convention);

    int degree() const { return degree_; }
    Convention convention() const { return convention_; }

    /// Coefficient a_v, 1 <= v <= degree. a(1) == 1.
    Complex a(int v) const { return a_.at(static_cast<std::size_t>(v - 1)); }
    /// Coefficient b_v, 1 <= v <= degree.
    Complex b(int v) const { return b_.at(static_cast<std::size_t>(v - 1)); }

    const std::vector<Complex>& a_coefficients() const { return a_; }
    const std::vector<Complex>& b_coefficients() const { return b_; }

    /// h(z), by nested accumulation from the highest degree.
    Complex analytic_part(ComplexPoint z) const;
    /// g(z) before conjugation, by nested accumulation.
    Complex coanalytic_part(ComplexPoint z) const;

    bool operator==(const HarmonicSeries& other) const = default;

private:
    HarmonicSeries(std::vector<Complex> a, std::vector<Complex> b,
                   Convention convention, int degree)
        : a_(std::move(a)), b_(std::move(b)), convention_(convention),
          degree_(degree) {}

    std::vector<Complex> a_;
    std::vector<Complex> b_;
    Convention convention_;
    int degree_;
};

/// f(z) = h(z) + conj(g(z)). Throws PointOutsideDisk for |z| >= 1.
Complex evaluate(const HarmonicSeries& f, ComplexPoint z);

/// (h'(z), g'(z)).
std::pair<Complex, Complex> analytic_derivatives(const HarmonicSeries& f,
                                                 ComplexPoint z);

/// |h'(z)|^2 - |g'(z)|^2; positive values certify local sense-preservation.
double jacobian(const HarmonicSeries& f, ComplexPoint z);

/// Re{ (z h'(z) - conj(z g'(z))) / (h(z) + conj(g(z))) }, the angular
/// derivative of arg f along the circle through z. Positive on a circle
/// means f maps it onto a starlike curve. Throws DegenerateDenominator when
/// |f(z)| <= kDenominatorTolerance.
double starlike_functional(const HarmonicSeries& f, ComplexPoint z);

/// Modulus convolution of two NegativeTHP series: coefficientwise product
/// of moduli, signed back into NegativeTHP form. Result degree is the
/// smaller of the two degrees.
HarmonicSeries convolve(const HarmonicSeries& f, const HarmonicSeries& g);

/// Weighted coefficient distance
///   d(f, G) = |b_1 - D_1| + sum_{v>=2} v (|a_v - C_v| + |b_v - D_v|),
/// with the shorter series zero-padded. Both inputs must be NegativeTHP.
double neighborhood_distance(const HarmonicSeries& f, const HarmonicSeries& g);

namespace detail {

/// sum_{v=1..N} c_v z^v, nested accumulation from v = N down.
Complex power_sum(const std::vector<Complex>& coeffs, Complex z);

/// Derivative of the above: sum_{v=1..N} v c_v z^{v-1}.
Complex power_sum_derivative(const std::vector<Complex>& coeffs, Complex z);

/// Throws PointOutsideDisk unless |z| < 1.
void require_in_disk(ComplexPoint z);

/// v^n by repeated multiplication (exact for desk-scale arguments).
double pow_int(double v, int n);

} // namespace detail

} // namespace hum

#endif
