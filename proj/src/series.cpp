#include "hum/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hum {

namespace detail {

Complex power_sum(const std::vector<Complex>& coeffs, Complex z) {
    Complex acc(0.0, 0.0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc * z;
}

Complex power_sum_derivative(const std::vector<Complex>& coeffs, Complex z) {
    Complex acc(0.0, 0.0);
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc = acc * z + static_cast<double>(i + 1) * coeffs[i];
    }
    return acc;
}

void require_in_disk(ComplexPoint z) {
    if (z.abs2() >= 1.0) {
        throw PointOutsideDisk("evaluation point |z| >= 1: re=" +
                               std::to_string(z.re) + " im=" + std::to_string(z.im));
    }
}

double pow_int(double v, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) {
        r *= v;
    }
    return r;
}

namespace {

bool is_thp_tail_entry(Complex c) { return c.imag() == 0.0 && c.real() <= 0.0; }

void require_thp(const HarmonicSeries& f, const char* op) {
    if (f.convention() != Convention::NegativeTHP) {
        throw SignConventionViolation(std::string(op) +
                                      " requires NegativeTHP operands");
    }
}

} // namespace

} // namespace detail

HarmonicSeries HarmonicSeries::make(const std::vector<Complex>& a_tail,
                                    const std::vector<Complex>& b,
                                    Convention convention) {
    const std::size_t degree = std::max<std::size_t>(
        {1, a_tail.size() + 1, b.size()});

    std::vector<Complex> a(degree, Complex(0.0, 0.0));
    std::vector<Complex> bb(degree, Complex(0.0, 0.0));
    a[0] = Complex(1.0, 0.0);
    std::copy(a_tail.begin(), a_tail.end(), a.begin() + 1);
    std::copy(b.begin(), b.end(), bb.begin());

    if (convention == Convention::NegativeTHP) {
        // Real entries only; positive values are magnitudes and get negated.
        auto ingest = [](std::vector<Complex>& coeffs, std::size_t first,
                         const char* side) {
            for (std::size_t i = first; i < coeffs.size(); ++i) {
                if (coeffs[i].imag() != 0.0) {
                    throw SignConventionViolation(
                        std::string("NegativeTHP coefficient ") + side + "_" +
                        std::to_string(i + 1) + " must be real");
                }
                if (coeffs[i].real() > 0.0) {
                    coeffs[i] = Complex(-coeffs[i].real(), 0.0);
                }
            }
        };
        ingest(a, 1, "a");
        ingest(bb, 0, "b");
    }

    return from_coefficients(std::move(a), std::move(bb), convention);
}

HarmonicSeries HarmonicSeries::from_coefficients(std::vector<Complex> a,
                                                 std::vector<Complex> b,
                                                 Convention convention) {
    if (a.empty() || a.size() != b.size()) {
        throw ParamOutOfRange("coefficient vectors must be nonempty and equal-length");
    }
    if (a.size() > static_cast<std::size_t>(kMaxDegree)) {
        throw ParamOutOfRange("series degree exceeds kMaxDegree");
    }
    if (a[0] != Complex(1.0, 0.0)) {
        throw ParamOutOfRange("a_1 must equal 1 exactly");
    }
    if (std::abs(b[0]) >= 1.0) {
        throw B1TooLarge("|b_1| must be < 1, got " + std::to_string(std::abs(b[0])));
    }
    if (convention == Convention::NegativeTHP) {
        for (std::size_t i = 1; i < a.size(); ++i) {
            if (!detail::is_thp_tail_entry(a[i])) {
                throw SignConventionViolation("a_" + std::to_string(i + 1) +
                                              " violates NegativeTHP signs");
            }
        }
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (!detail::is_thp_tail_entry(b[i])) {
                throw SignConventionViolation("b_" + std::to_string(i + 1) +
                                              " violates NegativeTHP signs");
            }
        }
    }
    const int degree = static_cast<int>(a.size());
    return HarmonicSeries(std::move(a), std::move(b), convention, degree);
}

Complex HarmonicSeries::analytic_part(ComplexPoint z) const {
    return detail::power_sum(a_, z.value());
}

Complex HarmonicSeries::coanalytic_part(ComplexPoint z) const {
    return detail::power_sum(b_, z.value());
}

Complex evaluate(const HarmonicSeries& f, ComplexPoint z) {
    detail::require_in_disk(z);
    return f.analytic_part(z) + std::conj(f.coanalytic_part(z));
}

std::pair<Complex, Complex> analytic_derivatives(const HarmonicSeries& f,
                                                 ComplexPoint z) {
    detail::require_in_disk(z);
    return {detail::power_sum_derivative(f.a_coefficients(), z.value()),
            detail::power_sum_derivative(f.b_coefficients(), z.value())};
}

double jacobian(const HarmonicSeries& f, ComplexPoint z) {
    const auto [dh, dg] = analytic_derivatives(f, z);
    return std::norm(dh) - std::norm(dg);
}

double starlike_functional(const HarmonicSeries& f, ComplexPoint z) {
    detail::require_in_disk(z);
    const Complex zc = z.value();
    const auto [dh, dg] = analytic_derivatives(f, z);
    const Complex denominator = evaluate(f, z);
    if (std::abs(denominator) <= kDenominatorTolerance) {
        throw DegenerateDenominator("|f(z)| <= " +
                                    std::to_string(kDenominatorTolerance));
    }
    const Complex numerator = zc * dh - std::conj(zc * dg);
    return (numerator / denominator).real();
}

HarmonicSeries convolve(const HarmonicSeries& f, const HarmonicSeries& g) {
    detail::require_thp(f, "convolve");
    detail::require_thp(g, "convolve");

    const int degree = std::min(f.degree(), g.degree());
    std::vector<Complex> a(static_cast<std::size_t>(degree), Complex(0.0, 0.0));
    std::vector<Complex> b(static_cast<std::size_t>(degree), Complex(0.0, 0.0));
    a[0] = Complex(1.0, 0.0);
    for (int v = 2; v <= degree; ++v) {
        a[static_cast<std::size_t>(v - 1)] =
            Complex(-std::abs(f.a(v)) * std::abs(g.a(v)), 0.0);
    }
    for (int v = 1; v <= degree; ++v) {
        b[static_cast<std::size_t>(v - 1)] =
            Complex(-std::abs(f.b(v)) * std::abs(g.b(v)), 0.0);
    }
    return HarmonicSeries::from_coefficients(std::move(a), std::move(b),
                                             Convention::NegativeTHP);
}

double neighborhood_distance(const HarmonicSeries& f, const HarmonicSeries& g) {
    detail::require_thp(f, "neighborhood_distance");
    detail::require_thp(g, "neighborhood_distance");

    const int degree = std::max(f.degree(), g.degree());
    auto coeff = [](const HarmonicSeries& s, bool analytic, int v) {
        if (v > s.degree()) return 0.0;
        return analytic ? s.a(v).real() : s.b(v).real();
    };

    double d = std::abs(coeff(f, false, 1) - coeff(g, false, 1));
    for (int v = 2; v <= degree; ++v) {
        d += v * (std::abs(coeff(f, true, v) - coeff(g, true, v)) +
                  std::abs(coeff(f, false, v) - coeff(g, false, v)));
    }
    return d;
}

} // namespace hum
