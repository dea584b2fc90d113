#ifndef HUM_VERIFY_HPP
#define HUM_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hum/operator_class.hpp"
#include "hum/rng.hpp"
#include "hum/series.hpp"

namespace hum {

/// Additive tolerance on functional thresholds.
inline constexpr double kFunctionalTolerance = 1e-9;

/// Band around beta inside which the necessity verdict is indeterminate.
inline constexpr double kNecessityBand = 1e-2;

/// Neighborhood samples drawn per member inside counterexample sweeps.
inline constexpr long kNeighborSamplesPerMember = 8;

/// Deterministic evaluation set: every radius is paired with
/// angles_per_radius equally spaced angles in [0, 2pi).
struct SampleGrid {
    std::vector<double> radii;
    int angles_per_radius;

    SampleGrid(std::vector<double> radii, int angles_per_radius);

    /// radii {0.1, 0.3, 0.5, 0.7, 0.9, 0.99} x 256 angles.
    static SampleGrid default_grid();

    std::size_t size() const {
        return radii.size() * static_cast<std::size_t>(angles_per_radius);
    }
    /// Point at flat index (radius-major, then angle); the index order is
    /// the tie-break order for reductions, so reports are reproducible.
    ComplexPoint point(std::size_t index) const;

    bool operator==(const SampleGrid&) const = default;
};

enum class ClaimId {
    SufficiencyFunctional,
    SensePreserving,
    Starlike,
    Distortion,
    ConvexityDisc,
    NeighborhoodStarlike,
    ConvolutionClosure,
    Necessity,
};

/// Outcome of one claim check. extremal_value is the claim's worst observed
/// statistic (a minimum for lower-bounded functionals, a maximum for capped
/// sums). Witness fields are filled on failure, and by counterexample
/// sweeps also on pass (the tightest-margin member).
struct ClaimReport {
    ClaimId claim_id = ClaimId::SufficiencyFunctional;
    bool pass = false;
    double extremal_value = 0.0;
    double tolerance = 0.0;
    std::optional<ComplexPoint> witness_point;
    std::optional<HarmonicSeries> witness_function;
    std::optional<WeightDiagnostics> diagnostics;
    std::optional<SampleGrid> grid;
    std::uint64_t seed = 0;
    long trials = 0;
    int skipped_points = 0;
    std::vector<double> approach_values;
};

/// Minimum of the class functional over the grid must stay >= beta within
/// tolerance. Requires the coefficient membership test to hold.
ClaimReport check_class_functional_min(const HarmonicSeries& f,
                                       const ClassParams& params,
                                       const SampleGrid& grid);

/// Minimum Jacobian over the grid must be strictly positive.
ClaimReport check_sense_preserving(const HarmonicSeries& f,
                                   const SampleGrid& grid);

/// Minimum of the starlikeness functional over the grid must be positive.
/// Grid points with a degenerate denominator are skipped and counted.
ClaimReport check_starlike(const HarmonicSeries& f, const SampleGrid& grid);

/// On every circle |z| = r the empirical max/min of |f| must lie inside the
/// distortion envelope within tolerance. extremal_value is the worst signed
/// margin (negative = violation).
ClaimReport check_distortion(const HarmonicSeries& f, const ClassParams& params,
                             const std::vector<double>& radii, int angles);

/// The convexity criterion must hold at safety * r(convexity).
/// extremal_value is the criterion slack.
ClaimReport check_convexity(const HarmonicSeries& f, const ClassParams& params,
                            double safety = 0.999);

/// Samples `trials` series within coefficient distance delta of f (distance
/// respected by construction) and requires each to satisfy the starlikeness
/// coefficient cap sum_{v>=2} v (|C_v|+|D_v|) + |D_1| <= 1 within tolerance.
/// Requires membership and 0 <= delta <= beta.
ClaimReport check_neighborhood_starlike(const HarmonicSeries& f,
                                        const ClassParams& params, double delta,
                                        long trials, std::uint64_t seed);

/// Draws member pairs f (params2), G (params1) and requires every modulus
/// convolution f*G to pass the membership test for both parameter triples.
/// Requires alpha1 <= alpha2, beta1 <= beta2 and equal m.
ClaimReport check_convolution_closure(const ClassParams& params1,
                                      const ClassParams& params2, long trials,
                                      std::uint64_t seed);

/// Compares the membership verdict against the radial limit of the class
/// functional (algebraically 1 - coefficient_sum for even m). Functional
/// values along `approach` are recorded in approach_values. Verdicts inside
/// the indeterminate band pass vacuously. Requires NegativeTHP and even m.
ClaimReport check_necessity(
    const HarmonicSeries& f, const ClassParams& params,
    const std::vector<double>& approach = {0.9, 0.99, 0.999, 0.9999});

/// One neighbor of f at distance at most delta (used by the neighborhood
/// checker; exposed so tests can probe the distance guarantee directly).
HarmonicSeries sample_neighbor(const HarmonicSeries& f, double delta,
                               DeterministicRng& rng);

/// Runs the checker behind `claim` over `trials` random members and returns
/// the first failing report (witness re-verified by direct recomputation) or
/// a pass report carrying the tightest margin observed. Valid claims:
/// SufficiencyFunctional, SensePreserving, Starlike, Distortion,
/// NeighborhoodStarlike.
ClaimReport find_counterexample(ClaimId claim, const ClassParams& params,
                                long trials, std::uint64_t seed,
                                const SampleGrid& grid);

/// Convexity criterion sweep over random members (aggregate of
/// check_convexity), reported under ConvexityDisc.
ClaimReport sweep_convexity(const ClassParams& params, long trials,
                            std::uint64_t seed, double safety = 0.999);

/// Necessity sweep over random members and scaled non-members (even m only).
ClaimReport sweep_necessity(const ClassParams& params, long trials,
                            std::uint64_t seed);

} // namespace hum

#endif
