#ifndef HUM_RNG_HPP
#define HUM_RNG_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace hum {

/// Deterministic random source. mt19937_64 is fully specified by the
/// standard and the [0,1) mapping below avoids distribution classes, whose
/// output is implementation-defined, so identical seeds give identical
/// streams on every platform.
class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_raw() { return engine_(); }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(engine_() % span);
    }

    /// n nonnegative weights summing to one (flat Dirichlet), produced by
    /// sorting n-1 uniform cuts of [0, 1] and taking gap lengths.
    std::vector<double> convex_weights(std::size_t n) {
        if (n == 0) return {};
        if (n == 1) return {1.0};
        std::vector<double> cuts(n - 1);
        for (auto& c : cuts) c = uniform();
        std::sort(cuts.begin(), cuts.end());
        std::vector<double> weights(n);
        weights[0] = cuts[0];
        for (std::size_t i = 1; i + 1 < n; ++i) {
            weights[i] = cuts[i] - cuts[i - 1];
        }
        weights[n - 1] = 1.0 - cuts[n - 2];
        return weights;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace hum

#endif
