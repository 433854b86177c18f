#pragma once

#include <vector>

#include "hardy/exhaustion.hpp"
#include "hardy/weights.hpp"

namespace hardy::testing {

inline PowerSeries random_poly(Rng& rng, int degree, double box = 1.0) {
    PowerSeries p;
    p.c.resize(static_cast<std::size_t>(degree) + 1);
    for (auto& v : p.c) v = rng.uniform_complex(box);
    return p;
}

/// Polynomial with all zeros outside the closed disk: a product of
/// (1 + a_k z) factors with |a_k| <= 0.6, so |f| stays above a positive
/// floor on the closed disk.
inline PowerSeries zero_free_poly(Rng& rng, int degree) {
    PowerSeries p = PowerSeries::constant(Complex{1.0, 0.0});
    for (int k = 0; k < degree; ++k) {
        Complex a = rng.in_disk(0.6);
        PowerSeries factor;
        factor.c = {Complex{1.0, 0.0}, a};
        p = truncated_product(p, factor, degree);
    }
    return p;
}

/// Band-limited boundary data with fixed random modes in [-max_mode, max_mode].
inline BoundarySamples random_band_limited(Rng& rng, const CircleGrid& g, int max_mode, double box = 0.7) {
    std::vector<Complex> modes(2 * max_mode + 1);
    for (auto& v : modes) v = rng.uniform_complex(box);
    BoundarySamples s{g, std::vector<Complex>(g.n)};
    for (int k = 0; k < g.n; ++k) {
        Complex acc{0.0, 0.0};
        for (int m = -max_mode; m <= max_mode; ++m) {
            acc += modes[m + max_mode] * std::polar(1.0, m * g.angle(k));
        }
        s.values[k] = acc;
    }
    return s;
}

/// Increasing three-layer stack of continuous weights with unit total mass.
inline std::vector<Weight> random_stack(const CircleGrid& g, std::uint64_t seed) {
    auto parts = random_weight_family(g, 3, 5, 0.2, seed);
    std::vector<double> acc(g.n, 0.0);
    std::vector<Weight> stack;
    for (const Weight& part : parts) {
        for (int k = 0; k < g.n; ++k) acc[k] += part.samples[k] / 3.0;
        stack.push_back(validate_and_normalize(g, acc, false));
    }
    return stack;
}

inline Exhaustion random_stack_exhaustion(const CircleGrid& g, std::uint64_t seed) {
    return lsc_stack_to_exhaustion(random_stack(g, seed), default_stack_radii(3)).exhaustion;
}

}  // namespace hardy::testing
