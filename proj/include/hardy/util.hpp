#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

namespace hardy {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline constexpr Complex kI{0.0, 1.0};

/// Deterministic 64-bit generator (splitmix64). Used instead of <random>
/// distributions so that seeded runs produce identical streams on every
/// platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    Complex uniform_complex(double box) {
        double re = uniform(-box, box);
        double im = uniform(-box, box);
        return {re, im};
    }

    /// Uniform over the disk |z| <= rmax (by rejection).
    Complex in_disk(double rmax) {
        for (;;) {
            Complex z = uniform_complex(rmax);
            if (std::abs(z) <= rmax) return z;
        }
    }

    Complex on_circle() {
        double t = uniform(0.0, kTwoPi);
        return std::polar(1.0, t);
    }

private:
    std::uint64_t state_ = 0;
};

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

inline double relative_gap(double a, double b) {
    double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

/// Thread cap for internal sweeps. HARDY_FORGE_THREADS overrides the
/// hardware count; values < 1 are clamped to 1.
inline int max_threads() {
    if (const char* env = std::getenv("HARDY_FORGE_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
        return 1;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Index-parallel loop. Results must be written to disjoint slots; the
/// call joins all workers before returning, so the body may not touch
/// shared mutable state without its own synchronization.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    int nt = std::min<std::size_t>(max_threads(), count);
    if (nt <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(nt);
    for (int t = 0; t < nt; ++t) {
        workers.emplace_back([&, t] {
            for (std::size_t i = static_cast<std::size_t>(t); i < count; i += nt) body(i);
        });
    }
    for (auto& w : workers) w.join();
}

}  // namespace hardy
