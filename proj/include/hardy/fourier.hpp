#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hardy/analytic.hpp"
#include "hardy/util.hpp"

namespace hardy {

/// Uniform grid theta_k = 2 pi k / n on the circle. n is a power of two so
/// the discrete transform below is a plain radix-2 FFT, and each node has
/// integration weight 1/n against the mass-one measure d(lambda).
struct CircleGrid {
    int n = 0;

    double angle(int k) const { return kTwoPi * static_cast<double>(k) / static_cast<double>(n); }
    Complex node(int k) const { return std::polar(1.0, angle(k)); }
};

inline CircleGrid make_grid(int n) {
    if (n < 256 || !is_power_of_two(n)) {
        throw std::invalid_argument("make_grid: node count must be a power of two, at least 256");
    }
    return CircleGrid{n};
}

inline bool operator==(const CircleGrid& a, const CircleGrid& b) { return a.n == b.n; }

/// Complex trace on the grid nodes.
struct BoundarySamples {
    CircleGrid grid;
    std::vector<Complex> values;
};

inline BoundarySamples sample_boundary(const CircleGrid& g, const std::function<Complex(double)>& f) {
    BoundarySamples s{g, std::vector<Complex>(g.n)};
    for (int k = 0; k < g.n; ++k) s.values[k] = f(g.angle(k));
    return s;
}

inline BoundarySamples sample_boundary_real(const CircleGrid& g, const std::function<double(double)>& f) {
    return sample_boundary(g, [&](double t) { return Complex{f(t), 0.0}; });
}

/// Coefficients c_m for -n/2 < m <= n/2, stored in FFT index order
/// (index j holds mode m = j for j <= n/2, m = j - n otherwise).
struct FourierSeries {
    std::vector<Complex> c;

    int n() const { return static_cast<int>(c.size()); }

    Complex coeff(int m) const {
        int nn = n();
        int j = ((m % nn) + nn) % nn;
        return c[j];
    }

    void set_coeff(int m, Complex v) {
        int nn = n();
        int j = ((m % nn) + nn) % nn;
        c[j] = v;
    }
};

/// In-place radix-2 FFT. sign = -1 computes sum_k a_k e^{-2 pi i jk/n}
/// (no scaling); sign = +1 the conjugate-exponent sum.
inline void fft_radix2(std::vector<Complex>& a, int sign) {
    const std::size_t n = a.size();
    if (!is_power_of_two(static_cast<int>(n))) {
        throw std::invalid_argument("fft_radix2: length must be a power of two");
    }
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        double ang = sign * kTwoPi / static_cast<double>(len);
        Complex wlen = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            Complex w{1.0, 0.0};
            for (std::size_t k = 0; k < len / 2; ++k) {
                Complex u = a[i + k];
                Complex v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

inline FourierSeries to_fourier(const BoundarySamples& s) {
    if (static_cast<int>(s.values.size()) != s.grid.n) {
        throw std::invalid_argument("to_fourier: sample count does not match grid");
    }
    FourierSeries out{s.values};
    fft_radix2(out.c, -1);
    double inv = 1.0 / static_cast<double>(s.grid.n);
    for (auto& v : out.c) v *= inv;
    return out;
}

inline BoundarySamples to_samples(const FourierSeries& f, const CircleGrid& g) {
    if (f.n() != g.n) throw std::invalid_argument("to_samples: series length does not match grid");
    BoundarySamples out{g, f.c};
    fft_radix2(out.values, +1);
    return out;
}

/// Mean of the samples: the quadrature rule for the mass-one circle measure.
/// Exact for trigonometric polynomials of degree below n.
inline Complex circle_integral(const BoundarySamples& s) {
    Complex acc{0.0, 0.0};
    for (const auto& v : s.values) acc += v;
    return acc / static_cast<double>(s.values.size());
}

inline double circle_integral_real(const CircleGrid& g, const std::vector<double>& vals) {
    if (static_cast<int>(vals.size()) != g.n) {
        throw std::invalid_argument("circle_integral_real: length mismatch");
    }
    double acc = 0.0;
    for (double v : vals) acc += v;
    return acc / static_cast<double>(g.n);
}

/// Harmonic extension of real samples to a point of the open disk, as the
/// spectrally summed Poisson series sum_m c_m r^{|m|} e^{i m theta}.
inline double poisson_extend(const BoundarySamples& s, Complex z) {
    if (std::abs(z) >= 1.0) throw std::invalid_argument("poisson_extend: point must lie in the open disk");
    FourierSeries f = to_fourier(s);
    const int half = s.grid.n / 2;
    const double r = std::abs(z);
    const double theta = std::arg(z);
    Complex acc = f.coeff(0);
    double rm = 1.0;
    for (int m = 1; m < half; ++m) {
        rm *= r;
        if (rm < 1e-320) { rm = 0.0; break; }
        Complex e = std::polar(rm, m * theta);
        acc += f.coeff(m) * e + f.coeff(-m) * std::conj(e);
    }
    // The stored spectrum holds the band-edge mode once; on the grid it
    // aliases cos(n theta / 2).
    acc += f.coeff(half) * (rm * r) * std::cos(half * theta);
    return acc.real();
}

/// Analytic completion h + ig of the harmonic extension of real samples,
/// normalized by g(0) = 0: the series c_0 + 2 sum_{m=1..M} c_m z^m.
inline PowerSeries herglotz_extend(const BoundarySamples& s, int degree) {
    if (degree > s.grid.n / 2 - 1) {
        throw std::invalid_argument("herglotz_extend: degree exceeds n/2 - 1");
    }
    if (degree < 0) throw std::invalid_argument("herglotz_extend: negative degree");
    FourierSeries f = to_fourier(s);
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
    c[0] = Complex{f.coeff(0).real(), 0.0};
    for (int m = 1; m <= degree; ++m) c[m] = 2.0 * f.coeff(m);
    return PowerSeries(std::move(c));
}

/// Orthogonal projection onto nonnegative stored modes (-n/2 < m < 0 are
/// zeroed; the band-edge mode n/2 counts as nonnegative).
inline FourierSeries riesz_project(const FourierSeries& f) {
    FourierSeries out = f;
    const int nn = out.n();
    for (int m = -1; m > -nn / 2; --m) out.set_coeff(m, Complex{0.0, 0.0});
    return out;
}

/// Discrete L^2 norm against the mass-one circle measure.
inline double l2_norm(const BoundarySamples& s) {
    double acc = 0.0;
    for (const auto& v : s.values) acc += std::norm(v);
    return std::sqrt(acc / static_cast<double>(s.values.size()));
}

inline double l2_norm(const FourierSeries& f) {
    double acc = 0.0;
    for (const auto& v : f.c) acc += std::norm(v);
    return std::sqrt(acc);
}

/// Boundary trace of a power series on the grid (exact synthesis when the
/// degree is below n).
inline BoundarySamples boundary_trace(const PowerSeries& p, const CircleGrid& g) {
    if (p.degree() >= g.n) throw std::invalid_argument("boundary_trace: series degree exceeds grid");
    FourierSeries f;
    f.c.assign(g.n, Complex{0.0, 0.0});
    for (std::size_t k = 0; k < p.c.size(); ++k) f.c[k] = p.c[k];
    return to_samples(f, g);
}

/// Power-series coefficients of an analytic function given by its boundary
/// trace. Negative modes are reported back as a residual so callers can
/// verify the trace really was analytic.
inline PowerSeries analytic_coefficients(const BoundarySamples& s, int degree, double* negative_residual = nullptr) {
    FourierSeries f = to_fourier(s);
    if (negative_residual) {
        double acc = 0.0;
        for (int m = -1; m > -s.grid.n / 2; --m) acc += std::norm(f.coeff(m));
        *negative_residual = std::sqrt(acc);
    }
    degree = std::min(degree, s.grid.n / 2 - 1);
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
    for (int m = 0; m <= degree; ++m) c[m] = f.coeff(m);
    return PowerSeries(std::move(c));
}

}  // namespace hardy
