#pragma once

#include <atomic>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hardy/fourier.hpp"
#include "hardy/weights.hpp"

namespace hardy {

namespace detail {
inline std::uint64_t next_measure_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1);
}
}  // namespace detail

/// One circle of Riesz mass: radius in (0,1), nonnegative angular density
/// sampled on the grid, and an optional cap level t < 0. The density's
/// Fourier coefficients are fixed at construction and reused by every
/// potential evaluation.
struct Ring {
    double radius = 0.0;
    std::vector<double> density;
    std::optional<double> cap;

    double mass = 0.0;
    FourierSeries density_hat;
};

struct Atom {
    Complex center;
    double mass = 0.0;
};

/// Positive measure on the disk: rings plus point atoms. Treated as
/// immutable after construction (the id keys potential caches).
struct DiskMeasure {
    CircleGrid grid;
    std::vector<Ring> rings;
    std::vector<Atom> atoms;
    double total_mass = 0.0;
    std::uint64_t id = 0;
};

inline DiskMeasure make_disk_measure(const CircleGrid& grid, std::vector<Ring> rings, std::vector<Atom> atoms) {
    if (rings.empty() && atoms.empty()) throw std::invalid_argument("make_disk_measure: empty measure");
    double total = 0.0;
    for (Ring& ring : rings) {
        if (!(ring.radius > 0.0 && ring.radius < 1.0)) {
            throw std::invalid_argument("make_disk_measure: ring radius must lie in (0,1)");
        }
        if (static_cast<int>(ring.density.size()) != grid.n) {
            throw std::invalid_argument("make_disk_measure: ring density length does not match grid");
        }
        bool positive = false;
        for (double v : ring.density) {
            if (v < 0.0) throw std::invalid_argument("make_disk_measure: ring density must be nonnegative");
            positive = positive || v > 0.0;
        }
        if (!positive) throw std::invalid_argument("make_disk_measure: ring density vanishes identically");
        if (ring.cap && !(*ring.cap < 0.0)) throw std::invalid_argument("make_disk_measure: cap level must be negative");
        BoundarySamples s{grid, std::vector<Complex>(grid.n)};
        for (int k = 0; k < grid.n; ++k) s.values[k] = Complex{ring.density[k], 0.0};
        ring.density_hat = to_fourier(s);
        ring.mass = ring.density_hat.coeff(0).real();
        total += ring.mass;
    }
    for (const Atom& a : atoms) {
        if (std::abs(a.center) >= 1.0) throw std::invalid_argument("make_disk_measure: atom must lie in the open disk");
        if (!(a.mass > 0.0)) throw std::invalid_argument("make_disk_measure: atom mass must be positive");
        total += a.mass;
    }
    return DiskMeasure{grid, std::move(rings), std::move(atoms), total, detail::next_measure_id()};
}

inline DiskMeasure unit_atom_measure(const CircleGrid& grid, Complex center = {0.0, 0.0}, double mass = 1.0) {
    return make_disk_measure(grid, {}, {Atom{center, mass}});
}

namespace detail {

/// Potential of a single ring at z = s e^{i theta}, summed in the angular
/// Fourier basis. Exact (to roundoff) for band-limited densities; no
/// quadrature happens near the ring's log kernel.
inline double ring_potential(const Ring& ring, double s, double theta) {
    const double r = ring.radius;
    const double hi = std::max(s, r);
    const double lo = std::min(s, r);
    const double q = hi > 0.0 ? lo / hi : 0.0;
    const double w = r * s;
    double acc = ring.mass * std::log(hi);
    const int half = ring.density_hat.n() / 2;
    double qm = 1.0, wm = 1.0;
    for (int m = 1; m <= half; ++m) {
        qm *= q;
        wm *= w;
        Complex rho_m = ring.density_hat.coeff(m);
        if (std::norm(rho_m) < 1e-60) {
            if (qm < 1e-32) break;
            continue;
        }
        acc -= (qm - wm) / static_cast<double>(m) * (rho_m * std::polar(1.0, m * theta)).real();
    }
    return acc;
}

inline double atom_potential(const Atom& atom, Complex z) {
    Complex d = z - atom.center;
    if (d == Complex{0.0, 0.0}) return -std::numeric_limits<double>::infinity();
    double g = std::log(std::abs(d)) - std::log(std::abs(1.0 - std::conj(atom.center) * z));
    return atom.mass * g;
}

}  // namespace detail

/// Green potential u(z) of the measure, each ring term clipped at its cap
/// level when apply_caps is set. Returns -infinity exactly at an atom.
inline double green_potential(const DiskMeasure& m, Complex z, bool apply_caps = true) {
    double s = std::abs(z);
    if (s >= 1.0) throw std::invalid_argument("green_potential: point must lie in the open disk");
    double theta = std::arg(z);
    double u = 0.0;
    for (const Ring& ring : m.rings) {
        double ur = detail::ring_potential(ring, s, theta);
        if (apply_caps && ring.cap) ur = std::max(ur, *ring.cap);
        u += ur;
    }
    for (const Atom& atom : m.atoms) u += detail::atom_potential(atom, z);
    return u;
}

/// Boundary weight alpha_u: the Poisson integral of the measure. Ring
/// densities are smoothed mode by mode (mode m picks up radius^|m|); atoms
/// contribute explicit Poisson kernels.
inline Weight boundary_weight(const DiskMeasure& m) {
    if (m.rings.empty() && m.atoms.empty()) throw std::invalid_argument("boundary_weight: empty measure");
    const CircleGrid& g = m.grid;
    std::vector<double> out(g.n, 0.0);
    for (const Ring& ring : m.rings) {
        FourierSeries smoothed = ring.density_hat;
        const int half = g.n / 2;
        for (int mm = 1; mm < half; ++mm) {
            double factor = std::pow(ring.radius, mm);
            smoothed.set_coeff(mm, smoothed.coeff(mm) * factor);
            smoothed.set_coeff(-mm, smoothed.coeff(-mm) * factor);
        }
        smoothed.set_coeff(half, smoothed.coeff(half) * std::pow(ring.radius, half));
        BoundarySamples vals = to_samples(smoothed, g);
        for (int k = 0; k < g.n; ++k) out[k] += vals.values[k].real();
    }
    for (const Atom& atom : m.atoms) {
        double r2 = std::norm(atom.center);
        for (int k = 0; k < g.n; ++k) {
            double denom = std::norm(g.node(k) - atom.center);
            out[k] += atom.mass * (1.0 - r2) / denom;
        }
    }
    return validate_and_normalize(g, std::move(out), false);
}

/// Negative subharmonic exhaustion, represented by its Riesz measure.
struct Exhaustion {
    DiskMeasure measure;

    double u(Complex z) const { return green_potential(measure, z, true); }
    bool in_E1(double tol = 1e-9) const { return std::abs(measure.total_mass - 1.0) <= tol; }
};

/// Exhaustion whose Riesz mass is the weight's density placed on a single
/// circle of radius r. Its boundary weight is the Poisson smoothing of the
/// input and converges to it uniformly as r -> 1.
inline Exhaustion ring_exhaustion(const Weight& w, double r) {
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("ring_exhaustion: radius must lie in (0,1)");
    if (std::abs(w.mass - 1.0) > 1e-9) {
        throw std::invalid_argument("ring_exhaustion: weight must have unit mass");
    }
    Ring ring;
    ring.radius = r;
    ring.density = w.samples;
    return Exhaustion{make_disk_measure(w.grid, {std::move(ring)}, {})};
}

inline std::vector<double> default_stack_radii(int layers) {
    std::vector<double> r(layers);
    for (int j = 1; j <= layers; ++j) r[j - 1] = 1.0 - std::ldexp(1.0, -j - 1);
    return r;
}

struct StackExhaustion {
    Exhaustion exhaustion;
    /// Mass the truncation left unassigned before the final layer was
    /// rescaled to make the total exactly one.
    double mass_remainder = 0.0;
};

/// Layered exhaustion for an increasing stack alpha_1 <= ... <= alpha_J of
/// continuous weights approximating a lower-semicontinuous target. Layer j
/// carries the difference density on the circle of radius r_j with cap
/// level -2^{-j}.
inline StackExhaustion lsc_stack_to_exhaustion(const std::vector<Weight>& stack, const std::vector<double>& radii) {
    if (stack.empty()) throw std::invalid_argument("lsc_stack_to_exhaustion: empty stack");
    if (stack.size() != radii.size()) throw std::invalid_argument("lsc_stack_to_exhaustion: stack/radii size mismatch");
    const CircleGrid& g = stack.front().grid;
    for (std::size_t j = 1; j < radii.size(); ++j) {
        if (!(radii[j] > radii[j - 1])) throw std::invalid_argument("lsc_stack_to_exhaustion: radii must increase");
    }
    const std::size_t layers = stack.size();
    std::vector<std::vector<double>> diffs(layers);
    double partial_mass = 0.0;
    for (std::size_t j = 0; j < layers; ++j) {
        if (stack[j].grid.n != g.n) throw std::invalid_argument("lsc_stack_to_exhaustion: mixed grids");
        diffs[j].resize(g.n);
        double lo = std::numeric_limits<double>::infinity();
        for (int k = 0; k < g.n; ++k) {
            double prev = j == 0 ? 0.0 : stack[j - 1].samples[k];
            diffs[j][k] = stack[j].samples[k] - prev;
            lo = std::min(lo, diffs[j][k]);
        }
        if (!(lo > 0.0)) throw std::invalid_argument("lsc_stack_to_exhaustion: stack is not strictly increasing");
        if (j + 1 < layers) partial_mass += circle_integral_real(g, diffs[j]);
    }
    double target_mass = stack.back().mass;
    if (std::abs(target_mass - 1.0) > 1e-9) {
        throw std::invalid_argument("lsc_stack_to_exhaustion: stack must sum to unit mass");
    }
    double last_mass = circle_integral_real(g, diffs.back());
    double needed = 1.0 - partial_mass;
    if (!(needed > 0.0)) throw std::invalid_argument("lsc_stack_to_exhaustion: lower layers already exceed unit mass");
    double remainder = needed - last_mass;
    double scale = needed / last_mass;
    for (double& v : diffs.back()) v *= scale;

    std::vector<Ring> rings(layers);
    for (std::size_t j = 0; j < layers; ++j) {
        rings[j].radius = radii[j];
        rings[j].density = std::move(diffs[j]);
        rings[j].cap = -std::ldexp(1.0, -static_cast<int>(j) - 1);
    }
    return StackExhaustion{Exhaustion{make_disk_measure(g, std::move(rings), {})}, remainder};
}

struct SweepMeasure {
    double rho = 0.0;   // level circle radius
    double mass = 0.0;  // swept Riesz mass strictly inside the level set
};

inline bool is_radial(const Exhaustion& e, double tol = 1e-12) {
    for (const Ring& ring : e.measure.rings) {
        double lo = ring.density[0], hi = ring.density[0];
        for (double v : ring.density) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        if (hi - lo > tol * std::max(1.0, hi)) return false;
    }
    for (const Atom& a : e.measure.atoms) {
        if (std::abs(a.center) > 0.0) return false;
    }
    return true;
}

/// Level circle and swept mass of mu_{u,r} for a radial exhaustion. A
/// capped radial ring of mass m at radius r0 has profile
/// m log(max(s, r0, e^{t/m})): capping moves the circle outward to
/// e^{t/m}, which keeps the solve exact.
inline SweepMeasure radial_sweep_measure(const Exhaustion& e, double level) {
    if (!(level < 0.0)) throw std::invalid_argument("radial_sweep_measure: level must be negative");
    if (!is_radial(e)) throw std::invalid_argument("radial_sweep_measure: exhaustion is not radial");

    double atom_mass = 0.0;
    for (const Atom& a : e.measure.atoms) atom_mass += a.mass;
    struct Shell {
        double radius;
        double mass;
    };
    std::vector<Shell> shells;
    shells.reserve(e.measure.rings.size());
    for (const Ring& ring : e.measure.rings) {
        double r_eff = ring.radius;
        if (ring.cap) r_eff = std::max(r_eff, std::exp(*ring.cap / ring.mass));
        shells.push_back({r_eff, ring.mass});
    }
    auto profile = [&](double log_s) {
        double acc = atom_mass * log_s;
        for (const Shell& sh : shells) acc += sh.mass * std::max(log_s, std::log(sh.radius));
        return acc;
    };
    double floor_value = -std::numeric_limits<double>::infinity();
    if (atom_mass == 0.0) {
        floor_value = 0.0;
        for (const Shell& sh : shells) floor_value += sh.mass * std::log(sh.radius);
        if (level < floor_value) throw std::invalid_argument("radial_sweep_measure: level below the range of u");
    }
    double lo = -745.0, hi = 0.0;  // bisection on log s
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (profile(mid) < level) lo = mid;
        else hi = mid;
    }
    double rho = std::exp(0.5 * (lo + hi));
    double mass = atom_mass;
    for (const Shell& sh : shells) {
        if (sh.radius < rho) mass += sh.mass;
    }
    return SweepMeasure{rho, mass};
}

}  // namespace hardy
