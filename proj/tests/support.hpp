#pragma once

// Test-only oracles. Nothing here calls into the code path it checks.

#include "epoint/linalg.hpp"
#include "epoint/matkit.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace epoint::testing {

inline double rel_err(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

/// Distance between two unordered pairs.
inline double pair_dist(cplx a1, cplx a2, cplx b1, cplx b2) {
    return std::min(std::max(std::abs(a1 - b1), std::abs(a2 - b2)), std::max(std::abs(a1 - b2), std::abs(a2 - b1)));
}

/// Traces E(t) = Re(e^{-it} v) over one period and measures the ellipse.
struct TracedEllipse {
    double axial_ratio;
    int rotation;  ///< sign of x dy/dt - y dx/dt
};

inline TracedEllipse trace_ellipse(const CVector2& v, int samples = 200000) {
    double major = 0.0, minor = 1e300, cross_sum = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double t = 2.0 * std::numbers::pi * k / samples;
        const cplx ph = std::polar(1.0, -t);
        const double x = (ph * v.upper).real(), y = (ph * v.lower).real();
        const cplx dph = -kI * ph;
        const double dx = (dph * v.upper).real(), dy = (dph * v.lower).real();
        const double r = std::hypot(x, y);
        major = std::max(major, r);
        minor = std::min(minor, r);
        cross_sum += x * dy - y * dx;
    }
    return {minor / major, cross_sum > 0 ? 1 : (cross_sum < 0 ? -1 : 0)};
}

/// Continues R(lambda) = sqrt(radicand) of the diagonal-H0 eigenvalue formula
/// along a circle by picking, at each fine step, the square root nearest the
/// previous value. Returns true when R has changed sign after one turn.
inline bool special_case_radical_flips(const ModelParams& p, cplx center, double radius, int steps = 20000) {
    const double d = p.eps1 - p.eps2, w = p.omega1 - p.omega2, c = std::cos(2.0 * p.phi1);
    auto radicand = [&](cplx l) { return 0.25 * (d * d + l * l * (w * w) + 2.0 * l * d * w * c); };
    const cplx r0 = std::sqrt(radicand(center + radius));
    cplx r = r0;
    for (int k = 1; k <= steps; ++k) {
        const cplx l = center + radius * std::polar(1.0, 2.0 * std::numbers::pi * k / steps);
        const cplx s = std::sqrt(radicand(l));
        r = std::abs(s - r) <= std::abs(-s - r) ? s : -s;
    }
    return std::abs(r + r0) < std::abs(r - r0);
}

/// A model with tau0 = 0 whose U0^dagger U1 equals U(beta, pi/2) up to right
/// phases: the EP eigenvector is then real (linear polarization).
inline ModelParams linear_limit_params(double phi0, double beta, double eps1 = 1.3, double eps2 = -0.4,
                                       double omega1 = 0.9, double omega2 = -1.6) {
    const double c0 = std::cos(phi0), s0 = std::sin(phi0), cb = std::cos(beta), sb = std::sin(beta);
    // U(phi0, 0) U(beta, pi/2), written out by hand
    const cplx u11 = c0 * cb + kI * s0 * sb;
    const cplx u21 = s0 * cb - kI * c0 * sb;
    const double phi1 = std::atan2(std::abs(u21), std::abs(u11));
    const double tau1 = std::arg(u11) - std::arg(u21);
    return {eps1, eps2, omega1, omega2, phi0, 0.0, phi1, tau1};
}

}  // namespace epoint::testing
