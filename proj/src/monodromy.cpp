#include "epoint/monodromy.hpp"
#include "epoint/errors.hpp"
#include "epoint/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace epoint {

const char* to_string(Permutation p) noexcept { return p == Permutation::swap ? "swap" : "identity"; }

namespace {

struct Tracker {
    const Model& model;
    cplx center;
    double radius;
    double gap_tol;
    cplx b1, b2;
    CVector2 v1, v2;
    double min_gap = std::numeric_limits<double>::infinity();
    int refinements = 0;

    cplx point(double theta) const { return center + radius * std::polar(1.0, std::remainder(theta, 2.0 * std::numbers::pi)); }

    Spectrum spectrum_at(cplx lambda) {
        Spectrum s = eigen2(build_hamiltonian(model, lambda));
        const double gap = std::abs(s.e1 - s.e2);
        min_gap = std::min(min_gap, gap);
        if (gap <= gap_tol)
            throw Error(ErrorKind::path_degeneracy, "encircle: eigenvalue gap " + std::to_string(gap) +
                                                        " on the path is below the tolerance; loop passes too close to an EP");
        return s;
    }

    // Moves the branches from angle ta to tb, halving the step while the
    // nearest-neighbour assignment is ambiguous.
    void advance(double ta, double tb, cplx lambda_b, int depth) {
        const Spectrum s = spectrum_at(lambda_b);
        const double d11 = std::abs(s.e1 - b1), d22 = std::abs(s.e2 - b2);
        const double d12 = std::abs(s.e1 - b2), d21 = std::abs(s.e2 - b1);
        const bool straight = std::max(d11, d22) <= std::max(d12, d21);
        const double motion = straight ? std::max(d11, d22) : std::max(d12, d21);
        const double margin = straight ? std::min(d12, d21) : std::min(d11, d22);
        if (margin >= 2.0 * motion) {
            if (straight) {
                b1 = s.e1, b2 = s.e2, v1 = s.r1, v2 = s.r2;
            } else {
                b1 = s.e2, b2 = s.e1, v1 = s.r2, v2 = s.r1;
            }
            return;
        }
        if (depth >= kMaxRefinements)
            throw Error(ErrorKind::tracking_failure,
                        "encircle: branch assignment still ambiguous after " + std::to_string(kMaxRefinements) +
                            " step halvings");
        ++refinements;
        const double mid = 0.5 * (ta + tb);
        advance(ta, mid, point(mid), depth + 1);
        advance(mid, tb, lambda_b, depth + 1);
    }
};

}  // namespace

int enclosed_eps(const EPPair& eps, cplx center, double radius) noexcept {
    return (std::abs(eps.first.lambda_c - center) < radius ? 1 : 0) +
           (std::abs(eps.second.lambda_c - center) < radius ? 1 : 0);
}

LoopTrace encircle(const Model& m, cplx center, double radius, const LoopOptions& opts) {
    if (!(radius > 0.0) || !std::isfinite(radius) || !std::isfinite(center.real()) || !std::isfinite(center.imag()))
        throw Error(ErrorKind::invalid_argument, "encircle: radius must be positive and center finite");
    if (opts.steps < 8) throw Error(ErrorKind::invalid_argument, "encircle: steps must be at least 8");
    if (opts.turns < 1) throw Error(ErrorKind::invalid_argument, "encircle: turns must be at least 1");

    const EPPair eps = ep_general(m);
    for (const EPSolution* ep : {&eps.first, &eps.second}) {
        const double clearance = std::abs(std::abs(ep->lambda_c - center) - radius);
        if (clearance < kGapTol * std::max(1.0, std::abs(ep->lambda_c)))
            throw Error(ErrorKind::path_degeneracy,
                        std::string("encircle: the loop passes through the ") + to_string(ep->branch) + " EP");
    }

    const double scale =
        std::max(1.0, m.h0().frobenius_norm() + (std::abs(center) + radius) * m.h1().frobenius_norm());
    Tracker tr{m, center, radius, kGapTol * scale, {}, {}, {}, {}};

    const double dir = opts.clockwise ? -1.0 : 1.0;
    const double dtheta = dir * 2.0 * std::numbers::pi / opts.steps;
    auto grid_point = [&](int k) { return center + radius * std::polar(1.0, dtheta * (k % opts.steps)); };

    LoopTrace t;
    t.center = center;
    t.radius = radius;
    t.steps = opts.steps;
    t.turns = opts.turns;

    const cplx start = grid_point(0);
    const Spectrum s0 = tr.spectrum_at(start);
    tr.b1 = s0.e1, tr.b2 = s0.e2, tr.v1 = s0.r1, tr.v2 = s0.r2;
    auto record = [&](cplx lambda) {
        t.lambdas.push_back(lambda);
        t.branch1.push_back(tr.b1);
        t.branch2.push_back(tr.b2);
        t.vec1.push_back(tr.v1);
        t.vec2.push_back(tr.v2);
    };
    record(start);

    const int total = opts.steps * opts.turns;
    for (int k = 0; k < total; ++k) {
        const cplx next = grid_point(k + 1);
        tr.advance(dtheta * k, dtheta * (k + 1), next, 0);
        record(next);
    }

    const cplx first1 = t.branch1.front(), first2 = t.branch2.front();
    t.permutation = std::abs(tr.b1 - first1) <= std::abs(tr.b1 - first2) ? Permutation::identity : Permutation::swap;
    t.min_gap = tr.min_gap;
    t.refinements = tr.refinements;
    return t;
}

double default_radius(const EPPair& eps, Branch which) noexcept {
    const cplx lc = which == Branch::plus ? eps.first.lambda_c : eps.second.lambda_c;
    return std::min(0.1 * std::abs(lc), 0.4 * std::abs(eps.first.lambda_c - eps.second.lambda_c));
}

DoubleLoopReport double_loop_check(const Model& m, cplx center, double radius, int steps) {
    DoubleLoopReport r;
    r.first = encircle(m, center, radius, {steps, 1, false});
    r.both = encircle(m, center, radius, {steps, 2, false});
    const double denom =
        std::max({1.0, std::abs(r.both.branch1.front()), std::abs(r.both.branch2.front())});
    r.max_rel_deviation = std::max(std::abs(r.both.branch1.back() - r.both.branch1.front()),
                                   std::abs(r.both.branch2.back() - r.both.branch2.front())) /
                          denom;
    r.restored = r.max_rel_deviation < 1e-8;
    return r;
}

DoubleLoopReport double_loop_check(const Model& m, Branch which) {
    const EPPair eps = ep_general(m);
    const cplx center = which == Branch::plus ? eps.first.lambda_c : eps.second.lambda_c;
    return double_loop_check(m, center, default_radius(eps, which));
}

}  // namespace epoint
