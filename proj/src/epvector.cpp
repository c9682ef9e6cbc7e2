#include "epoint/epvector.hpp"
#include "epoint/errors.hpp"

#include <algorithm>
#include <cmath>

namespace epoint {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

CMatrix2 u0_dagger_u1(const Model& m) noexcept {
    const auto& p = m.params();
    const double c0 = std::cos(p.phi0), s0 = std::sin(p.phi0);
    const double c1 = std::cos(p.phi1), s1 = std::sin(p.phi1);
    const cplx a11 = c0 * c1 + s0 * s1 * std::polar(1.0, p.tau0 - p.tau1);
    const cplx a12 = c1 * s0 * std::polar(1.0, p.tau0) - c0 * s1 * std::polar(1.0, p.tau1);
    const cplx a21 = -c1 * s0 * std::polar(1.0, -p.tau0) + c0 * s1 * std::polar(1.0, -p.tau1);
    const cplx a22 = c0 * c1 + s0 * s1 * std::polar(1.0, -(p.tau0 - p.tau1));
    return {a11, a12, a21, a22};
}

PhaseTriple phases(const Model& m) {
    const auto& p = m.params();
    const CMatrix2 w = u0_dagger_u1(m);
    const double sin_beta = std::abs(w.a12);
    if (sin_beta < kEpsTol)
        throw Error(ErrorKind::degenerate_model,
                    "phases: U0^dagger U1 is diagonal up to phases, H0 and H1 commute");

    const double c0 = std::cos(p.phi0), s0 = std::sin(p.phi0);
    const double c1 = std::cos(p.phi1), s1 = std::sin(p.phi1);
    const double cos_beta_sq =
        c0 * c0 * c1 * c1 + s0 * s0 * s1 * s1 + 2.0 * c0 * c1 * s0 * s1 * std::cos(p.tau0 - p.tau1);
    const double cos_beta = std::sqrt(std::max(0.0, cos_beta_sq));

    PhaseTriple ph;
    ph.gamma = canonical_angle(std::arg(w.a11));
    ph.beta = std::atan2(sin_beta, cos_beta);
    // the upper-right entry of U(beta, xi) z(2 gamma) is -sin(beta) e^{i(xi - gamma)}
    ph.xi = canonical_angle(std::arg(-w.a12) + ph.gamma);
    return ph;
}

CMatrix2 reconstruct_u0_dagger_u1(const PhaseTriple& ph) {
    return make_unitary(ph.beta, ph.xi) * make_z(2.0 * ph.gamma);
}

CVector2 ep_vector_symmetric(Branch sign) noexcept {
    return {static_cast<double>(sign_of(sign)) * kI * kInvSqrt2, kInvSqrt2};
}

SpecialVectors ep_vector_special(double tau, Branch sign) noexcept {
    const double s = sign_of(sign);
    return {{s * kI * std::polar(kInvSqrt2, tau), kInvSqrt2}, {s * kI * std::polar(kInvSqrt2, -tau), kInvSqrt2}};
}

GeneralVector ep_vector_general(const Model& m, Branch sign) {
    const auto& p = m.params();
    GeneralVector g;
    g.phases = phases(m);
    const double xi = g.phases.xi;
    const double s = sign_of(sign);

    g.via_basis_change = make_unitary(p.phi0, p.tau0) * CVector2{s * kI * std::polar(1.0, xi), 1.0};

    const double c0 = std::cos(p.phi0), s0 = std::sin(p.phi0);
    const cplx upper = s * kI * std::polar(1.0, -xi) *
                       (std::polar(c0 * c0, 2.0 * xi) + std::polar(s0 * s0, 2.0 * p.tau0));
    const double lower = 1.0 + s * std::sin(2.0 * p.phi0) * std::sin(p.tau0 - xi);

    if (std::abs(lower) < kEpsTol) {
        // the closed form is the basis-change vector times conj(its lower
        // component), so it collapses to zero here
        g.lower_vanishes = true;
        g.vec = (1.0 / g.via_basis_change.upper) * g.via_basis_change;
        g.form_defect = 0.0;
        return g;
    }
    const CVector2 explicit_form{upper, lower};
    g.vec = unit(explicit_form);
    g.form_defect = collinearity_defect(g.via_basis_change, explicit_form);
    return g;
}

CVector2 ep_left_vector(const Model& m, const EPSolution& ep) {
    const CMatrix2 n = build_hamiltonian(m, ep.lambda_c) - ep.e_c * CMatrix2::identity();
    const CMatrix2 adj = n.adjugate();
    const CVector2 row1{adj.a11, adj.a12};
    const CVector2 row2{adj.a21, adj.a22};
    return unit(row1.norm() >= row2.norm() ? row1 : row2);
}

double eigen_residual(const Model& m, const EPSolution& ep, const CVector2& v) {
    const CMatrix2 h = build_hamiltonian(m, ep.lambda_c);
    const CVector2 r = (h - ep.e_c * CMatrix2::identity()) * v;
    return r.norm() / (std::max(h.frobenius_norm(), 1e-300) * v.norm());
}

VectorPairing pair_vector(const Model& m, const EPSolution& ep) {
    VectorPairing best;
    bool first = true;
    for (Branch sign : {Branch::plus, Branch::minus}) {
        GeneralVector g = ep_vector_general(m, sign);
        const double res = eigen_residual(m, ep, g.vec);
        if (first || res < best.residual) {
            best = {sign, res, g};
            first = false;
        }
    }
    return best;
}

void attach_vectors(const Model& m, EPPair& eps) {
    eps.first.vec = pair_vector(m, eps.first).vector.vec;
    eps.second.vec = pair_vector(m, eps.second).vector.vec;
}

double group_eigenrelation_check(double phi, double tau, Branch sign) noexcept {
    const CVector2 v = ep_vector_special(tau, sign).right;
    const CMatrix2 u = make_unitary(phi, tau);
    return (u * v - std::polar(1.0, sign_of(sign) * phi) * v).norm();
}

const char* to_string(PolarizationKind k) noexcept {
    switch (k) {
        case PolarizationKind::circular: return "circular";
        case PolarizationKind::elliptic: return "elliptic";
        case PolarizationKind::linear: return "linear";
    }
    return "unknown";
}

const char* to_string(Handedness h) noexcept {
    switch (h) {
        case Handedness::plus: return "plus";
        case Handedness::minus: return "minus";
        case Handedness::none: return "none";
    }
    return "unknown";
}

PolarizationDescriptor polarization(const CVector2& v) {
    if (v.is_zero() || !v.is_finite())
        throw Error(ErrorKind::invalid_argument, "polarization: zero or non-finite vector");
    PolarizationDescriptor d;
    const cplx cross = v.upper * std::conj(v.lower);
    d.s0 = std::norm(v.upper) + std::norm(v.lower);
    d.s1 = std::norm(v.upper) - std::norm(v.lower);
    d.s2 = 2.0 * cross.real();
    d.s3 = 2.0 * cross.imag();

    const double ellipticity = std::clamp(d.s3 / d.s0, -1.0, 1.0);
    d.axial_ratio = std::abs(std::tan(0.5 * std::asin(ellipticity)));
    d.orientation = 0.5 * std::atan2(d.s2, d.s1);

    if (d.axial_ratio > 1.0 - kPolTol)
        d.kind = PolarizationKind::circular;
    else if (d.axial_ratio < kPolTol)
        d.kind = PolarizationKind::linear;
    else
        d.kind = PolarizationKind::elliptic;
    d.handedness = d.kind == PolarizationKind::linear ? Handedness::none
                   : d.s3 > 0.0                       ? Handedness::plus
                                                      : Handedness::minus;
    return d;
}

}  // namespace epoint
