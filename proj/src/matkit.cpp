#include "epoint/matkit.hpp"
#include "epoint/errors.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace epoint {

namespace {

void require_finite(std::initializer_list<double> xs, const char* what) {
    for (double x : xs)
        if (!std::isfinite(x)) throw Error(ErrorKind::invalid_argument, std::string(what) + ": non-finite input");
}

// U diag(d1, d2) U^dagger
CMatrix2 similarity(const CMatrix2& u, double d1, double d2) {
    return u * CMatrix2::diag(d1, d2) * u.adjoint();
}

}  // namespace

CMatrix2 make_unitary(double phi, double tau) {
    require_finite({phi, tau}, "make_unitary");
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    return {c, -s * std::polar(1.0, tau), s * std::polar(1.0, -tau), c};
}

CMatrix2 make_general_unitary(double phi, double tau, double gamma1, double gamma2) {
    require_finite({gamma1, gamma2}, "make_general_unitary");
    return make_unitary(phi, tau) * CMatrix2::diag(std::polar(1.0, gamma1), std::polar(1.0, gamma2));
}

CMatrix2 make_z(double tau) {
    require_finite({tau}, "make_z");
    return CMatrix2::diag(std::polar(1.0, tau / 2.0), std::polar(1.0, -tau / 2.0));
}

Model::Model(const ModelParams& raw) : p_(raw) {
    require_finite({raw.eps1, raw.eps2, raw.omega1, raw.omega2, raw.phi0, raw.tau0, raw.phi1, raw.tau1},
                   "model");
    p_.phi0 = canonical_angle(raw.phi0);
    p_.tau0 = canonical_angle(raw.tau0);
    p_.phi1 = canonical_angle(raw.phi1);
    p_.tau1 = canonical_angle(raw.tau1);

    const double eps_mag = std::max({std::abs(p_.eps1), std::abs(p_.eps2), 1.0});
    const double omega_mag = std::max({std::abs(p_.omega1), std::abs(p_.omega2), 1.0});
    if (std::abs(p_.eps1 - p_.eps2) <= kEpsTol * eps_mag)
        throw Error(ErrorKind::degenerate_model, "eps1 and eps2 must differ (eps is a multiple of the unit matrix)");
    if (std::abs(p_.omega1 - p_.omega2) <= kEpsTol * omega_mag)
        throw Error(ErrorKind::degenerate_model,
                    "omega1 and omega2 must differ (omega is a multiple of the unit matrix)");

    h0_ = similarity(make_unitary(p_.phi0, p_.tau0), p_.eps1, p_.eps2);
    h1_ = similarity(make_unitary(p_.phi1, p_.tau1), p_.omega1, p_.omega2);

    const double comm = (h0_ * h1_ - h1_ * h0_).frobenius_norm();
    if (!(comm > kEpsTol * eps_mag * omega_mag))
        throw Error(ErrorKind::degenerate_model,
                    "H0 and H1 commute: exceptional points require non-commuting H0 and H1 "
                    "(commutator norm " + std::to_string(comm) + ")");
}

CMatrix2 build_h0(const Model& m) noexcept { return m.h0(); }

CMatrix2 build_h1(const Model& m) noexcept { return m.h1(); }

CMatrix2 build_hamiltonian(const Model& m, cplx lambda) {
    if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()))
        throw Error(ErrorKind::invalid_argument, "build_hamiltonian: non-finite lambda");
    return m.h0() + lambda * m.h1();
}

CMatrix2 build_h_tilde(const Model& m, cplx lambda) {
    if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()))
        throw Error(ErrorKind::invalid_argument, "build_h_tilde: non-finite lambda");
    const auto& p = m.params();
    const CMatrix2 w = make_unitary(p.phi0, p.tau0).adjoint() * make_unitary(p.phi1, p.tau1);
    return CMatrix2::diag(p.eps1, p.eps2) + lambda * similarity(w, p.omega1, p.omega2);
}

double trs_defect(const Model& m) noexcept {
    return (m.h0() - m.h0().conjugate()).frobenius_norm() + (m.h1() - m.h1().conjugate()).frobenius_norm();
}

double model_scale(const Model& m) noexcept {
    const auto& p = m.params();
    return std::max({1.0, std::abs(p.eps1), std::abs(p.eps2), std::abs(p.omega1), std::abs(p.omega2)});
}

}  // namespace epoint
