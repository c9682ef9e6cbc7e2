#pragma once

// Model construction: the two-angle unitaries, the phase matrix z(tau), the
// Hermitian parts H0 = U0 eps U0^dagger and H1 = U1 omega U1^dagger, and the
// non-Hermitian Hamiltonian H(lambda) = H0 + lambda H1.

#include "epoint/linalg.hpp"

namespace epoint {

/// Relative tolerance for the non-degeneracy and non-commutation gates.
inline constexpr double kEpsTol = 1e-9;

/// The eight real numbers that define a model. Plain data; see Model for the
/// validated form.
struct ModelParams {
    double eps1 = 0.0;
    double eps2 = 0.0;
    double omega1 = 0.0;
    double omega2 = 0.0;
    double phi0 = 0.0;
    double tau0 = 0.0;
    double phi1 = 0.0;
    double tau1 = 0.0;

    friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// A validated, angle-canonicalized ModelParams. Construction throws
/// Error(invalid_argument) on non-finite input and Error(degenerate_model)
/// when eps or omega is proportional to the identity or when H0 and H1
/// commute.
class Model {
public:
    explicit Model(const ModelParams& raw);

    [[nodiscard]] const ModelParams& params() const noexcept { return p_; }
    [[nodiscard]] const CMatrix2& h0() const noexcept { return h0_; }
    [[nodiscard]] const CMatrix2& h1() const noexcept { return h1_; }

    /// eps1 - eps2 and omega1 - omega2.
    [[nodiscard]] double eps_split() const noexcept { return p_.eps1 - p_.eps2; }
    [[nodiscard]] double omega_split() const noexcept { return p_.omega1 - p_.omega2; }

private:
    ModelParams p_;
    CMatrix2 h0_;
    CMatrix2 h1_;
};

/// [[cos phi, -sin phi e^{i tau}], [sin phi e^{-i tau}, cos phi]].
CMatrix2 make_unitary(double phi, double tau);

/// make_unitary(phi, tau) * diag(e^{i gamma1}, e^{i gamma2}).
CMatrix2 make_general_unitary(double phi, double tau, double gamma1, double gamma2);

/// diag(e^{i tau/2}, e^{-i tau/2}).
CMatrix2 make_z(double tau);

CMatrix2 build_h0(const Model& m) noexcept;
CMatrix2 build_h1(const Model& m) noexcept;
CMatrix2 build_hamiltonian(const Model& m, cplx lambda);

/// The Hamiltonian in the eigenbasis of H0:
/// eps + lambda U0^dagger U1 omega U1^dagger U0.
CMatrix2 build_h_tilde(const Model& m, cplx lambda);

/// ||H0 - conj(H0)||_F + ||H1 - conj(H1)||_F, zero iff the model is
/// invariant under plain complex conjugation.
double trs_defect(const Model& m) noexcept;

/// Natural magnitude of energies in the model: max(1, |eps_k|, |omega_k|).
double model_scale(const Model& m) noexcept;

}  // namespace epoint
