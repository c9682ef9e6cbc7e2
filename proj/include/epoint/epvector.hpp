#pragma once

// The coalesced eigenvector at an EP in the time-reversal symmetric, the
// equal-tau and the general symmetry-breaking regimes, and its reading as a
// polarization state.

#include "epoint/eplocate.hpp"
#include "epoint/linalg.hpp"
#include "epoint/matkit.hpp"

namespace epoint {

inline constexpr double kPolTol = 1e-6;

/// gamma = arg of (U0^dagger U1)_11, beta from its modulus, xi such that
/// U0^dagger U1 = U(beta, xi) z(2 gamma) holds exactly. Throws
/// Error(degenerate_model) when the off-diagonal element vanishes.
PhaseTriple phases(const Model& m);

/// Explicit U0^dagger U1 in terms of the four angles.
CMatrix2 u0_dagger_u1(const Model& m) noexcept;

/// U(beta, xi) z(2 gamma).
CMatrix2 reconstruct_u0_dagger_u1(const PhaseTriple& ph);

/// (+-i, 1) / sqrt(2).
CVector2 ep_vector_symmetric(Branch sign) noexcept;

struct SpecialVectors {
    CVector2 right;
    CVector2 left;  ///< row vector
};

/// Right (+-i e^{i tau}, 1) and left (+-i e^{-i tau}, 1), both unit norm.
SpecialVectors ep_vector_special(double tau, Branch sign) noexcept;

struct GeneralVector {
    CVector2 vec;                ///< explicit closed form, lower component real >= 0, unit norm
    CVector2 via_basis_change;   ///< U(phi0, tau0) (+-i e^{i xi}, 1), unnormalized
    double form_defect = 0.0;    ///< collinearity defect between the two constructions
    bool lower_vanishes = false; ///< vec is then via_basis_change with upper component 1
    PhaseTriple phases;
};

GeneralVector ep_vector_general(const Model& m, Branch sign);

/// Left eigenvector at an EP as the larger adjugate row of H(lambda_c) - e_c,
/// unit norm.
CVector2 ep_left_vector(const Model& m, const EPSolution& ep);

/// ||(H(lambda_c) - e_c) v|| / (||H(lambda_c)||_F ||v||).
double eigen_residual(const Model& m, const EPSolution& ep, const CVector2& v);

/// Eigenvector sign paired with an EP, found by residual minimization.
struct VectorPairing {
    Branch vector_sign = Branch::plus;
    double residual = 0.0;
    GeneralVector vector;
};

VectorPairing pair_vector(const Model& m, const EPSolution& ep);

/// Fills ep.vec for both solutions of a pair.
void attach_vectors(const Model& m, EPPair& eps);

/// ||U(phi, tau) v - e^{+-i phi} v|| for v = ep_vector_special(tau, sign).right.
double group_eigenrelation_check(double phi, double tau, Branch sign) noexcept;

enum class PolarizationKind { circular, elliptic, linear };
enum class Handedness { plus, minus, none };

const char* to_string(PolarizationKind k) noexcept;
const char* to_string(Handedness h) noexcept;

struct PolarizationDescriptor {
    PolarizationKind kind = PolarizationKind::linear;
    Handedness handedness = Handedness::none;
    double axial_ratio = 0.0;  ///< minor / major
    double orientation = 0.0;  ///< major-axis angle
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
};

/// Reads v = (a, b) as a Jones vector. Throws Error(invalid_argument) on the
/// zero vector.
PolarizationDescriptor polarization(const CVector2& v);

}  // namespace epoint
