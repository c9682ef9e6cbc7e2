#pragma once

#include "epoint/linalg.hpp"
#include "epoint/matkit.hpp"

#include <limits>
#include <tuple>

namespace epoint {

/// |<l|r>| threshold (unit l, r) below which biorthogonal normalization is
/// declared impossible. Near an EP |<l|r>| goes like the square root of the
/// relative discriminant, so a rounded EP sits around 1e-6, not 1e-16.
inline constexpr double kNormTol = 1e-4;

/// Closed-form eigendecomposition of a 2x2 matrix.
///
/// Eigenvalues are ordered lexicographically by (real, imag). When
/// biorthogonal_ok, each r_k has unit norm with its largest component real
/// positive and l_k is scaled so that l_k . r_k = 1 (unconjugated). Otherwise
/// both vectors are left at unit norm and condition is +infinity.
struct Spectrum {
    cplx e1{}, e2{};
    CVector2 r1{}, r2{};
    CVector2 l1{}, l2{};
    bool biorthogonal_ok = false;
    double condition = std::numeric_limits<double>::infinity();
};

/// The square root R of the discriminant in the diagonal-H0 case, together
/// with its radicand.
struct Radical {
    cplx value{};
    cplx squared{};
};

Spectrum eigen2(const CMatrix2& m);

/// Eigenvalues E = (eps1 + eps2 + lambda (omega1 + omega2)) / 2 +- R for a
/// model with diagonal H0 (phi0 == 0). Throws Error(precondition) otherwise.
/// Returns (E_plus, E_minus, R).
std::tuple<cplx, cplx, Radical> eigenvalues_special(const Model& m, cplx lambda);

/// Unconjugated l . r; vanishes for the coalesced mode at an EP.
inline cplx self_orthogonality(const CVector2& l, const CVector2& r) noexcept { return bilinear(l, r); }

}  // namespace epoint
