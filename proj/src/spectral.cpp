#include "epoint/spectral.hpp"
#include "epoint/errors.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace epoint {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool lex_less(cplx a, cplx b) noexcept {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
}

CVector2 pick_larger(const CVector2& a, const CVector2& b) noexcept { return a.norm() >= b.norm() ? a : b; }

// Right kernel vector of (m - e) from the larger adjugate column.
CVector2 right_kernel(const CMatrix2& m, cplx e, int fallback_axis) noexcept {
    const CMatrix2 adj = (m - e * CMatrix2::identity()).adjugate();
    CVector2 v = pick_larger({adj.a11, adj.a21}, {adj.a12, adj.a22});
    if (v.is_zero()) v = fallback_axis == 0 ? CVector2{1.0, 0.0} : CVector2{0.0, 1.0};
    return v;
}

// Left kernel row of (m - e) from the larger adjugate row.
CVector2 left_kernel(const CMatrix2& m, cplx e, int fallback_axis) noexcept {
    const CMatrix2 adj = (m - e * CMatrix2::identity()).adjugate();
    CVector2 v = pick_larger({adj.a11, adj.a12}, {adj.a21, adj.a22});
    if (v.is_zero()) v = fallback_axis == 0 ? CVector2{1.0, 0.0} : CVector2{0.0, 1.0};
    return v;
}

// Unit norm, largest-magnitude component real positive.
CVector2 normalize_right(const CVector2& v) noexcept {
    const CVector2 u = unit(v);
    const cplx big = std::abs(u.upper) >= std::abs(u.lower) ? u.upper : u.lower;
    const cplx phase = std::conj(big) / std::abs(big);
    return phase * u;
}

}  // namespace

Spectrum eigen2(const CMatrix2& m) {
    if (!m.is_finite()) throw Error(ErrorKind::invalid_argument, "eigen2: non-finite matrix entry");

    const cplx split = m.a11 - m.a22;
    const cplx off = m.a12 * m.a21;
    cplx disc = split * split + 4.0 * off;
    // below its own rounding level the discriminant is indistinguishable from 0
    if (std::abs(disc) <= 64.0 * kEps * (std::norm(split) + 4.0 * std::abs(off))) disc = 0.0;

    const cplx tr = m.trace();
    cplx e1, e2;
    if (disc == cplx{}) {
        e1 = e2 = 0.5 * tr;
    } else {
        const cplx root = std::sqrt(disc);
        e1 = std::real(std::conj(tr) * root) >= 0.0 ? 0.5 * (tr + root) : 0.5 * (tr - root);
        e2 = e1 != cplx{} ? m.det() / e1 : tr - e1;
    }
    if (lex_less(e2, e1)) std::swap(e1, e2);

    Spectrum s;
    s.e1 = e1;
    s.e2 = e2;
    s.r1 = normalize_right(right_kernel(m, e1, 0));
    s.r2 = normalize_right(right_kernel(m, e2, 1));
    const CVector2 l1 = unit(left_kernel(m, e1, 0));
    const CVector2 l2 = unit(left_kernel(m, e2, 1));

    const cplx p1 = bilinear(l1, s.r1);
    const cplx p2 = bilinear(l2, s.r2);
    if (std::abs(p1) < kNormTol || std::abs(p2) < kNormTol) {
        s.l1 = l1;
        s.l2 = l2;
        s.biorthogonal_ok = false;
        s.condition = std::numeric_limits<double>::infinity();
        return s;
    }
    s.l1 = (1.0 / p1) * l1;
    s.l2 = (1.0 / p2) * l2;
    s.biorthogonal_ok = true;
    s.condition = std::max(1.0 / std::abs(p1), 1.0 / std::abs(p2));
    return s;
}

std::tuple<cplx, cplx, Radical> eigenvalues_special(const Model& m, cplx lambda) {
    const auto& p = m.params();
    if (p.phi0 != 0.0) throw Error(ErrorKind::precondition, "eigenvalues_special requires phi0 = 0 (diagonal H0)");
    const double d = m.eps_split();
    const double w = m.omega_split();
    Radical r;
    r.squared = 0.25 * (d * d + lambda * lambda * (w * w) + 2.0 * lambda * d * w * std::cos(2.0 * p.phi1));
    r.value = std::sqrt(r.squared);
    const cplx mean = 0.5 * (p.eps1 + p.eps2 + lambda * (p.omega1 + p.omega2));
    return {mean + r.value, mean - r.value, r};
}

}  // namespace epoint
