#pragma once

// 2x2 complex matrices and 2-vectors. Everything in this library is built on
// these two value types.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

namespace epoint {

using cplx = std::complex<double>;

inline constexpr cplx kI{0.0, 1.0};

struct CVector2 {
    cplx upper{};
    cplx lower{};

    [[nodiscard]] double norm() const noexcept { return std::sqrt(std::norm(upper) + std::norm(lower)); }
    [[nodiscard]] bool is_finite() const noexcept;
    [[nodiscard]] bool is_zero() const noexcept { return upper == cplx{} && lower == cplx{}; }

    friend CVector2 operator+(const CVector2& a, const CVector2& b) noexcept { return {a.upper + b.upper, a.lower + b.lower}; }
    friend CVector2 operator-(const CVector2& a, const CVector2& b) noexcept { return {a.upper - b.upper, a.lower - b.lower}; }
    friend CVector2 operator*(cplx s, const CVector2& v) noexcept { return {s * v.upper, s * v.lower}; }
};

struct CMatrix2 {
    cplx a11{}, a12{}, a21{}, a22{};

    static CMatrix2 identity() noexcept { return {1.0, 0.0, 0.0, 1.0}; }
    static CMatrix2 diag(cplx d1, cplx d2) noexcept { return {d1, 0.0, 0.0, d2}; }

    [[nodiscard]] cplx trace() const noexcept { return a11 + a22; }
    [[nodiscard]] cplx det() const noexcept { return a11 * a22 - a12 * a21; }
    [[nodiscard]] CMatrix2 adjoint() const noexcept {
        return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
    }
    [[nodiscard]] CMatrix2 conjugate() const noexcept {
        return {std::conj(a11), std::conj(a12), std::conj(a21), std::conj(a22)};
    }
    /// Adjugate: m * adj(m) = adj(m) * m = det(m) * I.
    [[nodiscard]] CMatrix2 adjugate() const noexcept { return {a22, -a12, -a21, a11}; }
    [[nodiscard]] double frobenius_norm() const noexcept {
        return std::sqrt(std::norm(a11) + std::norm(a12) + std::norm(a21) + std::norm(a22));
    }
    [[nodiscard]] bool is_finite() const noexcept;

    friend CMatrix2 operator+(const CMatrix2& a, const CMatrix2& b) noexcept {
        return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
    }
    friend CMatrix2 operator-(const CMatrix2& a, const CMatrix2& b) noexcept {
        return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
    }
    friend CMatrix2 operator*(cplx s, const CMatrix2& m) noexcept {
        return {s * m.a11, s * m.a12, s * m.a21, s * m.a22};
    }
    friend CMatrix2 operator*(const CMatrix2& a, const CMatrix2& b) noexcept {
        return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
                a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
    }
    friend CVector2 operator*(const CMatrix2& m, const CVector2& v) noexcept {
        return {m.a11 * v.upper + m.a12 * v.lower, m.a21 * v.upper + m.a22 * v.lower};
    }
};

/// Row vector times matrix (left-eigenvector semantics).
inline CVector2 row_times(const CVector2& row, const CMatrix2& m) noexcept {
    return {row.upper * m.a11 + row.lower * m.a21, row.upper * m.a12 + row.lower * m.a22};
}

/// Unconjugated bilinear product sum_k l_k r_k.
inline cplx bilinear(const CVector2& l, const CVector2& r) noexcept {
    return l.upper * r.upper + l.lower * r.lower;
}

/// Conjugated inner product <a|b>.
inline cplx inner(const CVector2& a, const CVector2& b) noexcept {
    return std::conj(a.upper) * b.upper + std::conj(a.lower) * b.lower;
}

inline CVector2 unit(const CVector2& v) noexcept {
    const double n = v.norm();
    return n > 0.0 ? CVector2{v.upper / n, v.lower / n} : v;
}

/// |a1 b2 - a2 b1| / (|a| |b|): zero iff a and b are complex-collinear.
double collinearity_defect(const CVector2& a, const CVector2& b) noexcept;

/// Largest entrywise modulus of a - b.
double max_abs_diff(const CMatrix2& a, const CMatrix2& b) noexcept;

/// Maps an angle to [-pi, pi).
double canonical_angle(double radians) noexcept;

/// Roots of a t^2 + b t + c with a != 0, larger-magnitude root first. The
/// second root comes from Vieta (c / (a t1)) so neither root suffers
/// cancellation.
std::array<cplx, 2> solve_quadratic(cplx a, cplx b, cplx c) noexcept;

}  // namespace epoint
