#include "epoint/linalg.hpp"
#include "epoint/errors.hpp"

#include <algorithm>

namespace epoint {

namespace {
bool finite(cplx z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }
}  // namespace

bool CVector2::is_finite() const noexcept { return finite(upper) && finite(lower); }

bool CMatrix2::is_finite() const noexcept { return finite(a11) && finite(a12) && finite(a21) && finite(a22); }

double collinearity_defect(const CVector2& a, const CVector2& b) noexcept {
    const double na = a.norm();
    const double nb = b.norm();
    if (na == 0.0 || nb == 0.0) return 1.0;
    return std::abs(a.upper * b.lower - a.lower * b.upper) / (na * nb);
}

double max_abs_diff(const CMatrix2& a, const CMatrix2& b) noexcept {
    return std::max({std::abs(a.a11 - b.a11), std::abs(a.a12 - b.a12), std::abs(a.a21 - b.a21),
                     std::abs(a.a22 - b.a22)});
}

double canonical_angle(double radians) noexcept {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = radians - two_pi * std::floor((radians + std::numbers::pi) / two_pi);
    // floor can land exactly on +pi through rounding
    if (r >= std::numbers::pi) r -= two_pi;
    if (r < -std::numbers::pi) r = -std::numbers::pi;
    return r;
}

std::array<cplx, 2> solve_quadratic(cplx a, cplx b, cplx c) noexcept {
    const cplx root = std::sqrt(b * b - 4.0 * a * c);
    // pick the sign that adds magnitudes in b +- root
    const cplx q = std::real(std::conj(b) * root) >= 0.0 ? -0.5 * (b + root) : -0.5 * (b - root);
    if (q == cplx{}) return {cplx{}, cplx{}};
    return {q / a, c / q};
}

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::invalid_argument: return "invalid_argument";
        case ErrorKind::degenerate_model: return "degenerate_model";
        case ErrorKind::precondition: return "precondition";
        case ErrorKind::path_degeneracy: return "path_degeneracy";
        case ErrorKind::tracking_failure: return "tracking_failure";
        case ErrorKind::config: return "config";
    }
    return "unknown";
}

}  // namespace epoint
