#include "epoint/eplocate.hpp"
#include "epoint/epvector.hpp"
#include "epoint/errors.hpp"

#include <algorithm>
#include <cmath>

namespace epoint {

const char* to_string(Branch b) noexcept { return b == Branch::plus ? "plus" : "minus"; }

const char* to_string(Route r) noexcept {
    switch (r) {
        case Route::special: return "special";
        case Route::general_appendix: return "general_appendix";
        case Route::numerical: return "numerical";
    }
    return "unknown";
}

Branch canonical_branch(const Model& m, cplx lambda_c) noexcept {
    const double prefactor = -m.eps_split() / m.omega_split();
    const double im = (lambda_c / prefactor).imag();
    if (im != 0.0) return im > 0.0 ? Branch::plus : Branch::minus;
    return lambda_c.imag() > 0.0 ? Branch::plus : Branch::minus;
}

namespace {

cplx mean_energy(const Model& m, cplx lambda) {
    const auto& p = m.params();
    return 0.5 * (p.eps1 + p.eps2 + lambda * (p.omega1 + p.omega2));
}

// Labels two EP candidates and returns them plus-first.
EPPair labelled(const Model& m, EPSolution a, EPSolution b) {
    a.branch = canonical_branch(m, a.lambda_c);
    b.branch = a.branch == Branch::plus ? Branch::minus : Branch::plus;
    if (a.branch == Branch::plus) return {a, b};
    return {b, a};
}

EPSolution make_solution(cplx lambda_c, cplx e_c, Route route) {
    EPSolution s;
    s.lambda_c = lambda_c;
    s.e_c = e_c;
    s.route = route;
    return s;
}

}  // namespace

cplx discriminant(const CMatrix2& h) noexcept {
    const cplx split = h.a11 - h.a22;
    return split * split + 4.0 * h.a12 * h.a21;
}

EPPair ep_special(const Model& m) {
    const auto& p = m.params();
    if (p.phi0 != 0.0) throw Error(ErrorKind::precondition, "ep_special requires phi0 = 0 (diagonal H0)");
    if (std::abs(std::sin(p.phi1)) < kEpsTol)
        throw Error(ErrorKind::degenerate_model, "ep_special: phi1 is a multiple of pi, H0 and H1 commute");
    const double prefactor = -m.eps_split() / m.omega_split();
    const cplx up = prefactor * std::polar(1.0, 2.0 * p.phi1);
    const cplx down = prefactor * std::polar(1.0, -2.0 * p.phi1);
    return labelled(m, make_solution(up, mean_energy(m, up), Route::special),
                    make_solution(down, mean_energy(m, down), Route::special));
}

EPPair ep_general(const Model& m) {
    const PhaseTriple ph = phases(m);
    if (std::abs(std::cos(ph.beta)) < kEpsTol)
        throw Error(ErrorKind::degenerate_model, "ep_general: U0^dagger U1 is anti-diagonal, H0 and H1 commute");
    const double prefactor = -m.eps_split() / m.omega_split();
    const cplx up = prefactor * std::polar(1.0, 2.0 * ph.beta);
    const cplx down = prefactor * std::polar(1.0, -2.0 * ph.beta);
    EPSolution a = make_solution(up, mean_energy(m, up), Route::general_appendix);
    EPSolution b = make_solution(down, mean_energy(m, down), Route::general_appendix);
    a.phases = ph;
    b.phases = ph;
    return labelled(m, a, b);
}

EPPair ep_numerical(const Model& m) {
    const double ratio = std::abs(m.eps_split()) / std::abs(m.omega_split());
    const double s = ratio;  // = |lambda_c|, so the fit interpolates

    // D(lambda) = c2 lambda^2 + c1 lambda + c0 is exactly quadratic
    const cplx d0 = discriminant(build_hamiltonian(m, 0.0));
    const cplx dp = discriminant(build_hamiltonian(m, s));
    const cplx dm = discriminant(build_hamiltonian(m, -s));
    const cplx c0 = d0;
    const cplx c1 = (dp - dm) / (2.0 * s);
    const cplx c2 = (0.5 * (dp + dm) - d0) / (s * s);

    const auto& p = m.params();
    const double omega_mag = std::max({1.0, std::abs(p.omega1), std::abs(p.omega2)});
    if (std::abs(c2) < std::pow(kEpsTol * omega_mag, 2))
        throw Error(ErrorKind::degenerate_model, "ep_numerical: discriminant is not quadratic in lambda");

    const auto roots = solve_quadratic(c2, c1, c0);
    auto solution = [&](cplx lambda) {
        return make_solution(lambda, 0.5 * build_hamiltonian(m, lambda).trace(), Route::numerical);
    };
    return labelled(m, solution(roots[0]), solution(roots[1]));
}

double nilpotency_residual(const Model& m, const EPSolution& ep) {
    const CMatrix2 h = build_hamiltonian(m, ep.lambda_c);
    const CMatrix2 n = h - ep.e_c * CMatrix2::identity();
    return (n * n).frobenius_norm() / std::max(1.0, std::norm(h.frobenius_norm()));
}

double discriminant_residual(const Model& m, const EPSolution& ep) {
    const CMatrix2 h = build_hamiltonian(m, ep.lambda_c);
    return std::abs(discriminant(h)) / std::max(1.0, std::norm(h.frobenius_norm()));
}

namespace {

double rel_gap(cplx a, cplx ref) {
    return std::abs(a - ref) / std::max(std::abs(ref), std::numeric_limits<double>::min());
}

// Largest relative lambda mismatch after pairing the two EPs by proximity.
double matched_rel_gap(const EPPair& a, const EPPair& ref) {
    const double straight = std::abs(a.first.lambda_c - ref.first.lambda_c) +
                            std::abs(a.second.lambda_c - ref.second.lambda_c);
    const double crossed = std::abs(a.first.lambda_c - ref.second.lambda_c) +
                           std::abs(a.second.lambda_c - ref.first.lambda_c);
    if (straight <= crossed)
        return std::max(rel_gap(a.first.lambda_c, ref.first.lambda_c), rel_gap(a.second.lambda_c, ref.second.lambda_c));
    return std::max(rel_gap(a.first.lambda_c, ref.second.lambda_c), rel_gap(a.second.lambda_c, ref.first.lambda_c));
}

}  // namespace

CrossValidation cross_validate(const Model& m) {
    CrossValidation cv;
    if (m.params().phi0 == 0.0) cv.solutions.push_back(ep_special(m));
    cv.solutions.push_back(ep_general(m));
    cv.solutions.push_back(ep_numerical(m));

    const EPPair& ref = cv.solutions.back();
    const double sep = std::abs(ref.first.lambda_c - ref.second.lambda_c);
    const double mag = std::max(1.0, std::abs(ref.first.lambda_c));
    if (sep < 10.0 * kDiscTol * mag) {
        cv.ep_collision = true;
        cv.diagnostic = "EP collision: the two exceptional points are closer than branch matching can resolve";
    }

    for (std::size_t i = 0; i + 1 < cv.solutions.size(); ++i) {
        const double gap = matched_rel_gap(cv.solutions[i], ref);
        cv.comparisons.push_back({cv.solutions[i].first.route, gap});
        cv.max_rel_dlambda = std::max(cv.max_rel_dlambda, gap);
    }
    for (const auto& pair : cv.solutions) {
        for (const EPSolution* ep : {&pair.first, &pair.second}) {
            cv.max_nilpotency = std::max(cv.max_nilpotency, nilpotency_residual(m, *ep));
            cv.max_discriminant = std::max(cv.max_discriminant, discriminant_residual(m, *ep));
        }
    }
    cv.ok = cv.max_rel_dlambda < kRouteTol && cv.max_nilpotency < kNilpTol;
    if (!cv.ok && cv.diagnostic.empty())
        cv.diagnostic = "routes disagree: max relative |dlambda| " + std::to_string(cv.max_rel_dlambda) +
                        ", max nilpotency residual " + std::to_string(cv.max_nilpotency);
    return cv;
}

}  // namespace epoint
