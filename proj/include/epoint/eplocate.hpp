#pragma once

// Exceptional-point location. Three independent routes:
//   special           closed form for diagonal H0,
//   general_appendix  closed form from the U0^dagger U1 phase decomposition,
//   numerical         roots of the discriminant polynomial D(lambda).

#include "epoint/linalg.hpp"
#include "epoint/matkit.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace epoint {

inline constexpr double kDiscTol = 1e-10;
inline constexpr double kNilpTol = 1e-9;
/// Relative tolerance on |delta lambda_c| between routes.
inline constexpr double kRouteTol = 1e-9;

enum class Branch { plus, minus };
enum class Route { special, general_appendix, numerical };

const char* to_string(Branch b) noexcept;
const char* to_string(Route r) noexcept;
inline int sign_of(Branch b) noexcept { return b == Branch::plus ? 1 : -1; }

/// Phases of U0^dagger U1 = [[cos b, -sin b e^{i xi}], [sin b e^{-i xi}, cos b]] z(2 gamma).
struct PhaseTriple {
    double gamma = 0.0;
    double beta = 0.0;  ///< in [0, pi/2]
    double xi = 0.0;
};

struct EPSolution {
    Branch branch = Branch::plus;
    cplx lambda_c{};
    cplx e_c{};
    std::optional<CVector2> vec;  ///< filled by attach_vectors (epvector)
    std::optional<PhaseTriple> phases;
    Route route = Route::numerical;
};

/// Both EPs of a model, plus-branch first.
using EPPair = std::pair<EPSolution, EPSolution>;

/// Branch label of an EP: plus iff Im(lambda_c / (-(eps1-eps2)/(omega1-omega2))) > 0,
/// ties broken by Im(lambda_c) > 0.
Branch canonical_branch(const Model& m, cplx lambda_c) noexcept;

EPPair ep_special(const Model& m);
EPPair ep_general(const Model& m);
EPPair ep_numerical(const Model& m);

/// D(lambda) = tr(H)^2 - 4 det(H), evaluated as (h11 - h22)^2 + 4 h12 h21.
cplx discriminant(const CMatrix2& h) noexcept;

/// ||(H(lambda_c) - e_c)^2||_F / max(1, ||H(lambda_c)||_F^2).
double nilpotency_residual(const Model& m, const EPSolution& ep);

/// |D(H(lambda_c))| / max(1, ||H(lambda_c)||_F^2).
double discriminant_residual(const Model& m, const EPSolution& ep);

struct RouteComparison {
    Route route = Route::numerical;
    double max_rel_dlambda = 0.0;  ///< against the numerical route
};

struct CrossValidation {
    std::vector<EPPair> solutions;  ///< in Route order; special only when phi0 == 0
    std::vector<RouteComparison> comparisons;
    double max_rel_dlambda = 0.0;
    double max_nilpotency = 0.0;
    double max_discriminant = 0.0;
    bool ep_collision = false;
    bool ok = false;
    std::string diagnostic;
};

/// Runs every applicable route, matches branches by proximity and checks
/// route agreement and nilpotency. Degenerate models throw.
CrossValidation cross_validate(const Model& m);

}  // namespace epoint
