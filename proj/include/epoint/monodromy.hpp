#pragma once

// Eigenvalue continuation around closed loops in the lambda plane. A loop
// around a single EP exchanges the two branches.

#include "epoint/eplocate.hpp"
#include "epoint/linalg.hpp"
#include "epoint/matkit.hpp"

#include <string>
#include <vector>

namespace epoint {

inline constexpr double kGapTol = 1e-6;
inline constexpr int kDefaultSteps = 256;
inline constexpr int kMaxRefinements = 12;

enum class Permutation { identity, swap };
const char* to_string(Permutation p) noexcept;

struct LoopOptions {
    int steps = kDefaultSteps;
    int turns = 1;
    bool clockwise = false;
};

struct LoopTrace {
    cplx center{};
    double radius = 0.0;
    int steps = 0;
    int turns = 1;
    std::vector<cplx> lambdas;  ///< closed: last == first
    std::vector<cplx> branch1;
    std::vector<cplx> branch2;
    std::vector<CVector2> vec1;  ///< right eigenvectors carried with the branches
    std::vector<CVector2> vec2;
    Permutation permutation = Permutation::identity;
    double min_gap = 0.0;
    int refinements = 0;  ///< total sub-steps inserted by step halving
};

/// Tracks both eigenvalue branches along lambda = center + radius e^{i theta}.
/// Throws Error(path_degeneracy) when the circle passes near an EP or the
/// eigenvalue gap drops below the gap tolerance, and Error(tracking_failure)
/// when step halving cannot resolve the assignment.
LoopTrace encircle(const Model& m, cplx center, double radius, const LoopOptions& opts = {});

struct DoubleLoopReport {
    LoopTrace first;   ///< one turn
    LoopTrace both;    ///< two consecutive turns
    bool restored = false;
    double max_rel_deviation = 0.0;
};

/// Default loop radius around an EP: min(0.1 |lambda_c|, 0.4 |lambda_+ - lambda_-|).
double default_radius(const EPPair& eps, Branch which) noexcept;

/// Two consecutive turns around the EP on branch `which`; branches must return
/// to their starting values within 1e-8 relative.
DoubleLoopReport double_loop_check(const Model& m, Branch which);

/// Same check around an arbitrary circle.
DoubleLoopReport double_loop_check(const Model& m, cplx center, double radius, int steps = kDefaultSteps);

/// Number of EPs strictly inside the circle.
int enclosed_eps(const EPPair& eps, cplx center, double radius) noexcept;

}  // namespace epoint
