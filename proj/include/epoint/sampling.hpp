#pragma once

#include "epoint/matkit.hpp"

#include <cstdint>
#include <random>

namespace epoint {

/// Draws eps, omega components uniformly in [-2, 2] and angles uniformly in
/// [-pi, pi), redrawing until the model passes validation.
Model random_model(std::mt19937_64& rng);

/// As random_model with phi0 = 0 (diagonal H0).
Model random_special_model(std::mt19937_64& rng);

/// As random_model with tau0 = tau1.
Model random_equal_tau_model(std::mt19937_64& rng);

}  // namespace epoint
