#include "epoint/sampling.hpp"
#include "epoint/errors.hpp"

#include <numbers>

namespace epoint {

namespace {

template <class Adjust>
Model draw(std::mt19937_64& rng, Adjust adjust) {
    std::uniform_real_distribution<double> energy(-2.0, 2.0);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    for (;;) {
        ModelParams p;
        p.eps1 = energy(rng);
        p.eps2 = energy(rng);
        p.omega1 = energy(rng);
        p.omega2 = energy(rng);
        p.phi0 = angle(rng);
        p.tau0 = angle(rng);
        p.phi1 = angle(rng);
        p.tau1 = angle(rng);
        adjust(p);
        try {
            return Model(p);
        } catch (const Error&) {
            // fails a gate; redraw
        }
    }
}

}  // namespace

Model random_model(std::mt19937_64& rng) {
    return draw(rng, [](ModelParams&) {});
}

Model random_special_model(std::mt19937_64& rng) {
    return draw(rng, [](ModelParams& p) { p.phi0 = 0.0; });
}

Model random_equal_tau_model(std::mt19937_64& rng) {
    return draw(rng, [](ModelParams& p) { p.tau1 = p.tau0; });
}

}  // namespace epoint
