#include "epoint/epoint.h"

#include "epoint/commands.hpp"
#include "epoint/eplocate.hpp"
#include "epoint/epvector.hpp"
#include "epoint/errors.hpp"
#include "epoint/matkit.hpp"
#include "epoint/monodromy.hpp"
#include "epoint/serialize.hpp"
#include "epoint/spectral.hpp"

#include <new>
#include <string>

struct epoint_model {
    epoint::Model model;
};

struct epoint_report {
    std::string primary;
    std::string secondary;
    std::string message;
};

namespace {

thread_local std::string g_last_error;

epoint_status to_c(epoint::ErrorKind kind) noexcept {
    using epoint::ErrorKind;
    switch (kind) {
        case ErrorKind::invalid_argument: return EPOINT_E_INVALID_ARGUMENT;
        case ErrorKind::config: return EPOINT_E_CONFIG;
        case ErrorKind::degenerate_model: return EPOINT_E_DEGENERATE_MODEL;
        case ErrorKind::precondition: return EPOINT_E_PRECONDITION;
        case ErrorKind::path_degeneracy: return EPOINT_E_PATH_DEGENERACY;
        case ErrorKind::tracking_failure: return EPOINT_E_TRACKING_FAILURE;
    }
    return EPOINT_E_INTERNAL;
}

epoint_status to_c(epoint::Status s) noexcept {
    using epoint::Status;
    switch (s) {
        case Status::ok: return EPOINT_OK;
        case Status::config_error: return EPOINT_E_CONFIG;
        case Status::degenerate_model: return EPOINT_E_DEGENERATE_MODEL;
        case Status::disagreement: return EPOINT_E_DISAGREEMENT;
        case Status::path_failure: return EPOINT_E_PATH_DEGENERACY;
        case Status::precondition: return EPOINT_E_PRECONDITION;
        case Status::internal_error: return EPOINT_E_INTERNAL;
    }
    return EPOINT_E_INTERNAL;
}

epoint_status fail(epoint_status s, std::string msg) {
    g_last_error = std::move(msg);
    return s;
}

// Runs f, translating exceptions into status codes.
template <class F>
epoint_status guarded(F&& f) noexcept {
    try {
        g_last_error.clear();
        f();
        return EPOINT_OK;
    } catch (const epoint::Error& e) {
        return fail(to_c(e.kind()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(EPOINT_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(EPOINT_E_INTERNAL, e.what());
    }
}

epoint::cplx from_c(epoint_complex z) noexcept { return {z.re, z.im}; }
epoint_complex to_c(epoint::cplx z) noexcept { return {z.real(), z.imag()}; }

void to_c(const epoint::CMatrix2& m, epoint_complex out[4]) noexcept {
    out[0] = to_c(m.a11);
    out[1] = to_c(m.a12);
    out[2] = to_c(m.a21);
    out[3] = to_c(m.a22);
}

epoint::ModelParams from_c(const epoint_params& p) noexcept {
    return {p.eps1, p.eps2, p.omega1, p.omega2, p.phi0, p.tau0, p.phi1, p.tau1};
}

#define EPOINT_REQUIRE(cond)                                                          \
    do {                                                                              \
        if (!(cond)) return fail(EPOINT_E_INVALID_ARGUMENT, "null argument: " #cond); \
    } while (0)

}  // namespace

extern "C" {

const char* epoint_last_error(void) { return g_last_error.c_str(); }

const char* epoint_version(void) { return "1.0.0"; }

epoint_status epoint_model_create(const epoint_params* params, epoint_model** out) {
    EPOINT_REQUIRE(params && out);
    *out = nullptr;
    return guarded([&] { *out = new epoint_model{epoint::Model(from_c(*params))}; });
}

epoint_status epoint_model_from_json(const char* json, epoint_model** out) {
    EPOINT_REQUIRE(json && out);
    *out = nullptr;
    return guarded([&] {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(json);
        } catch (const nlohmann::json::parse_error& e) {
            throw epoint::Error(epoint::ErrorKind::config, e.what());
        }
        *out = new epoint_model{epoint::Model(epoint::params_from_json(j))};
    });
}

void epoint_model_destroy(epoint_model* model) { delete model; }

epoint_status epoint_model_params(const epoint_model* model, epoint_params* out) {
    EPOINT_REQUIRE(model && out);
    const auto& p = model->model.params();
    *out = {p.eps1, p.eps2, p.omega1, p.omega2, p.phi0, p.tau0, p.phi1, p.tau1};
    return EPOINT_OK;
}

epoint_status epoint_hamiltonian(const epoint_model* model, epoint_complex lambda, epoint_complex out[4]) {
    EPOINT_REQUIRE(model && out);
    return guarded([&] { to_c(epoint::build_hamiltonian(model->model, from_c(lambda)), out); });
}

epoint_status epoint_unitary(double phi, double tau, epoint_complex out[4]) {
    EPOINT_REQUIRE(out);
    return guarded([&] { to_c(epoint::make_unitary(phi, tau), out); });
}

epoint_status epoint_eigenvalues(const epoint_model* model, epoint_complex lambda, epoint_complex out[2]) {
    EPOINT_REQUIRE(model && out);
    return guarded([&] {
        const auto s = epoint::eigen2(epoint::build_hamiltonian(model->model, from_c(lambda)));
        out[0] = to_c(s.e1);
        out[1] = to_c(s.e2);
    });
}

epoint_status epoint_find_eps(const epoint_model* model, epoint_ep out[2]) {
    EPOINT_REQUIRE(model && out);
    return guarded([&] {
        auto eps = epoint::ep_general(model->model);
        epoint::attach_vectors(model->model, eps);
        int k = 0;
        for (const auto* ep : {&eps.first, &eps.second}) {
            out[k].lambda_c = to_c(ep->lambda_c);
            out[k].e_c = to_c(ep->e_c);
            out[k].vec_upper = to_c(ep->vec->upper);
            out[k].vec_lower = to_c(ep->vec->lower);
            ++k;
        }
    });
}

epoint_status epoint_phases(const epoint_model* model, double* gamma, double* beta, double* xi) {
    EPOINT_REQUIRE(model && gamma && beta && xi);
    return guarded([&] {
        const auto ph = epoint::phases(model->model);
        *gamma = ph.gamma;
        *beta = ph.beta;
        *xi = ph.xi;
    });
}

epoint_status epoint_polarization(epoint_complex upper, epoint_complex lower, double* axial_ratio, int* handedness) {
    EPOINT_REQUIRE(axial_ratio && handedness);
    return guarded([&] {
        const auto d = epoint::polarization({from_c(upper), from_c(lower)});
        *axial_ratio = d.axial_ratio;
        *handedness = d.handedness == epoint::Handedness::plus    ? 1
                      : d.handedness == epoint::Handedness::minus ? -1
                                                                  : 0;
    });
}

epoint_status epoint_encircle(const epoint_model* model, epoint_complex center, double radius, int steps,
                              int* permutation, double* min_gap) {
    EPOINT_REQUIRE(model && permutation && min_gap);
    return guarded([&] {
        const auto t = epoint::encircle(model->model, from_c(center), radius, {steps, 1, false});
        *permutation = t.permutation == epoint::Permutation::swap ? 1 : 0;
        *min_gap = t.min_gap;
    });
}

epoint_status epoint_run(const char* command, const char* config_json, int has_seed, uint64_t seed,
                         epoint_report** out) {
    EPOINT_REQUIRE(command && config_json && out);
    *out = nullptr;
    try {
        auto result = epoint::run_command(command, config_json,
                                          has_seed ? std::optional<std::uint64_t>(seed) : std::nullopt);
        *out = new epoint_report{std::move(result.primary), std::move(result.secondary), result.message};
        const epoint_status s = to_c(result.status);
        g_last_error = s == EPOINT_OK ? std::string() : result.message;
        return s;
    } catch (const std::bad_alloc&) {
        return fail(EPOINT_E_INTERNAL, "out of memory");
    }
}

const char* epoint_report_primary(const epoint_report* report) { return report ? report->primary.c_str() : ""; }

const char* epoint_report_secondary(const epoint_report* report) { return report ? report->secondary.c_str() : ""; }

const char* epoint_report_message(const epoint_report* report) { return report ? report->message.c_str() : ""; }

void epoint_report_destroy(epoint_report* report) { delete report; }

}  // extern "C"
