#include "epoint/commands.hpp"
#include "epoint/eplocate.hpp"
#include "epoint/epvector.hpp"
#include "epoint/errors.hpp"
#include "epoint/monodromy.hpp"
#include "epoint/sampling.hpp"
#include "epoint/serialize.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <thread>

namespace epoint {

using nlohmann::json;

const char* to_string(Status s) noexcept {
    switch (s) {
        case Status::ok: return "ok";
        case Status::config_error: return "config_error";
        case Status::degenerate_model: return "degenerate_model";
        case Status::disagreement: return "disagreement";
        case Status::path_failure: return "path_failure";
        case Status::precondition: return "precondition";
        case Status::internal_error: return "internal_error";
    }
    return "unknown";
}

namespace {

Status status_of(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::invalid_argument:
        case ErrorKind::config: return Status::config_error;
        case ErrorKind::degenerate_model: return Status::degenerate_model;
        case ErrorKind::precondition: return Status::precondition;
        case ErrorKind::path_degeneracy:
        case ErrorKind::tracking_failure: return Status::path_failure;
    }
    return Status::internal_error;
}

CommandResult failure(Status s, std::string message) {
    CommandResult r;
    r.status = s;
    r.message = std::move(message);
    return r;
}

int line_of(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, value] : j.items())
        if (!ok.contains(key)) throw Error(ErrorKind::config, where + ": unknown key \"" + key + "\"");
}

int int_field(const json& j, const char* key, int fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number_integer()) throw Error(ErrorKind::config, std::string("\"") + key + "\" must be an integer");
    return j.at(key).get<int>();
}

double num_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw Error(ErrorKind::config, std::string("\"") + key + "\" must be a number");
    return j.at(key).get<double>();
}

json base_report(const char* command, const RunConfig& cfg) {
    return json{{"schema", kSchema}, {"command", command}, {"seed", cfg.seed}, {"input", to_json(cfg.model)}};
}

json pair_json(const EPPair& p) { return json{{"plus", to_json(p.first)}, {"minus", to_json(p.second)}}; }

const char* regime(const Model& m) {
    const auto& p = m.params();
    if (trs_defect(m) == 0.0) return "time_reversal_symmetric";
    if (p.tau0 == p.tau1) return "equal_tau";
    return "general";
}

}  // namespace

RunConfig parse_config(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::config, "config: line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
    }
    try {
        if (!j.is_object()) throw Error(ErrorKind::config, "config: line 1: top level must be a JSON object");
        check_keys(j, {"model", "seed", "property_sweep", "sweep", "encircle"}, "config");
        if (!j.contains("model")) throw Error(ErrorKind::config, "config: missing \"model\"");

        RunConfig cfg;
        cfg.model = params_from_json(j.at("model"));
        if (j.contains("seed")) {
            if (!j.at("seed").is_number_unsigned()) throw Error(ErrorKind::config, "config: \"seed\" must be a non-negative integer");
            cfg.seed = j.at("seed").get<std::uint64_t>();
        }
        if (j.contains("property_sweep")) {
            const json& ps = j.at("property_sweep");
            check_keys(ps, {"draws"}, "property_sweep");
            cfg.property_draws = int_field(ps, "draws", 0);
            if (cfg.property_draws < 0) throw Error(ErrorKind::config, "property_sweep: draws must be >= 0");
        }
        if (j.contains("sweep")) {
            const json& sw = j.at("sweep");
            check_keys(sw, {"axes"}, "sweep");
            if (!sw.contains("axes") || !sw.at("axes").is_array())
                throw Error(ErrorKind::config, "sweep: \"axes\" must be an array");
            for (const json& a : sw.at("axes")) {
                check_keys(a, {"param", "start", "stop", "count"}, "sweep axis");
                GridAxis axis;
                if (!a.contains("param") || !a.at("param").is_string())
                    throw Error(ErrorKind::config, "sweep axis: \"param\" must be a string");
                axis.param = a.at("param").get<std::string>();
                axis.start = num_field(a, "start");
                axis.stop = num_field(a, "stop");
                axis.count = int_field(a, "count", 0);
                cfg.axes.push_back(axis);
            }
        }
        if (j.contains("encircle")) {
            const json& e = j.at("encircle");
            check_keys(e, {"around", "center", "radius", "steps", "turns", "clockwise"}, "encircle");
            if (e.contains("around")) cfg.loop.around = e.at("around").get<std::string>();
            if (e.contains("center")) {
                const cplx c = complex_from_json(e.at("center"));
                cfg.loop.center_re = c.real();
                cfg.loop.center_im = c.imag();
            }
            if (e.contains("radius")) cfg.loop.radius = num_field(e, "radius");
            cfg.loop.steps = int_field(e, "steps", kDefaultSteps);
            cfg.loop.turns = int_field(e, "turns", 1);
            if (e.contains("clockwise")) cfg.loop.clockwise = e.at("clockwise").get<bool>();
        }
        return cfg;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::config, std::string("config: ") + e.what());
    }
}

CommandResult cmd_find_ep(const RunConfig& cfg) {
    const Model model(cfg.model);
    const CrossValidation cv = cross_validate(model);

    json report = base_report("find-ep", cfg);
    report["model"] = to_json(model.params());
    report["trs_defect"] = trs_defect(model);
    json routes = json::object();
    for (const EPPair& p : cv.solutions) routes[to_string(p.first.route)] = pair_json(p);
    report["routes"] = routes;

    json agreement{{"max_rel_dlambda", cv.max_rel_dlambda},
                   {"max_nilpotency", cv.max_nilpotency},
                   {"max_discriminant", cv.max_discriminant},
                   {"route_tolerance", kRouteTol},
                   {"nilpotency_tolerance", kNilpTol},
                   {"ep_collision", cv.ep_collision},
                   {"ok", cv.ok}};
    for (const auto& c : cv.comparisons) agreement["rel_dlambda_vs_numerical"][to_string(c.route)] = c.max_rel_dlambda;
    if (!cv.diagnostic.empty()) agreement["diagnostic"] = cv.diagnostic;
    report["agreement"] = agreement;

    bool ok = cv.ok;
    if (cfg.property_draws > 0) {
        std::mt19937_64 rng(cfg.seed);
        double worst_gap = 0.0, worst_nilp = 0.0;
        int failures = 0;
        for (int i = 0; i < cfg.property_draws; ++i) {
            const CrossValidation r = cross_validate(random_model(rng));
            worst_gap = std::max(worst_gap, r.max_rel_dlambda);
            worst_nilp = std::max(worst_nilp, r.max_nilpotency);
            if (!r.ok) ++failures;
        }
        report["property_sweep"] = json{{"draws", cfg.property_draws},
                                        {"max_rel_dlambda", worst_gap},
                                        {"max_nilpotency", worst_nilp},
                                        {"failures", failures}};
        ok = ok && failures == 0;
    }

    CommandResult r;
    r.status = ok ? Status::ok : Status::disagreement;
    r.primary = dump(report);
    if (!ok) r.message = cv.diagnostic.empty() ? "property sweep found disagreeing routes" : cv.diagnostic;
    return r;
}

CommandResult cmd_vector(const RunConfig& cfg) {
    const Model model(cfg.model);
    EPPair eps = ep_general(model);

    json report = base_report("vector", cfg);
    report["model"] = to_json(model.params());
    report["regime"] = regime(model);
    report["trs_defect"] = trs_defect(model);
    report["phases"] = to_json(phases(model));

    bool ok = true;
    json branches = json::object();
    for (EPSolution* ep : {&eps.first, &eps.second}) {
        const VectorPairing pv = pair_vector(model, *ep);
        ep->vec = pv.vector.vec;
        const CVector2 left = ep_left_vector(model, *ep);
        const double self_orth = std::abs(self_orthogonality(left, unit(pv.vector.vec)));
        const bool residual_ok = pv.residual < 1e-8;
        const bool orth_ok = self_orth < 1e-10;
        ok = ok && residual_ok && orth_ok;
        branches[to_string(ep->branch)] =
            json{{"lambda_c", to_json(ep->lambda_c)},
                 {"e_c", to_json(ep->e_c)},
                 {"vector_sign", to_string(pv.vector_sign)},
                 {"vector", to_json(pv.vector.vec)},
                 {"lower_component_vanishes", pv.vector.lower_vanishes},
                 {"form_defect", pv.vector.form_defect},
                 {"eigen_residual", pv.residual},
                 {"left_vector", to_json(left)},
                 {"self_orthogonality", self_orth},
                 {"nilpotency", nilpotency_residual(model, *ep)},
                 {"polarization", to_json(polarization(pv.vector.vec))},
                 {"checks_ok", residual_ok && orth_ok}};
    }
    report["branches"] = branches;

    CommandResult r;
    r.status = ok ? Status::ok : Status::disagreement;
    r.primary = dump(report);
    if (!ok) r.message = "eigenvector checks failed at an EP";
    return r;
}

namespace {

const std::set<std::string> kSweepParams{"tau0", "tau1", "phi0", "phi1", "tau"};

std::vector<double> linspace(const GridAxis& a) {
    std::vector<double> v(static_cast<std::size_t>(a.count));
    for (int i = 0; i < a.count; ++i)
        v[static_cast<std::size_t>(i)] = a.count == 1 ? a.start : a.start + (a.stop - a.start) * i / (a.count - 1);
    return v;
}

void set_param(ModelParams& p, const std::string& name, double value) {
    if (name == "tau0") p.tau0 = value;
    else if (name == "tau1") p.tau1 = value;
    else if (name == "phi0") p.phi0 = value;
    else if (name == "phi1") p.phi1 = value;
    else if (name == "tau") p.tau0 = p.tau1 = value;
}

std::string sweep_row(const ModelParams& p) {
    try {
        const Model model(p);
        const EPPair eps = ep_general(model);
        const VectorPairing vp = pair_vector(model, eps.first);
        const VectorPairing vm = pair_vector(model, eps.second);
        const PolarizationDescriptor pp = polarization(vp.vector.vec);
        const PolarizationDescriptor pm = polarization(vm.vector.vec);
        std::string row = "ok";
        for (double x : {eps.first.lambda_c.real(), eps.first.lambda_c.imag(), eps.second.lambda_c.real(),
                         eps.second.lambda_c.imag(), vp.vector.phases.xi})
            row += "," + format_double(x);
        row += "," + format_double(pp.axial_ratio) + "," + to_string(pp.handedness);
        row += "," + format_double(pm.axial_ratio) + "," + to_string(pm.handedness);
        return row;
    } catch (const Error& e) {
        return std::string(to_string(e.kind())) + ",,,,,,,,,";
    }
}

}  // namespace

CommandResult cmd_sweep(const RunConfig& cfg) {
    if (cfg.axes.empty() || cfg.axes.size() > 2)
        return failure(Status::config_error, "sweep: expected one or two grid axes");
    for (const GridAxis& a : cfg.axes) {
        if (!kSweepParams.contains(a.param))
            return failure(Status::config_error, "sweep: unknown parameter \"" + a.param + "\"");
        if (a.count < 1) return failure(Status::config_error, "sweep: grid for \"" + a.param + "\" is empty");
        if (!std::isfinite(a.start) || !std::isfinite(a.stop))
            return failure(Status::config_error, "sweep: non-finite grid bounds");
    }

    const std::vector<double> g0 = linspace(cfg.axes[0]);
    const std::vector<double> g1 = cfg.axes.size() > 1 ? linspace(cfg.axes[1]) : std::vector<double>{0.0};
    const std::size_t cells = g0.size() * g1.size();

    std::vector<ModelParams> grid(cells, cfg.model);
    for (std::size_t i = 0; i < g0.size(); ++i)
        for (std::size_t k = 0; k < g1.size(); ++k) {
            ModelParams& p = grid[i * g1.size() + k];
            set_param(p, cfg.axes[0].param, g0[i]);
            if (cfg.axes.size() > 1) set_param(p, cfg.axes[1].param, g1[k]);
        }

    // cells are independent; rows are assembled in grid order afterwards
    std::vector<std::string> rows(cells);
    const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < std::min(workers, cells); ++w)
            pool.emplace_back([&, w] {
                for (std::size_t c = w; c < cells; c += workers) rows[c] = sweep_row(grid[c]);
            });
    }

    std::string csv = "index";
    for (const GridAxis& a : cfg.axes) csv += "," + a.param;
    csv += ",status,re_lambda_plus,im_lambda_plus,re_lambda_minus,im_lambda_minus,xi,"
           "axial_ratio_plus,handedness_plus,axial_ratio_minus,handedness_minus\n";
    for (std::size_t i = 0; i < g0.size(); ++i)
        for (std::size_t k = 0; k < g1.size(); ++k) {
            const std::size_t c = i * g1.size() + k;
            csv += std::to_string(c) + "," + format_double(g0[i]);
            if (cfg.axes.size() > 1) csv += "," + format_double(g1[k]);
            csv += "," + rows[c] + "\n";
        }

    CommandResult r;
    r.primary = std::move(csv);
    return r;
}

CommandResult cmd_encircle(const RunConfig& cfg) {
    const Model model(cfg.model);
    const LoopSpec& spec = cfg.loop;

    cplx center;
    double radius = 0.0;
    if (spec.around) {
        if (*spec.around != "plus" && *spec.around != "minus")
            return failure(Status::config_error, "encircle: \"around\" must be \"plus\" or \"minus\"");
        if (spec.center_re) return failure(Status::config_error, "encircle: give either \"around\" or \"center\"");
        const EPPair eps = ep_general(model);
        const Branch which = *spec.around == "plus" ? Branch::plus : Branch::minus;
        center = which == Branch::plus ? eps.first.lambda_c : eps.second.lambda_c;
        radius = spec.radius.value_or(default_radius(eps, which));
    } else if (spec.center_re) {
        if (!spec.radius) return failure(Status::config_error, "encircle: \"radius\" is required with \"center\"");
        center = {*spec.center_re, *spec.center_im};
        radius = *spec.radius;
    } else {
        return failure(Status::config_error, "encircle: loop geometry missing (\"around\" or \"center\")");
    }

    const LoopTrace t = encircle(model, center, radius, {spec.steps, spec.turns, spec.clockwise});
    json summary = summary_json(t);
    summary["command"] = "encircle";
    summary["seed"] = cfg.seed;
    summary["model"] = to_json(model.params());
    summary["enclosed_eps"] = enclosed_eps(ep_general(model), center, radius);

    CommandResult r;
    r.primary = to_csv(t);
    r.secondary = dump(summary);
    return r;
}

CommandResult run_command(std::string_view command, std::string_view config_text,
                          std::optional<std::uint64_t> seed_override) {
    try {
        RunConfig cfg = parse_config(config_text);
        if (seed_override) cfg.seed = *seed_override;
        if (command == "find-ep") return cmd_find_ep(cfg);
        if (command == "vector") return cmd_vector(cfg);
        if (command == "sweep") return cmd_sweep(cfg);
        if (command == "encircle") return cmd_encircle(cfg);
        return failure(Status::config_error, "unknown command \"" + std::string(command) + "\"");
    } catch (const Error& e) {
        return failure(status_of(e.kind()), e.what());
    } catch (const std::exception& e) {
        return failure(Status::internal_error, e.what());
    }
}

}  // namespace epoint
