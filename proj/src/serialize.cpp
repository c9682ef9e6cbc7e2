#include "epoint/serialize.hpp"
#include "epoint/errors.hpp"

#include <array>
#include <cstdio>
#include <numbers>
#include <set>

namespace epoint {

using nlohmann::json;

std::string format_double(double x) {
    std::array<char, 40> buf{};
    std::snprintf(buf.data(), buf.size(), "%.17g", x);
    return buf.data();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json to_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

cplx complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_object() && j.contains("re") && j.contains("im") && j.at("re").is_number() && j.at("im").is_number())
        return {j.at("re").get<double>(), j.at("im").get<double>()};
    throw Error(ErrorKind::config, "expected a complex number {\"re\": x, \"im\": y}, got " + j.dump());
}

json to_json(const CVector2& v) { return json{{"upper", to_json(v.upper)}, {"lower", to_json(v.lower)}}; }

json to_json(const ModelParams& p) {
    return json{{"eps1", p.eps1}, {"eps2", p.eps2}, {"omega1", p.omega1}, {"omega2", p.omega2},
                {"phi0", p.phi0}, {"tau0", p.tau0}, {"phi1", p.phi1},     {"tau1", p.tau1}};
}

ModelParams params_from_json(const json& j) {
    if (!j.is_object()) throw Error(ErrorKind::config, "model must be a JSON object");

    static const std::array<const char*, 4> energies{"eps1", "eps2", "omega1", "omega2"};
    static const std::array<const char*, 4> angles{"phi0", "tau0", "phi1", "tau1"};
    std::set<std::string> known;
    for (const char* k : energies) known.insert(k);
    for (const char* k : angles) {
        known.insert(k);
        known.insert(std::string(k) + "_deg");
    }
    for (const auto& [key, value] : j.items())
        if (!known.contains(key)) throw Error(ErrorKind::config, "model: unknown key \"" + key + "\"");

    auto number = [&](const std::string& key) {
        const json& v = j.at(key);
        if (!v.is_number()) throw Error(ErrorKind::config, "model: \"" + key + "\" must be a number");
        return v.get<double>();
    };
    auto energy = [&](const char* key) {
        if (!j.contains(key)) throw Error(ErrorKind::config, std::string("model: missing \"") + key + "\"");
        return number(key);
    };
    auto angle = [&](const char* key) {
        const std::string deg = std::string(key) + "_deg";
        const bool rad = j.contains(key);
        const bool degs = j.contains(deg);
        if (rad && degs) throw Error(ErrorKind::config, "model: both \"" + std::string(key) + "\" and \"" + deg + "\" given");
        if (!rad && !degs) throw Error(ErrorKind::config, std::string("model: missing \"") + key + "\"");
        return rad ? number(key) : number(deg) * std::numbers::pi / 180.0;
    };

    ModelParams p;
    p.eps1 = energy("eps1");
    p.eps2 = energy("eps2");
    p.omega1 = energy("omega1");
    p.omega2 = energy("omega2");
    p.phi0 = angle("phi0");
    p.tau0 = angle("tau0");
    p.phi1 = angle("phi1");
    p.tau1 = angle("tau1");
    return p;
}

json to_json(const Spectrum& s) {
    json j{{"e1", to_json(s.e1)},
           {"e2", to_json(s.e2)},
           {"r1", to_json(s.r1)},
           {"r2", to_json(s.r2)},
           {"l1", to_json(s.l1)},
           {"l2", to_json(s.l2)},
           {"biorthogonal_ok", s.biorthogonal_ok}};
    // JSON has no infinity
    j["condition"] = std::isfinite(s.condition) ? json(s.condition) : json(nullptr);
    return j;
}

json to_json(const PhaseTriple& ph) { return json{{"gamma", ph.gamma}, {"beta", ph.beta}, {"xi", ph.xi}}; }

json to_json(const EPSolution& ep) {
    json j{{"branch", to_string(ep.branch)},
           {"lambda_c", to_json(ep.lambda_c)},
           {"e_c", to_json(ep.e_c)},
           {"route", to_string(ep.route)}};
    if (ep.vec) j["vec"] = to_json(*ep.vec);
    if (ep.phases) j["phases"] = to_json(*ep.phases);
    return j;
}

json to_json(const PolarizationDescriptor& pd) {
    return json{{"kind", to_string(pd.kind)},
                {"handedness", to_string(pd.handedness)},
                {"axial_ratio", pd.axial_ratio},
                {"orientation", pd.orientation},
                {"stokes", json::array({pd.s0, pd.s1, pd.s2, pd.s3})}};
}

json summary_json(const LoopTrace& t) {
    return json{{"schema", kSchema},
                {"center", to_json(t.center)},
                {"radius", t.radius},
                {"steps", t.steps},
                {"turns", t.turns},
                {"permutation", to_string(t.permutation)},
                {"min_gap", t.min_gap},
                {"refinements", t.refinements}};
}

std::string to_csv(const LoopTrace& t) {
    std::string out = "step,re_lambda,im_lambda,re_E1,im_E1,re_E2,im_E2\n";
    for (std::size_t k = 0; k < t.lambdas.size(); ++k) {
        out += std::to_string(k);
        for (double x : {t.lambdas[k].real(), t.lambdas[k].imag(), t.branch1[k].real(), t.branch1[k].imag(),
                         t.branch2[k].real(), t.branch2[k].imag()}) {
            out += ',';
            out += format_double(x);
        }
        out += '\n';
    }
    return out;
}

}  // namespace epoint
