// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "epoint/eplocate.hpp"
#include "epoint/epvector.hpp"
#include "epoint/errors.hpp"
#include "epoint/linalg.hpp"
#include "epoint/matkit.hpp"
#include "epoint/monodromy.hpp"
#include "epoint/sampling.hpp"
#include "epoint/spectral.hpp"

#include "support.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace epoint;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

// tolerances
constexpr double kRouteAgreement = 1e-9;
constexpr double kNilpotency = 1e-9;
constexpr double kSelfOrth = 1e-10;
constexpr double kFactorization = 1e-12;
constexpr double kReduction = 1e-10;
constexpr double kGroup = 1e-12;
constexpr double kRestore = 1e-8;
constexpr double kCircular = 1e-12;
constexpr double kLinear = 1e-9;
constexpr double kCharPoly = 1e-10;
constexpr double kEigResidual = 1e-10;
constexpr double kCrossOrth = 1e-10;

struct Outcome {
    bool ok = true;
    std::string detail;
};

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

double frob(const CMatrix2& m) {
    return std::sqrt(std::norm(m.a11) + std::norm(m.a12) + std::norm(m.a21) + std::norm(m.a22));
}

double vnorm(const CVector2& v) { return std::sqrt(std::norm(v.upper) + std::norm(v.lower)); }

std::vector<Model> draw_models(std::uint64_t seed, int n) {
    std::mt19937_64 rng(seed);
    std::vector<Model> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(random_model(rng));
    return out;
}

// Same model with both taus zeroed; nullopt if that commutes.
std::optional<Model> trs_version(const Model& m) {
    ModelParams p = m.params();
    p.tau0 = p.tau1 = 0.0;
    try {
        return Model{p};
    } catch (const Error&) {
        return std::nullopt;
    }
}

// Regimes: time-reversal symmetric, equal tau, phi0 = 0, general.
std::vector<Model> regime_models(std::uint64_t seed, int per_regime) {
    std::mt19937_64 rng(seed);
    std::vector<Model> out;
    while (static_cast<int>(out.size()) < per_regime)
        if (auto t = trs_version(random_model(rng))) out.push_back(*t);
    for (int i = 0; i < per_regime; ++i) out.push_back(random_equal_tau_model(rng));
    for (int i = 0; i < per_regime; ++i) out.push_back(random_special_model(rng));
    for (int i = 0; i < per_regime; ++i) out.push_back(random_model(rng));
    return out;
}

Outcome three_routes() {
    double worst = 0.0;
    int special_used = 0, failures = 0;
    std::mt19937_64 rng(1001);
    std::vector<Model> models = draw_models(1, 500);
    for (int i = 0; i < 100; ++i) models.push_back(random_special_model(rng));
    for (const Model& m : models) {
        const CrossValidation cv = cross_validate(m);
        worst = std::max(worst, cv.max_rel_dlambda);
        if (m.params().phi0 == 0.0) ++special_used;
        if (!(cv.max_rel_dlambda < kRouteAgreement)) ++failures;
    }
    return {failures == 0 && special_used > 0,
            std::to_string(models.size()) + " models (" + std::to_string(special_used) +
                " with the special route), max relative |dlambda| " + fmt("%.2e", worst)};
}

Outcome nilpotency() {
    double worst = 0.0;
    for (const Model& m : draw_models(2, 500)) {
        const EPPair g = ep_general(m), n = ep_numerical(m);
        for (const EPSolution* ep : {&g.first, &g.second, &n.first, &n.second}) {
            const CMatrix2 h = build_hamiltonian(m, ep->lambda_c);
            const CMatrix2 a = h - ep->e_c * CMatrix2::identity();
            worst = std::max(worst, frob(a * a) / std::max(1.0, std::pow(frob(h), 2)));
        }
    }
    return {worst < kNilpotency, "500 models, max ||(H - e_c)^2||_F / max(1, ||H||_F^2) " + fmt("%.2e", worst)};
}

Outcome self_orthogonality_all() {
    double worst = 0.0;
    const std::vector<Model> models = regime_models(3, 125);
    for (const Model& m : models) {
        EPPair eps = ep_general(m);
        attach_vectors(m, eps);
        for (const EPSolution* ep : {&eps.first, &eps.second}) {
            const CVector2 r = *ep->vec;
            const CVector2 l = ep_left_vector(m, *ep);
            worst = std::max(worst, std::abs(bilinear(l, r)) / (vnorm(l) * vnorm(r)));
        }
    }
    // closed-form special pair
    for (double tau = -3.0; tau < 3.0; tau += 0.37)
        for (Branch b : {Branch::plus, Branch::minus}) {
            const SpecialVectors s = ep_vector_special(tau, b);
            worst = std::max(worst, std::abs(bilinear(s.left, s.right)));
        }
    return {worst < kSelfOrth, std::to_string(models.size()) + " models over four regimes, max |l.r| " + fmt("%.2e", worst)};
}

Outcome factorization() {
    double worst = 0.0, explicit_form = 0.0;
    for (const Model& m : draw_models(4, 500)) {
        const CMatrix2 direct = make_unitary(m.params().phi0, m.params().tau0).adjoint() *
                                make_unitary(m.params().phi1, m.params().tau1);
        explicit_form = std::max(explicit_form, max_abs_diff(u0_dagger_u1(m), direct));
        worst = std::max(worst, max_abs_diff(reconstruct_u0_dagger_u1(phases(m)), direct));
    }
    return {worst < kFactorization && explicit_form < kFactorization,
            "500 models, max entry error " + fmt("%.2e", worst) + " (explicit product " + fmt("%.2e", explicit_form) + ")"};
}

// Smaller defect of the two possible sign assignments.
double pair_defect(const Model& m, const CVector2& plus_ref, const CVector2& minus_ref) {
    const CVector2 p = ep_vector_general(m, Branch::plus).vec, n = ep_vector_general(m, Branch::minus).vec;
    const double same = std::max(collinearity_defect(p, plus_ref), collinearity_defect(n, minus_ref));
    const double swapped = std::max(collinearity_defect(p, minus_ref), collinearity_defect(n, plus_ref));
    return std::min(same, swapped);
}

Outcome reduction_chain() {
    const double eps1 = 1.3, eps2 = -0.4, om1 = 0.9, om2 = -1.6;
    double d_phi0 = 0.0, d_equal = 0.0, d_tau0 = 0.0, d_trs = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const double a = -2.9 + 1.6 * i, b = -2.7 + 1.5 * j;
            // phi0 = 0: Eq. (9) form with tau = tau1
            {
                const Model m{{eps1, eps2, om1, om2, 0.0, 0.8, a, b}};
                d_phi0 = std::max(d_phi0, pair_defect(m, ep_vector_special(b, Branch::plus).right,
                                                      ep_vector_special(b, Branch::minus).right));
            }
            // tau0 = tau1 = b, phi0 != phi1
            {
                const Model m{{eps1, eps2, om1, om2, a, b, a + 0.9, b}};
                d_equal = std::max(d_equal, pair_defect(m, ep_vector_special(b, Branch::plus).right,
                                                        ep_vector_special(b, Branch::minus).right));
            }
            // tau0 = 0: upper +-i cos xi -+ cos(2 phi0) sin xi over real lower 1 -+ sin(2 phi0) sin xi
            {
                const Model m{{eps1, eps2, om1, om2, a, 0.0, a + 1.1, b}};
                const double xi = phases(m).xi, c2 = std::cos(2 * a), s2 = std::sin(2 * a);
                const CVector2 plus{kI * std::cos(xi) - c2 * std::sin(xi), 1.0 - s2 * std::sin(xi)};
                const CVector2 minus{-kI * std::cos(xi) + c2 * std::sin(xi), 1.0 + s2 * std::sin(xi)};
                d_tau0 = std::max(d_tau0, pair_defect(m, plus, minus));
            }
            // tau0 = tau1 = 0: Eq. (1)
            {
                const Model m{{eps1, eps2, om1, om2, a, 0.0, b + 0.45, 0.0}};
                d_trs = std::max(d_trs, pair_defect(m, ep_vector_symmetric(Branch::plus), ep_vector_symmetric(Branch::minus)));
            }
        }
    const double worst = std::max({d_phi0, d_equal, d_tau0, d_trs});
    return {worst < kReduction, "16-point grids, max defect: phi0=0 " + fmt("%.1e", d_phi0) + ", tau0=tau1 " +
                                    fmt("%.1e", d_equal) + ", tau0=0 " + fmt("%.1e", d_tau0) + ", both taus 0 " +
                                    fmt("%.1e", d_trs)};
}

Outcome group_relation() {
    double worst = 0.0;
    for (int i = 0; i < 32; ++i)
        for (int j = 0; j < 32; ++j) {
            const double phi = -kPi + 2 * kPi * i / 32, tau = -kPi + 2 * kPi * j / 32;
            for (Branch b : {Branch::plus, Branch::minus}) worst = std::max(worst, group_eigenrelation_check(phi, tau, b));
        }
    return {worst < kGroup, "32x32 grid, both signs, max residual " + fmt("%.2e", worst)};
}

Outcome monodromy() {
    int bad = 0, loops = 0;
    double worst_restore = 0.0;
    std::string first_error;
    for (const Model& m : draw_models(7, 100)) {
        try {
            const EPPair eps = ep_general(m);
            const cplx lp = eps.first.lambda_c, lm = eps.second.lambda_c;
            const double d = std::abs(lp - lm);
            const cplx mid = 0.5 * (lp + lm);
            auto expect = [&](cplx c, double r, Permutation want) {
                ++loops;
                if (encircle(m, c, r).permutation != want) ++bad;
            };
            expect(lp, default_radius(eps, Branch::plus), Permutation::swap);
            expect(lm, default_radius(eps, Branch::minus), Permutation::swap);
            expect(mid, 0.3 * d, Permutation::identity);
            expect(mid + 2.0 * d, 0.5 * d, Permutation::identity);
            expect(mid, d, Permutation::identity);
            for (Branch b : {Branch::plus, Branch::minus}) {
                const DoubleLoopReport dl = double_loop_check(m, b);
                worst_restore = std::max(worst_restore, dl.max_rel_deviation);
                if (!dl.restored || dl.first.permutation != Permutation::swap) ++bad;
            }
        } catch (const Error& e) {
            ++bad;
            if (first_error.empty()) first_error = e.what();
        }
    }
    return {bad == 0 && worst_restore < kRestore,
            "100 models, " + std::to_string(loops) + " loops + 200 double loops, " + std::to_string(bad) +
                " wrong, max double-loop deviation " + fmt("%.1e", worst_restore) +
                (first_error.empty() ? "" : "; " + first_error)};
}

Outcome polarization_limits() {
    bool ok = true;
    double circ = 0.0, lin = 0.0, axial_lo = 1.0, axial_hi = 0.0;
    for (Branch b : {Branch::plus, Branch::minus}) {
        const PolarizationDescriptor c = polarization(ep_vector_symmetric(b));
        ok = ok && c.kind == PolarizationKind::circular;
        circ = std::max(circ, std::abs(std::abs(c.s3) / c.s0 - 1.0));
    }
    const Model linear{testing::linear_limit_params(0.5, 0.6)};
    const Model generic{{0.7, -1.3, 1.9, 0.4, 0.9, 0.35, -0.6, 1.7}};
    for (Branch b : {Branch::plus, Branch::minus}) {
        const GeneralVector g = ep_vector_general(linear, b);
        const PolarizationDescriptor p = polarization(g.vec);
        ok = ok && p.kind == PolarizationKind::linear;
        lin = std::max(lin, std::abs(p.s3) / p.s0);

        const PolarizationDescriptor e = polarization(ep_vector_general(generic, b).vec);
        ok = ok && e.kind == PolarizationKind::elliptic;
        axial_lo = std::min(axial_lo, e.axial_ratio);
        axial_hi = std::max(axial_hi, e.axial_ratio);
    }
    ok = ok && circ < kCircular && lin < kLinear && axial_lo > kPolTol && axial_hi < 1.0 - kPolTol;
    return {ok, "circular |S3/S0 - 1| " + fmt("%.1e", circ) + ", linear-limit |S3|/S0 " + fmt("%.1e", lin) +
                    ", generic axial ratio in [" + fmt("%.4f", axial_lo) + ", " + fmt("%.4f", axial_hi) + "]"};
}

Outcome eigensolver_oracle() {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-1.0, 1.0), lg(-3.0, 3.0);
    double char_poly = 0.0, residual = 0.0, cross = 0.0;
    for (int i = 0; i < 500; ++i) {
        const double s = std::pow(10.0, lg(rng));
        auto draw = [&] { return s * cplx(u(rng), u(rng)); };
        const CMatrix2 h{draw(), draw(), draw(), draw()};
        const double scale = frob(h);
        const Spectrum sp = eigen2(h);
        const cplx tr = h.a11 + h.a22, det = h.a11 * h.a22 - h.a12 * h.a21;
        for (cplx e : {sp.e1, sp.e2}) char_poly = std::max(char_poly, std::abs(e * e - tr * e + det) / (scale * scale));
        residual = std::max(residual, vnorm(h * sp.r1 - sp.e1 * sp.r1) / (scale * vnorm(sp.r1)));
        residual = std::max(residual, vnorm(h * sp.r2 - sp.e2 * sp.r2) / (scale * vnorm(sp.r2)));
        cross = std::max(cross, std::abs(bilinear(sp.l1, sp.r2)) / (vnorm(sp.l1) * vnorm(sp.r2)));
        cross = std::max(cross, std::abs(bilinear(sp.l2, sp.r1)) / (vnorm(sp.l2) * vnorm(sp.r1)));
    }
    return {char_poly < kCharPoly && residual < kEigResidual && cross < kCrossOrth,
            "500 matrices, char-poly " + fmt("%.1e", char_poly) + ", residual " + fmt("%.1e", residual) +
                ", cross-orthogonality " + fmt("%.1e", cross)};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome cli_determinism() {
    const fs::path dir = fs::temp_directory_path() / ("epoint_accept_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const fs::path fixtures = EPOINT_FIXTURES_DIR;
    struct Job {
        const char* command;
        const char* fixture;
    };
    const Job jobs[] = {{"find-ep", "special.json"},      {"find-ep", "general.json"},  {"vector", "general.json"},
                        {"vector", "circular.json"},      {"vector", "linear.json"},    {"sweep", "sweep_tau.json"},
                        {"sweep", "sweep_grid.json"},     {"encircle", "encircle_plus.json"},
                        {"encircle", "encircle_origin.json"}};
    int mismatches = 0, failures = 0, runs = 0;
    for (const Job& job : jobs) {
        std::string out[2];
        for (int k = 0; k < 2; ++k) {
            const fs::path o = dir / ("out" + std::to_string(k)), s = dir / ("summary" + std::to_string(k));
            fs::remove(o);
            fs::remove(s);
            const std::string cmd = std::string("\"") + EPOINT_CLI_PATH + "\" " + job.command + " --config \"" +
                                    (fixtures / job.fixture).string() + "\" --out \"" + o.string() + "\"" +
                                    (std::string(job.command) == "encircle" ? " --summary \"" + s.string() + "\"" : "") +
                                    " 2>/dev/null";
            const int raw = std::system(cmd.c_str());
            if (!WIFEXITED(raw) || WEXITSTATUS(raw) != 0) ++failures;
            out[k] = slurp(o) + "\x1f" + slurp(s);
        }
        ++runs;
        if (out[0] != out[1] || out[0].size() < 2) ++mismatches;
    }
    fs::remove_all(dir);
    return {mismatches == 0 && failures == 0, std::to_string(runs) + " fixture runs x2, " + std::to_string(mismatches) +
                                                  " differing, " + std::to_string(failures) + " nonzero exits"};
}

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "three-route EP agreement", 2.0, three_routes},
        {2, "Jordan-block nilpotency", 1.0, nilpotency},
        {3, "self-orthogonality at EPs", 1.0, self_orthogonality_all},
        {4, "unitary factorization", 1.0, factorization},
        {5, "eigenvector reduction chain", 1.0, reduction_chain},
        {6, "group eigenrelation", 1.0, group_relation},
        {7, "monodromy dichotomy", 10.0, monodromy},
        {8, "polarization limits", 1.0, polarization_limits},
        {9, "eigensolver oracle", 1.0, eigensolver_oracle},
        {10, "CLI determinism", 5.0, cli_determinism},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < c.budget_s;
        const bool pass = o.ok && in_time;
        if (!pass) ++failed;
        std::printf("[%s] %2d %s: %s; %.3f s (budget %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                    secs, c.budget_s, in_time ? "" : ", exceeded");
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
