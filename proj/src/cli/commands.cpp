#include "nel/cli/commands.hpp"

#include <cmath>
#include <numbers>

#include "nel/chaos/abc_flow.hpp"
#include "nel/chaos/chaos_io.hpp"
#include "nel/chaos/diagnostics.hpp"
#include "nel/chaos/ginzburg_landau.hpp"
#include "nel/chaos/poincare.hpp"
#include "nel/chaos/sine_gordon.hpp"
#include "nel/core/error.hpp"
#include "nel/fields/random.hpp"
#include "nel/fields/snapshot_io.hpp"
#include "nel/integrable/darboux.hpp"
#include "nel/integrable/lax.hpp"
#include "nel/spectra/shear.hpp"
#include "nel/spectra/spectra_io.hpp"
#include "nel/spectra/tracking.hpp"

namespace nel::cli {
namespace {

using json = nlohmann::ordered_json;
using Models = std::vector<std::string>;

ParamSpec real(std::string name, std::string def, Models models = {}) {
    return {std::move(name), ParamType::Real, std::move(def), false, {}, std::move(models), ""};
}
ParamSpec required_real(std::string name, Models models = {}) {
    return {std::move(name), ParamType::Real, std::nullopt, true, {}, std::move(models), ""};
}
ParamSpec optional_real(std::string name, Models models = {}) {
    return {std::move(name), ParamType::Real, std::nullopt, false, {}, std::move(models), ""};
}
ParamSpec integer(std::string name, std::string def, Models models = {}) {
    return {std::move(name), ParamType::Integer, std::move(def), false, {}, std::move(models), ""};
}
ParamSpec required_integer(std::string name, Models models = {}) {
    return {std::move(name), ParamType::Integer, std::nullopt, true, {}, std::move(models), ""};
}
ParamSpec choice(std::string name, std::optional<std::string> def, std::vector<std::string> choices, Models models = {}) {
    const bool req = !def.has_value();
    return {std::move(name), ParamType::Choice, std::move(def), req, std::move(choices), std::move(models), ""};
}
ParamSpec list(std::string name, std::string def, Models models = {}) {
    return {std::move(name), ParamType::RealList, std::move(def), false, {}, std::move(models), ""};
}
ParamSpec required_text(std::string name, Models models = {}) {
    return {std::move(name), ParamType::Text, std::nullopt, true, {}, std::move(models), ""};
}

void add_common(CommandSpec& spec, const std::string& format) {
    spec.params.push_back({"seed", ParamType::Unsigned, "0", false, {}, {}, "seed for random inputs"});
    spec.params.push_back(required_text("out"));
    spec.params.push_back(choice("format", format, {format}));
}

void add_sg_params(CommandSpec& spec, const Models& m, bool with_eps_a = true) {
    auto& p = spec.params;
    p.push_back(real("c", "0.9", m));
    if (with_eps_a) {
        p.push_back(real("a", "1", m));
        p.push_back(real("eps", "0", m));
    }
    p.push_back(choice("parity", "even", {"even", "odd"}, m));
    p.push_back(integer("modes", "128", m));
    p.push_back(choice("forcing", "cos_t", {"cos_t", "quasiperiodic"}, m));
    p.push_back(real("force-alpha", "0", m));
    p.push_back(real("force-mu", "2", m));
    for (int n = 1; n <= 4; ++n) {
        p.push_back(real("beta" + std::to_string(n), "0", m));
        p.push_back(real("omega" + std::to_string(n), "0", m));
        p.push_back(real("phase" + std::to_string(n), "0", m));
    }
    for (int n = 1; n <= 3; ++n) p.push_back(real("vartheta" + std::to_string(n), "0", m));
    p.push_back(list("u0", "0", m));
    p.push_back(list("ut0", "0", m));
}

void add_gl_params(CommandSpec& spec, bool dernls, bool pnls) {
    auto& p = spec.params;
    Models both;
    if (dernls) both.push_back("dernls");
    if (pnls) both.push_back("pnls");
    p.push_back(real("eps", "0", both));
    p.push_back(integer("modes", "64", both));
    if (dernls) {
        p.push_back(real("mu", "6", {"dernls"}));
        p.push_back(integer("kcut", "32", {"dernls"}));
        p.push_back(real("gamma", "0", {"dernls"}));
        p.push_back(choice("q0", "limit-cycle", {"limit-cycle", "coeffs"}, {"dernls"}));
    }
    if (pnls) {
        p.push_back(real("omega", "0.75", {"pnls"}));
        p.push_back(real("alpha", "1", {"pnls"}));
        p.push_back(real("beta", "1", {"pnls"}));
    }
    p.push_back(list("q0-re", "0.75", both));
    p.push_back(list("q0-im", "0", both));
}

void add_abc_params(CommandSpec& spec, const Models& m) {
    for (const char* k : {"abc-a", "abc-b", "abc-c"}) spec.params.push_back(real(k, "1", m));
}

std::vector<CommandSpec> build_specs() {
    std::vector<CommandSpec> specs;
    {
        CommandSpec s{"spectrum", "eigenvalues of one sub-operator class", {}, std::nullopt};
        s.params = {required_real("alpha"), real("gamma", "0.5"), required_real("nu"), required_integer("k1"),
                    required_integer("k2"),  integer("trunc", "200")};
        add_common(s, "csv");
        specs.push_back(std::move(s));
    }
    {
        CommandSpec s{"nustar", "critical viscosity of the shear, with N vs 2N checks", {}, std::nullopt};
        s.params = {required_real("alpha"), real("gamma", "0.5"), real("tol", "1e-6"), integer("trunc", "100"),
                    optional_real("nu")};
        add_common(s, "jsonl");
        specs.push_back(std::move(s));
    }
    {
        CommandSpec s{"zvtrack", "zero-viscosity tracking and limit classification of one class", {}, std::nullopt};
        s.params = {required_real("alpha"),      real("gamma", "0.5"),   required_integer("k1"),
                    required_integer("k2"),      real("nu-max", "0.1"),  real("nu-min", "1e-5"),
                    integer("steps", "41"),      integer("trunc", "48"), real("tol", "1e-2")};
        add_common(s, "jsonl");
        specs.push_back(std::move(s));
    }
    {
        CommandSpec s{"laxcheck", "transported-eigenfield compatibility check", {}, "dim"};
        s.params = {choice("dim", "2d", {"2d", "3d"}),
                    real("alpha", "0.7", {"2d"}),
                    integer("n", "64", {"2d"}),
                    integer("n", "32", {"3d"}),
                    real("dt", "1e-3", {"2d"}),
                    real("dt", "0.01", {"3d"}),
                    real("t-end", "1", {"2d"}),
                    real("t-end", "0.5", {"3d"}),
                    integer("degree", "4", {"2d"}),
                    integer("degree", "2", {"3d"}),
                    real("omega-amp", "0.1", {"2d"}),
                    real("omega-amp", "1", {"3d"}),
                    real("phi-amp", "1"),
                    choice("wrong-sign", "no", {"no", "yes"}, {"2d"}),
                    choice("velocity", "curl", {"curl", "abc"}, {"3d"}),
                    real("modulation", "0.5", {"3d"})};
        add_abc_params(s, {"3d"});
        add_common(s, "jsonl");
        specs.push_back(std::move(s));
    }
    {
        CommandSpec s{"darboux", "Darboux transformation and its residual checks", {}, "example"};
        s.params = {choice("example", "x-only", {"x-only", "snapshots"}), integer("n", "128", {"x-only"}),
                    optional_real("eta")};
        for (const char* k : {"omega-file", "psi-file", "p-file", "f-file", "F-file"})
            s.params.push_back(required_text(k, {"snapshots"}));
        add_common(s, "jsonl");
        specs.push_back(std::move(s));
    }
    const Models all{"sg", "dernls", "pnls", "abc"};
    {
        CommandSpec s{"simulate", "integrate one model and record its trajectory", {}, "model"};
        s.params = {choice("model", std::nullopt, all), real("t-end", "10"), real("dt", "0.01"),
                    integer("record-every", "100")};
        add_sg_params(s, {"sg"});
        add_gl_params(s, true, true);
        add_abc_params(s, {"sg", "abc"});
        for (int n = 1; n <= 3; ++n) s.params.push_back(real("theta" + std::to_string(n), std::to_string(0.1 * n), {"abc"}));
        add_common(s, "jsonl");
        specs.push_back(std::move(s));
    }
    {
        CommandSpec s{"poincare", "period-map (sg) or phase-section return-map (dernls) samples", {}, "model"};
        s.params = {choice("model", std::nullopt, {"sg", "dernls"}), integer("n-iterates", "20"),
                    integer("steps-per-period", "200", {"sg"}), real("dt", "0.005", {"dernls"}),
                    real("t-max", "1000", {"dernls"})};
        add_sg_params(s, {"sg"});
        add_gl_params(s, true, false);
        add_abc_params(s, {"sg"});
        add_common(s, "csv");
        specs.push_back(std::move(s));
    }
    {
        CommandSpec s{"lyapunov", "largest Lyapunov exponent, or an (eps, a) map for sine-Gordon", {}, "model"};
        s.params = {choice("model", std::nullopt, {"sg", "dernls", "pnls", "abc", "sg-scan"}),
                    real("t-end", "1000"),
                    real("dt", "0.01"),
                    real("renorm-dt", "0.5"),
                    real("d0", "1e-8"),
                    list("eps-values", "0,0.025,0.05,0.075,0.1", {"sg-scan"}),
                    list("a-values", "0.5,1,1.5,2", {"sg-scan"})};
        add_sg_params(s, {"sg"});
        add_sg_params(s, {"sg-scan"}, false);
        add_gl_params(s, true, true);
        add_abc_params(s, {"sg", "sg-scan", "abc"});
        for (int n = 1; n <= 3; ++n) s.params.push_back(real("theta" + std::to_string(n), std::to_string(0.1 * n), {"abc"}));
        add_common(s, "csv");
        specs.push_back(std::move(s));
    }
    return specs;
}

// ---------------------------------------------------------------------------
// Config -> module parameters
// ---------------------------------------------------------------------------

int to_int(const RunConfig& c, const std::string& key) {
    const auto v = c.integer(key);
    if (v < -1000000000 || v > 1000000000) throw ValidationError("key '" + key + "' is out of range");
    return static_cast<int>(v);
}

spectra::ModeClass mode_class(const RunConfig& c) { return {to_int(c, "k1"), to_int(c, "k2")}; }

chaos::SGParams sg_params(const RunConfig& c) {
    chaos::SGParams p;
    p.c = c.real("c");
    if (c.has("a")) p.a = c.real("a");
    if (c.has("eps")) p.eps = c.real("eps");
    p.parity = c.text("parity") == "odd" ? chaos::Parity::Odd : chaos::Parity::Even;
    p.modes = to_int(c, "modes");
    auto& f = p.forcing;
    f.mode = c.text("forcing") == "quasiperiodic" ? chaos::ForcingSpec::Mode::Quasiperiodic
                                                  : chaos::ForcingSpec::Mode::CosT;
    f.alpha0 = c.real("force-alpha");
    f.mu = c.real("force-mu");
    for (int n = 0; n < 4; ++n) {
        f.betas[n] = c.real("beta" + std::to_string(n + 1));
        f.omegas[n] = c.real("omega" + std::to_string(n + 1));
        f.phases[n] = c.real("phase" + std::to_string(n + 1));
    }
    f.abc = {c.real("abc-a"), c.real("abc-b"), c.real("abc-c")};
    for (int n = 0; n < 3; ++n) f.abc_state[n] = c.real("vartheta" + std::to_string(n + 1));
    p.validate();
    return p;
}

void check_initial_length(const std::vector<double>& v, int modes, const char* key) {
    if (static_cast<int>(v.size()) > modes)
        throw ValidationError(std::string("key '") + key + "' has more coefficients than modes");
}

chaos::SGState sg_initial(const chaos::SineGordon& sg, const RunConfig& c) {
    check_initial_length(c.list("u0"), sg.params().modes, "u0");
    check_initial_length(c.list("ut0"), sg.params().modes, "ut0");
    return sg.make_state(c.list("u0"), c.list("ut0"));
}

chaos::GLParams gl_params(const RunConfig& c, const std::string& model) {
    chaos::GLParams p;
    p.variant = model == "pnls" ? chaos::GLVariant::Pnls : chaos::GLVariant::DerNLS;
    p.eps = c.real("eps");
    p.modes = to_int(c, "modes");
    if (p.variant == chaos::GLVariant::DerNLS) {
        p.mu = c.real("mu");
        p.K = to_int(c, "kcut");
        p.gamma = c.real("gamma");
    } else {
        p.omega = c.real("omega");
        p.alpha = c.real("alpha");
        p.beta = c.real("beta");
    }
    p.validate();
    return p;
}

bool starts_on_limit_cycle(const RunConfig& c) { return c.has("q0") && c.text("q0") == "limit-cycle"; }

chaos::GLState gl_initial(const chaos::GinzburgLandau& gl, const RunConfig& c) {
    if (starts_on_limit_cycle(c)) return gl.limit_cycle_state(0.0);
    const auto& re = c.list("q0-re");
    const auto& im = c.list("q0-im");
    check_initial_length(re, gl.params().modes, "q0-re");
    check_initial_length(im, gl.params().modes, "q0-im");
    std::vector<chaos::cplx> q(std::max(re.size(), im.size()));
    for (std::size_t k = 0; k < re.size(); ++k) q[k].real(re[k]);
    for (std::size_t k = 0; k < im.size(); ++k) q[k].imag(im[k]);
    return gl.make_state(q);
}

chaos::AbcParams abc_params(const RunConfig& c) { return {c.real("abc-a"), c.real("abc-b"), c.real("abc-c")}; }

chaos::AbcState abc_initial(const RunConfig& c) {
    return {chaos::wrap_angles({c.real("theta1"), c.real("theta2"), c.real("theta3")}), 0.0};
}

json config_json(const RunConfig& c) {
    json j = json::object();
    for (const auto& [k, v] : c.params) {
        if (k == "out" || k == "format") continue;
        std::visit([&](const auto& x) { j[k] = x; }, v);
    }
    return j;
}

void require_positive(const RunConfig& c, const std::string& key) {
    if (!(c.real(key) > 0.0)) throw DomainError(key + " must be positive");
}

long step_count(double t_end, double dt) {
    if (!(dt > 0.0) || !(t_end > 0.0)) throw DomainError("t-end and dt must be positive");
    return std::lround(t_end / dt);
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

json cmd_spectrum(const RunConfig& c, std::ostream& out) {
    spectra::OperatorParams p{mode_class(c), c.real("alpha"), c.real("gamma"), c.real("nu"), to_int(c, "trunc")};
    const auto spec = spectra::compute_spectrum(spectra::assemble_suboperator(p));
    spectra::write_spectrum_csv_header(out);
    spectra::write_spectrum_csv_rows(out, spec);
    return {{"eigenvalues", spec.eigenvalues.size()}, {"max_real", spec.eigenvalues.front().real()}};
}

double leading_point_eigenvalue(const spectra::EulerSpectrum& e) {
    double best = 0.0;
    for (const auto& z : e.point_eigenvalues) best = std::max(best, z.real());
    return best;
}

json cmd_nustar(const RunConfig& c, std::ostream& out) {
    const double alpha = c.real("alpha"), gamma = c.real("gamma"), tol = c.real("tol");
    const int n = to_int(c, "trunc");
    const auto crit = spectra::critical_viscosity(alpha, gamma, n, tol);
    const auto crit2 = spectra::critical_viscosity(alpha, gamma, 2 * n, tol);
    const auto e1 = spectra::euler_spectrum({1, 0}, alpha, gamma, n);
    const auto e2 = spectra::euler_spectrum({1, 0}, alpha, gamma, 2 * n);
    json j;
    j["nu_star"] = crit.nu_star;
    j["nu_star_2n"] = crit2.nu_star;
    j["nu_star_delta_2n"] = std::abs(crit2.nu_star - crit.nu_star);
    j["bounds"] = {crit.bounds.lower, crit.bounds.upper};
    j["within_bounds"] = crit.within_bounds;
    j["iterations"] = crit.iterations;
    j["max_real_at_root"] = crit.max_real_at_root;
    j["lambda0"] = leading_point_eigenvalue(e1);
    j["lambda0_delta_2n"] = std::abs(leading_point_eigenvalue(e2) - leading_point_eigenvalue(e1));
    if (c.has("nu")) {
        const auto u = spectra::unstable_eigenvalue(alpha, gamma, c.real("nu"), n);
        j["nu"] = c.real("nu");
        j["lambda"] = u.lambda ? json(*u.lambda) : json(nullptr);
        j["lambda_delta_2n"] = u.refinement_change;
        j["positive_count"] = u.positive_count;
    }
    out << j.dump() << "\n";
    return j;
}

json cmd_zvtrack(const RunConfig& c, std::ostream& out) {
    const auto cls = mode_class(c);
    const double alpha = c.real("alpha"), gamma = c.real("gamma");
    const int trunc = to_int(c, "trunc");
    const auto schedule = spectra::geometric_schedule(c.real("nu-max"), c.real("nu-min"), to_int(c, "steps"));
    auto traj = spectra::track_zero_viscosity(cls, alpha, gamma, schedule, trunc);
    const auto ref = spectra::euler_spectrum(cls, alpha, gamma, trunc);
    const auto cl = spectra::classify_limits(traj, ref, c.real("tol"));
    spectra::write_trajectories_jsonl(out, cls, traj);
    json j;
    j["classification"] = spectra::to_string(cl.class_label);
    std::vector<std::array<double, 2>> pts;
    for (const auto& z : cl.addition_points) pts.push_back({z.real(), z.imag()});
    j["addition_points"] = pts;
    j["addition_segment"] = cl.addition_segment;
    j["trajectories"] = traj.size();
    out << j.dump() << "\n";
    return j;
}

json cmd_laxcheck(const RunConfig& c, std::ostream& out) {
    const auto seed = c.seed();
    const int n = to_int(c, "n"), degree = to_int(c, "degree");
    integrable::ResidualReport rep;
    if (c.text("dim") == "2d") {
        auto g = fields::make_torus_grid_2d(c.real("alpha"), n, n);
        auto omega = fields::scaled_to_sup(fields::random_trig_polynomial(g, degree, 1.0, seed), c.real("omega-amp"));
        auto phi =
            fields::scaled_to_sup(fields::random_complex_trig_polynomial(g, degree, 1.0, seed + 1), c.real("phi-amp"));
        rep = integrable::transported_eigenfield_check_2d(omega, phi, c.real("t-end"), c.real("dt"),
                                                          c.text("wrong-sign") == "yes");
    } else {
        auto g = fields::make_torus_grid_3d(n, n, n);
        auto omega = fields::scaled_to_sup(fields::random_solenoidal_3d(g, degree, 1.0, seed), c.real("omega-amp"));
        auto phi = fields::scaled_to_sup(fields::random_complex_trig_polynomial_3d(g, degree, 1.0, seed + 3),
                                         c.real("phi-amp"));
        const bool curl = c.text("velocity") == "curl";
        integrable::VelocityFn u;
        if (!curl) u = integrable::modulated_abc_velocity(g, c.real("abc-a"), c.real("abc-b"), c.real("abc-c"),
                                                          c.real("modulation"));
        rep = integrable::transported_eigenfield_check_3d(omega, phi, c.real("t-end"), c.real("dt"), curl, u);
    }
    rep.params["seed"] = seed;
    const json j = rep.to_json();
    out << j.dump() << "\n";
    return {{"residual_inf", rep.residual_inf}};
}

integrable::DarbouxInput x_only_input(int n) {
    auto g = fields::make_torus_grid_2d(1.0, n, 8);
    auto s = [&](auto fn) { return fields::SpectralField2D::sample(g, [&](std::array<double, 2> p) { return fn(p[0]); }); };
    return {s([](double x) { return std::cos(x); }), s([](double x) { return -std::cos(x); }),
            s([](double x) { return std::sin(x); }), s([](double x) { return 2.0 + std::sin(x); }),
            s([](double x) { return -std::cos(2 * x) / 4.0; }), 0.0};
}

json cmd_darboux(const RunConfig& c, std::ostream& out) {
    integrable::DarbouxInput in = [&] {
        if (c.text("example") == "x-only") return x_only_input(to_int(c, "n"));
        return integrable::DarbouxInput{fields::read_snapshot_2d(c.text("omega-file")),
                                        fields::read_snapshot_2d(c.text("psi-file")),
                                        fields::read_snapshot_2d(c.text("p-file")),
                                        fields::read_snapshot_2d(c.text("f-file")),
                                        fields::read_snapshot_2d(c.text("F-file")), 0.0};
    }();
    if (c.has("eta")) in.eta = c.real("eta");
    const auto res = integrable::darboux_apply(in);
    const auto rep = integrable::darboux_verify(in, res);
    out << rep.to_json().dump() << "\n";
    return {{"residual_inf", rep.residual_inf}, {"masked_fraction", rep.masked_fraction}};
}

json cmd_simulate(const RunConfig& c, std::ostream& out) {
    const std::string model = c.text("model");
    const double dt = c.real("dt");
    const long steps = step_count(c.real("t-end"), dt);
    const long every = c.integer("record-every");
    if (every < 0) throw DomainError("record-every must be non-negative");
    const json params = config_json(c);
    auto record = [&](long i) { return i == steps || (every > 0 && i % every == 0); };

    json summary;
    summary["steps"] = steps;
    if (model == "sg") {
        chaos::SineGordon sg(sg_params(c));
        auto s = sg_initial(sg, c);
        const double e0 = sg.energy(s);
        double drift = 0.0;
        chaos::write_trajectory_jsonl(out, model, params, s);
        for (long i = 1; i <= steps; ++i) {
            s = sg.step(s, dt);
            drift = std::max(drift, std::abs(sg.energy(s) - e0));
            if (record(i)) chaos::write_trajectory_jsonl(out, model, params, s);
        }
        summary["t_final"] = s.t;
        summary["energy_initial"] = e0;
        summary["energy_max_rel_drift"] = e0 != 0.0 ? drift / std::abs(e0) : drift;
    } else if (model == "abc") {
        chaos::AbcFlow flow(abc_params(c));
        auto s = abc_initial(c);
        chaos::write_trajectory_jsonl(out, model, params, s);
        for (long i = 1; i <= steps; ++i) {
            s = flow.step(s, dt);
            if (record(i)) chaos::write_trajectory_jsonl(out, model, params, s);
        }
        summary["t_final"] = s.t;
    } else {
        chaos::GinzburgLandau gl(gl_params(c, model));
        auto s = gl_initial(gl, c);
        const double m0 = gl.mass(s);
        double mass_drift = 0.0, lc = 0.0;
        const bool track_lc = starts_on_limit_cycle(c);
        chaos::write_trajectory_jsonl(out, model, params, s);
        for (long i = 1; i <= steps; ++i) {
            s = gl.step(s, dt);
            mass_drift = std::max(mass_drift, std::abs(gl.mass(s) - m0));
            if (track_lc) lc = std::max(lc, gl.limit_cycle_distance(s));
            if (record(i)) chaos::write_trajectory_jsonl(out, model, params, s);
        }
        summary["t_final"] = s.t;
        summary["mass_initial"] = m0;
        summary["mass_max_drift"] = mass_drift;
        if (track_lc) summary["max_limit_cycle_error"] = lc;
    }
    out << json{{"summary", summary}}.dump() << "\n";
    return summary;
}

json cmd_poincare(const RunConfig& c, std::ostream& out) {
    const int n = to_int(c, "n-iterates");
    if (n < 0) throw DomainError("n-iterates must be non-negative");
    if (c.text("model") == "sg") {
        chaos::SineGordon sg(sg_params(c));
        const auto r = chaos::sg_period_samples(sg, sg_initial(sg, c), to_int(c, "steps-per-period"), n);
        chaos::write_poincare_csv(out, r);
        return {{"samples", r.samples.size()}, {"escaped", r.escaped}};
    }
    chaos::GinzburgLandau gl(gl_params(c, "dernls"));
    const auto r = chaos::phase_section_returns(gl, gl_initial(gl, c), c.real("dt"), n, c.real("t-max"));
    chaos::write_poincare_csv(out, r);
    return {{"samples", r.samples.size()}, {"escaped", r.escaped}};
}

json lyapunov_summary(const chaos::LyapunovResult& r) {
    return {{"lambda", r.lambda},
            {"last_decade_spread", r.last_decade_spread},
            {"converged", r.last_decade_spread < 0.2},
            {"escaped", r.escaped},
            {"t_end", r.t_end}};
}

json cmd_lyapunov(const RunConfig& c, std::ostream& out) {
    const std::string model = c.text("model");
    const double T = c.real("t-end"), dt = c.real("dt"), renorm = c.real("renorm-dt"), d0 = c.real("d0");
    const auto seed = c.seed();
    if (model == "sg-scan") {
        const auto base = sg_params(c);
        const auto cells = chaos::sg_lyapunov_scan(base, c.list("u0"), c.list("ut0"), c.list("eps-values"),
                                                   c.list("a-values"), T, dt, renorm, seed);
        out << "eps,a,lambda,last_decade_spread,escaped\n";
        for (const auto& cell : cells) {
            out << format_value(cell.eps) << "," << format_value(cell.a) << "," << format_value(cell.result.lambda)
                << "," << format_value(cell.result.last_decade_spread) << "," << (cell.result.escaped ? 1 : 0) << "\n";
        }
        return {{"cells", cells.size()}};
    }
    chaos::LyapunovResult r;
    if (model == "sg") {
        chaos::SineGordon sg(sg_params(c));
        r = chaos::lyapunov_max(sg, sg_initial(sg, c), T, dt, renorm, seed, d0);
    } else if (model == "abc") {
        r = chaos::lyapunov_max(chaos::AbcFlow(abc_params(c)), abc_initial(c), T, dt, renorm, seed, d0);
    } else {
        chaos::GinzburgLandau gl(gl_params(c, model));
        r = chaos::lyapunov_max(gl, gl_initial(gl, c), T, dt, renorm, seed, d0);
    }
    chaos::write_lyapunov_csv(out, r);
    return lyapunov_summary(r);
}

}  // namespace

const std::vector<CommandSpec>& command_specs() {
    static const std::vector<CommandSpec> specs = build_specs();
    return specs;
}

const CommandSpec& command_spec(const std::string& name) {
    for (const auto& s : command_specs())
        if (s.name == name) return s;
    throw ValidationError("unknown command '" + name + "'");
}

void validate_command(const RunConfig& c) {
    const std::string& cmd = c.command;
    if (cmd == "spectrum") {
        spectra::OperatorParams p{mode_class(c), c.real("alpha"), c.real("gamma"), c.real("nu"), to_int(c, "trunc")};
        p.trunc = 1;  // entry checks only
        spectra::assemble_suboperator(p);
        if (to_int(c, "trunc") < 1) throw DomainError("truncation must be at least 1");
    } else if (cmd == "nustar") {
        const double alpha = c.real("alpha");
        if (!(alpha > 0.5 && alpha < 0.95)) throw DomainError("alpha must lie in (0.5, 0.95) for the critical viscosity");
        if (!(c.real("gamma") > 0.0)) throw DomainError("gamma must be positive");
        if (!(c.real("tol") >= 1e-8)) throw DomainError("tol must be at least 1e-8");
        if (to_int(c, "trunc") < 1) throw DomainError("truncation must be at least 1");
        if (c.has("nu") && !(c.real("nu") >= 0.0)) throw DomainError("viscosity must be non-negative");
    } else if (cmd == "zvtrack") {
        spectra::OperatorParams p{mode_class(c), c.real("alpha"), c.real("gamma"), 0.0, 1};
        spectra::assemble_suboperator(p);
        if (to_int(c, "trunc") < 1) throw DomainError("truncation must be at least 1");
        spectra::geometric_schedule(c.real("nu-max"), c.real("nu-min"), to_int(c, "steps"));
        if (!(c.real("tol") > 0.0)) throw DomainError("tol must be positive");
    } else if (cmd == "laxcheck") {
        if (to_int(c, "degree") < 1 || 2 * to_int(c, "degree") >= to_int(c, "n"))
            throw DomainError("need 1 <= degree < n / 2");
        step_count(c.real("t-end"), c.real("dt"));
        require_positive(c, "omega-amp");
        require_positive(c, "phi-amp");
        if (c.text("dim") == "2d") {
            fields::make_torus_grid_2d(c.real("alpha"), to_int(c, "n"), to_int(c, "n"));
            if (!(c.real("alpha") > 0.0 && c.real("alpha") < 1.0)) throw DomainError("alpha must lie in (0, 1)");
        } else {
            fields::make_torus_grid_3d(to_int(c, "n"), to_int(c, "n"), to_int(c, "n"));
        }
    } else if (cmd == "darboux") {
        if (c.text("example") == "x-only") fields::make_torus_grid_2d(1.0, to_int(c, "n"), 8);
    } else if (cmd == "simulate" || cmd == "poincare" || cmd == "lyapunov") {
        const std::string& model = c.text("model");
        if (model == "sg" || model == "sg-scan") {
            chaos::SineGordon sg(sg_params(c));
            sg_initial(sg, c);
        } else if (model == "dernls" || model == "pnls") {
            chaos::GinzburgLandau gl(gl_params(c, model));
            gl_initial(gl, c);
        }
        if (cmd == "simulate") step_count(c.real("t-end"), c.real("dt"));
        if (cmd == "poincare" && model == "sg" && to_int(c, "steps-per-period") < 1)
            throw DomainError("steps-per-period must be positive");
        if (cmd == "poincare" && model == "dernls") require_positive(c, "dt");
        if (cmd == "lyapunov") {
            const double T = c.real("t-end"), dt = c.real("dt"), r = c.real("renorm-dt");
            if (!(dt > 0.0 && r >= dt && T >= r)) throw DomainError("need 0 < dt <= renorm-dt <= t-end");
            require_positive(c, "d0");
            if (model == "sg-scan") {
                for (double e : c.list("eps-values"))
                    if (!(e >= 0.0)) throw DomainError("eps values must be non-negative");
                for (double a : c.list("a-values"))
                    if (!(a > 0.0)) throw DomainError("a values must be positive");
            }
        }
    }
}

nlohmann::ordered_json run_command(const RunConfig& c, std::ostream& out) {
    const std::string& cmd = c.command;
    if (cmd == "spectrum") return cmd_spectrum(c, out);
    if (cmd == "nustar") return cmd_nustar(c, out);
    if (cmd == "zvtrack") return cmd_zvtrack(c, out);
    if (cmd == "laxcheck") return cmd_laxcheck(c, out);
    if (cmd == "darboux") return cmd_darboux(c, out);
    if (cmd == "simulate") return cmd_simulate(c, out);
    if (cmd == "poincare") return cmd_poincare(c, out);
    if (cmd == "lyapunov") return cmd_lyapunov(c, out);
    throw ValidationError("unknown command '" + cmd + "'");
}

}  // namespace nel::cli
