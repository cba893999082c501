#include "nel/integrable/darboux.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "nel/core/error.hpp"

namespace nel::integrable {
namespace {

constexpr double kConstraintTolerance = 1e-8;

std::vector<double> d(const SpectralField2D& f, std::size_t axis) {
    return fields::derivative(f, axis).physical_real();
}

std::vector<double> d2(const SpectralField2D& f, std::size_t a, std::size_t b) {
    return fields::derivative(fields::derivative(f, a), b).physical_real();
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

void require_real(const SpectralField2D& f, const char* name) {
    if (!f.is_real()) throw DomainError(std::string("darboux: ") + name + " must be real-valued");
}

struct Norms {
    double inf = 0.0;
    double rms = 0.0;
};

Norms masked_norms(const std::vector<double>& r, const std::vector<char>& mask) {
    Norms n;
    std::size_t count = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (mask[i]) continue;
        n.inf = std::max(n.inf, std::abs(r[i]));
        n.rms += r[i] * r[i];
        ++count;
    }
    n.rms = count ? std::sqrt(n.rms / static_cast<double>(count)) : 0.0;
    return n;
}

}  // namespace

ConstraintResiduals constraint_residuals(const SpectralField2D& omega, const SpectralField2D& F) {
    const auto lap_f = fields::laplacian(F);
    return {fields::bracket(omega, lap_f).sup_norm(), fields::bracket(lap_f, F).sup_norm()};
}

DarbouxResult darboux_apply(const DarbouxInput& in) {
    for (const auto* f : {&in.psi, &in.p, &in.f, &in.F}) fields::require_same_grid(in.omega, *f, "darboux_apply");
    require_real(in.omega, "omega");
    require_real(in.psi, "psi");
    require_real(in.p, "p");
    require_real(in.f, "f");
    require_real(in.F, "F");

    const auto c = constraint_residuals(in.omega, in.F);
    const double d1_f = fields::bracket(in.omega, in.f).sup_norm();
    const double d1_p = fields::bracket(in.omega, in.p).sup_norm();
    if (c.omega_lap_f > kConstraintTolerance || c.lap_f_f > kConstraintTolerance || d1_f > kConstraintTolerance ||
        d1_p > kConstraintTolerance) {
        std::ostringstream msg;
        msg << "darboux_apply: inputs violate the constraints, max|{omega, lap F}| = " << c.omega_lap_f
            << ", max|{lap F, F}| = " << c.lap_f_f << ", max|{omega, f}| = " << d1_f << ", max|{omega, p}| = " << d1_p
            << " (tolerance " << kConstraintTolerance << ")";
        throw PreconditionError(msg.str());
    }

    const auto f = in.f.physical_real();
    const double f_scale = max_abs(f);
    const double f_min = std::transform_reduce(f.begin(), f.end(), INFINITY, [](double a, double b) { return std::min(a, b); },
                                               [](double x) { return std::abs(x); });
    if (!(f_min > 1e-14 * f_scale)) throw DomainError("darboux_apply: f vanishes on the grid");

    const auto p = in.p.physical_real();
    const auto px = d(in.p, 0), py = d(in.p, 1), pxx = d2(in.p, 0, 0), pxy = d2(in.p, 0, 1);
    const auto fx = d(in.f, 0), fy = d(in.f, 1), fxx = d2(in.f, 0, 0), fxy = d2(in.f, 0, 1);
    const auto wx = d(in.omega, 0), wxx = d2(in.omega, 0, 0), wxy = d2(in.omega, 0, 1);

    const double wx_scale = max_abs(wx);
    if (wx_scale == 0.0) throw DomainError("darboux_apply: omega_x vanishes identically, the gauge factor is undefined");

    DarbouxResult out{in.omega + fields::laplacian(in.F), in.psi + in.F, {}, {}, 0.0, 0.0};
    out.eta = in.eta > 0.0 ? in.eta : 1e-3 * wx_scale;
    const std::size_t n = p.size();
    out.p_t.value.assign(n, 0.0);
    out.p_t.dx.assign(n, 0.0);
    out.p_t.dy.assign(n, 0.0);
    out.mask.assign(n, 0);
    std::size_t masked = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(wx[i]) < out.eta) {
            out.mask[i] = 1;
            ++masked;
            continue;
        }
        // p_t = A / B with A = p_x f - f_x p, B = f omega_x.
        const double a = px[i] * f[i] - fx[i] * p[i];
        const double b = f[i] * wx[i];
        const double ax = pxx[i] * f[i] - fxx[i] * p[i];
        const double ay = pxy[i] * f[i] + px[i] * fy[i] - fxy[i] * p[i] - fx[i] * py[i];
        const double bx = fx[i] * wx[i] + f[i] * wxx[i];
        const double by = fy[i] * wx[i] + f[i] * wxy[i];
        out.p_t.value[i] = a / b;
        out.p_t.dx[i] = (ax * b - a * bx) / (b * b);
        out.p_t.dy[i] = (ay * b - a * by) / (b * b);
    }
    out.masked_fraction = static_cast<double>(masked) / static_cast<double>(n);
    return out;
}

ResidualReport darboux_verify(const DarbouxInput& original, const DarbouxResult& transformed,
                              const std::vector<TimedInput>* series) {
    const auto wx = d(transformed.omega_t, 0), wy = d(transformed.omega_t, 1);
    std::vector<double> r(wx.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = transformed.mask[i] ? 0.0 : wx[i] * transformed.p_t.dy[i] - wy[i] * transformed.p_t.dx[i];
    const auto norms = masked_norms(r, transformed.mask);

    ResidualReport rep;
    rep.check = "darboux";
    rep.residual_inf = norms.inf;
    rep.residual_l2 = norms.rms;
    rep.masked_fraction = transformed.masked_fraction;
    const auto& shape = original.omega.grid().shape();
    rep.grid.assign(shape.begin(), shape.end());
    rep.params["eta"] = transformed.eta;

    if (series) {
        if (series->size() < 3) throw DomainError("darboux_verify: a time series needs at least 3 snapshots");
        for (std::size_t k = 1; k < series->size(); ++k)
            if (!((*series)[k].t > (*series)[k - 1].t)) throw DomainError("darboux_verify: snapshot times must increase");
        // Whatever the supplied transformed stream function adds beyond psi + F is carried along.
        const SpectralField2D extra = transformed.psi_t - (original.psi + original.F);
        std::vector<DarbouxResult> applied;
        applied.reserve(series->size());
        for (const auto& snap : *series) applied.push_back(darboux_apply(snap.input));

        double worst = 0.0;
        for (std::size_t k = 1; k + 1 < series->size(); ++k) {
            const auto psi_t = (*series)[k].input.psi + (*series)[k].input.F + extra;
            const auto sx = d(psi_t, 0), sy = d(psi_t, 1);
            const double span = (*series)[k + 1].t - (*series)[k - 1].t;
            const auto& prev = applied[k - 1];
            const auto& cur = applied[k];
            const auto& next = applied[k + 1];
            for (std::size_t i = 0; i < sx.size(); ++i) {
                if (prev.mask[i] || cur.mask[i] || next.mask[i]) continue;
                const double dt_p = (next.p_t.value[i] - prev.p_t.value[i]) / span;
                const double bracket = sx[i] * cur.p_t.dy[i] - sy[i] * cur.p_t.dx[i];
                worst = std::max(worst, std::abs(dt_p + bracket));
            }
        }
        rep.params["time_residual_inf"] = worst;
        rep.params["snapshots"] = series->size();
        rep.dt = (series->back().t - series->front().t) / static_cast<double>(series->size() - 1);
    }
    return rep;
}

GaugeForms gauge_forms(const SpectralField2D& omega, const SpectralField2D& f, const SpectralField2D& p, double eta) {
    fields::require_same_grid(omega, f, "gauge_forms");
    fields::require_same_grid(omega, p, "gauge_forms");
    const auto wx = d(omega, 0), wy = d(omega, 1);
    const auto fx = d(f, 0), fy = d(f, 1);
    const auto px = d(p, 0), py = d(p, 1);
    const auto fv = f.physical_real(), pv = p.physical_real();
    GaugeForms g{std::vector<double>(wx.size(), 0.0), std::vector<double>(wx.size(), 0.0),
                 std::vector<char>(wx.size(), 0)};
    for (std::size_t i = 0; i < wx.size(); ++i) {
        if (std::abs(wx[i]) < eta || std::abs(wy[i]) < eta || fv[i] == 0.0) {
            g.mask[i] = 1;
            continue;
        }
        g.x_form[i] = px[i] / wx[i] - (fx[i] / wx[i]) * (pv[i] / fv[i]);
        g.y_form[i] = py[i] / wy[i] - (fy[i] / wy[i]) * (pv[i] / fv[i]);
    }
    return g;
}

double d1_residual(const SpectralField2D& omega, const SpectralField2D& p) {
    return fields::bracket(omega, p).sup_norm();
}

double d2_residual(const std::vector<double>& times, const std::vector<SpectralField2D>& psi,
                   const std::vector<SpectralField2D>& p) {
    if (times.size() < 3 || psi.size() != times.size() || p.size() != times.size())
        throw DomainError("d2_residual: need at least 3 snapshots of matching length");
    double worst = 0.0;
    for (std::size_t k = 1; k + 1 < times.size(); ++k) {
        const auto r = (1.0 / (times[k + 1] - times[k - 1])) * (p[k + 1] - p[k - 1]) + fields::bracket(psi[k], p[k]);
        worst = std::max(worst, r.sup_norm());
    }
    return worst;
}

SpectralField2D swap_xy(const SpectralField2D& f) {
    const auto& g = f.grid();
    if (g.n(0) != g.n(1) || g.k_scale(0) != g.k_scale(1))
        throw StructuralError("swap_xy: needs a square grid with equal periods");
    SpectralField2D out(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto m = g.modes(i);
        out.set_coeff({m[1], m[0]}, f.coeffs()[i]);
    }
    return out;
}

}  // namespace nel::integrable
