#include "nel/chaos/sine_gordon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nel/core/error.hpp"

namespace nel::chaos {

void SGParams::validate() const {
    if (!(c > 0.5 && c < 1.0)) throw DomainError("sine-gordon: c must lie in (1/2, 1)");
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("sine-gordon: a must be positive");
    if (!(eps >= 0.0) || !std::isfinite(eps)) throw DomainError("sine-gordon: eps must be non-negative");
    if (modes < 2) throw DomainError("sine-gordon: need at least 2 modes");
    forcing.validate();
}

SineGordon::SineGordon(SGParams params)
    : params_((params.validate(), std::move(params))),
      basis_(params_.modes, params_.parity),
      first_(params_.parity == Parity::Odd ? 1 : 0) {}

SGState SineGordon::make_state(std::span<const double> u, std::span<const double> ut, double t) const {
    const auto m = static_cast<std::size_t>(params_.modes);
    if (u.size() > m || ut.size() > m) throw StructuralError("sine-gordon: more coefficients than modes");
    SGState s{std::vector<double>(m, 0.0), std::vector<double>(m, 0.0), t, params_.forcing.abc_state};
    for (std::size_t k = first_; k < u.size(); ++k) s.u[k] = u[k];
    for (std::size_t k = first_; k < ut.size(); ++k) s.ut[k] = ut[k];
    return s;
}

SGState SineGordon::uniform_state(double u0, double v0) const {
    if (params_.parity != Parity::Even) throw DomainError("sine-gordon: uniform states need even parity");
    const double u[] = {u0};
    const double v[] = {v0};
    return make_state(u, v);
}

std::vector<double> SineGordon::nonlinear(const std::vector<double>& u, double f) const {
    auto x = basis_.synthesize(std::span<const double>(u));
    const double ef = params_.eps * f;
    for (auto& v : x) {
        const double s = std::sin(v);
        v = s + ef * s * s * s;
    }
    auto out = basis_.analyze(std::span<const double>(x));
    const double ea = params_.eps * params_.a;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] -= ea * u[k];
    return out;
}

SGState SineGordon::step(const SGState& s, double dt) const {
    const int m = params_.modes;
    const double c = params_.c;
    // Exact propagator of u_tt = -(ck)^2 u over tau, applied in place to (u, v).
    struct Rot {
        std::vector<double> cs, sn_w, w_sn;
    };
    auto make_rot = [&](double tau) {
        Rot r{std::vector<double>(m), std::vector<double>(m), std::vector<double>(m)};
        for (int k = 0; k < m; ++k) {
            const double w = c * k;
            if (k == 0) {
                r.cs[k] = 1.0;
                r.sn_w[k] = tau;
                r.w_sn[k] = 0.0;
            } else {
                r.cs[k] = std::cos(w * tau);
                r.sn_w[k] = std::sin(w * tau) / w;
                r.w_sn[k] = w * std::sin(w * tau);
            }
        }
        return r;
    };
    auto apply = [&](const Rot& r, std::vector<double>& u, std::vector<double>& v) {
        for (int k = 0; k < m; ++k) {
            const double uk = u[k], vk = v[k];
            u[k] = r.cs[k] * uk + r.sn_w[k] * vk;
            v[k] = -r.w_sn[k] * uk + r.cs[k] * vk;
        }
    };
    const Rot half = make_rot(0.5 * dt);
    const Rot full = make_rot(dt);

    ForcingClock clock(params_.forcing, params_.eps, s.t, s.vartheta);
    const double dt_sub = 0.5 * dt;
    const double f0 = clock.value(s.t, dt_sub);
    const double f1 = clock.value(s.t + 0.5 * dt, dt_sub);
    const double f2 = clock.value(s.t + dt, dt_sub);

    // The nonlinear term only enters the u_t equation: k_i = (0, N_i).
    const auto n1 = nonlinear(s.u, f0);

    std::vector<double> u2 = s.u, v2 = s.ut;
    for (int k = 0; k < m; ++k) v2[k] += 0.5 * dt * n1[k];
    apply(half, u2, v2);
    const auto n2 = nonlinear(u2, f1);

    std::vector<double> u3 = s.u, v3 = s.ut;
    apply(half, u3, v3);
    for (int k = 0; k < m; ++k) v3[k] += 0.5 * dt * n2[k];
    const auto n3 = nonlinear(u3, f1);

    std::vector<double> u4 = s.u, v4 = s.ut;
    apply(full, u4, v4);
    std::vector<double> ku(m, 0.0), kv = n3;
    apply(half, ku, kv);
    for (int k = 0; k < m; ++k) {
        u4[k] += dt * ku[k];
        v4[k] += dt * kv[k];
    }
    const auto n4 = nonlinear(u4, f2);

    SGState out = s;
    apply(full, out.u, out.ut);
    std::vector<double> a_u(m, 0.0), a_v = n1;  // E(dt) k1
    apply(full, a_u, a_v);
    std::vector<double> b_u(m, 0.0), b_v(m);    // E(dt/2) (k2 + k3)
    for (int k = 0; k < m; ++k) b_v[k] = n2[k] + n3[k];
    apply(half, b_u, b_v);
    for (int k = 0; k < m; ++k) {
        out.u[k] += dt / 6.0 * (a_u[k] + 2.0 * b_u[k]);
        out.ut[k] += dt / 6.0 * (a_v[k] + 2.0 * b_v[k] + n4[k]);
    }
    out.t = s.t + dt;
    out.vartheta = clock.vartheta();
    for (int k = 0; k < m; ++k) {
        if (!std::isfinite(out.u[k]) || !std::isfinite(out.ut[k])) {
            std::ostringstream msg;
            msg << "sine-gordon: non-finite state; last valid time " << s.t;
            throw ComputationalError(msg.str());
        }
    }
    return out;
}

double SineGordon::energy(const SGState& s) const {
    const double c = params_.c;
    double grad = 0.0;
    for (int k = 1; k < params_.modes; ++k) grad += static_cast<double>(k) * k * s.u[k] * s.u[k];
    grad *= std::numbers::pi;
    const auto x = basis_.synthesize(std::span<const double>(s.u));
    double pot = 0.0;
    for (double v : x) pot += std::cos(v);
    pot *= 2.0 * std::numbers::pi / static_cast<double>(x.size());
    return 0.5 * basis_.norm2_integral(std::span<const double>(s.ut)) + 0.5 * c * c * grad + pot;
}

std::vector<double> SineGordon::displacement(const SGState& from, const SGState& to) const {
    std::vector<double> d;
    d.reserve(2 * params_.modes);
    for (int k = first_; k < params_.modes; ++k) d.push_back(to.u[k] - from.u[k]);
    for (int k = first_; k < params_.modes; ++k) d.push_back(to.ut[k] - from.ut[k]);
    return d;
}

SGState SineGordon::displaced(const SGState& s, std::span<const double> d) const {
    const std::size_t active = static_cast<std::size_t>(params_.modes - first_);
    if (d.size() != 2 * active) throw StructuralError("sine-gordon: displacement size mismatch");
    SGState out = s;
    for (std::size_t i = 0; i < active; ++i) {
        out.u[first_ + i] += d[i];
        out.ut[first_ + i] += d[active + i];
    }
    return out;
}

double SineGordon::size(const SGState& s) const {
    double m = 0.0;
    for (int k = 0; k < params_.modes; ++k) m = std::max({m, std::abs(s.u[k]), std::abs(s.ut[k])});
    return m;
}

}  // namespace nel::chaos
