#include "nel/chaos/ginzburg_landau.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nel/core/error.hpp"

namespace nel::chaos {

const char* to_string(GLVariant v) { return v == GLVariant::DerNLS ? "dernls" : "pnls"; }

void GLParams::validate() const {
    if (modes < 2) throw DomainError("ginzburg-landau: need at least 2 modes");
    if (!(eps >= 0.0) || !std::isfinite(eps)) throw DomainError("ginzburg-landau: eps must be non-negative");
    if (variant == GLVariant::DerNLS) {
        if (K < 1 || K >= modes) throw DomainError("ginzburg-landau: K must lie in [1, modes - 1]");
        if (!std::isfinite(mu) || !std::isfinite(gamma)) throw DomainError("ginzburg-landau: non-finite mu or gamma");
    } else {
        if (!(omega > 0.5 && omega < 1.0)) throw DomainError("ginzburg-landau: omega must lie in (1/2, 1)");
        if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("ginzburg-landau: alpha must be positive");
        if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("ginzburg-landau: beta must be positive");
    }
}

GinzburgLandau::GinzburgLandau(GLParams params)
    : params_((params.validate(), std::move(params))),
      basis_(params_.modes, Parity::Even),
      odd_(params_.modes, Parity::Odd),
      symbol_(params_.modes) {
    const cplx i(0.0, 1.0);
    for (int k = 0; k < params_.modes; ++k) {
        const double k2 = static_cast<double>(k) * k;
        symbol_[k] = i * k2;
        if (params_.variant == GLVariant::Pnls) symbol_[k] -= params_.eps * (k2 + params_.alpha);
    }
}

GLState GinzburgLandau::make_state(std::span<const cplx> q, double t) const {
    if (q.size() > static_cast<std::size_t>(params_.modes))
        throw StructuralError("ginzburg-landau: more coefficients than modes");
    GLState s{std::vector<cplx>(params_.modes, cplx{}), t};
    std::copy(q.begin(), q.end(), s.q.begin());
    return s;
}

GLState GinzburgLandau::uniform_state(cplx q0, double t) const {
    const cplx q[] = {q0};
    return make_state(q, t);
}

cplx GinzburgLandau::limit_cycle(double t, double gamma) {
    return 0.75 * std::exp(cplx(0.0, -(9.0 / 8.0 * t + gamma)));
}

GLState GinzburgLandau::limit_cycle_state(double t) const { return uniform_state(limit_cycle(t, params_.gamma), t); }

std::vector<cplx> GinzburgLandau::nonlinear(const std::vector<cplx>& q) const {
    const cplx i(0.0, 1.0);
    auto x = basis_.synthesize(std::span<const cplx>(q));
    const double eps = params_.eps;
    if (params_.variant == GLVariant::DerNLS) {
        std::vector<cplx> dq(params_.modes, cplx{});
        for (int k = 1; k <= params_.K; ++k) dq[k] = -static_cast<double>(k) * q[k];
        const auto d = odd_.synthesize(std::span<const cplx>(dq));
        for (std::size_t j = 0; j < x.size(); ++j) {
            const cplx v = x[j];
            const double n2 = std::norm(v);
            x[j] = -2.0 * i * n2 * v + eps * ((9.0 / 16.0 - n2) * v + params_.mu * std::norm(d[j]) * std::conj(v));
        }
        return basis_.analyze(std::span<const cplx>(x));
    }
    // omega^2 stays with |q|^2 so the two cancel exactly on |q| = omega.
    const double w2 = params_.omega * params_.omega;
    for (auto& v : x) v = -2.0 * i * (std::norm(v) - w2) * v;
    auto out = basis_.analyze(std::span<const cplx>(x));
    out[0] += eps * params_.beta;
    return out;
}

GLState GinzburgLandau::step(const GLState& s, double dt) const {
    const int m = params_.modes;
    std::vector<cplx> eh(m), ef(m);
    for (int k = 0; k < m; ++k) {
        eh[k] = std::exp(0.5 * dt * symbol_[k]);
        ef[k] = eh[k] * eh[k];
    }
    const auto& q = s.q;
    const auto n1 = nonlinear(q);
    std::vector<cplx> w(m);
    for (int k = 0; k < m; ++k) w[k] = eh[k] * (q[k] + 0.5 * dt * n1[k]);
    const auto n2 = nonlinear(w);
    for (int k = 0; k < m; ++k) w[k] = eh[k] * q[k] + 0.5 * dt * n2[k];
    const auto n3 = nonlinear(w);
    for (int k = 0; k < m; ++k) w[k] = ef[k] * q[k] + dt * eh[k] * n3[k];
    const auto n4 = nonlinear(w);

    GLState out{std::vector<cplx>(m), s.t + dt};
    for (int k = 0; k < m; ++k) {
        out.q[k] = ef[k] * q[k] + dt / 6.0 * (ef[k] * n1[k] + 2.0 * eh[k] * (n2[k] + n3[k]) + n4[k]);
        if (!std::isfinite(out.q[k].real()) || !std::isfinite(out.q[k].imag())) {
            std::ostringstream msg;
            msg << "ginzburg-landau: non-finite state; last valid time " << s.t;
            throw ComputationalError(msg.str());
        }
    }
    return out;
}

double GinzburgLandau::mass(const GLState& s) const { return basis_.norm2_integral(std::span<const cplx>(s.q)); }

double GinzburgLandau::limit_cycle_distance(const GLState& s) const {
    const cplx qc = limit_cycle(s.t, params_.gamma);
    double m = 0.0;
    for (const auto& v : basis_.synthesize(std::span<const cplx>(s.q))) m = std::max(m, std::abs(v - qc));
    return m;
}

std::vector<double> GinzburgLandau::displacement(const GLState& from, const GLState& to) const {
    std::vector<double> d(2 * from.q.size());
    for (std::size_t k = 0; k < from.q.size(); ++k) {
        d[2 * k] = to.q[k].real() - from.q[k].real();
        d[2 * k + 1] = to.q[k].imag() - from.q[k].imag();
    }
    return d;
}

GLState GinzburgLandau::displaced(const GLState& s, std::span<const double> d) const {
    if (d.size() != 2 * s.q.size()) throw StructuralError("ginzburg-landau: displacement size mismatch");
    GLState out = s;
    for (std::size_t k = 0; k < s.q.size(); ++k) out.q[k] += cplx(d[2 * k], d[2 * k + 1]);
    return out;
}

double GinzburgLandau::size(const GLState& s) const {
    double m = 0.0;
    for (const auto& v : s.q) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace nel::chaos
