#include "nel/chaos/forcing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nel/core/error.hpp"

namespace nel::chaos {

Angles3 abc_rhs(const AbcParams& p, const Angles3& t) {
    return {p.A * std::sin(t[2]) + p.C * std::cos(t[1]), p.B * std::sin(t[0]) + p.A * std::cos(t[2]),
            p.C * std::sin(t[1]) + p.B * std::cos(t[0])};
}

Angles3 wrap_angles(Angles3 theta) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (auto& a : theta) {
        a = std::fmod(a, two_pi);
        if (a < 0.0) a += two_pi;
        if (a >= two_pi) a = 0.0;
    }
    return theta;
}

Angles3 abc_step(const AbcParams& p, const Angles3& x, double dt) {
    auto axpy = [](const Angles3& a, double s, const Angles3& b) {
        return Angles3{a[0] + s * b[0], a[1] + s * b[1], a[2] + s * b[2]};
    };
    const auto k1 = abc_rhs(p, x);
    const auto k2 = abc_rhs(p, axpy(x, 0.5 * dt, k1));
    const auto k3 = abc_rhs(p, axpy(x, 0.5 * dt, k2));
    const auto k4 = abc_rhs(p, axpy(x, dt, k3));
    Angles3 out;
    for (int i = 0; i < 3; ++i) out[i] = x[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return wrap_angles(out);
}

const char* to_string(ForcingSpec::Mode m) { return m == ForcingSpec::Mode::CosT ? "cos_t" : "quasiperiodic"; }

void ForcingSpec::validate() const {
    auto finite = [](const auto& arr) {
        for (double v : arr)
            if (!std::isfinite(v)) return false;
        return true;
    };
    if (mode == Mode::CosT) return;
    if (!(mu > 1.0)) throw DomainError("forcing: mu must exceed 1");
    if (!std::isfinite(alpha0) || !finite(betas) || !finite(omegas) || !finite(phases) || !finite(abc_state) ||
        !std::isfinite(abc.A) || !std::isfinite(abc.B) || !std::isfinite(abc.C))
        throw DomainError("forcing: non-finite parameter");
}

double force_value(const ForcingSpec& spec, double eps, double t, const Angles3& vartheta) {
    if (spec.mode == ForcingSpec::Mode::CosT) return std::cos(t);
    const double em = std::pow(eps, spec.mu);
    double f = spec.alpha0;
    for (int n = 0; n < 4; ++n) {
        double theta = spec.omegas[n] * t + spec.phases[n];
        if (n < 3) theta += em * vartheta[n];
        f += spec.betas[n] * std::cos(theta);
    }
    return f;
}

ForcingClock::ForcingClock(const ForcingSpec& spec, double eps, double t0, Angles3 vartheta)
    : spec_(&spec), eps_(eps), t_(t0), vartheta_(vartheta) {}

double ForcingClock::value(double t, double dt_sub) {
    if (t < t_) throw DomainError("forcing: clock cannot run backwards");
    if (spec_->mode == ForcingSpec::Mode::Quasiperiodic && t > t_) {
        if (!(dt_sub > 0.0)) throw DomainError("forcing: substep must be positive");
        const auto n = static_cast<long>(std::ceil((t - t_) / dt_sub - 1e-12));
        const double h = (t - t_) / static_cast<double>(std::max(n, 1L));
        for (long i = 0; i < std::max(n, 1L); ++i) vartheta_ = abc_step(spec_->abc, vartheta_, h);
    }
    t_ = t;
    return force_value(*spec_, eps_, t, vartheta_);
}

}  // namespace nel::chaos
