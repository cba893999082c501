#include "nel/integrable/lax.hpp"

#include <cmath>
#include <sstream>

#include "nel/core/error.hpp"

namespace nel::integrable {
namespace {

// RK4 is stable for purely imaginary eigenvalues up to 2 sqrt(2); keep a margin.
constexpr double kStabilityLimit = 2.5;

int step_count(double T, double dt) {
    if (!(T > 0.0) || !(dt > 0.0) || !std::isfinite(T) || !std::isfinite(dt))
        throw DomainError("transport check: T and dt must be positive");
    return std::max(1, static_cast<int>(std::lround(T / dt)));
}

template <std::size_t D>
double max_kept_wavenumber(const fields::SpectralGrid<D>& g, std::size_t axis) {
    // Largest m with 2|m| < fraction * n.
    int m = static_cast<int>(std::ceil(g.dealias_fraction() * g.n(axis) / 2.0)) - 1;
    return g.wavenumber(axis, m);
}

double sup(const std::vector<cplx>& v) {
    double m = 0.0;
    for (const auto& z : v) m = std::max(m, std::abs(z));
    return m;
}

void require_stable(double dt, double advective_rate, double t) {
    if (!std::isfinite(advective_rate) || dt * advective_rate > kStabilityLimit) {
        std::ostringstream msg;
        msg << "transport check: step dt=" << dt << " violates the advective stability limit at t=" << t
            << " (dt * max|u| k_max = " << dt * advective_rate << ")";
        throw ComputationalError(msg.str());
    }
}

template <std::size_t D>
void fill_norms(ResidualReport& r, const fields::SpectralField<D>& residual) {
    r.residual_inf = residual.sup_norm();
    r.residual_l2 = residual.rms();
    const auto& shape = residual.grid().shape();
    r.grid.assign(shape.begin(), shape.end());
}

struct State2D {
    SpectralField2D omega, phi, q;
};

}  // namespace

LaxApplication2D lax_operators_2d(const SpectralField2D& omega, const SpectralField2D& phi) {
    if (!omega.is_real()) throw DomainError("lax_operators_2d: vorticity must be real");
    const auto psi = fields::invert_laplacian(omega);
    return {fields::bracket_complex(omega, phi), fields::bracket_complex(psi, phi)};
}

double eigen_residual_2d(const SpectralField2D& omega, const SpectralField2D& phi, cplx lambda) {
    return (lax_operators_2d(omega, phi).l_phi - lambda * phi).sup_norm();
}

ResidualReport transported_eigenfield_check_2d(const SpectralField2D& omega0, const SpectralField2D& phi0, double T,
                                               double dt, bool wrong_sign) {
    if (!omega0.is_real()) throw DomainError("transport check: vorticity must be real");
    fields::require_same_grid(omega0, phi0, "transported_eigenfield_check_2d");
    const int steps = step_count(T, dt);
    const double h = T / steps;
    const double sign = wrong_sign ? -1.0 : 1.0;
    const auto& grid = omega0.grid();
    const double kx = max_kept_wavenumber(grid, 0), ky = max_kept_wavenumber(grid, 1);

    auto rhs = [&](const State2D& s) {
        const auto psi = fields::invert_laplacian(s.omega);
        const SpectralField2D* targets[] = {&s.omega, &s.phi, &s.q};
        auto b = fields::brackets_complex(psi, targets);
        return State2D{-sign * fields::project_real(b[0]), -1.0 * b[1], -1.0 * b[2]};
    };
    auto axpy = [](const State2D& s, double a, const State2D& k) {
        return State2D{s.omega + a * k.omega, s.phi + a * k.phi, s.q + a * k.q};
    };

    State2D s{omega0, phi0, fields::bracket_complex(omega0, phi0)};
    for (int n = 0; n < steps; ++n) {
        const auto vel = fields::velocity_from_stream(fields::invert_laplacian(s.omega));
        require_stable(h, sup(vel.u.physical()) * kx + sup(vel.v.physical()) * ky, n * h);
        const auto k1 = rhs(s);
        const auto k2 = rhs(axpy(s, h / 2, k1));
        const auto k3 = rhs(axpy(s, h / 2, k2));
        const auto k4 = rhs(axpy(s, h, k3));
        s.omega += (h / 6.0) * (k1.omega + 2.0 * k2.omega + 2.0 * k3.omega + k4.omega);
        s.phi += (h / 6.0) * (k1.phi + 2.0 * k2.phi + 2.0 * k3.phi + k4.phi);
        s.q += (h / 6.0) * (k1.q + 2.0 * k2.q + 2.0 * k3.q + k4.q);
    }

    const auto residual = fields::bracket_complex(s.omega, s.phi) - s.q;
    ResidualReport r;
    r.check = "lax_2d";
    r.params = {{"T", T}, {"steps", steps}, {"wrong_sign", wrong_sign}, {"alpha", grid.k_scale(0)}};
    r.dt = h;
    fill_norms(r, residual);
    if (!std::isfinite(r.residual_inf)) throw ComputationalError("transport check: solution blew up");
    return r;
}

VelocityFn modulated_abc_velocity(const fields::TorusGrid3D& grid, double a, double b, double c, double modulation) {
    const VectorField3D base(
        ScalarField3D::sample(grid, [=](std::array<double, 3> p) { return a * std::sin(p[2]) + c * std::cos(p[1]); }),
        ScalarField3D::sample(grid, [=](std::array<double, 3> p) { return b * std::sin(p[0]) + a * std::cos(p[2]); }),
        ScalarField3D::sample(grid, [=](std::array<double, 3> p) { return c * std::sin(p[1]) + b * std::cos(p[0]); }));
    return [base, modulation](double t) { return cplx(1.0 + modulation * std::sin(t)) * base; };
}

namespace {

struct State3D {
    VectorField3D omega;
    ScalarField3D phi, q;
};

}  // namespace

ResidualReport transported_eigenfield_check_3d(const VectorField3D& omega0, const ScalarField3D& phi0, double T,
                                               double dt, bool enforce_curl, const VelocityFn& prescribed) {
    fields::require_same_grid(omega0[0], phi0, "transported_eigenfield_check_3d");
    const int steps = step_count(T, dt);
    const double h = T / steps;
    const auto& grid = phi0.grid();
    if (enforce_curl) {
        if (!omega0.is_mean_zero(1e-12)) throw DomainError("transport check 3D: vorticity must be mean-free");
        double scale = 0.0;
        for (std::size_t i = 0; i < 3; ++i)
            for (const auto& v : omega0[i].coeffs()) scale = std::max(scale, std::abs(v));
        if (fields::max_divergence_symbol(omega0) > 1e-10 * std::max(1.0, scale))
            throw DomainError("transport check 3D: vorticity must be divergence-free when the curl constraint is on");
    } else if (!prescribed) {
        throw DomainError("transport check 3D: a prescribed velocity is required without the curl constraint");
    }
    double kmax = 0.0;
    for (std::size_t a = 0; a < 3; ++a) kmax = std::max(kmax, max_kept_wavenumber(grid, a));

    auto velocity = [&](const VectorField3D& omega, double t) {
        return enforce_curl ? fields::biot_savart_3d(omega) : prescribed(t);
    };
    auto rhs = [&](const State3D& s, double t) {
        const auto u = velocity(s.omega, t);
        return State3D{fields::advect_3d(s.omega, u) - fields::advect_3d(u, s.omega),
                       -1.0 * fields::advect_3d(u, s.phi), -1.0 * fields::advect_3d(u, s.q)};
    };
    auto axpy = [](const State3D& s, double a, const State3D& k) {
        return State3D{s.omega + cplx(a) * k.omega, s.phi + a * k.phi, s.q + a * k.q};
    };

    State3D s{omega0, phi0, fields::advect_3d(omega0, phi0)};
    for (int n = 0; n < steps; ++n) {
        const double t = n * h;
        const auto u = velocity(s.omega, t);
        double umax = 0.0;
        for (std::size_t i = 0; i < 3; ++i) umax = std::max(umax, u[i].sup_norm());
        require_stable(h, std::sqrt(3.0) * umax * kmax, t);
        const auto k1 = rhs(s, t);
        const auto k2 = rhs(axpy(s, h / 2, k1), t + h / 2);
        const auto k3 = rhs(axpy(s, h / 2, k2), t + h / 2);
        const auto k4 = rhs(axpy(s, h, k3), t + h);
        s.omega += cplx(h / 6.0) * (k1.omega + cplx(2.0) * k2.omega + cplx(2.0) * k3.omega + k4.omega);
        s.phi += (h / 6.0) * (k1.phi + 2.0 * k2.phi + 2.0 * k3.phi + k4.phi);
        s.q += (h / 6.0) * (k1.q + 2.0 * k2.q + 2.0 * k3.q + k4.q);
    }

    const auto residual = fields::advect_3d(s.omega, s.phi) - s.q;
    ResidualReport r;
    r.check = "lax_3d";
    r.params = {{"T", T}, {"steps", steps}, {"enforce_curl", enforce_curl}};
    r.dt = h;
    fill_norms(r, residual);
    if (!std::isfinite(r.residual_inf)) throw ComputationalError("transport check 3D: solution blew up");
    return r;
}

}  // namespace nel::integrable
