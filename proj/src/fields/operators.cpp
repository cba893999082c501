#include "nel/fields/operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nel/core/fft.hpp"

namespace nel::fields {
namespace {

constexpr double kMeanTolerance = 1e-12;

double coefficient_scale(std::span<const cplx> c) {
    double s = 0.0;
    for (const auto& v : c) s = std::max(s, std::abs(v));
    return s;
}

template <std::size_t D>
void require_mean_free(const SpectralField<D>& f, const char* op) {
    double tol = kMeanTolerance * std::max(1.0, coefficient_scale(f.coeffs()));
    if (std::abs(f.mean()) > tol) {
        std::ostringstream msg;
        msg << op << ": field has nonzero mean " << std::abs(f.mean());
        throw DomainError(msg.str());
    }
}

template <std::size_t D>
void truncate_in_place(SpectralField<D>& f, double fraction) {
    const auto& g = f.grid();
    auto c = f.coeffs();
    if (fraction == g.dealias_fraction()) {
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!g.dealias_kept(i)) c[i] = 0.0;
        return;
    }
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!g.kept(g.modes(i), fraction)) c[i] = 0.0;
}

/// Transforms grid samples back to a truncated spectral field.
template <std::size_t D>
SpectralField<D> from_grid_truncated(const SpectralGrid<D>& grid, const std::vector<cplx>& values, double fraction) {
    auto f = SpectralField<D>::from_physical(grid, std::span<const cplx>(values));
    truncate_in_place(f, fraction);
    return f;
}

/// Physical samples of d/dx_axis of f restricted to the grid's dealias band.
template <std::size_t D>
void band_derivative_physical(const SpectralField<D>& f, std::size_t axis, std::vector<cplx>& spec,
                              std::vector<cplx>& out) {
    const auto& g = f.grid();
    auto src = f.coeffs();
    for (std::size_t i = 0; i < src.size(); ++i)
        spec[i] = g.dealias_kept(i) ? cplx(0.0, g.wavenumber(axis, g.modes(i)[axis])) * src[i] : cplx{};
    fft::backward(g.shape(), spec, out);
}

/// Spectral field of physical samples, truncated to the dealias band.
template <std::size_t D>
SpectralField<D> band_from_physical(const SpectralGrid<D>& g, const std::vector<cplx>& values) {
    std::vector<cplx> c(g.size());
    fft::forward(g.shape(), values, c);
    const double scale = 1.0 / static_cast<double>(g.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = g.dealias_kept(i) ? c[i] * scale : cplx{};
    return SpectralField<D>(g, std::move(c));
}

/// Per-thread work arrays, reused across calls to avoid large zeroed allocations.
std::array<std::vector<cplx>, 5>& workspace(std::size_t n) {
    thread_local std::array<std::vector<cplx>, 5> ws;
    for (auto& v : ws)
        if (v.size() != n) v.resize(n);
    return ws;
}

std::vector<SpectralField2D> brackets_impl(const SpectralField2D& f, std::span<const SpectralField2D* const> gs) {
    const auto& grid = f.grid();
    const std::size_t n = grid.size();
    auto& [spec, fx, fy, gx, gy] = workspace(n);
    band_derivative_physical(f, 0, spec, fx);
    band_derivative_physical(f, 1, spec, fy);
    std::vector<SpectralField2D> out;
    out.reserve(gs.size());
    for (const auto* g : gs) {
        require_same_grid(f, *g, "bracket");
        band_derivative_physical(*g, 0, spec, gx);
        band_derivative_physical(*g, 1, spec, gy);
        for (std::size_t i = 0; i < n; ++i) gx[i] = fx[i] * gy[i] - fy[i] * gx[i];
        out.push_back(band_from_physical(grid, gx));
        out.back().coeffs()[0] = 0.0;
    }
    return out;
}

SpectralField2D bracket_impl(const SpectralField2D& f, const SpectralField2D& g) {
    const SpectralField2D* gs[] = {&g};
    return std::move(brackets_impl(f, gs).front());
}

}  // namespace

template <std::size_t D>
SpectralField<D> derivative(const SpectralField<D>& f, std::size_t axis) {
    SpectralField<D> out(f.grid());
    const auto& g = f.grid();
    auto src = f.coeffs();
    auto dst = out.coeffs();
    for (std::size_t i = 0; i < src.size(); ++i) {
        const int m = g.modes(i)[axis];
        if (g.is_nyquist(axis, m)) continue;
        dst[i] = cplx(0.0, g.wavenumber(axis, m)) * src[i];
    }
    return out;
}

template <std::size_t D>
SpectralField<D> laplacian(const SpectralField<D>& f) {
    SpectralField<D> out(f.grid());
    const auto& g = f.grid();
    auto src = f.coeffs();
    auto dst = out.coeffs();
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = -g.k_squared_at(i) * src[i];
    return out;
}

template <std::size_t D>
SpectralField<D> truncate(const SpectralField<D>& f, double fraction) {
    auto out = f;
    truncate_in_place(out, fraction);
    return out;
}

template <std::size_t D>
SpectralField<D> project_real(const SpectralField<D>& f) {
    const auto& g = f.grid();
    SpectralField<D> out(g);
    auto src = f.coeffs();
    auto dst = out.coeffs();
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = 0.5 * (src[i] + std::conj(src[g.conjugate(i)]));
    return out;
}

template <std::size_t D>
SpectralField<D> remove_mean(SpectralField<D> f) {
    f.coeffs()[0] = 0.0;
    return f;
}

template <std::size_t D>
SpectralField<D> product(const SpectralField<D>& f, const SpectralField<D>& g, std::optional<double> fraction) {
    require_same_grid(f, g, "product");
    const double frac = fraction.value_or(f.grid().dealias_fraction());
    auto a = truncate(f, frac).physical();
    auto b = truncate(g, frac).physical();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
    return from_grid_truncated(f.grid(), a, frac);
}

template SpectralField<2> derivative(const SpectralField<2>&, std::size_t);
template SpectralField<3> derivative(const SpectralField<3>&, std::size_t);
template SpectralField<2> laplacian(const SpectralField<2>&);
template SpectralField<3> laplacian(const SpectralField<3>&);
template SpectralField<2> truncate(const SpectralField<2>&, double);
template SpectralField<3> truncate(const SpectralField<3>&, double);
template SpectralField<2> project_real(const SpectralField<2>&);
template SpectralField<3> project_real(const SpectralField<3>&);
template SpectralField<2> remove_mean(SpectralField<2>);
template SpectralField<3> remove_mean(SpectralField<3>);
template SpectralField<2> product(const SpectralField<2>&, const SpectralField<2>&, std::optional<double>);
template SpectralField<3> product(const SpectralField<3>&, const SpectralField<3>&, std::optional<double>);

// ---------------------------------------------------------------------------
// 2D
// ---------------------------------------------------------------------------

SpectralField2D invert_laplacian(const SpectralField2D& f) {
    require_mean_free(f, "invert_laplacian");
    const auto& g = f.grid();
    SpectralField2D out(g);
    auto src = f.coeffs();
    auto dst = out.coeffs();
    for (std::size_t i = 1; i < src.size(); ++i) dst[i] = -src[i] / g.k_squared_at(i);
    return out;
}

SpectralField2D bracket(const SpectralField2D& f, const SpectralField2D& g) {
    if (!f.is_real() || !g.is_real()) throw DomainError("bracket: inputs must be real-valued fields");
    return project_real(bracket_impl(f, g));
}

SpectralField2D bracket_complex(const SpectralField2D& f, const SpectralField2D& g) { return bracket_impl(f, g); }

std::vector<SpectralField2D> brackets_complex(const SpectralField2D& f, std::span<const SpectralField2D* const> gs) {
    return brackets_impl(f, gs);
}

Velocity2D velocity_from_stream(const SpectralField2D& psi) {
    return {-derivative(psi, 1), derivative(psi, 0)};
}

SpectralField2D ns_rhs_2d(const SpectralField2D& omega, double nu, const SpectralField2D& forcing) {
    if (!(nu >= 0.0)) throw DomainError("ns_rhs_2d: viscosity must be non-negative");
    require_same_grid(omega, forcing, "ns_rhs_2d");
    auto psi = invert_laplacian(omega);
    auto rhs = -bracket(psi, omega);
    if (nu > 0.0) rhs += nu * (laplacian(omega) + forcing);
    return rhs;
}

// ---------------------------------------------------------------------------
// 3D
// ---------------------------------------------------------------------------

VectorField3D& VectorField3D::operator+=(const VectorField3D& o) {
    for (std::size_t i = 0; i < 3; ++i) c[i] += o.c[i];
    return *this;
}

VectorField3D& VectorField3D::operator-=(const VectorField3D& o) {
    for (std::size_t i = 0; i < 3; ++i) c[i] -= o.c[i];
    return *this;
}

VectorField3D& VectorField3D::operator*=(cplx s) {
    for (auto& comp : c) comp *= s;
    return *this;
}

double VectorField3D::sup_norm() const {
    auto a = c[0].physical();
    auto b = c[1].physical();
    auto d = c[2].physical();
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::sqrt(std::norm(a[i]) + std::norm(b[i]) + std::norm(d[i])));
    return m;
}

bool VectorField3D::is_mean_zero(double tol) const {
    return c[0].is_mean_zero(tol) && c[1].is_mean_zero(tol) && c[2].is_mean_zero(tol);
}

ScalarField3D divergence(const VectorField3D& u) {
    return derivative(u[0], 0) + derivative(u[1], 1) + derivative(u[2], 2);
}

double max_divergence_symbol(const VectorField3D& u) {
    const auto& g = u.grid();
    double m = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto k = g.modes(i);
        cplx s = 0.0;
        for (std::size_t a = 0; a < 3; ++a) s += g.wavenumber(a, k[a]) * u[a].coeffs()[i];
        m = std::max(m, std::abs(s));
    }
    return m;
}

VectorField3D curl_3d(const VectorField3D& u) {
    for (std::size_t i = 0; i < 3; ++i) require_mean_free(u[i], "curl_3d");
    return VectorField3D(derivative(u[2], 1) - derivative(u[1], 2),
                         derivative(u[0], 2) - derivative(u[2], 0),
                         derivative(u[1], 0) - derivative(u[0], 1));
}

VectorField3D biot_savart_3d(const VectorField3D& omega) {
    for (std::size_t i = 0; i < 3; ++i) require_mean_free(omega[i], "biot_savart_3d");
    const auto& g = omega.grid();
    // u_hat = i k x omega_hat / |k|^2. Modes touching a Nyquist bin are dropped.
    VectorField3D u(g);
    for (std::size_t i = 1; i < g.size(); ++i) {
        auto m = g.modes(i);
        if (g.is_nyquist(0, m[0]) || g.is_nyquist(1, m[1]) || g.is_nyquist(2, m[2])) continue;
        std::array<double, 3> k{};
        for (std::size_t a = 0; a < 3; ++a) k[a] = g.wavenumber(a, m[a]);
        double k2 = g.k_squared_at(i);
        const cplx w0 = omega[0].coeffs()[i], w1 = omega[1].coeffs()[i], w2 = omega[2].coeffs()[i];
        const cplx I(0.0, 1.0);
        u[0].coeffs()[i] = I * (k[1] * w2 - k[2] * w1) / k2;
        u[1].coeffs()[i] = I * (k[2] * w0 - k[0] * w2) / k2;
        u[2].coeffs()[i] = I * (k[0] * w1 - k[1] * w0) / k2;
    }
    return u;
}

ScalarField3D advect_3d(const VectorField3D& a, const ScalarField3D& f) {
    require_same_grid(a[0], f, "advect_3d");
    const auto& g = f.grid();
    const std::size_t n = g.size();
    auto& [spec, comp, deriv, acc, unused] = workspace(n);
    std::fill(acc.begin(), acc.end(), cplx{});
    for (std::size_t axis = 0; axis < 3; ++axis) {
        auto src = a[axis].coeffs();
        for (std::size_t i = 0; i < n; ++i) spec[i] = g.dealias_kept(i) ? src[i] : cplx{};
        fft::backward(g.shape(), spec, comp);
        band_derivative_physical(f, axis, spec, deriv);
        for (std::size_t p = 0; p < n; ++p) acc[p] += comp[p] * deriv[p];
    }
    return band_from_physical(g, acc);
}

VectorField3D advect_3d(const VectorField3D& a, const VectorField3D& f) {
    return VectorField3D(advect_3d(a, f[0]), advect_3d(a, f[1]), advect_3d(a, f[2]));
}

VectorField3D laplacian(const VectorField3D& f) {
    return VectorField3D(laplacian(f[0]), laplacian(f[1]), laplacian(f[2]));
}

VectorField3D ns_rhs_3d(const VectorField3D& omega, double nu, const VectorField3D& forcing) {
    if (!(nu >= 0.0)) throw DomainError("ns_rhs_3d: viscosity must be non-negative");
    auto u = biot_savart_3d(omega);
    VectorField3D rhs = advect_3d(omega, u) - advect_3d(u, omega);
    for (std::size_t i = 0; i < 3; ++i) rhs[i] = remove_mean(project_real(rhs[i]));
    if (nu > 0.0) rhs += nu * (laplacian(omega) + forcing);
    return rhs;
}

}  // namespace nel::fields
