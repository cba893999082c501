#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "nel/fields/spectral_field.hpp"

namespace nel::fields {

// ---------------------------------------------------------------------------
// Dimension-generic spectral calculus
// ---------------------------------------------------------------------------

/// d/dx_axis. The Nyquist bin of that axis is zeroed (its derivative is not representable).
template <std::size_t D>
SpectralField<D> derivative(const SpectralField<D>& f, std::size_t axis);

template <std::size_t D>
SpectralField<D> laplacian(const SpectralField<D>& f);

/// Zeroes every mode outside the kept band |m_a| < fraction * n_a / 2.
template <std::size_t D>
SpectralField<D> truncate(const SpectralField<D>& f, double fraction);

/// Enforces Hermitian symmetry, i.e. returns the real part of the represented function.
template <std::size_t D>
SpectralField<D> project_real(const SpectralField<D>& f);

template <std::size_t D>
SpectralField<D> remove_mean(SpectralField<D> f);

/// Dealiased pointwise product: inputs truncated, multiplied on the grid, result truncated.
/// `fraction` defaults to the grid's dealias fraction.
template <std::size_t D>
SpectralField<D> product(const SpectralField<D>& f, const SpectralField<D>& g,
                         std::optional<double> fraction = std::nullopt);

// ---------------------------------------------------------------------------
// 2D on the alpha-aspect torus
// ---------------------------------------------------------------------------

/// Solves Laplacian(psi) = f on the mean-zero subspace. Throws DomainError if f has a mean.
SpectralField2D invert_laplacian(const SpectralField2D& f);

/// Poisson bracket {f, g} = f_x g_y - f_y g_x of two real fields, dealiased and mean-free.
SpectralField2D bracket(const SpectralField2D& f, const SpectralField2D& g);

/// Same bracket without the realness requirement (complex eigenfunctions).
SpectralField2D bracket_complex(const SpectralField2D& f, const SpectralField2D& g);
/// {f, g} for several g at once, sharing the transforms of f. No realness requirement.
std::vector<SpectralField2D> brackets_complex(const SpectralField2D& f, std::span<const SpectralField2D* const> gs);

struct Velocity2D {
    SpectralField2D u;
    SpectralField2D v;
};

/// u = -psi_y, v = psi_x.
Velocity2D velocity_from_stream(const SpectralField2D& psi);

/// d(omega)/dt = -{psi, omega} + nu (Laplacian(omega) + forcing), psi = invert_laplacian(omega).
SpectralField2D ns_rhs_2d(const SpectralField2D& omega, double nu, const SpectralField2D& forcing);

// ---------------------------------------------------------------------------
// 3D on [0, 2pi]^3
// ---------------------------------------------------------------------------

struct VectorField3D {
    std::array<ScalarField3D, 3> c;

    explicit VectorField3D(const TorusGrid3D& grid) : c{ScalarField3D(grid), ScalarField3D(grid), ScalarField3D(grid)} {}
    VectorField3D(ScalarField3D x, ScalarField3D y, ScalarField3D z) : c{std::move(x), std::move(y), std::move(z)} {}

    const TorusGrid3D& grid() const { return c[0].grid(); }
    ScalarField3D& operator[](std::size_t i) { return c[i]; }
    const ScalarField3D& operator[](std::size_t i) const { return c[i]; }

    VectorField3D& operator+=(const VectorField3D& o);
    VectorField3D& operator-=(const VectorField3D& o);
    VectorField3D& operator*=(cplx s);
    friend VectorField3D operator+(VectorField3D a, const VectorField3D& b) { return a += b; }
    friend VectorField3D operator-(VectorField3D a, const VectorField3D& b) { return a -= b; }
    friend VectorField3D operator*(cplx s, VectorField3D a) { return a *= s; }

    double sup_norm() const;
    bool is_mean_zero(double tol = 1e-12) const;
};

ScalarField3D divergence(const VectorField3D& u);
/// max_k |k . u_hat(k)|, the spectral divergence residual.
double max_divergence_symbol(const VectorField3D& u);

VectorField3D curl_3d(const VectorField3D& u);
/// u = -invert_laplacian(curl(omega)); divergence-free by construction.
VectorField3D biot_savart_3d(const VectorField3D& omega);
/// (a . grad) f for a scalar f (real or complex).
ScalarField3D advect_3d(const VectorField3D& a, const ScalarField3D& f);
/// (a . grad) f applied componentwise.
VectorField3D advect_3d(const VectorField3D& a, const VectorField3D& f);
VectorField3D laplacian(const VectorField3D& f);

/// d(omega)/dt = -(u.grad)omega + (omega.grad)u + nu (Laplacian(omega) + forcing), u = biot_savart_3d(omega).
VectorField3D ns_rhs_3d(const VectorField3D& omega, double nu, const VectorField3D& forcing);

}  // namespace nel::fields
