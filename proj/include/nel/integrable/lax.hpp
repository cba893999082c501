#pragma once

#include <functional>

#include "nel/fields/operators.hpp"
#include "nel/integrable/report.hpp"

namespace nel::integrable {

using fields::cplx;
using fields::ScalarField3D;
using fields::SpectralField2D;
using fields::VectorField3D;

/// L phi = {Omega, phi}, A phi = {Psi, phi} with Psi = invert_laplacian(Omega).
struct LaxApplication2D {
    SpectralField2D l_phi;
    SpectralField2D a_phi;
};

/// phi may be complex. Omega must be real and mean-free.
LaxApplication2D lax_operators_2d(const SpectralField2D& omega, const SpectralField2D& phi);

/// max |L phi - lambda phi| for a user-supplied eigenpair candidate.
double eigen_residual_2d(const SpectralField2D& omega, const SpectralField2D& phi, cplx lambda);

/// Co-evolves Omega by 2D Euler and phi by d(phi)/dt = -{Psi, phi} with RK4, transports
/// q0 = {Omega0, phi0} the same way, and reports max |{Omega(T), phi(T)} - q(T)|.
/// wrong_sign flips the sign of the Euler bracket (negative control).
/// Throws ComputationalError if the step violates the advective stability limit or the run blows up.
ResidualReport transported_eigenfield_check_2d(const SpectralField2D& omega0, const SpectralField2D& phi0, double T,
                                               double dt, bool wrong_sign = false);

/// Time-dependent velocity prescribed independently of the vorticity.
using VelocityFn = std::function<VectorField3D(double t)>;

/// (1 + modulation sin t) times the ABC field (A sin z + C cos y, B sin x + A cos z, C sin y + B cos x).
VelocityFn modulated_abc_velocity(const fields::TorusGrid3D& grid, double a, double b, double c, double modulation);

/// 3D analogue with L phi = (Omega . grad) phi and A phi = (u . grad) phi. With enforce_curl the
/// velocity is biot_savart_3d(Omega) and Omega0 must be divergence-free; otherwise `prescribed`
/// supplies u(t) and Omega evolves under the same vorticity equation without the curl constraint.
ResidualReport transported_eigenfield_check_3d(const VectorField3D& omega0, const ScalarField3D& phi0, double T,
                                               double dt, bool enforce_curl, const VelocityFn& prescribed = {});

}  // namespace nel::integrable
