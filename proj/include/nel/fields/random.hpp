#pragma once

#include <cstdint>

#include "nel/fields/operators.hpp"

namespace nel::fields {

/// Seeded random trig polynomials. Coefficients of every nonzero mode with all
/// |m_a| <= degree are drawn with real and imaginary parts uniform in [-amplitude, amplitude].
/// The real variants are Hermitian-projected; all variants are mean-free.
SpectralField2D random_trig_polynomial(const TorusGrid2D& grid, int degree, double amplitude, std::uint64_t seed);
SpectralField2D random_complex_trig_polynomial(const TorusGrid2D& grid, int degree, double amplitude,
                                               std::uint64_t seed);
ScalarField3D random_trig_polynomial_3d(const TorusGrid3D& grid, int degree, double amplitude, std::uint64_t seed);
ScalarField3D random_complex_trig_polynomial_3d(const TorusGrid3D& grid, int degree, double amplitude,
                                                std::uint64_t seed);
/// Curl of a random real vector potential: mean-free and divergence-free.
VectorField3D random_solenoidal_3d(const TorusGrid3D& grid, int degree, double amplitude, std::uint64_t seed);

/// Rescales f so that max |f| over grid points equals `amplitude` (zero fields are returned unchanged).
template <std::size_t D>
SpectralField<D> scaled_to_sup(const SpectralField<D>& f, double amplitude) {
    const double s = f.sup_norm();
    return s > 0.0 ? (amplitude / s) * f : f;
}
VectorField3D scaled_to_sup(const VectorField3D& f, double amplitude);

}  // namespace nel::fields
