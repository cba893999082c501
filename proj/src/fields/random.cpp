#include "nel/fields/random.hpp"

#include <random>

namespace nel::fields {
namespace {

template <std::size_t D>
SpectralField<D> draw(const SpectralGrid<D>& grid, int degree, double amplitude, std::uint64_t seed, bool real) {
    if (degree < 1) throw DomainError("random trig polynomial: degree must be at least 1");
    for (std::size_t a = 0; a < D; ++a)
        if (2 * degree >= grid.n(a)) throw DomainError("random trig polynomial: degree exceeds grid resolution");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-amplitude, amplitude);
    SpectralField<D> f(grid);
    typename SpectralGrid<D>::Index m{};
    m.fill(-degree);
    // Odometer over the cube [-degree, degree]^D in a fixed order.
    while (true) {
        const double re = u(rng);
        const double im = u(rng);
        f.set_coeff(m, cplx(re, im));
        std::size_t a = D;
        while (a-- > 0) {
            if (m[a] < degree) {
                ++m[a];
                break;
            }
            m[a] = -degree;
        }
        if (a == static_cast<std::size_t>(-1)) break;
    }
    f.coeffs()[0] = 0.0;
    return real ? project_real(f) : f;
}

}  // namespace

SpectralField2D random_trig_polynomial(const TorusGrid2D& grid, int degree, double amplitude, std::uint64_t seed) {
    return draw(grid, degree, amplitude, seed, true);
}

SpectralField2D random_complex_trig_polynomial(const TorusGrid2D& grid, int degree, double amplitude,
                                               std::uint64_t seed) {
    return draw(grid, degree, amplitude, seed, false);
}

ScalarField3D random_trig_polynomial_3d(const TorusGrid3D& grid, int degree, double amplitude, std::uint64_t seed) {
    return draw(grid, degree, amplitude, seed, true);
}

ScalarField3D random_complex_trig_polynomial_3d(const TorusGrid3D& grid, int degree, double amplitude,
                                                std::uint64_t seed) {
    return draw(grid, degree, amplitude, seed, false);
}

VectorField3D random_solenoidal_3d(const TorusGrid3D& grid, int degree, double amplitude, std::uint64_t seed) {
    VectorField3D a(random_trig_polynomial_3d(grid, degree, amplitude, seed),
                    random_trig_polynomial_3d(grid, degree, amplitude, seed + 1),
                    random_trig_polynomial_3d(grid, degree, amplitude, seed + 2));
    return curl_3d(a);
}

VectorField3D scaled_to_sup(const VectorField3D& f, double amplitude) {
    const double s = f.sup_norm();
    return s > 0.0 ? cplx(amplitude / s) * f : f;
}

}  // namespace nel::fields
