#pragma once

#include <cmath>
#include <random>

#include "nel/fields/operators.hpp"

namespace nel::test {

/// Real mean-free trig polynomial with |m|, |n| <= degree and coefficients
/// uniform in [-1, 1] damped by 1/(1 + m^2 + n^2).
inline fields::SpectralField2D random_trig_poly(const fields::TorusGrid2D& grid, int degree, std::mt19937_64& rng,
                                                double amplitude = 1.0) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    fields::SpectralField2D f(grid);
    for (int m = -degree; m <= degree; ++m)
        for (int n = -degree; n <= degree; ++n)
            f.set_coeff({m, n}, amplitude * fields::cplx(u(rng), u(rng)) / (1.0 + m * m + n * n));
    return fields::remove_mean(fields::project_real(f));
}

inline fields::ScalarField3D random_trig_poly_3d(const fields::TorusGrid3D& grid, int degree, std::mt19937_64& rng,
                                                 double amplitude = 1.0) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    fields::ScalarField3D f(grid);
    for (int a = -degree; a <= degree; ++a)
        for (int b = -degree; b <= degree; ++b)
            for (int c = -degree; c <= degree; ++c)
                f.set_coeff({a, b, c}, amplitude * fields::cplx(u(rng), u(rng)) / (1.0 + a * a + b * b + c * c));
    return fields::remove_mean(fields::project_real(f));
}

/// max |a - b| over grid points.
template <std::size_t D>
double max_diff(const fields::SpectralField<D>& a, const fields::SpectralField<D>& b) {
    return (a - b).sup_norm();
}

}  // namespace nel::test
