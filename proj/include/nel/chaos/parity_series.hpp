#pragma once

#include <complex>
#include <span>
#include <vector>

namespace nel::chaos {

using cplx = std::complex<double>;

enum class Parity { Even, Odd };
const char* to_string(Parity p);

/// 2pi-periodic functions with a fixed parity, stored as coefficients of cos kx (even)
/// or sin kx (odd) for k = 0..modes-1. The odd k = 0 slot is always zero.
/// Pointwise work happens on n = 4 * modes equispaced points, enough to keep cubic
/// products of the stored band free of aliasing.
class ParitySeries {
public:
    ParitySeries(int modes, Parity parity);

    int modes() const { return modes_; }
    int points() const { return points_; }
    Parity parity() const { return parity_; }

    /// Samples at x_j = 2 pi j / points().
    std::vector<cplx> synthesize(std::span<const cplx> coeffs) const;
    std::vector<double> synthesize(std::span<const double> coeffs) const;
    /// Projects samples onto the stored band of this parity.
    std::vector<cplx> analyze(std::span<const cplx> values) const;
    std::vector<double> analyze(std::span<const double> values) const;

    /// Integral over [0, 2pi] of |f|^2 from the coefficients.
    double norm2_integral(std::span<const cplx> coeffs) const;
    double norm2_integral(std::span<const double> coeffs) const;

private:
    int modes_;
    int points_;
    Parity parity_;
};

}  // namespace nel::chaos
