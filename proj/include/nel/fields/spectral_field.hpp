#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <memory>
#include <numbers>
#include <span>
#include <type_traits>
#include <vector>

#include "nel/core/error.hpp"

namespace nel::fields {

using cplx = std::complex<double>;

/// Periodic box with D axes. Axis a has n[a] grid points, period 2*pi/k_scale[a],
/// and mode m on that axis has wavenumber k_scale[a]*m.
template <std::size_t D>
class SpectralGrid {
public:
    using Index = std::array<int, D>;

    SpectralGrid(Index shape, std::array<double, D> k_scale, double dealias_fraction);

    const Index& shape() const { return shape_; }
    int n(std::size_t axis) const { return shape_[axis]; }
    double k_scale(std::size_t axis) const { return k_scale_[axis]; }
    double length(std::size_t axis) const { return 2.0 * std::numbers::pi / k_scale_[axis]; }
    double spacing(std::size_t axis) const { return length(axis) / shape_[axis]; }
    double dealias_fraction() const { return dealias_fraction_; }
    std::size_t size() const { return size_; }

    /// Signed mode numbers of the coefficient stored at flat index `flat`.
    const Index& modes(std::size_t flat) const { return tables_->modes[flat]; }
    /// Flat index of the mode -modes(flat).
    std::size_t conjugate(std::size_t flat) const { return tables_->conjugate[flat]; }
    /// k_squared(modes(flat)).
    double k_squared_at(std::size_t flat) const { return tables_->k_squared[flat]; }
    /// kept(modes(flat), dealias_fraction()).
    bool dealias_kept(std::size_t flat) const { return tables_->kept[flat] != 0; }
    /// Flat index of the coefficient holding the given signed modes.
    std::size_t flat_of(const Index& modes) const;
    /// Grid point indices of physical sample `flat`.
    Index point(std::size_t flat) const;
    std::array<double, D> coordinates(std::size_t flat) const;

    double wavenumber(std::size_t axis, int mode) const { return k_scale_[axis] * mode; }
    double k_squared(const Index& modes) const;
    bool is_nyquist(std::size_t axis, int mode) const { return 2 * mode == shape_[axis]; }
    /// Mode survives truncation at `fraction` of the half-spectrum on every axis.
    bool kept(const Index& modes, double fraction) const;

    SpectralGrid with_dealias(double fraction) const;

    bool operator==(const SpectralGrid& other) const;

private:
    struct Tables {
        std::vector<Index> modes;
        std::vector<std::size_t> conjugate;
        std::vector<double> k_squared;
        std::vector<char> kept;
    };

    Index shape_;
    std::array<double, D> k_scale_;
    double dealias_fraction_;
    std::size_t size_;
    std::shared_ptr<const Tables> tables_;  // shared by copies of the grid
};

using TorusGrid2D = SpectralGrid<2>;
using TorusGrid3D = SpectralGrid<3>;

/// Domain [0, 2pi/alpha] x [0, 2pi]; mode (m, n) has wavevector (alpha m, n).
TorusGrid2D make_torus_grid_2d(double alpha, int nx, int ny, double dealias_fraction = 2.0 / 3.0);
/// Domain [0, 2pi]^3.
TorusGrid3D make_torus_grid_3d(int nx, int ny, int nz, double dealias_fraction = 2.0 / 3.0);

/// Scalar field stored as its complex Fourier coefficients (normalized so that
/// f(x) = sum_k c_k exp(i k.x)). Real fields carry Hermitian-symmetric coefficients.
template <std::size_t D>
class SpectralField {
public:
    using Grid = SpectralGrid<D>;
    using Index = typename Grid::Index;

    explicit SpectralField(Grid grid);
    SpectralField(Grid grid, std::vector<cplx> coeffs);

    static SpectralField from_physical(const Grid& grid, std::span<const cplx> values);
    static SpectralField from_physical(const Grid& grid, std::span<const double> values);

    /// Samples fn(coordinates) on the grid and transforms.
    template <class Fn>
    static SpectralField sample(const Grid& grid, Fn&& fn);

    const Grid& grid() const { return grid_; }
    std::span<const cplx> coeffs() const { return coeffs_; }
    std::span<cplx> coeffs() { return coeffs_; }

    cplx coeff(const Index& modes) const { return coeffs_[grid_.flat_of(modes)]; }
    void set_coeff(const Index& modes, cplx value) { coeffs_[grid_.flat_of(modes)] = value; }
    cplx mean() const { return coeffs_[0]; }

    /// Hermitian symmetry c(-k) = conj(c(k)) within tol relative to the largest coefficient.
    bool is_real(double tol = 1e-12) const;
    bool is_mean_zero(double tol = 1e-12) const { return std::abs(coeffs_[0]) <= tol; }

    std::vector<cplx> physical() const;
    std::vector<double> physical_real() const;

    /// max |f| over grid points.
    double sup_norm() const;
    /// Root-mean-square over grid points.
    double rms() const;

    SpectralField& operator+=(const SpectralField& other);
    SpectralField& operator-=(const SpectralField& other);
    SpectralField& operator*=(cplx s);

    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
    friend SpectralField operator*(cplx s, SpectralField a) { return a *= s; }
    friend SpectralField operator*(SpectralField a, cplx s) { return a *= s; }
    friend SpectralField operator-(SpectralField a) { return a *= -1.0; }

private:
    Grid grid_;
    std::vector<cplx> coeffs_;
};

using SpectralField2D = SpectralField<2>;
using ScalarField3D = SpectralField<3>;

template <std::size_t D>
template <class Fn>
SpectralField<D> SpectralField<D>::sample(const Grid& grid, Fn&& fn) {
    using R = std::invoke_result_t<Fn, std::array<double, D>>;
    if constexpr (std::is_convertible_v<R, double>) {
        std::vector<double> values(grid.size());
        for (std::size_t i = 0; i < values.size(); ++i) values[i] = static_cast<double>(fn(grid.coordinates(i)));
        return from_physical(grid, std::span<const double>(values));
    } else {
        std::vector<cplx> values(grid.size());
        for (std::size_t i = 0; i < values.size(); ++i) values[i] = static_cast<cplx>(fn(grid.coordinates(i)));
        return from_physical(grid, std::span<const cplx>(values));
    }
}

/// Raises StructuralError unless both fields live on the same grid.
template <std::size_t D>
void require_same_grid(const SpectralField<D>& a, const SpectralField<D>& b, const char* op);

}  // namespace nel::fields
