#include "nel/fields/spectral_field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nel/core/fft.hpp"

namespace nel::fields {

template <std::size_t D>
SpectralGrid<D>::SpectralGrid(Index shape, std::array<double, D> k_scale, double dealias_fraction)
    : shape_(shape), k_scale_(k_scale), dealias_fraction_(dealias_fraction), size_(1) {
    for (std::size_t a = 0; a < D; ++a) {
        if (shape_[a] < 4 || shape_[a] % 2 != 0) {
            std::ostringstream msg;
            msg << "grid: axis " << a << " needs an even point count >= 4, got " << shape_[a];
            throw DomainError(msg.str());
        }
        if (!(k_scale_[a] > 0.0) || !std::isfinite(k_scale_[a]))
            throw DomainError("grid: wavenumber scale (alpha) must be positive");
        size_ *= static_cast<std::size_t>(shape_[a]);
    }
    if (!(dealias_fraction_ > 0.0 && dealias_fraction_ <= 1.0))
        throw DomainError("grid: dealias fraction must lie in (0, 1]");

    auto t = std::make_shared<Tables>();
    t->modes.resize(size_);
    for (std::size_t flat = 0; flat < size_; ++flat) {
        std::size_t rest = flat;
        for (std::size_t a = D; a-- > 0;) {
            t->modes[flat][a] = fft::signed_mode(static_cast<int>(rest % static_cast<std::size_t>(shape_[a])), shape_[a]);
            rest /= static_cast<std::size_t>(shape_[a]);
        }
    }
    t->conjugate.resize(size_);
    t->k_squared.resize(size_);
    t->kept.resize(size_);
    for (std::size_t flat = 0; flat < size_; ++flat) {
        Index neg{};
        for (std::size_t a = 0; a < D; ++a) neg[a] = -t->modes[flat][a];
        t->conjugate[flat] = flat_of(neg);
        t->k_squared[flat] = k_squared(t->modes[flat]);
        t->kept[flat] = kept(t->modes[flat], dealias_fraction_) ? 1 : 0;
    }
    tables_ = std::move(t);
}

template <std::size_t D>
std::size_t SpectralGrid<D>::flat_of(const Index& modes) const {
    std::size_t flat = 0;
    for (std::size_t a = 0; a < D; ++a)
        flat = flat * static_cast<std::size_t>(shape_[a]) + static_cast<std::size_t>(fft::bin_of(modes[a], shape_[a]));
    return flat;
}

template <std::size_t D>
typename SpectralGrid<D>::Index SpectralGrid<D>::point(std::size_t flat) const {
    Index p{};
    for (std::size_t a = D; a-- > 0;) {
        p[a] = static_cast<int>(flat % static_cast<std::size_t>(shape_[a]));
        flat /= static_cast<std::size_t>(shape_[a]);
    }
    return p;
}

template <std::size_t D>
std::array<double, D> SpectralGrid<D>::coordinates(std::size_t flat) const {
    Index p = point(flat);
    std::array<double, D> x{};
    for (std::size_t a = 0; a < D; ++a) x[a] = p[a] * spacing(a);
    return x;
}

template <std::size_t D>
double SpectralGrid<D>::k_squared(const Index& modes) const {
    double s = 0.0;
    for (std::size_t a = 0; a < D; ++a) {
        double k = wavenumber(a, modes[a]);
        s += k * k;
    }
    return s;
}

template <std::size_t D>
bool SpectralGrid<D>::kept(const Index& modes, double fraction) const {
    for (std::size_t a = 0; a < D; ++a)
        if (2.0 * std::abs(modes[a]) >= fraction * shape_[a]) return false;
    return true;
}

template <std::size_t D>
SpectralGrid<D> SpectralGrid<D>::with_dealias(double fraction) const {
    return SpectralGrid(shape_, k_scale_, fraction);
}

template <std::size_t D>
bool SpectralGrid<D>::operator==(const SpectralGrid& other) const {
    return shape_ == other.shape_ && k_scale_ == other.k_scale_;
}

TorusGrid2D make_torus_grid_2d(double alpha, int nx, int ny, double dealias_fraction) {
    return TorusGrid2D({nx, ny}, {alpha, 1.0}, dealias_fraction);
}

TorusGrid3D make_torus_grid_3d(int nx, int ny, int nz, double dealias_fraction) {
    return TorusGrid3D({nx, ny, nz}, {1.0, 1.0, 1.0}, dealias_fraction);
}

template <std::size_t D>
SpectralField<D>::SpectralField(Grid grid) : grid_(std::move(grid)), coeffs_(grid_.size(), cplx{}) {}

template <std::size_t D>
SpectralField<D>::SpectralField(Grid grid, std::vector<cplx> coeffs)
    : grid_(std::move(grid)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != grid_.size()) throw StructuralError("field: coefficient count does not match grid");
}

template <std::size_t D>
SpectralField<D> SpectralField<D>::from_physical(const Grid& grid, std::span<const cplx> values) {
    if (values.size() != grid.size()) throw StructuralError("field: sample count does not match grid");
    std::vector<cplx> c(grid.size());
    fft::forward(grid.shape(), values, c);
    const double scale = 1.0 / static_cast<double>(grid.size());
    for (auto& v : c) v *= scale;
    return SpectralField(grid, std::move(c));
}

template <std::size_t D>
SpectralField<D> SpectralField<D>::from_physical(const Grid& grid, std::span<const double> values) {
    std::vector<cplx> tmp(values.begin(), values.end());
    auto f = from_physical(grid, std::span<const cplx>(tmp));
    // Real samples: drop the Nyquist imaginary parts and symmetrize rounding.
    auto& c = f.coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::size_t j = grid.conjugate(i);
        if (j < i) continue;
        if (j == i) {
            c[i] = cplx(c[i].real(), 0.0);
        } else {
            cplx avg = 0.5 * (c[i] + std::conj(c[j]));
            c[i] = avg;
            c[j] = std::conj(avg);
        }
    }
    return f;
}

template <std::size_t D>
bool SpectralField<D>::is_real(double tol) const {
    double scale2 = 0.0;
    for (const auto& v : coeffs_) scale2 = std::max(scale2, std::norm(v));
    if (scale2 == 0.0) return true;
    const double limit2 = tol * tol * scale2;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        // Bins built from zero and Nyquist modes alias onto themselves; only their imaginary part matters.
        const std::size_t j = grid_.conjugate(i);
        if (j == i) {
            if (coeffs_[i].imag() * coeffs_[i].imag() > limit2) return false;
        } else if (std::norm(coeffs_[i] - std::conj(coeffs_[j])) > limit2) {
            return false;
        }
    }
    return true;
}

template <std::size_t D>
std::vector<cplx> SpectralField<D>::physical() const {
    std::vector<cplx> out(grid_.size());
    fft::backward(grid_.shape(), coeffs_, out);
    return out;
}

template <std::size_t D>
std::vector<double> SpectralField<D>::physical_real() const {
    auto v = physical();
    std::vector<double> out(v.size());
    std::transform(v.begin(), v.end(), out.begin(), [](cplx z) { return z.real(); });
    return out;
}

template <std::size_t D>
double SpectralField<D>::sup_norm() const {
    double m = 0.0;
    for (const auto& v : physical()) m = std::max(m, std::abs(v));
    return m;
}

template <std::size_t D>
double SpectralField<D>::rms() const {
    double s = 0.0;
    for (const auto& v : physical()) s += std::norm(v);
    return std::sqrt(s / static_cast<double>(grid_.size()));
}

template <std::size_t D>
SpectralField<D>& SpectralField<D>::operator+=(const SpectralField& other) {
    require_same_grid(*this, other, "operator+");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

template <std::size_t D>
SpectralField<D>& SpectralField<D>::operator-=(const SpectralField& other) {
    require_same_grid(*this, other, "operator-");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

template <std::size_t D>
SpectralField<D>& SpectralField<D>::operator*=(cplx s) {
    for (auto& v : coeffs_) v *= s;
    return *this;
}

template <std::size_t D>
void require_same_grid(const SpectralField<D>& a, const SpectralField<D>& b, const char* op) {
    if (!(a.grid() == b.grid())) throw StructuralError(std::string(op) + ": fields live on different grids");
}

template class SpectralGrid<2>;
template class SpectralGrid<3>;
template class SpectralField<2>;
template class SpectralField<3>;
template void require_same_grid<2>(const SpectralField<2>&, const SpectralField<2>&, const char*);
template void require_same_grid<3>(const SpectralField<3>&, const SpectralField<3>&, const char*);

}  // namespace nel::fields
