#include "nel/chaos/parity_series.hpp"

#include <array>
#include <numbers>

#include "nel/core/error.hpp"
#include "nel/core/fft.hpp"

namespace nel::chaos {

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

ParitySeries::ParitySeries(int modes, Parity parity) : modes_(modes), points_(4 * modes), parity_(parity) {
    if (modes < 2) throw DomainError("parity series: need at least 2 modes");
}

std::vector<cplx> ParitySeries::synthesize(std::span<const cplx> coeffs) const {
    if (static_cast<int>(coeffs.size()) != modes_) throw StructuralError("parity series: coefficient count mismatch");
    std::vector<cplx> spec(points_, cplx{});
    if (parity_ == Parity::Even) {
        spec[0] = coeffs[0];
        for (int k = 1; k < modes_; ++k) spec[k] = spec[points_ - k] = 0.5 * coeffs[k];
    } else {
        const cplx half_i(0.0, 0.5);
        for (int k = 1; k < modes_; ++k) {
            spec[k] = -half_i * coeffs[k];
            spec[points_ - k] = half_i * coeffs[k];
        }
    }
    std::vector<cplx> out(points_);
    const std::array<int, 1> shape{points_};
    fft::backward(shape, spec, out);
    return out;
}

std::vector<double> ParitySeries::synthesize(std::span<const double> coeffs) const {
    std::vector<cplx> c(coeffs.begin(), coeffs.end());
    auto v = synthesize(std::span<const cplx>(c));
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].real();
    return out;
}

std::vector<cplx> ParitySeries::analyze(std::span<const cplx> values) const {
    if (static_cast<int>(values.size()) != points_) throw StructuralError("parity series: sample count mismatch");
    std::vector<cplx> spec(points_);
    const std::array<int, 1> shape{points_};
    fft::forward(shape, values, spec);
    const double scale = 1.0 / points_;
    std::vector<cplx> out(modes_, cplx{});
    if (parity_ == Parity::Even) {
        out[0] = scale * spec[0];
        for (int k = 1; k < modes_; ++k) out[k] = scale * (spec[k] + spec[points_ - k]);
    } else {
        const cplx i(0.0, 1.0);
        for (int k = 1; k < modes_; ++k) out[k] = scale * i * (spec[k] - spec[points_ - k]);
    }
    return out;
}

std::vector<double> ParitySeries::analyze(std::span<const double> values) const {
    std::vector<cplx> v(values.begin(), values.end());
    auto c = analyze(std::span<const cplx>(v));
    std::vector<double> out(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) out[k] = c[k].real();
    return out;
}

double ParitySeries::norm2_integral(std::span<const cplx> coeffs) const {
    double s = 0.0;
    for (int k = 1; k < modes_; ++k) s += std::norm(coeffs[k]);
    s *= std::numbers::pi;
    if (parity_ == Parity::Even) s += 2.0 * std::numbers::pi * std::norm(coeffs[0]);
    return s;
}

double ParitySeries::norm2_integral(std::span<const double> coeffs) const {
    std::vector<cplx> c(coeffs.begin(), coeffs.end());
    return norm2_integral(std::span<const cplx>(c));
}

}  // namespace nel::chaos
