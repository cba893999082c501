#include "nel/spectra/suboperator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nel/core/error.hpp"
#include "nel/fields/operators.hpp"

namespace nel::spectra {
namespace {

std::string describe(const OperatorParams& p) {
    std::ostringstream s;
    s << "class (" << p.cls.k1 << "," << p.cls.k2 << "), alpha=" << p.alpha << ", gamma=" << p.gamma
      << ", nu=" << p.nu << ", trunc=" << p.trunc;
    return s.str();
}

void validate(const OperatorParams& p) {
    if (p.cls.k1 == 0 && p.cls.k2 == 0) throw DomainError("class (0,0) has no sub-operator");
    if (!(p.alpha > 0.0 && p.alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
    if (!(p.nu >= 0.0)) throw DomainError("viscosity must be non-negative");
    if (!std::isfinite(p.gamma)) throw DomainError("gamma must be finite");
    if (p.trunc < 1) throw DomainError("truncation must be at least 1");
}

}  // namespace

double k_squared(const ModeClass& cls, double alpha, int n) {
    const double kx = alpha * cls.k1;
    const double ky = cls.k2 + n;
    return kx * kx + ky * ky;
}

SubOperator assemble_suboperator(const OperatorParams& params) {
    validate(params);
    SubOperator op{params, {}, {}};
    for (int n = -params.trunc; n <= params.trunc; ++n)
        if (k_squared(params.cls, params.alpha, n) > 0.0) op.shifts.push_back(n);

    const auto size = static_cast<Eigen::Index>(op.shifts.size());
    const double c = params.gamma * params.alpha * params.cls.k1 / 2.0;
    op.matrix = Eigen::MatrixXd::Zero(size, size);
    for (Eigen::Index i = 0; i < size; ++i) {
        const int n = op.shifts[i];
        op.matrix(i, i) = -params.nu * k_squared(params.cls, params.alpha, n);
        if (c == 0.0) continue;
        // Neighbours may be separated by the excluded zero mode only when k1 = 0, and then c = 0.
        if (i > 0) op.matrix(i, i - 1) = c * (1.0 - 1.0 / k_squared(params.cls, params.alpha, n - 1));
        if (i + 1 < size) op.matrix(i, i + 1) = -c * (1.0 - 1.0 / k_squared(params.cls, params.alpha, n + 1));
    }
    return op;
}

Spectrum compute_spectrum(const SubOperator& op, bool want_vectors) {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(op.matrix, want_vectors);
    if (solver.info() != Eigen::Success)
        throw ComputationalError("eigensolver did not converge for " + describe(op.params));

    const Eigen::VectorXcd& values = solver.eigenvalues();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(values.size()));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Eigen::Index>(i);
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        if (values[a].real() != values[b].real()) return values[a].real() > values[b].real();
        return values[a].imag() > values[b].imag();
    });

    Spectrum spec{op.params, {}, std::nullopt};
    spec.eigenvalues.reserve(order.size());
    for (auto j : order) spec.eigenvalues.push_back(values[j]);
    if (want_vectors) {
        const Eigen::MatrixXcd vectors = solver.eigenvectors();
        Eigen::MatrixXcd sorted(vectors.rows(), vectors.cols());
        for (std::size_t j = 0; j < order.size(); ++j) sorted.col(static_cast<Eigen::Index>(j)) = vectors.col(order[j]);
        spec.eigenvectors = std::move(sorted);
    }
    return spec;
}

double max_real_part(const OperatorParams& params) {
    auto spec = compute_spectrum(assemble_suboperator(params));
    return spec.eigenvalues.front().real();
}

double jacobian_oracle_check(const OperatorParams& params, double delta) {
    if (!(delta >= 1e-7 && delta <= 1e-3)) throw DomainError("jacobian_oracle_check: delta must lie in [1e-7, 1e-3]");
    const SubOperator op = assemble_suboperator(params);
    const ModeClass cls = params.cls;

    // Grid large enough that the 2/3 rule keeps every mode the quadratic term can reach.
    auto even_above = [](int m) { return std::max(8, m + 1 + (m + 1) % 2); };
    const int nx = even_above(3 * (2 * std::abs(cls.k1) + 2));
    const int ny = even_above(3 * (std::abs(cls.k2) + params.trunc + 2));
    const auto grid = fields::make_torus_grid_2d(params.alpha, nx, ny);

    fields::SpectralField2D base(grid);
    base.set_coeff({0, 1}, params.gamma / 2.0);
    base.set_coeff({0, -1}, params.gamma / 2.0);
    const fields::SpectralField2D forcing = base;  // nu (Laplacian(base) + forcing) = 0 since base has |k| = 1

    auto response = [&](const fields::SpectralField2D& dir) {
        auto plus = fields::ns_rhs_2d(base + delta * dir, params.nu, forcing);
        auto minus = fields::ns_rhs_2d(base - delta * dir, params.nu, forcing);
        return (1.0 / (2.0 * delta)) * (plus - minus);
    };

    double err = 0.0;
    for (std::size_t j = 0; j < op.shifts.size(); ++j) {
        const std::array<int, 2> mode{cls.k1, cls.k2 + op.shifts[j]};
        const std::array<int, 2> conj_mode{-mode[0], -mode[1]};
        // Real directions a = e + conj(e), b = i (e - conj(e)); L(e) = (L(a) - i L(b)) / 2.
        fields::SpectralField2D a(grid), b(grid);
        a.set_coeff(mode, 1.0);
        a.set_coeff(conj_mode, 1.0);
        b.set_coeff(mode, fields::cplx(0.0, 1.0));
        b.set_coeff(conj_mode, fields::cplx(0.0, -1.0));
        const auto la = response(a);
        const auto lb = response(b);
        for (std::size_t i = 0; i < op.shifts.size(); ++i) {
            const std::array<int, 2> row{cls.k1, cls.k2 + op.shifts[i]};
            const fields::cplx fd = 0.5 * (la.coeff(row) - fields::cplx(0.0, 1.0) * lb.coeff(row));
            const double exact = op.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            err = std::max(err, std::abs(fd - exact));
        }
    }
    return err;
}

}  // namespace nel::spectra
