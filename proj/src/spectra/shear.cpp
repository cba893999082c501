#include "nel/spectra/shear.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nel/core/error.hpp"

namespace nel::spectra {
namespace {

constexpr double kPositiveThreshold = 1e-9;
constexpr double kAxisThreshold = 1e-6;
constexpr double kImagTolerance = 1e-8;
constexpr double kRefinementTolerance = 1e-8;

void require_window(double alpha, double lo, double hi, const char* what) {
    if (!(alpha > lo && alpha < hi)) {
        std::ostringstream msg;
        msg << what << ": alpha must lie in (" << lo << ", " << hi << "), got " << alpha;
        throw DomainError(msg.str());
    }
}

// Bounds below are stated for gamma = 1/2. A shear of amplitude gamma rescales the operator
// at viscosity nu to (2 gamma) times the gamma = 1/2 operator at nu / (2 gamma).
double upper_radicand(double a2) { return a2 * (1.0 - a2) / (8.0 * (a2 + 1.0)); }

double lower_radicand(double a2) {
    return upper_radicand(a2) - a2 * a2 * (a2 + 3.0) / (16.0 * (a2 + 1.0) * (a2 + 4.0));
}

/// Larger of the two gaps next to the cluster point closest to y (0 for fewer than two points).
double local_spacing(const std::vector<double>& sorted, double y) {
    if (sorted.size() < 2) return 0.0;
    auto it = std::lower_bound(sorted.begin(), sorted.end(), y);
    std::size_t i = static_cast<std::size_t>(it - sorted.begin());
    if (i == sorted.size() || (i > 0 && y - sorted[i - 1] < sorted[i] - y)) --i;
    double gap = 0.0;
    if (i > 0) gap = std::max(gap, sorted[i] - sorted[i - 1]);
    if (i + 1 < sorted.size()) gap = std::max(gap, sorted[i + 1] - sorted[i]);
    return gap;
}

}  // namespace

Interval nu_star_bounds(double alpha, double gamma) {
    require_window(alpha, 0.5, 0.95, "nu_star_bounds");
    const double a2 = alpha * alpha;
    const double a4 = a2 * a2;
    const double a6 = a4 * a2;
    const double lower = std::sqrt(32.0 - 3.0 * a6 - 17.0 * a4 - 16.0 * a2) / (4.0 * (a2 + 1.0) * (a2 + 4.0));
    const double upper = std::sqrt((1.0 - a2) / 2.0) / (2.0 * (a2 + 1.0));
    return {2.0 * gamma * lower, 2.0 * gamma * upper};
}

Interval lambda0_bounds(double alpha, double gamma) {
    require_window(alpha, 0.5, 0.8469, "lambda0_bounds");
    const double a2 = alpha * alpha;
    return {2.0 * gamma * std::sqrt(lower_radicand(a2)), 2.0 * gamma * std::sqrt(upper_radicand(a2))};
}

Interval unstable_eigenvalue_bounds(double alpha, double gamma, double nu) {
    const Interval inviscid = lambda0_bounds(alpha, gamma);
    const double a2 = alpha * alpha;
    return {inviscid.lower - nu * (a2 + 1.0), inviscid.upper - nu * a2};
}

namespace {

UnstableEigenvalue leading_real(const OperatorParams& params) {
    const auto spec = compute_spectrum(assemble_suboperator(params));
    UnstableEigenvalue out;
    for (const auto& z : spec.eigenvalues)
        if (z.real() > kPositiveThreshold) ++out.positive_count;
    if (out.positive_count > 0) {
        out.lambda = spec.eigenvalues.front().real();
        out.imag_part = spec.eigenvalues.front().imag();
    }
    return out;
}

}  // namespace

UnstableEigenvalue unstable_eigenvalue(double alpha, double gamma, double nu, int trunc, bool refine) {
    require_window(alpha, 0.5, 0.95, "unstable_eigenvalue");
    OperatorParams params{{1, 0}, alpha, gamma, nu, trunc};
    auto out = leading_real(params);
    if (!out.lambda) return out;

    std::ostringstream ctx;
    ctx << "unstable_eigenvalue(alpha=" << alpha << ", gamma=" << gamma << ", nu=" << nu << ", trunc=" << trunc << ")";
    if (std::abs(out.imag_part) >= kImagTolerance)
        throw ComputationalError(ctx.str() + ": leading eigenvalue is not real, imaginary part " +
                                 std::to_string(out.imag_part));
    if (refine) {
        params.trunc = 2 * trunc;
        const auto fine = leading_real(params);
        if (!fine.lambda) throw ComputationalError(ctx.str() + ": unstable eigenvalue vanishes at 2*trunc");
        out.refinement_change = std::abs(*fine.lambda - *out.lambda);
        if (out.refinement_change >= kRefinementTolerance)
            throw ComputationalError(ctx.str() + ": not converged under trunc doubling, change " +
                                     std::to_string(out.refinement_change));
    }
    return out;
}

CriticalViscosity critical_viscosity(double alpha, double gamma, int trunc, double tol) {
    if (!(tol >= 1e-8)) throw DomainError("critical_viscosity: tol must be at least 1e-8");
    if (!(gamma > 0.0)) throw DomainError("critical_viscosity: gamma must be positive");
    const Interval bounds = nu_star_bounds(alpha, gamma);
    auto growth = [&](double nu) { return max_real_part({{1, 0}, alpha, gamma, nu, trunc}); };

    double lo = 0.5 * bounds.lower;
    double hi = 1.5 * bounds.upper;
    const double g_lo = growth(lo);
    const double g_hi = growth(hi);
    if (!(g_lo > 0.0 && g_hi < 0.0)) {
        std::ostringstream msg;
        msg << "critical_viscosity: no sign change on [" << lo << ", " << hi << "], leading real parts " << g_lo
            << " and " << g_hi << " (alpha=" << alpha << ", gamma=" << gamma << ", trunc=" << trunc << ")";
        throw ComputationalError(msg.str());
    }
    int iterations = 0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (growth(mid) > 0.0 ? lo : hi) = mid;
        ++iterations;
    }
    const double root = 0.5 * (lo + hi);
    return {root, bounds, bounds.contains(root), growth(root), iterations};
}

EulerSpectrum euler_spectrum(const ModeClass& cls, double alpha, double gamma, int trunc) {
    EulerSpectrum out{compute_spectrum(assemble_suboperator({cls, alpha, gamma, 0.0, trunc})), {}, 0.0, 0.0, 0.0};

    std::vector<double> axis;
    std::vector<cplx> off_axis;
    for (const auto& z : out.spectrum.eigenvalues) {
        if (std::abs(z.real()) > kAxisThreshold)
            off_axis.push_back(z);
        else
            axis.push_back(z.imag());
    }
    std::sort(axis.begin(), axis.end());
    if (!axis.empty()) {
        out.cluster_extent = std::max(std::abs(axis.front()), std::abs(axis.back()));
        for (std::size_t i = 1; i < axis.size(); ++i) out.max_gap = std::max(out.max_gap, axis[i] - axis[i - 1]);
        if (axis.size() > 1) out.cluster_spacing = 2.0 * out.cluster_extent / static_cast<double>(axis.size() - 1);
    }
    // Off-axis eigenvalues count as point eigenvalues when their nearest neighbour is more
    // than 10 local cluster spacings away.
    for (const auto& z : off_axis) {
        double nearest = INFINITY;
        for (const auto& w : out.spectrum.eigenvalues)
            if (w != z) nearest = std::min(nearest, std::abs(w - z));
        if (nearest > 10.0 * local_spacing(axis, z.imag())) out.point_eigenvalues.push_back(z);
    }
    return out;
}

}  // namespace nel::spectra
