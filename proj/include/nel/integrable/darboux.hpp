#pragma once

#include <optional>
#include <vector>

#include "nel/fields/operators.hpp"
#include "nel/integrable/report.hpp"

namespace nel::integrable {

using fields::SpectralField2D;

/// Old solution (omega, psi, p) of the lambda = 0 Lax pair, seed solution f and potential shift F.
/// All fields real. eta <= 0 selects the default mask threshold 1e-3 max|omega_x|.
struct DarbouxInput {
    SpectralField2D omega;
    SpectralField2D psi;
    SpectralField2D p;
    SpectralField2D f;
    SpectralField2D F;
    double eta = 0.0;
};

/// Pointwise data on the grid, indexed like SpectralField::physical().
struct PointField {
    std::vector<double> value;
    std::vector<double> dx;
    std::vector<double> dy;
};

struct DarbouxResult {
    SpectralField2D omega_t;  ///< omega + Laplacian(F)
    SpectralField2D psi_t;    ///< psi + F
    PointField p_t;           ///< (p_x - (f_x / f) p) / omega_x, zero on masked points
    std::vector<char> mask;   ///< 1 where |omega_x| < eta
    double eta = 0.0;
    double masked_fraction = 0.0;
};

/// Constraint residuals max|{omega, Laplacian F}| and max|{Laplacian F, F}|.
struct ConstraintResiduals {
    double omega_lap_f;
    double lap_f_f;
};
ConstraintResiduals constraint_residuals(const SpectralField2D& omega, const SpectralField2D& F);

/// Applies the gauge transform and the potential shift. Throws PreconditionError when a constraint
/// residual, {omega, f} or {omega, p} exceeds 1e-8, DomainError when f vanishes on the grid.
DarbouxResult darboux_apply(const DarbouxInput& input);

/// Snapshot of an evolving configuration for the time residual.
struct TimedInput {
    double t;
    DarbouxInput input;
};

/// Residual report for the transformed triple: residual_inf/l2 measure {omega_t, p_t} off the mask.
/// With a snapshot series (at least 3, increasing times) params.time_residual_inf holds the
/// central-difference residual of d(p_t)/dt + {psi_t, p_t} at interior snapshots, where psi_t(t)
/// is the snapshot's psi + F plus whatever `transformed.psi_t` adds on top of the original.
ResidualReport darboux_verify(const DarbouxInput& original, const DarbouxResult& transformed,
                              const std::vector<TimedInput>* series = nullptr);

/// The two equivalent gauge forms p_x/omega_x - (f_x/omega_x)(p/f) and p_y/omega_y - (f_y/omega_y)(p/f).
/// Points with |omega_x| or |omega_y| below eta are returned in `mask`.
struct GaugeForms {
    std::vector<double> x_form;
    std::vector<double> y_form;
    std::vector<char> mask;
};
GaugeForms gauge_forms(const SpectralField2D& omega, const SpectralField2D& f, const SpectralField2D& p, double eta);

/// max|{omega, p}| (first Lax equation at lambda = 0).
double d1_residual(const SpectralField2D& omega, const SpectralField2D& p);
/// max over interior snapshots of |(p_{k+1} - p_{k-1}) / (t_{k+1} - t_{k-1}) + {psi_k, p_k}|.
double d2_residual(const std::vector<double>& times, const std::vector<SpectralField2D>& psi,
                   const std::vector<SpectralField2D>& p);

/// (x, y) -> (y, x) on a square grid (alpha = 1, nx = ny).
SpectralField2D swap_xy(const SpectralField2D& f);

}  // namespace nel::integrable
