#pragma once

#include <optional>
#include <vector>

#include "nel/spectra/suboperator.hpp"

namespace nel::spectra {

/// Analytic bracket for the critical viscosity, valid for alpha in (0.5, 0.95).
/// Scales linearly with gamma.
struct Interval {
    double lower;
    double upper;
    bool contains(double x) const { return lower < x && x < upper; }
};

Interval nu_star_bounds(double alpha, double gamma);
/// Bracket for the inviscid unstable eigenvalue, valid for alpha in (0.5, 0.8469).
Interval lambda0_bounds(double alpha, double gamma);
/// Bracket for the viscous unstable eigenvalue at nu, valid for alpha in (0.5, 0.8469).
Interval unstable_eigenvalue_bounds(double alpha, double gamma, double nu);

struct UnstableEigenvalue {
    std::optional<double> lambda;  ///< empty in the stable regime
    double imag_part = 0.0;
    int positive_count = 0;        ///< eigenvalues with real part > 1e-9
    double refinement_change = 0.0;
};

/// Unstable eigenvalue of class (1,0). With refine set, also solves at 2*trunc and throws
/// ComputationalError if the value moves by more than 1e-8 or its imaginary part exceeds 1e-8.
UnstableEigenvalue unstable_eigenvalue(double alpha, double gamma, double nu, int trunc, bool refine = true);

struct CriticalViscosity {
    double nu_star;
    Interval bounds;
    bool within_bounds;
    double max_real_at_root;
    int iterations;
};

/// Bisection on the leading real part of class (1,0) starting from [0.5 lower, 1.5 upper].
CriticalViscosity critical_viscosity(double alpha, double gamma, int trunc, double tol);

/// Inviscid spectrum split into point eigenvalues and the imaginary-axis cluster.
struct EulerSpectrum {
    Spectrum spectrum;
    std::vector<cplx> point_eigenvalues;  ///< |Re| > 1e-6 and > 10 local cluster gaps from any other eigenvalue
    double cluster_extent = 0.0;          ///< cluster lies in [-i c, i c]
    double max_gap = 0.0;                 ///< widest gap between consecutive cluster points
    double cluster_spacing = 0.0;         ///< mean spacing 2c / (count - 1)
};

EulerSpectrum euler_spectrum(const ModeClass& cls, double alpha, double gamma, int trunc);

}  // namespace nel::spectra
