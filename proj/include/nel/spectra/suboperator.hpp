#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace nel::spectra {

using cplx = std::complex<double>;

/// Fourier-mode family {(alpha k1, k2 + n)}_n of the linearization at a y-dependent shear.
/// (-k1, -k2) is the conjugate class and is not enumerated separately.
struct ModeClass {
    int k1 = 0;
    int k2 = 0;

    bool operator==(const ModeClass&) const = default;
};

/// Parameters shared by a sub-operator and everything computed from it.
struct OperatorParams {
    ModeClass cls;
    double alpha = 0.7;
    double gamma = 0.5;  ///< shear amplitude, Omega* = gamma cos y
    double nu = 0.0;
    int trunc = 200;     ///< shifts n in [-trunc, trunc]
};

/// Linearized 2D Navier-Stokes operator at Omega* = gamma cos y restricted to one class.
/// Row/column j holds shift shifts[j]; a shift with zero wavevector is left out.
/// All entries are real, so the matrix is stored as real.
struct SubOperator {
    OperatorParams params;
    std::vector<int> shifts;
    Eigen::MatrixXd matrix;
};

/// |k_n|^2 = (alpha k1)^2 + (k2 + n)^2.
double k_squared(const ModeClass& cls, double alpha, int n);

/// Row n: diagonal -nu |k_n|^2, (n, n-1) entry +c (1 - 1/|k_{n-1}|^2), (n, n+1) entry
/// -c (1 - 1/|k_{n+1}|^2), c = gamma alpha k1 / 2.
/// Throws DomainError for class (0,0), alpha outside (0,1), nu < 0 or trunc < 1.
SubOperator assemble_suboperator(const OperatorParams& params);

struct Spectrum {
    OperatorParams params;
    std::vector<cplx> eigenvalues;                  ///< descending real part, then descending imaginary part
    std::optional<Eigen::MatrixXcd> eigenvectors;   ///< column j belongs to eigenvalues[j]
};

/// Dense eigendecomposition. Throws ComputationalError if the eigensolver fails.
Spectrum compute_spectrum(const SubOperator& op, bool want_vectors = false);

/// Largest real part over the spectrum of one assembled class.
double max_real_part(const OperatorParams& params);

/// Maximum entrywise gap between the assembled matrix and a central finite-difference
/// linearization of ns_rhs_2d about gamma cos y (forcing chosen so the shear is steady).
/// delta must lie in [1e-7, 1e-3].
double jacobian_oracle_check(const OperatorParams& params, double delta);

}  // namespace nel::spectra
