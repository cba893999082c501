#pragma once

#include <string>
#include <vector>

#include "nel/spectra/shear.hpp"

namespace nel::spectra {

/// Minimum-cost perfect matching for a square cost matrix (Hungarian algorithm).
/// Returns col[row].
std::vector<int> solve_assignment(const Eigen::MatrixXd& cost);

enum class LimitLabel { Persistence, Condensation, Singularity, Unresolved };
const char* to_string(LimitLabel label);

struct EigTrajectory {
    std::vector<double> nus;   ///< strictly decreasing
    std::vector<cplx> values;  ///< one eigenvalue per viscosity
    cplx limit{};              ///< quadratic extrapolation to nu = 0
    double limit_error = 0.0;  ///< |quadratic - linear| extrapolation
    bool ambiguous = false;    ///< some matching step had a tie
    LimitLabel label = LimitLabel::Unresolved;
};

/// Follows every eigenvalue of a class across a decreasing viscosity schedule, matching
/// consecutive spectra by minimal total squared distance. Trajectories are ordered by the
/// spectrum at the first viscosity.
std::vector<EigTrajectory> track_zero_viscosity(const ModeClass& cls, double alpha, double gamma,
                                                const std::vector<double>& nu_schedule, int trunc);

/// Geometric schedule from nu_max down to nu_min with `steps` points.
std::vector<double> geometric_schedule(double nu_max, double nu_min, int steps);

struct Classification {
    LimitLabel class_label;             ///< label of the trajectory leading at the largest viscosity
    std::vector<cplx> addition_points;  ///< inviscid point eigenvalues no trajectory reaches
    bool addition_segment = false;      ///< the inviscid cluster is not reached by any trajectory
};

/// Labels each trajectory in place against the inviscid reference.
Classification classify_limits(std::vector<EigTrajectory>& trajectories, const EulerSpectrum& euler_ref, double tol);

}  // namespace nel::spectra
