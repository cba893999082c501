#pragma once

#include <cstdint>
#include <vector>

#include "nel/chaos/diagnostics.hpp"
#include "nel/chaos/ginzburg_landau.hpp"
#include "nel/chaos/sine_gordon.hpp"

namespace nel::chaos {

/// Period map of the sine-Gordon flow for f = cos t (period 2pi). Quasiperiodic forcing
/// has no period, so it is rejected with DomainError.
PoincareResult<SGState> sg_period_samples(const SineGordon& sg, const SGState& x0, int steps_per_period,
                                          int n_iterates);

/// Return map of the autonomous derNLS flow on the section arg(q_0) = -gamma (mod 2pi),
/// crossed with decreasing phase. Crossing times are bisected to 1e-10 within the step.
/// Stops after n_crossings returns or at t_max.
PoincareResult<GLState> phase_section_returns(const GinzburgLandau& gl, GLState x, double dt, int n_crossings,
                                              double t_max);

struct ScanCell {
    double eps;
    double a;
    LyapunovResult result;
};

/// Lyapunov map of the sine-Gordon flow over eps x a, cells evaluated in parallel and
/// returned in row-major (eps outer) order. Each cell starts from the same coefficients.
std::vector<ScanCell> sg_lyapunov_scan(const SGParams& base, const std::vector<double>& u0,
                                       const std::vector<double>& ut0, const std::vector<double>& eps_values,
                                       const std::vector<double>& a_values, double T, double dt, double renorm_dt,
                                       std::uint64_t seed);

}  // namespace nel::chaos
