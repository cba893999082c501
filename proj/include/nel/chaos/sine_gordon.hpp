#pragma once

#include <span>
#include <vector>

#include "nel/chaos/forcing.hpp"
#include "nel/chaos/parity_series.hpp"

namespace nel::chaos {

/// u_tt = c^2 u_xx + sin u + eps (-a u + f sin^3 u) on x in [0, 2pi] with a parity constraint.
struct SGParams {
    double c = 0.9;
    double a = 1.0;
    double eps = 0.0;
    Parity parity = Parity::Even;
    int modes = 128;
    ForcingSpec forcing{};

    void validate() const;
};

struct SGState {
    std::vector<double> u;   ///< cos (even) or sin (odd) coefficients
    std::vector<double> ut;
    double t = 0.0;
    Angles3 vartheta{};      ///< ABC substate of quasiperiodic forcing
};

class SineGordon {
public:
    using State = SGState;

    explicit SineGordon(SGParams params);

    const SGParams& params() const { return params_; }
    const ParitySeries& basis() const { return basis_; }

    /// State from coefficient vectors (shorter vectors are zero padded; odd k = 0 is dropped).
    SGState make_state(std::span<const double> u, std::span<const double> ut, double t = 0.0) const;
    /// Spatially uniform state u = u0, u_t = v0 (even parity only).
    SGState uniform_state(double u0, double v0) const;

    /// One Lawson RK4 step: the c^2 u_xx oscillators are propagated exactly, the rest is
    /// evaluated on the dealiased grid. Throws ComputationalError on a non-finite result.
    SGState step(const SGState& s, double dt) const;

    /// Integral of u_t^2/2 + c^2 u_x^2/2 + cos u, conserved when eps = 0.
    double energy(const SGState& s) const;

    // Interface used by the generic diagnostics.
    std::vector<double> displacement(const SGState& from, const SGState& to) const;
    SGState displaced(const SGState& s, std::span<const double> d) const;
    double size(const SGState& s) const;

private:
    std::vector<double> nonlinear(const std::vector<double>& u, double f) const;

    SGParams params_;
    ParitySeries basis_;
    int first_;  // first active coefficient (1 for odd parity)
};

}  // namespace nel::chaos
