#pragma once

#include <span>
#include <vector>

#include "nel/chaos/parity_series.hpp"

namespace nel::chaos {

enum class GLVariant { DerNLS, Pnls };
const char* to_string(GLVariant v);

/// derNLS: i q_t = q_xx + 2|q|^2 q + i eps [(9/16 - |q|^2) q + mu |D q|^2 conj(q)],
///         D q = -sum_{k=1}^{K} k q_k sin kx.
/// pnls:   i q_t = q_xx + 2(|q|^2 - omega^2) q + i eps [q_xx - alpha q + beta].
/// Both on x in [0, 2pi] with q even.
struct GLParams {
    GLVariant variant = GLVariant::DerNLS;
    double eps = 0.0;
    double mu = 6.0;
    int K = 32;
    double gamma = 0.0;   ///< phase of the derNLS limit cycle
    double omega = 0.75;
    double alpha = 1.0;
    double beta = 1.0;
    int modes = 64;

    void validate() const;
};

struct GLState {
    std::vector<cplx> q;  ///< cos kx coefficients
    double t = 0.0;
};

class GinzburgLandau {
public:
    using State = GLState;

    explicit GinzburgLandau(GLParams params);

    const GLParams& params() const { return params_; }
    const ParitySeries& basis() const { return basis_; }

    GLState make_state(std::span<const cplx> q, double t = 0.0) const;
    GLState uniform_state(cplx q0, double t = 0.0) const;
    /// q_c(t) = (3/4) exp(-i (9/8 t + gamma)), the x-independent derNLS orbit.
    static cplx limit_cycle(double t, double gamma);
    GLState limit_cycle_state(double t) const;

    /// One Lawson RK4 step with the diagonal linear symbol applied exactly.
    /// Throws ComputationalError on a non-finite result.
    GLState step(const GLState& s, double dt) const;

    /// Integral of |q|^2 over [0, 2pi].
    double mass(const GLState& s) const;
    /// max over grid points of |q - q_c(t)|.
    double limit_cycle_distance(const GLState& s) const;

    std::vector<double> displacement(const GLState& from, const GLState& to) const;
    GLState displaced(const GLState& s, std::span<const double> d) const;
    double size(const GLState& s) const;

private:
    std::vector<cplx> nonlinear(const std::vector<cplx>& q) const;

    GLParams params_;
    ParitySeries basis_;
    ParitySeries odd_;
    std::vector<cplx> symbol_;
};

}  // namespace nel::chaos
