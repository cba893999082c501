#pragma once

#include <span>
#include <vector>

#include "nel/chaos/forcing.hpp"

namespace nel::chaos {

struct AbcState {
    Angles3 theta{};
    double t = 0.0;
};

/// The ABC angle flow as a system for the generic diagnostics.
class AbcFlow {
public:
    using State = AbcState;

    explicit AbcFlow(AbcParams params) : params_(params) {}
    const AbcParams& params() const { return params_; }

    AbcState step(const AbcState& s, double dt) const { return {abc_step(params_, s.theta, dt), s.t + dt}; }

    /// Angle differences wrapped to (-pi, pi].
    std::vector<double> displacement(const AbcState& from, const AbcState& to) const;
    AbcState displaced(const AbcState& s, std::span<const double> d) const;
    double size(const AbcState&) const { return 0.0; }

private:
    AbcParams params_;
};

}  // namespace nel::chaos
