#include "nel/chaos/abc_flow.hpp"

#include <cmath>
#include <numbers>

#include "nel/core/error.hpp"

namespace nel::chaos {

std::vector<double> AbcFlow::displacement(const AbcState& from, const AbcState& to) const {
    constexpr double pi = std::numbers::pi;
    std::vector<double> d(3);
    for (int i = 0; i < 3; ++i) {
        double v = std::fmod(to.theta[i] - from.theta[i], 2.0 * pi);
        if (v > pi) v -= 2.0 * pi;
        if (v <= -pi) v += 2.0 * pi;
        d[i] = v;
    }
    return d;
}

AbcState AbcFlow::displaced(const AbcState& s, std::span<const double> d) const {
    if (d.size() != 3) throw StructuralError("abc: displacement size mismatch");
    return {wrap_angles({s.theta[0] + d[0], s.theta[1] + d[1], s.theta[2] + d[2]}), s.t};
}

}  // namespace nel::chaos
