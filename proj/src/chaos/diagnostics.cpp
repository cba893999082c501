#include "nel/chaos/diagnostics.hpp"

#include <algorithm>
#include <limits>

namespace nel::chaos {

double last_decade_spread(const std::vector<std::pair<double, double>>& series) {
    if (series.empty()) return 0.0;
    const double t_from = series.back().first / 10.0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& [t, v] : series) {
        if (t < t_from) continue;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double final = std::abs(series.back().second);
    if (hi == lo) return 0.0;
    return final > 0.0 ? (hi - lo) / final : std::numeric_limits<double>::infinity();
}

}  // namespace nel::chaos
