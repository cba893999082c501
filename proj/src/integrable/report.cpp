#include "nel/integrable/report.hpp"

namespace nel::integrable {

nlohmann::ordered_json ResidualReport::to_json() const {
    nlohmann::ordered_json j;
    j["check"] = check;
    j["params"] = params;
    j["residual_inf"] = residual_inf;
    j["residual_l2"] = residual_l2;
    j["masked_fraction"] = masked_fraction;
    j["grid"] = grid;
    j["dt"] = dt;
    return j;
}

}  // namespace nel::integrable
