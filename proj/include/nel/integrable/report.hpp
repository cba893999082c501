#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace nel::integrable {

/// Outcome of one residual check. residual_l2 is the root-mean-square over unmasked points.
struct ResidualReport {
    std::string check;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    double residual_inf = 0.0;
    double residual_l2 = 0.0;
    double masked_fraction = 0.0;
    std::vector<int> grid;
    double dt = 0.0;

    nlohmann::ordered_json to_json() const;
};

}  // namespace nel::integrable
