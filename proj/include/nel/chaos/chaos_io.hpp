#pragma once

#include <ostream>
#include <string>

#include "json.hpp"
#include "nel/chaos/abc_flow.hpp"
#include "nel/chaos/diagnostics.hpp"
#include "nel/chaos/ginzburg_landau.hpp"
#include "nel/chaos/sine_gordon.hpp"

namespace nel::chaos {

/// One JSON line {model, params, t, coeffs_re, coeffs_im}. For sine-Gordon the real
/// coefficients of u fill coeffs_re (coeffs_im is zero) and u_t goes to an extra "ut" array;
/// for ABC the angles fill coeffs_re.
void write_trajectory_jsonl(std::ostream& out, const std::string& model, const nlohmann::ordered_json& params,
                            const SGState& s);
void write_trajectory_jsonl(std::ostream& out, const std::string& model, const nlohmann::ordered_json& params,
                            const GLState& s);
void write_trajectory_jsonl(std::ostream& out, const std::string& model, const nlohmann::ordered_json& params,
                            const AbcState& s);

/// Header t,lambda_running then one row per renormalization.
void write_lyapunov_csv(std::ostream& out, const LyapunovResult& r);

/// One row per iterate: iterate,t followed by the state coefficients
/// (u_k then ut_k for sine-Gordon, re_k,im_k pairs for Ginzburg-Landau).
void write_poincare_csv(std::ostream& out, const PoincareResult<SGState>& r);
void write_poincare_csv(std::ostream& out, const PoincareResult<GLState>& r);

}  // namespace nel::chaos
