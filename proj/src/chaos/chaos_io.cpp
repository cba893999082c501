#include "nel/chaos/chaos_io.hpp"

#include <cstdio>

namespace nel::chaos {
namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

nlohmann::ordered_json record(const std::string& model, const nlohmann::ordered_json& params, double t) {
    nlohmann::ordered_json j;
    j["model"] = model;
    j["params"] = params;
    j["t"] = t;
    return j;
}

}  // namespace

void write_trajectory_jsonl(std::ostream& out, const std::string& model, const nlohmann::ordered_json& params,
                            const SGState& s) {
    auto j = record(model, params, s.t);
    j["coeffs_re"] = s.u;
    j["coeffs_im"] = std::vector<double>(s.u.size(), 0.0);
    j["ut"] = s.ut;
    out << j.dump() << "\n";
}

void write_trajectory_jsonl(std::ostream& out, const std::string& model, const nlohmann::ordered_json& params,
                            const GLState& s) {
    auto j = record(model, params, s.t);
    std::vector<double> re, im;
    for (const auto& z : s.q) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    j["coeffs_re"] = re;
    j["coeffs_im"] = im;
    out << j.dump() << "\n";
}

void write_trajectory_jsonl(std::ostream& out, const std::string& model, const nlohmann::ordered_json& params,
                            const AbcState& s) {
    auto j = record(model, params, s.t);
    j["coeffs_re"] = std::vector<double>(s.theta.begin(), s.theta.end());
    j["coeffs_im"] = std::vector<double>(3, 0.0);
    out << j.dump() << "\n";
}

void write_lyapunov_csv(std::ostream& out, const LyapunovResult& r) {
    out << "t,lambda_running\n";
    for (const auto& [t, v] : r.series) out << num(t) << "," << num(v) << "\n";
}

void write_poincare_csv(std::ostream& out, const PoincareResult<SGState>& r) {
    if (r.samples.empty()) return;
    const std::size_t m = r.samples.front().u.size();
    out << "iterate,t";
    for (std::size_t k = 0; k < m; ++k) out << ",u_" << k;
    for (std::size_t k = 0; k < m; ++k) out << ",ut_" << k;
    out << "\n";
    for (std::size_t i = 0; i < r.samples.size(); ++i) {
        out << i << "," << num(r.times[i]);
        for (double v : r.samples[i].u) out << "," << num(v);
        for (double v : r.samples[i].ut) out << "," << num(v);
        out << "\n";
    }
}

void write_poincare_csv(std::ostream& out, const PoincareResult<GLState>& r) {
    if (r.samples.empty()) return;
    const std::size_t m = r.samples.front().q.size();
    out << "iterate,t";
    for (std::size_t k = 0; k < m; ++k) out << ",re_" << k << ",im_" << k;
    out << "\n";
    for (std::size_t i = 0; i < r.samples.size(); ++i) {
        out << i << "," << num(r.times[i]);
        for (const auto& z : r.samples[i].q) out << "," << num(z.real()) << "," << num(z.imag());
        out << "\n";
    }
}

}  // namespace nel::chaos
