#include "nel/spectra/spectra_io.hpp"

#include <cstdio>

#include "json.hpp"

namespace nel::spectra {
namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

void write_spectrum_csv_header(std::ostream& out) { out << "class_k1,class_k2,alpha,gamma,nu,trunc,re,im\n"; }

void write_spectrum_csv_rows(std::ostream& out, const Spectrum& spectrum) {
    const auto& p = spectrum.params;
    const std::string prefix = std::to_string(p.cls.k1) + "," + std::to_string(p.cls.k2) + "," + num(p.alpha) + "," +
                               num(p.gamma) + "," + num(p.nu) + "," + std::to_string(p.trunc) + ",";
    for (const auto& z : spectrum.eigenvalues) out << prefix << num(z.real()) << "," << num(z.imag()) << "\n";
}

void write_trajectories_jsonl(std::ostream& out, const ModeClass& cls, const std::vector<EigTrajectory>& trajectories) {
    for (const auto& t : trajectories) {
        nlohmann::ordered_json j;
        j["class"] = {cls.k1, cls.k2};
        j["nus"] = t.nus;
        std::vector<double> re, im;
        for (const auto& z : t.values) {
            re.push_back(z.real());
            im.push_back(z.imag());
        }
        j["re"] = re;
        j["im"] = im;
        j["label"] = to_string(t.label);
        j["limit_re"] = t.limit.real();
        j["limit_im"] = t.limit.imag();
        out << j.dump() << "\n";
    }
}

}  // namespace nel::spectra
