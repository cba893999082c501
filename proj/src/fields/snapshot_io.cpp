#include "nel/fields/snapshot_io.hpp"

#include <fstream>

namespace nel::fields {
namespace {

constexpr const char* kLayout = "row-major, last index fastest";

template <std::size_t D>
void put_coeffs(nlohmann::json& j, const SpectralField<D>& f) {
    std::vector<double> re, im;
    re.reserve(f.coeffs().size());
    im.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        re.push_back(c.real());
        im.push_back(c.imag());
    }
    j["re"] = re;
    j["im"] = im;
}

std::vector<cplx> get_coeffs(const nlohmann::json& j, std::size_t expected) {
    auto re = j.at("re").get<std::vector<double>>();
    auto im = j.at("im").get<std::vector<double>>();
    if (re.size() != expected || im.size() != expected)
        throw IoError("snapshot: coefficient arrays do not match the grid size");
    std::vector<cplx> c(expected);
    for (std::size_t i = 0; i < expected; ++i) c[i] = {re[i], im[i]};
    return c;
}

void check_header(const nlohmann::json& j, const char* kind) {
    if (!j.is_object()) throw IoError("snapshot: expected a JSON object");
    if (j.value("version", 0) != kSnapshotVersion) throw IoError("snapshot: unsupported version");
    if (j.value("kind", std::string{}) != kind) throw IoError(std::string("snapshot: expected kind ") + kind);
    if (j.value("layout", std::string{}) != kLayout) throw IoError("snapshot: unsupported layout");
}

}  // namespace

nlohmann::json to_json(const SpectralField2D& f) {
    const auto& g = f.grid();
    nlohmann::json j;
    j["version"] = kSnapshotVersion;
    j["kind"] = "field2d";
    j["grid"] = {{"alpha", g.k_scale(0)}, {"nx", g.n(0)}, {"ny", g.n(1)}};
    j["layout"] = kLayout;
    put_coeffs(j, f);
    return j;
}

nlohmann::json to_json(const ScalarField3D& f) {
    const auto& g = f.grid();
    nlohmann::json j;
    j["version"] = kSnapshotVersion;
    j["kind"] = "field3d";
    j["grid"] = {{"alpha", 1.0}, {"nx", g.n(0)}, {"ny", g.n(1)}, {"nz", g.n(2)}};
    j["layout"] = kLayout;
    put_coeffs(j, f);
    return j;
}

SpectralField2D field2d_from_json(const nlohmann::json& j) {
    try {
        check_header(j, "field2d");
        const auto& gj = j.at("grid");
        auto grid = make_torus_grid_2d(gj.at("alpha").get<double>(), gj.at("nx").get<int>(), gj.at("ny").get<int>());
        return SpectralField2D(grid, get_coeffs(j, grid.size()));
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("snapshot: ") + e.what());
    }
}

ScalarField3D field3d_from_json(const nlohmann::json& j) {
    try {
        check_header(j, "field3d");
        const auto& gj = j.at("grid");
        auto grid = make_torus_grid_3d(gj.at("nx").get<int>(), gj.at("ny").get<int>(), gj.at("nz").get<int>());
        return ScalarField3D(grid, get_coeffs(j, grid.size()));
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("snapshot: ") + e.what());
    }
}

void write_snapshot(const std::filesystem::path& path, const SpectralField2D& f) {
    std::ofstream out(path);
    if (!out) throw IoError("snapshot: cannot open " + path.string() + " for writing");
    out << to_json(f).dump() << '\n';
    if (!out) throw IoError("snapshot: write failed for " + path.string());
}

SpectralField2D read_snapshot_2d(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("snapshot: cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw IoError("snapshot: malformed JSON in " + path.string() + ": " + e.what());
    }
    return field2d_from_json(j);
}

}  // namespace nel::fields
