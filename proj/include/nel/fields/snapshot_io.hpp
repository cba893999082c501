#pragma once

#include <filesystem>

#include "json.hpp"

#include "nel/fields/spectral_field.hpp"

namespace nel::fields {

/// Field snapshots: {version:1, kind:"field2d"|"field3d", grid:{alpha,nx,ny[,nz]},
/// layout:"row-major, last index fastest", re:[...], im:[...]}. The arrays hold the
/// Fourier coefficients in FFT bin order.
inline constexpr int kSnapshotVersion = 1;

nlohmann::json to_json(const SpectralField2D& f);
nlohmann::json to_json(const ScalarField3D& f);
SpectralField2D field2d_from_json(const nlohmann::json& j);
ScalarField3D field3d_from_json(const nlohmann::json& j);

void write_snapshot(const std::filesystem::path& path, const SpectralField2D& f);
SpectralField2D read_snapshot_2d(const std::filesystem::path& path);

}  // namespace nel::fields
