#pragma once

#include <ostream>
#include <vector>

#include "nel/spectra/tracking.hpp"

namespace nel::spectra {

/// Header: class_k1,class_k2,alpha,gamma,nu,trunc,re,im
void write_spectrum_csv_header(std::ostream& out);
void write_spectrum_csv_rows(std::ostream& out, const Spectrum& spectrum);

/// One JSON object per line: {class, nus, re, im, label, limit_re, limit_im}.
void write_trajectories_jsonl(std::ostream& out, const ModeClass& cls, const std::vector<EigTrajectory>& trajectories);

}  // namespace nel::spectra
