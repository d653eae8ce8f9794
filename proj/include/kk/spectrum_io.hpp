#pragma once

#include <string>
#include <vector>

#include "kk/types.hpp"

namespace kk {

/// Parses "MIN:MAX:N" into a validated FrequencyGrid.
FrequencyGrid parse_grid_spec(const std::string& spec);

struct SpectrumRows {
    std::vector<double> omega;
    std::vector<Complex> values;
};

/// Reads a spectrum CSV: header row required, '#' comment lines ignored,
/// columns selected by name. Omegas must be strictly increasing and at least
/// min_rows rows must be present. Parse errors carry 1-based line numbers.
SpectrumRows read_spectrum_csv(const std::string& path,
                               const std::string& omega_col,
                               const std::string& re_col,
                               const std::string& im_col, int min_rows = 64);

/// Spectrum CSV with header `omega,re,im` (the shared wire format).
std::string write_spectrum_csv(const Spectrum& spectrum);

}  // namespace kk
