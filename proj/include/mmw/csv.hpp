#pragma once

#include <filesystem>
#include <ostream>
#include <string>

#include "mmw/metrics.hpp"

namespace mmw {

inline constexpr const char* kCsvHeader =
    "d_s_m,theta_bw_deg,threshold_db,scenario,association,coverage,ase_bps_hz_m2,realizations,seed";

/// Shortest round-trip form of x at 6 significant digits ("%.6g" without locale).
std::string format_sig6(double x);

/// Writes the header and one line per row, rows ordered by
/// (d_s, theta_bw, threshold, scenario, association).
void write_csv(const SweepResult& result, std::ostream& out);

/// Writes the CSV file at path; throws IoError naming the path on failure.
void emit_csv(const SweepResult& result, const std::filesystem::path& path);

}  // namespace mmw
