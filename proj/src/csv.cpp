#include "mmw/csv.hpp"

#include <charconv>
#include <fstream>

namespace mmw {

std::string format_sig6(double x)
{
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 6);
    if (ec != std::errc{}) return "nan";
    std::string s(buf, end);
    if (s == "-0") s = "0";
    return s;
}

void write_csv(const SweepResult& result, std::ostream& out)
{
    SweepResult sorted = result;
    sorted.sort();
    out << kCsvHeader << '\n';
    for (const SweepRow& row : sorted.rows) {
        out << format_sig6(row.d_s_m) << ',' << format_sig6(rad_to_deg(row.theta_bw_rad)) << ','
            << format_sig6(row.threshold_db) << ',' << to_string(row.scenario) << ','
            << to_string(row.policy) << ',' << format_sig6(row.coverage) << ','
            << format_sig6(row.ase) << ',' << row.realization_count << ',' << row.seed << '\n';
    }
}

void emit_csv(const SweepResult& result, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    write_csv(result, out);
    out.flush();
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace mmw
