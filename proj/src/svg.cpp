#include "mmw/svg.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>
#include <vector>

#include "mmw/csv.hpp"

namespace mmw {

namespace {

constexpr double kWidth = 820.0;
constexpr double kHeight = 500.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 220.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

constexpr std::array<std::string_view, 10> kPalette{
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

struct Axis {
    double lo = 0.0;
    double hi = 1.0;
    bool log = false;
    std::string label;

    double unit(double v) const
    {
        if (log) return (std::log10(v) - std::log10(lo)) / (std::log10(hi) - std::log10(lo));
        return (v - lo) / (hi - lo);
    }
};

std::string fixed2(double x)
{
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, 2);
    return ec == std::errc{} ? std::string(buf, end) : std::string("0");
}

std::string escape(std::string_view s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c;
        }
    }
    return out;
}

double nice_step(double span)
{
    const double raw = span / 6.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (m * mag >= raw) return m * mag;
    }
    return 10.0 * mag;
}

std::vector<double> ticks(const Axis& axis)
{
    std::vector<double> out;
    if (axis.log) {
        for (double e = std::ceil(std::log10(axis.lo) - 1e-9); e <= std::log10(axis.hi) + 1e-9; e += 1.0)
            out.push_back(std::pow(10.0, e));
        return out;
    }
    const double step = nice_step(axis.hi - axis.lo);
    for (double v = std::ceil(axis.lo / step - 1e-9) * step; v <= axis.hi + 1e-9 * step; v += step)
        out.push_back(std::abs(v) < 1e-12 * step ? 0.0 : v);
    return out;
}

Axis fit_axis(const std::vector<Series>& series, bool x, bool log, std::string label)
{
    double lo = INFINITY;
    double hi = -INFINITY;
    for (const Series& s : series) {
        for (const auto& [px, py] : s.points) {
            const double v = x ? px : py;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    Axis axis;
    axis.log = log;
    axis.label = std::move(label);
    if (log) {
        axis.lo = std::pow(10.0, std::floor(std::log10(lo)));
        axis.hi = std::pow(10.0, std::ceil(std::log10(hi)));
        if (axis.hi <= axis.lo) axis.hi = axis.lo * 10.0;
    } else {
        if (hi <= lo) {
            lo -= 0.5;
            hi += 0.5;
        }
        const double step = nice_step(hi - lo);
        axis.lo = std::floor(lo / step) * step;
        axis.hi = std::ceil(hi / step) * step;
    }
    return axis;
}

std::string tick_label(double v, bool log)
{
    if (log) {
        std::ostringstream s;
        s << "1e" << static_cast<int>(std::lround(std::log10(v)));
        return s.str();
    }
    return format_sig6(v);
}

std::string document(const std::string& title, const Axis& xa, const Axis& ya,
                     const std::vector<Series>& series)
{
    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    const auto sx = [&](double v) { return kLeft + xa.unit(v) * pw; };
    const auto sy = [&](double v) { return kTop + (1.0 - ya.unit(v)) * ph; };

    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << fixed2(kLeft + pw / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
      << escape(title) << "</text>\n";

    o << "<g class=\"grid\" stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (double t : ticks(xa))
        o << "<line x1=\"" << fixed2(sx(t)) << "\" y1=\"" << fixed2(kTop) << "\" x2=\"" << fixed2(sx(t))
          << "\" y2=\"" << fixed2(kTop + ph) << "\"/>\n";
    for (double t : ticks(ya))
        o << "<line x1=\"" << fixed2(kLeft) << "\" y1=\"" << fixed2(sy(t)) << "\" x2=\"" << fixed2(kLeft + pw)
          << "\" y2=\"" << fixed2(sy(t)) << "\"/>\n";
    o << "</g>\n";

    o << "<rect x=\"" << fixed2(kLeft) << "\" y=\"" << fixed2(kTop) << "\" width=\"" << fixed2(pw)
      << "\" height=\"" << fixed2(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";
    o << "<g class=\"ticks\">\n";
    for (double t : ticks(xa))
        o << "<text x=\"" << fixed2(sx(t)) << "\" y=\"" << fixed2(kTop + ph + 18)
          << "\" text-anchor=\"middle\">" << tick_label(t, xa.log) << "</text>\n";
    for (double t : ticks(ya))
        o << "<text x=\"" << fixed2(kLeft - 8) << "\" y=\"" << fixed2(sy(t) + 4)
          << "\" text-anchor=\"end\">" << tick_label(t, ya.log) << "</text>\n";
    o << "</g>\n";
    o << "<text class=\"xlabel\" x=\"" << fixed2(kLeft + pw / 2) << "\" y=\"" << fixed2(kHeight - 16)
      << "\" text-anchor=\"middle\">" << escape(xa.label) << "</text>\n";
    o << "<text class=\"ylabel\" x=\"18\" y=\"" << fixed2(kTop + ph / 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << fixed2(kTop + ph / 2) << ")\">"
      << escape(ya.label) << "</text>\n";

    for (std::size_t i = 0; i < series.size(); ++i) {
        const std::string_view colour = kPalette[i % kPalette.size()];
        o << "<polyline class=\"series\" fill=\"none\" stroke=\"" << colour
          << "\" stroke-width=\"1.8\" points=\"";
        for (std::size_t k = 0; k < series[i].points.size(); ++k) {
            const auto& [px, py] = series[i].points[k];
            o << (k ? " " : "") << fixed2(sx(px)) << ',' << fixed2(sy(py));
        }
        o << "\"/>\n";
    }

    o << "<g class=\"legend\">\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double y = kTop + 12 + 18.0 * static_cast<double>(i);
        const double x = kLeft + pw + 14;
        o << "<line x1=\"" << fixed2(x) << "\" y1=\"" << fixed2(y) << "\" x2=\"" << fixed2(x + 24)
          << "\" y2=\"" << fixed2(y) << "\" stroke=\"" << kPalette[i % kPalette.size()]
          << "\" stroke-width=\"2\"/>\n"
          << "<text x=\"" << fixed2(x + 30) << "\" y=\"" << fixed2(y + 4) << "\">"
          << escape(series[i].label) << "</text>\n";
    }
    o << "</g>\n</svg>\n";
    return o.str();
}

struct Variety {
    bool thresholds = false;
    bool scenarios = false;
    bool policies = false;
};

Variety variety(const SweepResult& result)
{
    std::set<double> t;
    std::set<Scenario> s;
    std::set<AssociationPolicy> p;
    for (const SweepRow& r : result.rows) {
        t.insert(r.threshold_db);
        s.insert(r.scenario);
        p.insert(r.policy);
    }
    return Variety{t.size() > 1, s.size() > 1, p.size() > 1};
}

std::string suffix(const Variety& v, double threshold_db, Scenario scenario, AssociationPolicy policy)
{
    std::string out;
    if (v.thresholds) out += " T=" + format_sig6(threshold_db) + " dB";
    if (v.scenarios) out += " " + std::string(to_string(scenario));
    if (v.policies) out += " " + std::string(to_string(policy));
    return out;
}

std::vector<Series> versus_distance(const SweepResult& result, bool ase_mode)
{
    const Variety v = variety(result);
    double first_threshold = INFINITY;
    for (const SweepRow& r : result.rows) first_threshold = std::min(first_threshold, r.threshold_db);

    using Key = std::tuple<double, double, Scenario, AssociationPolicy>;
    std::map<Key, Series> grouped;
    for (const SweepRow& r : result.rows) {
        if (ase_mode && r.threshold_db != first_threshold) continue;
        const double y = ase_mode ? r.ase : r.coverage;
        if (ase_mode && !(y > 0.0)) continue;
        const double t = ase_mode ? first_threshold : r.threshold_db;
        Series& s = grouped[Key{r.theta_bw_rad, t, r.scenario, r.policy}];
        if (s.label.empty()) {
            s.label = "theta=" + format_sig6(rad_to_deg(r.theta_bw_rad)) + " deg" +
                      suffix(Variety{v.thresholds && !ase_mode, v.scenarios, v.policies}, t,
                             r.scenario, r.policy);
        }
        s.points.emplace_back(r.d_s_m, y);
    }
    std::vector<Series> out;
    for (auto& [key, s] : grouped) {
        std::sort(s.points.begin(), s.points.end());
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Series> tradeoff_series(const SweepResult& result)
{
    const Variety v = variety(result);
    std::set<std::tuple<Scenario, AssociationPolicy, double>> families;
    for (const SweepRow& r : result.rows) families.emplace(r.scenario, r.policy, r.threshold_db);

    std::vector<Series> out;
    for (const auto& [scenario, policy, threshold] : families) {
        Series s;
        s.label = std::string(to_string(scenario)) +
                  suffix(Variety{v.thresholds, false, v.policies}, threshold, scenario, policy);
        for (const TradeoffPoint& p : tradeoff_curve(result, threshold, RowSelector{scenario, policy})) {
            if (p.ase > 0.0) s.points.emplace_back(p.ase, p.coverage);
        }
        if (!s.points.empty()) out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

PlotMode parse_plot_mode(std::string_view text)
{
    if (text == "coverage") return PlotMode::CoverageVsDs;
    if (text == "ase") return PlotMode::AseVsDs;
    if (text == "tradeoff") return PlotMode::Tradeoff;
    throw DomainError("unknown plot mode '" + std::string(text) + "' (expected coverage, ase or tradeoff)");
}

std::string_view to_string(PlotMode mode)
{
    switch (mode) {
    case PlotMode::CoverageVsDs: return "coverage";
    case PlotMode::AseVsDs: return "ase";
    case PlotMode::Tradeoff: return "tradeoff";
    }
    return "unknown";
}

std::string render_svg(const SweepResult& result, PlotMode mode)
{
    SweepResult sorted = result;
    sorted.sort();

    std::vector<Series> series;
    switch (mode) {
    case PlotMode::CoverageVsDs: series = versus_distance(sorted, false); break;
    case PlotMode::AseVsDs: series = versus_distance(sorted, true); break;
    case PlotMode::Tradeoff: series = tradeoff_series(sorted); break;
    }
    require(!series.empty(), "nothing to plot for mode '" + std::string(to_string(mode)) + "'");

    switch (mode) {
    case PlotMode::CoverageVsDs: {
        Axis y{0.0, 1.0, false, "Coverage P[SINR > T]"};
        return document("Coverage vs inter-site distance", fit_axis(series, true, false, "Inter-site distance d_s (m)"), y, series);
    }
    case PlotMode::AseVsDs:
        return document("Area spectral efficiency vs inter-site distance",
                        fit_axis(series, true, false, "Inter-site distance d_s (m)"),
                        fit_axis(series, false, true, "ASE (bit/s/Hz/m^2)"), series);
    case PlotMode::Tradeoff:
        return document("Peak coverage vs achieved ASE",
                        fit_axis(series, true, true, "ASE (bit/s/Hz/m^2)"),
                        Axis{0.0, 1.0, false, "Peak coverage P[SINR > T]"}, series);
    }
    return {};
}

void render_svg(const SweepResult& result, PlotMode mode, const std::filesystem::path& path)
{
    const std::string svg = render_svg(result, mode);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << svg;
    out.flush();
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace mmw
