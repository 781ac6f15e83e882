#include <cmath>
#include <sstream>
#include <string>

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mmw/antenna.hpp"
#include "mmw/blockage.hpp"
#include "mmw/config.hpp"
#include "mmw/csv.hpp"
#include "mmw/deployment.hpp"
#include "mmw/engine.hpp"
#include "mmw/error.hpp"
#include "mmw/svg.hpp"

namespace py = pybind11;

namespace {

std::string override_text(const py::handle& value)
{
    if (py::isinstance<py::str>(value)) return value.cast<std::string>();
    if (py::isinstance<py::list>(value) || py::isinstance<py::tuple>(value)) {
        std::string out;
        for (const py::handle item : value) {
            if (!out.empty()) out += ',';
            out += override_text(item);
        }
        return out;
    }
    return py::str(value).cast<std::string>();
}

mmw::SweepResult sweep_from(const std::string& config, unsigned workers, const py::kwargs& overrides)
{
    mmw::ConfigEntries entries = mmw::parse_config_entries(config);
    for (const auto& [key, value] : overrides) {
        entries[key.cast<std::string>()] = mmw::ConfigEntry{override_text(value), 0};
    }
    const mmw::SimulationConfig sim = mmw::build_config(entries);
    py::gil_scoped_release release;
    return mmw::run_sweep(sim.run, sim.scenarios, workers);
}

py::dict row_dict(const mmw::SweepRow& r)
{
    py::dict d;
    d["d_s_m"] = r.d_s_m;
    d["theta_bw_deg"] = std::round(mmw::rad_to_deg(r.theta_bw_rad) * 1e9) / 1e9;
    d["threshold_db"] = r.threshold_db;
    d["scenario"] = std::string(mmw::to_string(r.scenario));
    d["association"] = std::string(mmw::to_string(r.policy));
    d["coverage"] = r.coverage;
    d["ase_bps_hz_m2"] = r.ase;
    d["realizations"] = r.realization_count;
    d["seed"] = r.seed;
    return d;
}

}  // namespace

PYBIND11_MODULE(mmwave_sim, m)
{
    m.doc() = "Monte Carlo coverage and ASE of indoor mmWave networks with ceiling-mounted "
              "fixed-beam APs. Angles are in degrees.";

    py::register_exception<mmw::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<mmw::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<mmw::ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<mmw::IoError>(m, "IoError", PyExc_OSError);

    m.def(
        "main_lobe_gain",
        [](double theta_bw_deg, double side_lobe_gain) {
            return mmw::main_lobe_gain(mmw::deg_to_rad(theta_bw_deg), side_lobe_gain);
        },
        py::arg("theta_bw_deg"), py::arg("side_lobe_gain") = 0.1,
        "Linear main-lobe gain of the cone-bulb pattern.");
    m.def(
        "illumination_radius",
        [](double theta_bw_deg, double ap_height_m) {
            return mmw::illumination_radius(mmw::deg_to_rad(theta_bw_deg), ap_height_m);
        },
        py::arg("theta_bw_deg"), py::arg("ap_height_m") = 10.0);
    m.def(
        "self_block_probability",
        [](double body_width_m, double dist_to_body_m) {
            return mmw::self_block_probability(mmw::BodyModel::make(body_width_m, dist_to_body_m, 0.4, 1e-4));
        },
        py::arg("body_width_m") = 0.4, py::arg("dist_to_body_m") = 0.3);
    m.def(
        "block_free_radius",
        [](double ap_height_m, double dist_to_body_m, double dist_top_head_m) {
            return mmw::block_free_radius(ap_height_m,
                                          mmw::BodyModel::make(0.4, dist_to_body_m, dist_top_head_m, 1e-4));
        },
        py::arg("ap_height_m") = 10.0, py::arg("dist_to_body_m") = 0.3, py::arg("dist_top_head_m") = 0.4);
    m.def("cell_area", &mmw::cell_area, py::arg("d_s_m"));

    m.def(
        "hex_grid",
        [](double d_s_m, double area_side_m, double ap_height_m) {
            const mmw::Deployment dep = mmw::Deployment::hex_grid(d_s_m, area_side_m, ap_height_m);
            py::array_t<double> out({static_cast<py::ssize_t>(dep.ap_count()), py::ssize_t{2}});
            auto v = out.mutable_unchecked<2>();
            for (std::size_t i = 0; i < dep.ap_count(); ++i) {
                v(i, 0) = dep.ap_positions()[i].x;
                v(i, 1) = dep.ap_positions()[i].y;
            }
            return py::make_tuple(out, dep.central_ap_index());
        },
        py::arg("d_s_m"), py::arg("area_side_m") = 400.0, py::arg("ap_height_m") = 10.0,
        "AP positions as an (n, 2) array and the index of the central AP.");
    m.def(
        "sample_ue_positions",
        [](double d_s_m, std::size_t count, std::uint64_t seed) {
            const mmw::Deployment dep = mmw::Deployment::hex_grid(d_s_m, 2.0 * d_s_m, 10.0);
            py::array_t<double> out({static_cast<py::ssize_t>(count), py::ssize_t{2}});
            auto v = out.mutable_unchecked<2>();
            for (std::size_t i = 0; i < count; ++i) {
                mmw::Rng rng = mmw::make_stream(seed, i);
                const mmw::Point2 p = mmw::sample_ue_position(dep, rng);
                v(i, 0) = p.x;
                v(i, 1) = p.y;
            }
            return out;
        },
        py::arg("d_s_m"), py::arg("count"), py::arg("seed") = 1,
        "Uniform UE positions in the hexagonal cell of an AP at the origin.");

    m.def(
        "run_cell",
        [](double d_s_m, double theta_bw_deg, const std::string& scenario, const std::string& association,
           std::size_t realizations, std::uint64_t seed, unsigned workers) {
            const mmw::ScenarioConfig sc = mmw::ScenarioConfig::defaults(mmw::parse_scenario(scenario));
            const mmw::Deployment dep = mmw::Deployment::hex_grid(d_s_m, sc.area_side_m, sc.ap_height_m);
            const mmw::AntennaPattern pattern = sc.pattern(mmw::deg_to_rad(theta_bw_deg));
            const mmw::AssociationPolicy policy = mmw::parse_association_policy(association);
            mmw::SampleSet set;
            {
                py::gil_scoped_release release;
                set = mmw::run_cell(dep, pattern, sc.body(), sc.radio(), policy, realizations, seed, workers);
            }
            py::dict out;
            out["sinr"] = py::array_t<double>(set.sinr_values.size(), set.sinr_values.data());
            out["serving_ap"] = py::array_t<std::uint32_t>(set.serving_ap.size(), set.serving_ap.data());
            out["serving_blocked"] = py::array_t<std::uint8_t>(set.serving_blocked.size(), set.serving_blocked.data());
            out["serving_ground_distance_m"] = py::array_t<double>(
                set.serving_ground_distance_m.size(), set.serving_ground_distance_m.data());
            out["cell_area_m2"] = mmw::cell_area(d_s_m);
            return out;
        },
        py::arg("d_s_m"), py::arg("theta_bw_deg"), py::arg("scenario") = "hand",
        py::arg("association") = "min-dist", py::arg("realizations") = mmw::kDefaultRealizations,
        py::arg("seed") = 1, py::arg("workers") = 0,
        "Linear SINR samples and serving-link diagnostics for one configuration with default physics.");

    m.def(
        "coverage",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& sinr, double threshold_db) {
            return mmw::coverage(std::span<const double>(sinr.data(), sinr.size()), threshold_db);
        },
        py::arg("sinr"), py::arg("threshold_db"));
    m.def(
        "ase",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& sinr, double cell_area_m2) {
            return mmw::ase(std::span<const double>(sinr.data(), sinr.size()), cell_area_m2);
        },
        py::arg("sinr"), py::arg("cell_area_m2"));

    py::class_<mmw::SweepResult>(m, "Sweep")
        .def("__len__", [](const mmw::SweepResult& s) { return s.rows.size(); })
        .def("rows",
             [](const mmw::SweepResult& s) {
                 py::list out;
                 for (const mmw::SweepRow& r : s.rows) out.append(row_dict(r));
                 return out;
             })
        .def("to_csv",
             [](const mmw::SweepResult& s) {
                 std::ostringstream out;
                 mmw::write_csv(s, out);
                 return out.str();
             })
        .def("write_csv", [](const mmw::SweepResult& s, const std::string& path) { mmw::emit_csv(s, path); },
             py::arg("path"))
        .def("to_svg",
             [](const mmw::SweepResult& s, const std::string& mode) {
                 return mmw::render_svg(s, mmw::parse_plot_mode(mode));
             },
             py::arg("mode") = "coverage")
        .def("peak_coverage",
             [](const mmw::SweepResult& s, double d_s_m, double threshold_db,
                std::optional<std::string> scenario, std::optional<std::string> association) {
                 mmw::RowSelector sel;
                 if (scenario) sel.scenario = mmw::parse_scenario(*scenario);
                 if (association) sel.policy = mmw::parse_association_policy(*association);
                 const mmw::PeakCoverage p = mmw::peak_coverage_beamwidth(s, d_s_m, threshold_db, sel);
                 return py::make_tuple(std::round(mmw::rad_to_deg(p.theta_bw_rad) * 1e9) / 1e9, p.coverage, p.ase);
             },
             py::arg("d_s_m"), py::arg("threshold_db"), py::arg("scenario") = py::none(),
             py::arg("association") = py::none(),
             "(theta_bw_deg, coverage, ase) of the best beamwidth on the swept grid.");

    m.def("run_sweep", &sweep_from, py::arg("config") = "", py::kw_only(), py::arg("workers") = 0,
          "Runs a sweep from config text; keyword arguments override config keys "
          "(lists become comma-separated values).");
    m.def("config_keys", [] {
        py::dict out;
        for (const mmw::ConfigKeyInfo& k : mmw::config_keys()) out[py::str(std::string(k.key))] = std::string(k.default_value);
        return out;
    });
}
