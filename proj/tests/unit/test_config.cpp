#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include "mmw/config.hpp"
#include "mmw/error.hpp"

using namespace mmw;

namespace {

std::size_t parse_error_line(std::string_view text)
{
    try {
        parse_config_text(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

std::string validation_key(std::string_view text)
{
    try {
        parse_config_text(text);
    } catch (const ValidationError& e) {
        return e.key();
    }
    return {};
}

}  // namespace

TEST_CASE("empty config gives the default single cell")
{
    const SimulationConfig c = parse_config_text("");
    REQUIRE(c.scenarios.size() == 1);
    CHECK(c.scenarios[0].scenario == Scenario::Hand);
    CHECK(c.scenarios[0].dist_to_body_m == 0.3);
    CHECK(c.scenarios[0].ap_height_m == 10.0);
    CHECK(c.run.d_s_m == std::vector<double>{6.8});
    REQUIRE(c.run.theta_bw_rad.size() == 1);
    CHECK(c.run.theta_bw_rad[0] == doctest::Approx(deg_to_rad(41.0)));
    CHECK(c.run.threshold_db == std::vector<double>{-5.0});
    CHECK(c.run.policies == std::vector<AssociationPolicy>{AssociationPolicy::MinDistance3d});
    CHECK(c.run.realizations == 20000);
    CHECK(c.run.master_seed == 1);
}

TEST_CASE("ranges and lists")
{
    CHECK(parse_config_text("d_s = 2:2:40").run.d_s_m.size() == 20);
    CHECK(parse_number_list("1, 2.5,4") == std::vector<double>{1.0, 2.5, 4.0});
    CHECK(parse_number_list("0:0.1:0.3").size() == 4);
    CHECK(parse_number_list("10:5:12") == std::vector<double>{10.0});
    CHECK(parse_number_list("1:1:3, 7") == std::vector<double>{1.0, 2.0, 3.0, 7.0});
    CHECK_THROWS(parse_number_list("1:0:3"));
    CHECK_THROWS(parse_number_list("3:1:1"));
    CHECK_THROWS(parse_number_list("x"));
    CHECK_THROWS(parse_number_list(""));
}

TEST_CASE("scenario selection sets the device distance")
{
    const SimulationConfig pocket = parse_config_text("scenario = pocket\n");
    CHECK(pocket.scenarios[0].dist_to_body_m == 0.0);
    const SimulationConfig both = parse_config_text("scenario = pocket, hand\nhand_dist_to_body = 0.25");
    REQUIRE(both.scenarios.size() == 2);
    CHECK(both.scenarios[0].scenario == Scenario::Hand);
    CHECK(both.scenarios[0].dist_to_body_m == 0.25);
    CHECK(both.scenarios[1].dist_to_body_m == 0.0);
}

TEST_CASE("units are converted at the boundary")
{
    const SimulationConfig c = parse_config_text(
        "# full example\n"
        "theta_bw = 90   # degrees\n"
        "carrier_freq_ghz = 28\n"
        "bandwidth_mhz = 400\n"
        "min_beamwidth_deg = 2\n"
        "association = max-power, min-dist\n"
        "seed = 18446744073709551615\n");
    CHECK(c.run.theta_bw_rad[0] == doctest::Approx(kPi / 2));
    CHECK(c.scenarios[0].carrier_freq_hz == 28e9);
    CHECK(c.scenarios[0].bandwidth_hz == 400e6);
    CHECK(c.scenarios[0].min_beamwidth_rad == doctest::Approx(deg_to_rad(2.0)));
    CHECK(c.run.policies.size() == 2);
    CHECK(c.run.policies[0] == AssociationPolicy::MinDistance3d);
    CHECK(c.run.master_seed == 18446744073709551615ULL);
}

TEST_CASE("malformed lines report their line number")
{
    CHECK(parse_error_line("d_s = 4\n\nno equals sign\n") == 3);
    CHECK(parse_error_line("# c\nbogus = 1\n") == 2);
    CHECK(parse_error_line("d_s = 4\nd_s = 5\n") == 2);
    CHECK(parse_error_line("d_s =\n") == 1);
    CHECK(parse_error_line(" = 3\n") == 1);
    CHECK(parse_error_line("seed = 1\nrealizations = many\n") == 2);
    CHECK(parse_error_line("seed = -1\n") == 1);
    CHECK(parse_error_line("scenario = car\n") == 1);
}

TEST_CASE("out-of-range values name their key")
{
    CHECK(validation_key("theta_bw = 200") == "theta_bw");
    CHECK(validation_key("d_s = -1") == "d_s");
    CHECK(validation_key("realizations = 0") == "realizations");
    CHECK(validation_key("side_lobe_gain_db = 3") == "side_lobe_gain_db");
    CHECK(validation_key("ap_height = 0") == "ap_height");
    CHECK(validation_key("body_width = 0") == "body_width");
    CHECK(validation_key("area_side = 0") == "area_side");
    CHECK(validation_key("area_side = 3\nd_s = 6.8") == "d_s");
}

TEST_CASE("every key has a default that parses")
{
    std::string text;
    std::set<std::string_view> names;
    for (const ConfigKeyInfo& k : config_keys()) {
        text += std::string(k.key) + " = " + std::string(k.default_value) + "\n";
        names.insert(k.key);
        CHECK_FALSE(k.help.empty());
    }
    CHECK(names.size() == config_keys().size());
    const SimulationConfig explicit_defaults = parse_config_text(text);
    const SimulationConfig implicit_defaults = parse_config_text("");
    CHECK(explicit_defaults.run.d_s_m == implicit_defaults.run.d_s_m);
    CHECK(explicit_defaults.scenarios[0].noise_figure_db == implicit_defaults.scenarios[0].noise_figure_db);
}

TEST_CASE("config files are read from disk")
{
    const auto path = std::filesystem::temp_directory_path() / "mmw_test_config.txt";
    {
        std::ofstream out(path);
        out << "d_s = 3, 4\nrealizations = 50\n";
    }
    const SimulationConfig c = parse_config(path);
    CHECK(c.run.d_s_m.size() == 2);
    CHECK(c.run.realizations == 50);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(parse_config(path), IoError);
}
