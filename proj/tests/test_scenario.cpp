#include <doctest.h>

#include <cmath>
#include <string>

#include "lgt/constants.hpp"
#include "lgt/errors.hpp"
#include "lgt/scenario.hpp"

using namespace lgt;

namespace {

const char* kMinimal = R"(
wavelength    = 1064 nm
waist         = 20 um
l             = 3
p             = 11
radius        = 10 um
arc_length    = 200 nm
thickness     = 200 nm
mass          = 1e-16 kg
epsilon       = 2.1
cavity_length = 0.5 mm
omega_phi     = 5e4 rad/s
)";

std::string error_of(const std::string& text) {
  try {
    parse_scenario(text, "test");
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

std::string replace_line(std::string text, const std::string& key, const std::string& line) {
  const auto pos = text.find(key + " ");
  const auto end = text.find('\n', pos);
  return text.replace(pos, end - pos, line);
}

}  // namespace

TEST_CASE("quantities and units") {
  CHECK(parse_quantity("20 um", "length") == doctest::Approx(20e-6));
  CHECK(parse_quantity("20 µm", "length") == doctest::Approx(20e-6));
  CHECK(parse_quantity("1064 nm", "length") == doctest::Approx(1.064e-6));
  CHECK(parse_quantity("0.5 mm", "length") == doctest::Approx(5e-4));
  CHECK(parse_quantity("3 m", "length") == 3.0);
  CHECK(parse_quantity("90 deg", "angle") == doctest::Approx(kPi / 2));
  CHECK(parse_quantity("5 mrad", "angle") == doctest::Approx(5e-3));
  CHECK(parse_quantity("5e4 rad/s", "angular_frequency") == 5e4);
  CHECK(parse_quantity("50 krad/s", "angular_frequency") == doctest::Approx(5e4));
  CHECK(parse_quantity("50 kHz", "angular_frequency") == doctest::Approx(2 * kPi * 5e4));
  CHECK(parse_quantity("10 Hz", "rate") == 10.0);
  CHECK(parse_quantity("3 1/s", "rate") == 3.0);
  CHECK(parse_quantity("2 g", "mass") == doctest::Approx(2e-3));
  CHECK_THROWS_AS(parse_quantity("20", "length"), ConfigError);
  CHECK_THROWS_AS(parse_quantity("20 kg", "length"), ConfigError);
  CHECK_THROWS_AS(parse_quantity("abc um", "length"), ConfigError);
  CHECK_THROWS_AS(parse_quantity("1 m", "colour"), std::invalid_argument);
}

TEST_CASE("minimal scenario and defaults") {
  const auto sc = parse_scenario(kMinimal);
  CHECK(sc.mode.l() == 3);
  CHECK(sc.mode.p() == 11);
  CHECK(sc.mode.phase_offset() == doctest::Approx(kPi / 12));
  CHECK(sc.windmill.spokes() == 3);
  CHECK(sc.windmill.radius() == doctest::Approx(10e-6));
  CHECK(sc.cavity.omega_c0 == doctest::Approx(2 * kPi * kSpeedOfLight / 1064e-9));
  CHECK(sc.cavity.omega_phi == 5e4);
  CHECK_FALSE(sc.decoherence.gamma_cav.has_value());
  CHECK(sc.sweep_l.values() == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(sc.sweep_p.values().size() == 31);
  CHECK(sc.optimize_p_max == 30);
  CHECK(sc.coupling.thickness == ThicknessModel::exact);
  CHECK(sc.hash_hex().size() == 16);
}

TEST_CASE("bundled scenarios load") {
  const auto sc = load_scenario(std::string(LGT_SCENARIO_DIR) + "/reference.scenario");
  CHECK(sc.decoherence.gamma_cav.value() == doctest::Approx(905.4597));
  CHECK(sc.decoherence.beam_power_note == "0.1 mW incident");
  CHECK(sc.fig2_l.values().size() == 10);
  const auto r8 = load_scenario(std::string(LGT_SCENARIO_DIR) + "/reference_r8.scenario");
  CHECK(r8.windmill.radius() == doctest::Approx(8e-6));
  CHECK(r8.hash != sc.hash);
  CHECK_THROWS_AS(load_scenario("/nonexistent/x.scenario"), ConfigError);
}

TEST_CASE("optional keys") {
  std::string text = kMinimal;
  text += "phase_offset = 0.1 rad\nspokes = 1\ngamma_cav = 12 Hz\nthickness_model = thin_slab\n"
          "sweep_l = 2..4\nsweep_p = 0..3\nphi0 = 1 mrad\nomega_c0 = 1e15 rad/s\nfd_step = 2e-5 rad\n";
  const auto sc = parse_scenario(text);
  CHECK(sc.mode.phase_offset() == 0.1);
  CHECK(sc.windmill.spokes() == 1);
  CHECK(sc.decoherence.gamma_cav.value() == 12.0);
  CHECK(sc.coupling.thickness == ThicknessModel::thin_slab);
  CHECK(sc.sweep_l.values() == std::vector<int>{2, 3, 4});
  CHECK(sc.cavity.equilibrium_angle == doctest::Approx(1e-3));
  CHECK(sc.cavity.omega_c0 == 1e15);
  CHECK(sc.coupling.fd_step == doctest::Approx(2e-5));
  const auto cfg = sc.sweep_config(4);
  CHECK(cfg.threads == 4);
  CHECK(cfg.spokes.fixed.value() == 1);
  CHECK(cfg.p_values.size() == 4);
  CHECK(parse_scenario(std::string(kMinimal) + "phase_offset = quadratic\n").mode.phase_offset() == 0.0);
}

TEST_CASE("hash tracks content, not layout") {
  const auto a = parse_scenario(kMinimal);
  const auto b = parse_scenario(std::string("# comment\n") + kMinimal + "\n\n");
  CHECK(a.hash == b.hash);
  const auto c = parse_scenario(replace_line(kMinimal, "epsilon", "epsilon = 2.2"));
  CHECK(a.hash != c.hash);
}

TEST_CASE("errors name the offending key") {
  CHECK(error_of(std::string(kMinimal) + "colour = blue\n").find("colour") != std::string::npos);
  CHECK(error_of(std::string(kMinimal) + "l = 2\n").find("'l'") != std::string::npos);
  CHECK(error_of(replace_line(kMinimal, "waist", "")).find("waist") != std::string::npos);
  CHECK(error_of(replace_line(kMinimal, "waist", "waist = 20")).find("waist") != std::string::npos);
  CHECK(error_of(replace_line(kMinimal, "waist", "waist = -20 um")).find("waist") != std::string::npos);
  CHECK(error_of(replace_line(kMinimal, "epsilon", "epsilon = 0.5")).find("arc_length") != std::string::npos);
  CHECK(error_of(replace_line(kMinimal, "p ", "p = -1")).find("'p'") != std::string::npos);
  CHECK(error_of(replace_line(kMinimal, "radius", "radius = ")).find("radius") != std::string::npos);
  CHECK(error_of(replace_line(kMinimal, "mass", "mass = 1e-16 um")).find("mass") != std::string::npos);
  CHECK(error_of(std::string(kMinimal) + "sweep_p = 5..2\n").find("sweep_p") != std::string::npos);
  CHECK(error_of(std::string(kMinimal) + "thickness_model = fat\n").find("thickness_model") != std::string::npos);
  CHECK_FALSE(error_of(std::string(kMinimal) + "just words\n").empty());
  CHECK(error_of(replace_line(kMinimal, "l ", "l = 0")).find("phase_offset") != std::string::npos);
}
