#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "lgt/constants.hpp"
#include "lgt/coupling.hpp"
#include "lgt/errors.hpp"
#include "lgt/specfun.hpp"
#include "lgt/sweep.hpp"
#include "oracles.hpp"

using namespace lgt;

namespace {

constexpr double kLambda = 1064e-9;
constexpr double kW0 = 20e-6;

LGMode mode_linear(int l, int p) { return {l, p, kLambda, kW0, LGMode::linear_phase_offset(l)}; }
Windmill rotor(int spokes, double radius = 10e-6) { return {spokes, radius, 200e-9, 200e-9, 1e-16, 2.1}; }
Cavity cavity() { return {0.5e-3, Cavity::resonance_for_wavelength(kLambda), 5e4, 0.0}; }

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

// gamma(a, x) / Gamma(a) by its power series, independent of the library.
double lower_gamma_series(int n, double x) {
  // gamma(n, x) = x^n e^-x sum_k x^k / (n (n+1) ... (n+k))
  long double term = 1.0L / n, sum = term;
  for (int k = 1; k < 400; ++k) {
    term *= x / static_cast<long double>(n + k);
    sum += term;
  }
  return static_cast<double>(std::pow(static_cast<long double>(x), n) * std::exp(-static_cast<long double>(x)) * sum);
}

}  // namespace

TEST_CASE("thickness integral") {
  const double k = 2.0 * kPi / kLambda;
  for (double h : {1e-9, 200e-9, 1.3e-6, 5e-6}) {
    const double exact = thickness_integral(k, h, ThicknessModel::exact);
    const double ref = oracle::simpson([&](double z) { return std::pow(std::cos(k * z), 2); }, -h / 2, h / 2, 4000);
    CHECK(rel(exact, ref) < 1e-10);
    CHECK(thickness_integral(k, h, ThicknessModel::thin_slab) == h);
    CHECK(exact <= h);
  }
}

TEST_CASE("mode norm") {
  const auto m = mode_linear(3, 0);
  CHECK(rel(mode_norm_total(m, cavity()), 1.57079632679489662e-13) < 1e-14);
  // Integrate the transverse norm along the axis; the flat-beam value must agree within 5 %.
  const auto cav = cavity();
  const double t0 = transverse_norm(m, 0.0);
  const double z_int = oracle::simpson(
      [&](double z) { return std::pow(std::cos(m.wavenumber() * z), 2); }, -cav.length / 2, cav.length / 2, 200000);
  CHECK(rel(t0 * z_int, mode_norm_total(m, cav)) < 0.05);
  for (double z : {-2e-4, 3.1e-5, 1.7e-4}) CHECK(rel(transverse_norm(m, z), t0 * std::pow(std::cos(m.wavenumber() * z), 2)) < 1e-6);
}

TEST_CASE("frequency shift: frozen reference values") {
  CHECK(rel(frequency_shift(mode_linear(3, 0), rotor(3), cavity(), {}), -1.31239969527876244659684619519e-8) < 1e-9);
  CHECK(rel(frequency_shift(mode_linear(3, 11), rotor(3), cavity(), {}), -4.3326646743045484e-7) < 1e-9);
}

TEST_CASE("frequency shift: sign and trivial cases") {
  CHECK(frequency_shift(mode_linear(3, 4), rotor(3).with_epsilon(1.0), cavity(), {}) == 0.0);
  for (int p : {0, 3, 9}) CHECK(frequency_shift(mode_linear(2, p), rotor(2), cavity(), {}) < 0.0);
  // Larger rotors intercept more light.
  double prev = 0.0;
  for (double r : {2e-6, 5e-6, 8e-6, 11e-6}) {
    const double v = -frequency_shift(mode_linear(1, 0), rotor(1, r), cavity(), {});
    CHECK(v > prev);
    prev = v;
  }
  // The equilibrium angle simply offsets the pose.
  Cavity tilted = cavity();
  tilted.equilibrium_angle = 0.013;
  CHECK(frequency_shift(mode_linear(3, 2), rotor(3), tilted, {0.002}) ==
        doctest::Approx(frequency_shift(mode_linear(3, 2), rotor(3), cavity(), {0.015})).epsilon(1e-12));
}

TEST_CASE("dielectric overlap agrees with 3-D Monte Carlo") {
  const Windmill wide(3, 10e-6, 3e-6, 200e-9, 1e-16, 2.1);
  for (auto [l, p] : {std::pair{3, 0}, std::pair{3, 11}, std::pair{1, 2}}) {
    const auto m = mode_linear(l, p);
    const auto wm = l == 3 ? wide : wide.with_spokes(l);
    const double v = dielectric_overlap(m, wm, {0.004}).value;
    const auto mc = oracle::mc_rotor_overlap(m, wm, {0.004}, 4000000, 17 + l + p);
    CHECK(mc.std_error < 1e-3 * mc.value);
    CHECK_MESSAGE(rel(mc.value, v) < 0.005, "l=" << l << " p=" << p << " mc=" << mc.value << " lib=" << v);
  }
}

TEST_CASE("overlap vanishes when every wedge sits on an angular node") {
  for (int l : {1, 3, 5}) {
    const LGMode at_node(l, 0, kLambda, kW0, kPi / (2.0 * l));
    const LGMode at_peak(l, 0, kLambda, kW0, 0.0);
    const auto wm = Windmill(l, 10e-6, 1e-10, 200e-9, 1e-16, 2.1);
    const double node = dielectric_overlap(at_node, wm, {}).value;
    const double peak = dielectric_overlap(at_peak, wm, {}).value;
    CHECK(node >= 0.0);
    CHECK(node < 1e-8 * peak);
  }
}

TEST_CASE("headline couplings") {
  const auto g30 = coupling_linear(mode_linear(3, 0), rotor(3), cavity());
  const auto g311 = coupling_linear(mode_linear(3, 11), rotor(3), cavity());
  CHECK(g30.g_hz() > 5.0 / 3.0);
  CHECK(g30.g_hz() < 5.0 * 3.0);
  CHECK(g311.g_hz() > 200.0 / 3.0);
  CHECK(g311.g_hz() < 200.0 * 3.0);
  CHECK(g311.g_hz() > 10.0 * g30.g_hz());
  CHECK(g30.cross_check_diff < 1e-6);
  CHECK(g311.cross_check_diff < 1e-6);
  CHECK(g311.quadrature_error < 1e-8);
}

TEST_CASE("semi-analytic and finite-difference couplings agree") {
  for (int l : {1, 2, 4, 6})
    for (int p : {0, 1, 7, 20}) {
      const auto sa = coupling_linear(mode_linear(l, p), rotor(l), cavity());
      const auto fd = coupling_finite_difference(mode_linear(l, p), rotor(l), cavity());
      CHECK(fd.method == CouplingMethod::finite_difference);
      CHECK_MESSAGE(rel(fd.g, sa.g) < 1e-6, l << "," << p);
    }
}

TEST_CASE("coupling vanishes at the quadratic point and for eps = 1") {
  const LGMode m(3, 5, kLambda, kW0, 0.0);
  const auto res = coupling_linear(m, rotor(3), cavity());
  CHECK(std::fabs(res.g / res.B) < 1e-12);
  const auto vac = coupling_linear(mode_linear(3, 5), rotor(3).with_epsilon(1.0), cavity());
  CHECK(vac.g == 0.0);
  CHECK(vac.g_ratio == 0.0);
  CHECK(vac.B == 0.0);
}

TEST_CASE("coupling scaling laws") {
  const auto m = mode_linear(2, 6);
  const auto base = coupling_linear(m, rotor(2), cavity());
  CHECK(coupling_linear(m, rotor(2).with_epsilon(3.2), cavity()).g / base.g == doctest::Approx(2.0).epsilon(1e-12));

  Cavity stiff = cavity();
  stiff.omega_phi *= 4.0;
  CHECK(coupling_linear(m, rotor(2), stiff).g / base.g == doctest::Approx(0.5).epsilon(1e-12));

  const Windmill heavy(2, 10e-6, 200e-9, 200e-9, 4e-16, 2.1);
  CHECK(coupling_linear(m, heavy, cavity()).g / base.g == doctest::Approx(0.5).epsilon(1e-12));

  const auto flipped = coupling_linear(m.with_phase_offset(-m.phase_offset()), rotor(2), cavity());
  CHECK(flipped.g == doctest::Approx(-base.g).epsilon(1e-10));

  CHECK(zero_point_angle(rotor(2), cavity()) ==
        doctest::Approx(std::sqrt(kHbar / (moment_of_inertia(rotor(2)) * 5e4))).epsilon(1e-14));
}

TEST_CASE("thin-slab model differs from the exact thickness integral by a constant factor") {
  CouplingOptions thin;
  thin.thickness = ThicknessModel::thin_slab;
  const double k = 2.0 * kPi / kLambda;
  const double factor = 200e-9 / thickness_integral(k, 200e-9, ThicknessModel::exact);
  for (int p : {0, 11}) {
    const auto a = coupling_linear(mode_linear(3, p), rotor(3), cavity());
    const auto b = coupling_linear(mode_linear(3, p), rotor(3), cavity(), thin);
    CHECK(b.g / a.g == doctest::Approx(factor).epsilon(1e-12));
  }
}

TEST_CASE("quadratic coupling") {
  const auto cav = cavity();
  for (int l : {1, 3, 4}) {
    const auto wm = rotor(l);
    const LGMode m(l, 2, kLambda, kW0, 0.0);
    const auto q = coupling_quadratic(m, wm, cav);
    // Analytic second derivative: only the angular footprint depends on the pose.
    const double k = m.wavenumber();
    const double prefactor = -(wm.epsilon() - 1.0) / (2.0 * mode_norm_total(m, cav)) *
                             thickness_integral(k, wm.thickness(), ThicknessModel::exact) *
                             radial_power(m, wm.radius()).value;
    const double d2 = cav.omega_c0 * prefactor * footprint_angular_curvature(wm, {}, m);
    CHECK_MESSAGE(rel(q.second_derivative, d2) < 1e-5, "l=" << l);
    const double zpa = zero_point_angle(wm, cav);
    CHECK(q.coefficient == doctest::Approx(0.5 * zpa * zpa * d2).epsilon(1e-5));
    CHECK(q.rel_error < 1e-2);
    // At the linear point the curvature vanishes.
    const auto q_lin = coupling_quadratic(mode_linear(l, 2), wm, cav);
    CHECK(std::fabs(q_lin.coefficient) < 1e-6 * std::fabs(q.coefficient));
  }
  CHECK(coupling_quadratic(mode_linear(3, 0), rotor(3).with_epsilon(1.0), cav).coefficient == 0.0);
}

TEST_CASE("closed-form p = 0 ratio") {
  CHECK(closed_form_ratio_p0(1, 0.5) == doctest::Approx(0.0902040104310498645943).epsilon(1e-14));
  for (int l = 1; l <= 12; ++l) {
    const double x = 0.5;
    const double oracle_ratio = l * l * lower_gamma_series(l + 1, x) / specfun::factorial(l);
    CHECK(rel(closed_form_ratio_p0(l, 0.5), oracle_ratio) < 1e-12);
    if (l > 1) CHECK(closed_form_ratio_p0(l, 0.5) < closed_form_ratio_p0(l - 1, 0.5));
    CHECK(rel(closed_form_ratio_p0(l, 1e3), l * l) < 1e-14);
    CHECK(closed_form_ratio_p0(l, std::numeric_limits<double>::infinity()) == doctest::Approx(l * l));
  }
  CHECK_THROWS_AS(closed_form_ratio_p0(0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_ratio_p0(1, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(coupling_analytic_p0(mode_linear(3, 1), rotor(3), cavity()), std::invalid_argument);
  CHECK_THROWS_AS(coupling_analytic_p0(LGMode(0, 0, kLambda, kW0), rotor(1), cavity()), std::invalid_argument);
}

TEST_CASE("numeric p = 0 coupling is the closed form times a geometric constant") {
  // g / (B ratio) = 2 (T / h) sinc(2 l a) with T the thickness integral and a the wedge half-angle.
  const double k = 2.0 * kPi / kLambda;
  const double t_over_h = thickness_integral(k, 200e-9, ThicknessModel::exact) / 200e-9;
  double lo = 1e300, hi = 0.0;
  for (int l = 1; l <= 10; ++l) {
    const auto wm = rotor(l);
    const auto num = coupling_linear(mode_linear(l, 0), wm, cavity());
    const auto cf = coupling_analytic_p0(mode_linear(l, 0), wm, cavity());
    CHECK(cf.method == CouplingMethod::closed_form_p0);
    CHECK(cf.g_ratio == doctest::Approx(closed_form_ratio_p0(l, 0.5)).epsilon(1e-14));
    const double c = std::fabs(num.g) / std::fabs(cf.g);
    const double x = 2.0 * l * wm.half_angle();
    CHECK(rel(c, 2.0 * t_over_h * std::sin(x) / x) < 1e-7);
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  CHECK((hi - lo) / lo < 0.02);
  CHECK(lo == doctest::Approx(1.78).epsilon(0.01));
}

TEST_CASE("optimal radial index") {
  SweepConfig cfg;
  cfg.threads = 2;
  const auto best = find_optimal_p(mode_linear(3, 0), rotor(3), cavity(), 3, 30, cfg);
  CHECK(best.p == 11);
  // Independent exhaustive check.
  double gmax = 0.0;
  int pmax = -1;
  for (int p = 0; p <= 30; ++p) {
    const double g = std::fabs(coupling_linear(mode_linear(3, p), rotor(3), cavity()).g);
    if (g > gmax) gmax = g, pmax = p;
  }
  CHECK(pmax == best.p);
  CHECK(best.g == gmax);
  CHECK_THROWS_AS(find_optimal_p(mode_linear(3, 0), rotor(3), cavity(), 3, -1, cfg), std::invalid_argument);
}

TEST_CASE("sweeps are deterministic across thread counts") {
  SweepConfig cfg;
  cfg.l_values = {1, 2, 3, 4};
  cfg.p_values = {0, 1, 2, 5, 8, 13};
  cfg.decoherence.gamma_cav = 905.4597;
  cfg.threads = 1;
  const auto a = sweep(mode_linear(1, 0), rotor(1), cavity(), cfg);
  cfg.threads = 3;
  const auto b = sweep(mode_linear(1, 0), rotor(1), cavity(), cfg);
  REQUIRE(a.rows.size() == 24);
  REQUIRE(b.rows.size() == 24);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].l == cfg.l_values[i / 6]);
    CHECK(a.rows[i].p == cfg.p_values[i % 6]);
    CHECK(a.rows[i].l == b.rows[i].l);
    CHECK(a.rows[i].p == b.rows[i].p);
    CHECK(a.rows[i].g == b.rows[i].g);
    CHECK(a.rows[i].zeta == b.rows[i].zeta);
    CHECK(a.rows[i].error.empty());
    CHECK(a.rows[i].gamma.has_value());
  }
  const auto* row = a.find(3, 5);
  REQUIRE(row != nullptr);
  CHECK(row->g == doctest::Approx(std::fabs(coupling_linear(mode_linear(3, 5), rotor(3), cavity()).g)).epsilon(1e-14));
  CHECK(a.find(7, 0) == nullptr);

  SweepConfig rod = cfg;
  rod.spokes.fixed = 1;
  CHECK(sweep_windmill(rotor(3), rod, 4).spokes() == 1);
  CHECK(sweep_windmill(rotor(3), cfg, 4).spokes() == 4);
  PhaseRule quad_rule{PhaseRule::Kind::quadratic_point};
  CHECK(quad_rule.offset_for(3) == 0.0);
}
