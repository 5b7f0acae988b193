#include "lgt/products.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "lgt/constants.hpp"
#include "lgt/errors.hpp"
#include "lgt/model.hpp"

namespace lgt {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

double hz(double rad_s) { return rad_s / (2.0 * kPi); }

std::string line(std::initializer_list<std::string> cells) {
  std::string out;
  for (const auto& c : cells) out += (out.empty() ? "" : ",") + c;
  return out + "\n";
}

std::string num(double v) { return format_number(v); }

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.8e", v);
  return buf;
}

std::string csv_metadata(const Scenario& sc, std::string_view command) {
  std::string out;
  out += "# lgt " + std::string(kToolVersion) + "\n";
  out += "# scenario_hash fnv1a64:" + sc.hash_hex() + "\n";
  out += "# command " + std::string(command) + "\n";
  return out;
}

std::string coupling_csv(const Scenario& sc) {
  std::string out = csv_metadata(sc, "coupling");
  out += "l,p,spokes,phase_offset_rad,method,g_rad_s,g_hz,g_ratio,B_rad_s,g_fd_rad_s,cross_check_diff,"
         "quadrature_error,g_thin_slab_rad_s,zeta,gamma_hz,margin,feasible\n";
  const auto c = coupling_linear(sc.mode, sc.windmill, sc.cavity, sc.coupling);
  CouplingOptions thin = sc.coupling;
  thin.thickness = ThicknessModel::thin_slab;
  const auto c_thin = coupling_linear(sc.mode, sc.windmill, sc.cavity, thin);
  const double zeta = scattering_ratio(sc.mode, sc.windmill, {sc.cavity.equilibrium_angle}, sc.coupling.quadrature);
  double gamma = kNaN;
  double margin = kNaN;
  std::string feasible = "n/a";
  if (sc.decoherence.gamma_cav) {
    gamma = decoherence_rate(sc.decoherence, zeta);
    margin = feasibility_margin(c.g_hz(), gamma);
    feasible = is_feasible(margin, sc.feasibility_threshold) ? "yes" : "no";
  }
  out += line({std::to_string(sc.mode.l()), std::to_string(sc.mode.p()), std::to_string(sc.windmill.spokes()),
               num(sc.mode.phase_offset()), to_string(c.method), num(c.g), num(c.g_hz()), num(c.g_ratio), num(c.B),
               num(c.g_cross_check), num(c.cross_check_diff), num(c.quadrature_error), num(c_thin.g), num(zeta),
               num(gamma), num(margin), feasible});
  return out;
}

std::string fig2_csv(const Scenario& sc, int threads) {
  struct Row {
    double closed = kNaN, numeric = kNaN, g_hz = kNaN;
    std::string error;
  };
  const auto ls = sc.fig2_l.values();
  std::vector<Row> rows(ls.size());
  const double r_over_w0 = sc.windmill.radius() / sc.mode.waist();
  PhaseRule linear;
  parallel_for(static_cast<int>(ls.size()), threads, [&](int i) {
    const int l = ls[static_cast<std::size_t>(i)];
    auto& row = rows[static_cast<std::size_t>(i)];
    try {
      row.closed = closed_form_ratio_p0(l, r_over_w0);
      const auto mode = sc.mode.with_indices(l, 0).with_phase_offset(linear.offset_for(l));
      const auto c = coupling_linear(mode, sc.windmill.with_spokes(sc.spokes.spokes_for(l)), sc.cavity, sc.coupling);
      row.numeric = std::fabs(c.g_ratio);
      row.g_hz = c.g_hz();
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  });
  std::string out = csv_metadata(sc, "fig2");
  out += "# p = 0, R/w0 = " + num(r_over_w0) + ", phi' = pi/(4l)\n";
  out += "l,g_ratio_closed_form,g_ratio_numeric,g_hz_numeric,errors\n";
  for (std::size_t i = 0; i < ls.size(); ++i)
    out += line({std::to_string(ls[i]), num(rows[i].closed), num(rows[i].numeric), num(rows[i].g_hz),
                 csv_escape(rows[i].error)});
  return out;
}

std::string fig4_csv(const Scenario& sc, int threads) {
  const auto res = sweep(sc.mode, sc.windmill, sc.cavity, sc.sweep_config(threads));
  std::string out = csv_metadata(sc, "fig4");
  out += "l,p,g_ratio,g_hz,errors\n";
  for (const auto& r : res.rows) {
    const bool ok = r.error.empty();
    out += line({std::to_string(r.l), std::to_string(r.p), num(ok ? r.g_ratio : kNaN), num(ok ? r.g_hz() : kNaN),
                 csv_escape(r.error)});
  }
  return out;
}

std::string fig5_csv(const Scenario& sc, int threads) {
  const auto res = sweep(sc.mode, sc.windmill, sc.cavity, sc.sweep_config(threads));
  std::string out = csv_metadata(sc, "fig5");
  if (!sc.decoherence.beam_power_note.empty()) out += "# beam " + sc.decoherence.beam_power_note + "\n";
  out += "l,p,zeta,gamma_hz,errors\n";
  for (const auto& r : res.rows) {
    const bool ok = r.error.empty();
    out += line({std::to_string(r.l), std::to_string(r.p), num(ok ? r.zeta : kNaN),
                 num(ok && r.gamma ? *r.gamma : kNaN), csv_escape(r.error)});
  }
  return out;
}

std::string fig3_map_csv(const Scenario& sc, int l, int p, int resolution) {
  const auto mode = sc.mode.with_indices(l, p).with_phase_offset(0.0);
  const auto grid = default_map_grid(mode, resolution);
  const auto map = intensity_map(mode, grid);
  std::string out = csv_metadata(sc, "fig3");
  out += "# l = " + std::to_string(l) + ", p = " + std::to_string(p) + ", phi' = 0, z = 0, grid " +
         std::to_string(grid.nx) + "x" + std::to_string(grid.ny) + ", row-major in y\n";
  out += "x_m,y_m,intensity\n";
  out.reserve(out.size() + map.values.size() * 48);
  for (int iy = 0; iy < grid.ny; ++iy) {
    const std::string y = num(grid.y(iy));
    for (int ix = 0; ix < grid.nx; ++ix) {
      out += num(grid.x(ix));
      out += ',';
      out += y;
      out += ',';
      out += num(map.at(ix, iy));
      out += '\n';
    }
  }
  return out;
}

std::string fig3_rotor_csv(const Scenario& sc) {
  std::string out = csv_metadata(sc, "fig3");
  out += "wedge,x_m,y_m\n";
  const auto outline = footprint_outline(sc.windmill, {sc.cavity.equilibrium_angle});
  for (std::size_t w = 0; w < outline.size(); ++w)
    for (const auto& [x, y] : outline[w]) out += line({std::to_string(w), num(x), num(y)});
  return out;
}

std::string report_text(const Scenario& sc) {
  std::ostringstream os;
  os.precision(6);
  const auto& m = sc.mode;
  const auto& wm = sc.windmill;
  const auto& cav = sc.cavity;
  os << "lgt design report (scenario fnv1a64:" << sc.hash_hex() << ")\n\n";
  os << "Mode\n"
     << "  l = " << m.l() << ", p = " << m.p() << "\n"
     << "  wavelength = " << m.wavelength() << " m, waist = " << m.waist() << " m\n"
     << "  phase offset = " << m.phase_offset() << " rad, Rayleigh range = " << m.rayleigh_range() << " m\n";
  os << "Rotor\n"
     << "  spokes = " << wm.spokes() << ", R = " << wm.radius() << " m, s = " << wm.arc_length()
     << " m, h = " << wm.thickness() << " m\n"
     << "  mass per spoke = " << wm.mass_per_spoke() << " kg, epsilon = " << wm.epsilon() << "\n"
     << "  I = " << moment_of_inertia(wm) << " kg m^2, cross-section = " << cross_section_area(wm) << " m^2\n";
  os << "Cavity\n"
     << "  D = " << cav.length << " m, omega_c0 = " << cav.omega_c0 << " rad/s, omega_phi = " << cav.omega_phi
     << " rad/s, phi0 = " << cav.equilibrium_angle << " rad\n";

  const auto warnings = validate_perturbative(wm, m, cav);
  os << "Warnings\n";
  if (warnings.empty()) os << "  none\n";
  for (const auto& w : warnings) os << "  [" << w.code << "] " << w.message << "\n";

  const auto c = coupling_linear(m, wm, cav, sc.coupling);
  CouplingOptions thin = sc.coupling;
  thin.thickness = ThicknessModel::thin_slab;
  const auto c_thin = coupling_linear(m, wm, cav, thin);
  os << "Coupling (Hz values are |g| / 2 pi)\n"
     << "  B = " << c.B << " rad/s, zero-point angle = " << zero_point_angle(wm, cav) << " rad\n"
     << "  semi-analytic      g = " << c.g << " rad/s (" << c.g_hz() << " Hz), g/B = " << c.g_ratio << "\n"
     << "  finite-difference  g = " << c.g_cross_check << " rad/s, relative difference " << c.cross_check_diff << "\n"
     << "  thin-slab z model  g = " << c_thin.g << " rad/s (" << c_thin.g_hz() << " Hz)\n";
  if (m.p() == 0 && m.l() != 0) {
    const auto a = coupling_analytic_p0(m, wm, cav);
    os << "  closed form (p=0)  g = " << a.g << " rad/s, g/B = " << a.g_ratio << "\n";
  }
  try {
    const auto q = coupling_quadratic(m.with_phase_offset(0.0), wm, cav, sc.coupling);
    os << "  quadratic (phi'=0) coefficient = " << q.coefficient << " rad/s, d2 omega/d delta2 = "
       << q.second_derivative << " rad/s/rad^2\n";
  } catch (const NumericError& e) {
    os << "  quadratic (phi'=0) failed: " << e.what() << "\n";
  }

  const double zeta = scattering_ratio(m, wm, {cav.equilibrium_angle}, sc.coupling.quadrature);
  os << "Decoherence\n  zeta = " << zeta << "\n";
  std::string verdict = "n/a";
  if (sc.decoherence.gamma_cav) {
    const double gamma = decoherence_rate(sc.decoherence, zeta);
    const double margin = feasibility_margin(c.g_hz(), gamma);
    verdict = is_feasible(margin, sc.feasibility_threshold) ? "feasible" : "not feasible";
    os << "  Gamma_cav = " << *sc.decoherence.gamma_cav << " 1/s";
    if (!sc.decoherence.beam_power_note.empty()) os << " (" << sc.decoherence.beam_power_note << ")";
    os << "\n  Gamma = " << gamma << " 1/s\n"
       << "  margin Gamma/g = " << margin << " (threshold " << sc.feasibility_threshold << ")\n";
  } else {
    os << "  Gamma_cav = n/a\n  margin = n/a\n";
  }

  const auto sys = assemble(c, cav);
  os << "Hamiltonian check (omega_c, omega_phi, g) = (" << sys.omega_c << ", " << sys.omega_phi << ", " << sys.g
     << ") rad/s\n";
  if (sys.g != 0.0) {
    for (int n = 1; n <= 3; ++n) {
      const auto pc = check_polaron(sys, n);
      os << "  n = " << n << ": lowest block eigenvalue " << pc.computed << " vs -g^2 n^2/omega_phi " << pc.expected
         << " (relative error " << pc.rel_error << ", n_b_max " << pc.n_b_max << ")\n";
    }
  } else {
    os << "  g = 0: spectrum is the uncoupled ladder\n";
  }
  os << "\nVerdict: " << verdict << "\n";
  return os.str();
}

std::string optimize_text(const Scenario& sc, int l, int p_max, int threads) {
  const auto best = find_optimal_p(sc.mode, sc.windmill, sc.cavity, l, p_max, sc.sweep_config(threads));
  std::ostringstream os;
  os.precision(6);
  os << "l = " << l << ", p_max = " << p_max << ": p* = " << best.p << ", g* = " << best.g << " rad/s ("
     << hz(best.g) << " Hz), g*/B = " << best.g_ratio << "\n";
  return os.str();
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace lgt
