#pragma once

// CSV data products and the text report behind the CLI commands.
//
// CSV dialect: comma separated, '.' decimal point, numbers in %.8e (9
// significant digits), '#' comment lines first (tool version, scenario hash,
// command), then one header row. Failed cells carry "nan" values and a
// message in the errors column. Output is identical for any thread count.

#include <filesystem>
#include <string>
#include <string_view>

#include "lgt/scenario.hpp"

namespace lgt {

std::string format_number(double v);
std::string csv_metadata(const Scenario& sc, std::string_view command);

/// One-row CSV: l,p,spokes,phase_offset_rad,method,g_rad_s,g_hz,g_ratio,B_rad_s,
/// g_fd_rad_s,cross_check_diff,quadrature_error,g_thin_slab_rad_s,zeta,gamma_hz,margin,feasible
std::string coupling_csv(const Scenario& sc);

/// l,g_ratio_closed_form,g_ratio_numeric,g_hz_numeric,errors over fig2_l at p = 0.
std::string fig2_csv(const Scenario& sc, int threads);

/// l,p,g_ratio,g_hz,errors over sweep_l x sweep_p.
std::string fig4_csv(const Scenario& sc, int threads);

/// l,p,zeta,gamma_hz,errors over sweep_l x sweep_p. gamma is "nan" without Gamma_cav.
std::string fig5_csv(const Scenario& sc, int threads);

/// x_m,y_m,intensity on the default 512 x 512 grid of LG_{l,p} at phi' = 0, z = 0.
std::string fig3_map_csv(const Scenario& sc, int l, int p, int resolution = 512);

/// wedge,x_m,y_m: closed outline of each wedge at equilibrium.
std::string fig3_rotor_csv(const Scenario& sc);

/// Human-readable design report. Throws NumericError on a failed coupling evaluation.
std::string report_text(const Scenario& sc);

/// Text printed by the optimize command.
std::string optimize_text(const Scenario& sc, int l, int p_max, int threads);

/// Writes through a temporary sibling file and renames it into place.
void write_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace lgt
