#include "lgt/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "lgt/constants.hpp"
#include "lgt/errors.hpp"

namespace lgt {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::optional<double> to_double(std::string_view s) {
  std::string tmp(s);
  if (tmp.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(tmp.c_str(), &end);
  if (end != tmp.c_str() + tmp.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<int> to_int(std::string_view s) {
  int v = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return v;
}

const std::map<std::string, double, std::less<>>& unit_table(std::string_view kind) {
  static const std::map<std::string, double, std::less<>> length{
      {"m", 1.0}, {"mm", 1e-3}, {"um", 1e-6}, {"µm", 1e-6}, {"nm", 1e-9}};
  static const std::map<std::string, double, std::less<>> angle{{"rad", 1.0}, {"mrad", 1e-3}, {"deg", kPi / 180.0}};
  // Cycle units convert to angular frequency with the 2 pi.
  static const std::map<std::string, double, std::less<>> angular{
      {"rad/s", 1.0},          {"krad/s", 1e3},          {"Mrad/s", 1e6},          {"Hz", 2.0 * kPi},
      {"kHz", 2.0 * kPi * 1e3}, {"MHz", 2.0 * kPi * 1e6}, {"GHz", 2.0 * kPi * 1e9}, {"THz", 2.0 * kPi * 1e12}};
  static const std::map<std::string, double, std::less<>> rate{{"1/s", 1.0}, {"/s", 1.0}, {"Hz", 1.0}, {"kHz", 1e3}};
  static const std::map<std::string, double, std::less<>> mass{{"kg", 1.0}, {"g", 1e-3}};
  if (kind == "length") return length;
  if (kind == "angle") return angle;
  if (kind == "angular_frequency") return angular;
  if (kind == "rate") return rate;
  if (kind == "mass") return mass;
  throw std::invalid_argument("unknown quantity kind");
}

enum class KeyType { length, angle, angular_frequency, rate, mass, real, integer, text, range, phase, spokes, omega_c0,
                     thickness_model };

const std::map<std::string, KeyType, std::less<>>& key_types() {
  static const std::map<std::string, KeyType, std::less<>> keys{
      {"wavelength", KeyType::length},
      {"waist", KeyType::length},
      {"l", KeyType::integer},
      {"p", KeyType::integer},
      {"phase_offset", KeyType::phase},
      {"spokes", KeyType::spokes},
      {"radius", KeyType::length},
      {"arc_length", KeyType::length},
      {"thickness", KeyType::length},
      {"mass", KeyType::mass},
      {"epsilon", KeyType::real},
      {"cavity_length", KeyType::length},
      {"omega_c0", KeyType::omega_c0},
      {"omega_phi", KeyType::angular_frequency},
      {"phi0", KeyType::angle},
      {"gamma_cav", KeyType::rate},
      {"beam_power_note", KeyType::text},
      {"feasibility_threshold", KeyType::real},
      {"sweep_l", KeyType::range},
      {"sweep_p", KeyType::range},
      {"fig2_l", KeyType::range},
      {"optimize_p_max", KeyType::integer},
      {"quad_tolerance", KeyType::real},
      {"fd_step", KeyType::angle},
      {"fd_step_second", KeyType::angle},
      {"thickness_model", KeyType::thickness_model},
      {"output_dir", KeyType::text},
  };
  return keys;
}

const std::set<std::string, std::less<>> kRequired{"wavelength", "waist",     "l",    "p",       "radius",
                                                   "arc_length", "thickness", "mass", "epsilon", "cavity_length",
                                                   "omega_phi"};

class Entries {
 public:
  Entries(std::map<std::string, std::string> raw, std::string origin) : raw_(std::move(raw)), origin_(std::move(origin)) {}

  bool has(const std::string& key) const { return raw_.count(key) != 0; }
  const std::string& text(const std::string& key) const { return raw_.at(key); }

  [[noreturn]] void fail(const std::string& key, const std::string& why) const {
    throw ConfigError(origin_ + ": key '" + key + "': " + why);
  }

  double quantity(const std::string& key, std::string_view kind) const {
    try {
      return parse_quantity(text(key), kind);
    } catch (const ConfigError& e) {
      fail(key, e.what());
    }
  }

  double real(const std::string& key) const {
    auto v = to_double(text(key));
    if (!v) fail(key, "expected a number, got '" + text(key) + "'");
    return *v;
  }

  int integer(const std::string& key) const {
    auto v = to_int(text(key));
    if (!v) fail(key, "expected an integer, got '" + text(key) + "'");
    return *v;
  }

  IndexRange range(const std::string& key) const {
    const auto& t = text(key);
    const auto pos = t.find("..");
    if (pos == std::string::npos) fail(key, "expected a range 'first..last', got '" + t + "'");
    auto a = to_int(trim(std::string_view(t).substr(0, pos)));
    auto b = to_int(trim(std::string_view(t).substr(pos + 2)));
    if (!a || !b || *a > *b) fail(key, "expected a range 'first..last' with first <= last, got '" + t + "'");
    return {*a, *b};
  }

 private:
  std::map<std::string, std::string> raw_;
  std::string origin_;
};

}  // namespace

std::vector<int> IndexRange::values() const {
  std::vector<int> out;
  for (int i = first; i <= last; ++i) out.push_back(i);
  return out;
}

std::string Scenario::hash_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

SweepConfig Scenario::sweep_config(int threads) const {
  SweepConfig cfg;
  cfg.l_values = sweep_l.values();
  cfg.p_values = sweep_p.values();
  cfg.phase = phase;
  cfg.spokes = spokes;
  cfg.decoherence = decoherence;
  cfg.coupling = coupling;
  cfg.threads = threads;
  return cfg;
}

double parse_quantity(std::string_view text, std::string_view kind) {
  const std::string t = trim(text);
  const auto space = t.find_first_of(" \t");
  if (space == std::string::npos) throw ConfigError("missing unit in '" + t + "'");
  const auto number = to_double(t.substr(0, space));
  const std::string unit = trim(std::string_view(t).substr(space));
  if (!number) throw ConfigError("expected a number in '" + t + "'");
  const auto& table = unit_table(kind);
  const auto it = table.find(unit);
  if (it == table.end()) {
    std::string allowed;
    for (const auto& [name, _] : table) allowed += (allowed.empty() ? "" : ", ") + name;
    throw ConfigError("unknown unit '" + unit + "' (expected one of: " + allowed + ")");
  }
  return *number * it->second;
}

Scenario parse_scenario(std::string_view text, const std::string& origin) {
  std::map<std::string, std::string> raw;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    const std::string body = trim(hash == std::string::npos ? line : line.substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": expected 'key = value', got '" + body + "'");
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (!key_types().count(key)) throw ConfigError(origin + ": unknown key '" + key + "'");
    if (raw.count(key)) throw ConfigError(origin + ": key '" + key + "' given twice");
    if (value.empty()) throw ConfigError(origin + ": key '" + key + "': empty value");
    raw.emplace(key, value);
  }
  for (const auto& key : kRequired)
    if (!raw.count(key)) throw ConfigError(origin + ": missing required key '" + key + "'");

  std::string canonical;
  for (const auto& [k, v] : raw) canonical += k + "=" + v + "\n";
  const Entries e(raw, origin);

  const int l = e.integer("l");
  const int p = e.integer("p");
  if (p < 0) e.fail("p", "radial index must be >= 0");

  PhaseRule phase;
  if (e.has("phase_offset")) {
    const auto& t = e.text("phase_offset");
    if (t == "linear") {
      phase.kind = PhaseRule::Kind::linear_point;
    } else if (t == "quadratic") {
      phase.kind = PhaseRule::Kind::quadratic_point;
    } else {
      phase.kind = PhaseRule::Kind::fixed;
      phase.value = e.quantity("phase_offset", "angle");
    }
  }
  if (phase.kind == PhaseRule::Kind::linear_point && l == 0)
    e.fail("phase_offset", "'linear' needs l != 0; give an explicit angle");

  SpokeRule spokes;
  if (e.has("spokes") && e.text("spokes") != "match") {
    spokes.fixed = e.integer("spokes");
    if (*spokes.fixed < 1) e.fail("spokes", "must be >= 1 or 'match'");
  }

  const double wavelength = e.quantity("wavelength", "length");
  const double waist = e.quantity("waist", "length");

  auto build = [&](const std::string& key, auto&& fn) {
    try {
      return fn();
    } catch (const std::invalid_argument& ex) {
      e.fail(key, ex.what());
    }
  };

  const LGMode mode = build("waist", [&] { return LGMode(l, p, wavelength, waist, phase.offset_for(l)); });
  const Windmill windmill = build("arc_length", [&] {
    return Windmill(spokes.spokes_for(l), e.quantity("radius", "length"), e.quantity("arc_length", "length"),
                    e.quantity("thickness", "length"), e.quantity("mass", "mass"), e.real("epsilon"));
  });

  Cavity cavity;
  cavity.length = e.quantity("cavity_length", "length");
  cavity.omega_phi = e.quantity("omega_phi", "angular_frequency");
  cavity.equilibrium_angle = e.has("phi0") ? e.quantity("phi0", "angle") : 0.0;
  if (!e.has("omega_c0") || e.text("omega_c0") == "auto")
    cavity.omega_c0 = Cavity::resonance_for_wavelength(wavelength);
  else
    cavity.omega_c0 = e.quantity("omega_c0", "angular_frequency");
  build("cavity_length", [&] {
    cavity.validate();
    return 0;
  });

  Scenario sc{mode, windmill, cavity, {}, phase, spokes, {}};
  if (e.has("gamma_cav") && e.text("gamma_cav") != "none") {
    sc.decoherence.gamma_cav = e.quantity("gamma_cav", "rate");
    if (*sc.decoherence.gamma_cav < 0.0) e.fail("gamma_cav", "must be >= 0");
  }
  if (e.has("beam_power_note")) sc.decoherence.beam_power_note = e.text("beam_power_note");
  if (e.has("feasibility_threshold")) {
    sc.feasibility_threshold = e.real("feasibility_threshold");
    if (!(sc.feasibility_threshold > 0.0)) e.fail("feasibility_threshold", "must be > 0");
  }
  if (e.has("sweep_l")) sc.sweep_l = e.range("sweep_l");
  if (e.has("sweep_p")) sc.sweep_p = e.range("sweep_p");
  if (e.has("fig2_l")) sc.fig2_l = e.range("fig2_l");
  if (sc.sweep_p.first < 0) e.fail("sweep_p", "radial indices must be >= 0");
  if (sc.fig2_l.first < 1) e.fail("fig2_l", "l must be >= 1");
  if (e.has("optimize_p_max")) {
    sc.optimize_p_max = e.integer("optimize_p_max");
    if (sc.optimize_p_max < 0) e.fail("optimize_p_max", "must be >= 0");
  }
  if (e.has("quad_tolerance")) {
    const double tol = e.real("quad_tolerance");
    if (!(tol > 0.0 && tol < 1.0)) e.fail("quad_tolerance", "must lie in (0, 1)");
    sc.coupling.quadrature.rel_tol = tol;
  }
  if (e.has("fd_step")) sc.coupling.fd_step = e.quantity("fd_step", "angle");
  if (e.has("fd_step_second")) sc.coupling.fd_step_second = e.quantity("fd_step_second", "angle");
  if (!(sc.coupling.fd_step > 0.0)) e.fail("fd_step", "must be > 0");
  if (!(sc.coupling.fd_step_second > 0.0)) e.fail("fd_step_second", "must be > 0");
  if (e.has("thickness_model")) {
    const auto& t = e.text("thickness_model");
    if (t == "exact")
      sc.coupling.thickness = ThicknessModel::exact;
    else if (t == "thin_slab")
      sc.coupling.thickness = ThicknessModel::thin_slab;
    else
      e.fail("thickness_model", "expected 'exact' or 'thin_slab', got '" + t + "'");
  }
  if (e.has("output_dir")) sc.output_dir = e.text("output_dir");
  sc.hash = fnv1a(canonical);
  return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str(), path.string());
}

}  // namespace lgt
