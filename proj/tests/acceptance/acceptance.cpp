// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "run_config.hpp"
#include "vortexlab/analysis.hpp"
#include "vortexlab/parallel.hpp"
#include "vortexlab/potentials.hpp"
#include "vortexlab/presets.hpp"
#include "vortexlab/validation.hpp"

using namespace vortexlab;

namespace {

struct Timed {
  VisibilityReport report;
  double seconds = 0.0;
};

Timed run_preset(const std::string& name) {
  const auto t0 = std::chrono::steady_clock::now();
  Timed out;
  out.report = cli::analyze_field(find_preset(name).config);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

std::string fmt(double v, int prec = 4) {
  std::ostringstream s;
  s.precision(prec);
  s << v;
  return s.str();
}

int failures = 0;

void line(int id, bool pass, const std::string& title, const std::string& detail) {
  if (!pass) ++failures;
  std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << "  " << title << "  [" << detail << "]"
            << std::endl;
}

bool figure_pair(int id, const std::string& title, const std::string& a, const std::string& b, double limit_s,
                 bool check_fringes) {
  const Timed ra = run_preset(a), rb = run_preset(b);
  bool ok = std::abs(ra.report.vis - 0.99) <= 0.02 && std::abs(rb.report.vis - 0.50) <= 0.03;
  ok = ok && ra.seconds < limit_s && rb.seconds < limit_s;
  if (check_fringes) ok = ok && rb.report.fringe_count == 30;
  std::string detail = a + " vis=" + fmt(ra.report.vis) + " (" + fmt(ra.seconds, 3) + " s), " + b +
                       " vis=" + fmt(rb.report.vis) + " (" + fmt(rb.seconds, 3) + " s)";
  if (check_fringes) detail += ", fringes=" + std::to_string(rb.report.fringe_count);
  line(id, ok, title, detail);
  return ok;
}

void scaling_law() {
  const cli::ScalingResult res = cli::paraxial_scaling({5, 10, 20, 40}, 100e-6, 800e-9);
  bool ok = std::abs(res.exponent - 0.5) <= 0.02;
  double worst = 0.0;
  for (const auto& row : res.rows) worst = std::max(worst, row.rel_error);
  ok = ok && worst < 5e-3;
  line(4, ok, "paraxial r_max scaling", "exponent=" + fmt(res.exponent, 8) + ", max rel err=" + fmt(worst, 3));
}

void fringe_spacing_check() {
  bool ok = true;
  std::string detail;
  const double w0 = 100e-6;
  for (int l : {5, 15}) {
    const ParaxialLGParams lg{0, l, w0, 800e-9};
    const SuperpositionSpec spec = SuperpositionSpec::pair_cos(l);
    const RingIntensity I = [&](double r, double phi) {
      return std::norm(lg_superposition({0.0, r, phi, 0.0}, lg, spec));
    };
    const RMaxResult rm = find_r_max(I, l, w0);
    const AzimuthalExtrema ex = azimuthal_extrema(I, rm.r_max, l);
    double worst = 0.0;
    const std::size_t n = ex.maxima_phi.size();
    if (n != static_cast<std::size_t>(2 * l)) ok = false;
    const double expected = fringe_spacing(l, w0);
    for (std::size_t k = 0; k < n; ++k) {
      double d = ex.maxima_phi[(k + 1) % n] - ex.maxima_phi[k];
      if (d <= 0.0) d += 2.0 * constants::pi;
      worst = std::max(worst, std::abs(rm.r_max * d - expected) / expected);
    }
    ok = ok && worst < 0.01;
    detail += (detail.empty() ? "" : ", ") + std::string("l=") + std::to_string(l) + " max dev=" + fmt(worst, 3);
  }
  line(5, ok, "fringe spacing", detail);
}

void property_suite() {
  const auto reports = run_suite(Thresholds{}, true);
  int controls = 0, failed_controls = 0;
  std::string bad;
  for (const auto& r : reports) {
    if (r.negative_control) {
      ++controls;
      if (!r.pass) ++failed_controls;
    }
    if (!r.as_designed()) bad += (bad.empty() ? "" : "; ") + r.name;
  }
  const bool ok = suite_ok(reports) && controls == 4 && failed_controls == 4;
  line(6, ok, "property suite",
       std::to_string(reports.size() - controls) + " checks, " + std::to_string(failed_controls) + "/" +
           std::to_string(controls) + " controls fail as designed" + (bad.empty() ? "" : ", off: " + bad));
}

bool strictly_decreasing(const std::string& preset, const std::string& param, const std::vector<double>& values,
                         std::string& detail) {
  const FieldConfig base = find_preset(preset).config;
  double prev = 2.0;
  bool ok = values.size() >= 5;
  detail += param + ":";
  for (double v : values) {
    const double vis = cli::analyze_field(cli::apply_sweep_value(base, param, v)).vis;
    ok = ok && vis < prev;
    prev = vis;
    detail += " " + fmt(v) + "->" + fmt(vis);
  }
  return ok;
}

void monotonicity() {
  std::string photon, electron, gw;
  const bool a = strictly_decreasing("fig1a", "w0", {186.25, 50, 20, 10, 7.75}, photon);
  const bool b = strictly_decreasing("fig2b", "b", {1500, 800, 400, 200, 142.1}, electron);
  const bool c = strictly_decreasing("fig3a", "w0", {63.1, 30, 15, 10, 7.41}, gw);
  line(7, a && b && c, "visibility decreases with focusing",
       "photon " + photon + " | electron " + electron + " | gw " + gw);
}

}  // namespace

int main() {
  std::cout << "vortexlab acceptance suite (" << worker_count() << " worker threads)" << std::endl;
  figure_pair(1, "photon figures", "fig1a", "fig1b", 30.0, false);
  figure_pair(2, "electron figures", "fig2a", "fig2b", 30.0, false);
  figure_pair(3, "gravitational-wave figures", "fig3a", "fig3b", 60.0, true);
  scaling_law();
  fringe_spacing_check();
  property_suite();
  monotonicity();
  std::cout << "criterion 8: N/A   large-l entanglement and tight-focusing experiments  [excluded, no numerical target]"
            << std::endl;
  std::cout << (failures == 0 ? "acceptance: all criteria passed" : "acceptance: " + std::to_string(failures) +
                                                                         " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
