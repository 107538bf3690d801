#include "vortexlab/grid_io.hpp"

#include <png.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "vortexlab/parallel.hpp"
#include "vortexlab/units.hpp"

namespace vortexlab {
namespace {

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw GridError("read_csv: bad number '" + std::string(s) + "'");
  }
  return v;
}

int parse_int(std::string_view s) {
  int v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw GridError("read_csv: bad integer '" + std::string(s) + "'");
  }
  return v;
}

std::string kind_name(GridKind k) { return k == GridKind::polar ? "polar" : "cartesian"; }

void normalize(FieldGrid& grid) {
  grid.peak = grid.intensity.empty() ? 0.0 : *std::max_element(grid.intensity.begin(), grid.intensity.end());
  if (grid.peak > 0.0) {
    for (double& v : grid.intensity) v /= grid.peak;
  }
}

[[noreturn]] void bad_node(const GridSpec& spec, int i, int j, double value) {
  std::ostringstream msg;
  msg << "sample_grid: invalid intensity " << value << " at node (" << i << ", " << j << "), "
      << (spec.kind == GridKind::polar ? "phi=" : "x=") << spec.first(i)
      << (spec.kind == GridKind::polar ? ", r=" : ", y=") << spec.second(j);
  throw GridError(msg.str());
}

}  // namespace

GridSpec GridSpec::polar(double r_min, double r_max, int n_r, int n_phi, double unit) {
  GridSpec s;
  s.kind = GridKind::polar;
  s.first_min = 0.0;
  s.first_max = 2.0 * constants::pi;
  s.first_count = n_phi;
  s.second_min = r_min;
  s.second_max = r_max;
  s.second_count = n_r;
  s.unit = unit;
  return s;
}

GridSpec GridSpec::cartesian(double half_width, int n, double unit) {
  GridSpec s;
  s.kind = GridKind::cartesian;
  s.first_min = s.second_min = -half_width;
  s.first_max = s.second_max = half_width;
  s.first_count = s.second_count = n;
  s.unit = unit;
  return s;
}

void GridSpec::validate() const {
  if (first_count < 2 || second_count < 2) throw GridError("GridSpec: resolution must be >= 2 per axis");
  if (!(first_max > first_min) || !(second_max > second_min)) throw GridError("GridSpec: empty extent");
  if (!(unit > 0.0) || !std::isfinite(unit)) throw GridError("GridSpec: unit must be positive");
  if (!std::isfinite(t) || !std::isfinite(z)) throw GridError("GridSpec: non-finite slice");
  if (kind == GridKind::polar) {
    if (!(second_min > 0.0)) throw GridError("GridSpec: polar grids need r_min > 0");
  } else {
    for (int i = 0; i < first_count; ++i) {
      if (first(i) != 0.0) continue;
      for (int j = 0; j < second_count; ++j) {
        if (second(j) == 0.0) throw GridError("GridSpec: cartesian grid contains the origin");
      }
    }
  }
}

double GridSpec::first(int i) const {
  if (kind == GridKind::polar) return first_min + (first_max - first_min) * i / first_count;
  return first_min + (first_max - first_min) * i / (first_count - 1);
}

double GridSpec::second(int j) const { return second_min + (second_max - second_min) * j / (second_count - 1); }

std::pair<double, double> GridSpec::polar_node(int i, int j) const {
  if (kind == GridKind::polar) return {second(j) * unit, first(i)};
  const double x = first(i) * unit;
  const double y = second(j) * unit;
  return {std::hypot(x, y), std::atan2(y, x)};
}

FieldGrid sample_grid(const RingIntensity& field, const GridSpec& spec, unsigned workers) {
  return sample_grid([&](double r, double phi) { return PointValue{field(r, phi), {}}; }, spec, {}, workers);
}

FieldGrid sample_grid(const PointSampler& field, const GridSpec& spec, std::vector<std::string> component_names,
                      unsigned workers) {
  spec.validate();
  FieldGrid grid;
  grid.spec = spec;
  grid.intensity.assign(spec.size(), 0.0);
  grid.component_names = std::move(component_names);
  grid.components.assign(grid.component_names.size(), std::vector<cplx>(spec.size()));
  const auto n_first = static_cast<std::size_t>(spec.first_count);

  parallel_for(
      spec.size(),
      [&](std::size_t k) {
        const int i = static_cast<int>(k % n_first);
        const int j = static_cast<int>(k / n_first);
        const auto [r, phi] = spec.polar_node(i, j);
        PointValue v = field(r, phi);
        if (!std::isfinite(v.intensity) || v.intensity < 0.0) bad_node(spec, i, j, v.intensity);
        grid.intensity[k] = v.intensity;
        for (std::size_t c = 0; c < grid.components.size() && c < v.components.size(); ++c) {
          grid.components[c][k] = v.components[c];
        }
      },
      workers);

  normalize(grid);
  return grid;
}

void write_csv(const FieldGrid& grid, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GridError("write_csv: cannot open " + path.string());
  const GridSpec& s = grid.spec;
  out << "# kind=" << kind_name(s.kind) << '\n'
      << "# first_min=" << shortest(s.first_min) << '\n'
      << "# first_max=" << shortest(s.first_max) << '\n'
      << "# first_count=" << s.first_count << '\n'
      << "# second_min=" << shortest(s.second_min) << '\n'
      << "# second_max=" << shortest(s.second_max) << '\n'
      << "# second_count=" << s.second_count << '\n'
      << "# unit=" << shortest(s.unit) << '\n'
      << "# t=" << shortest(s.t) << '\n'
      << "# z=" << shortest(s.z) << '\n'
      << "# peak=" << shortest(grid.peak) << '\n';
  for (const auto& [k, v] : grid.metadata) out << "# " << k << '=' << v << '\n';

  std::string line;
  for (int j = 0; j < s.second_count; ++j) {
    line.clear();
    for (int i = 0; i < s.first_count; ++i) {
      if (i) line += ',';
      line += shortest(grid.at(i, j));
    }
    line += '\n';
    out << line;
  }
  if (!out) throw GridError("write_csv: write failed for " + path.string());
}

FieldGrid read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GridError("read_csv: cannot open " + path.string());
  FieldGrid grid;
  GridSpec& s = grid.spec;
  std::string line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = line.substr(2, eq - 2);
      const std::string val = line.substr(eq + 1);
      if (key == "kind") s.kind = val == "polar" ? GridKind::polar : GridKind::cartesian;
      else if (key == "first_min") s.first_min = parse_double(val);
      else if (key == "first_max") s.first_max = parse_double(val);
      else if (key == "first_count") s.first_count = parse_int(val);
      else if (key == "second_min") s.second_min = parse_double(val);
      else if (key == "second_max") s.second_max = parse_double(val);
      else if (key == "second_count") s.second_count = parse_int(val);
      else if (key == "unit") s.unit = parse_double(val);
      else if (key == "t") s.t = parse_double(val);
      else if (key == "z") s.z = parse_double(val);
      else if (key == "peak") grid.peak = parse_double(val);
      else grid.metadata.emplace_back(key, val);
      continue;
    }
    std::vector<double> row;
    std::string_view rest(line);
    while (true) {
      const auto comma = rest.find(',');
      row.push_back(parse_double(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    rows.push_back(std::move(row));
  }
  if (static_cast<int>(rows.size()) != s.second_count) throw GridError("read_csv: row count does not match header");
  grid.intensity.reserve(s.size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != s.first_count) throw GridError("read_csv: column count does not match header");
    grid.intensity.insert(grid.intensity.end(), row.begin(), row.end());
  }
  return grid;
}

Colormap parse_colormap(const std::string& name) {
  if (name == "gray" || name == "grey") return Colormap::gray;
  if (name == "hot") return Colormap::hot;
  throw GridError("unknown colormap '" + name + "' (valid: gray, hot)");
}

void write_png(const FieldGrid& grid, const std::filesystem::path& path, Colormap colormap) {
  const int width = grid.spec.first_count;
  const int height = grid.spec.second_count;
  const int channels = colormap == Colormap::gray ? 1 : 3;

  std::unique_ptr<FILE, int (*)(FILE*)> fp(std::fopen(path.c_str(), "wb"), &std::fclose);
  if (!fp) throw GridError("write_png: cannot open " + path.string());
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, nullptr);
    throw GridError("write_png: libpng initialisation failed");
  }
  std::vector<png_byte> row(static_cast<std::size_t>(width * channels));
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw GridError("write_png: encoding failed for " + path.string());
  }
  png_init_io(png, fp.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height), 8,
               channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);

  auto level = [](double v) { return static_cast<png_byte>(std::lround(255.0 * std::clamp(v, 0.0, 1.0))); };
  for (int j = height - 1; j >= 0; --j) {
    for (int i = 0; i < width; ++i) {
      const double v = grid.at(i, j);
      auto* px = &row[static_cast<std::size_t>(i * channels)];
      if (colormap == Colormap::gray) {
        px[0] = level(v);
      } else {
        px[0] = level(3.0 * v);
        px[1] = level(3.0 * v - 1.0);
        px[2] = level(3.0 * v - 2.0);
      }
    }
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

void write_report(const VisibilityReport& report, const std::filesystem::path& path, const Metadata& extra) {
  nlohmann::ordered_json j;
  j["r_max"] = report.r_max;
  j["phi_at_max"] = report.phi_at_max;
  j["I_max"] = report.I_max;
  j["I_min"] = report.I_min;
  j["vis"] = report.vis;
  j["fringe_count"] = report.fringe_count;
  j["r_max_internal"] = report.r_max_internal;
  j["r_max_over_w0"] = report.r_max_over_w0;
  j["radial_samples"] = report.radial_samples;
  j["azimuthal_samples"] = report.azimuthal_samples;
  j["ring_samples"] = report.ring_samples;
  j["refinement_iterations"] = report.refinement_iterations;
  j["fringe_count_warning"] = report.fringe_count_warning;
  j["r_max_fallback"] = report.r_max_fallback;
  for (const auto& [k, v] : extra) {
    if (!j.contains(k)) j[k] = v;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GridError("write_report: cannot open " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw GridError("write_report: write failed for " + path.string());
}

VisibilityReport read_report(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GridError("read_report: cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
    VisibilityReport r;
    r.r_max = j.at("r_max").get<double>();
    r.phi_at_max = j.at("phi_at_max").get<double>();
    r.I_max = j.at("I_max").get<double>();
    r.I_min = j.at("I_min").get<double>();
    r.vis = j.at("vis").get<double>();
    r.fringe_count = j.at("fringe_count").get<int>();
    r.r_max_internal = j.value("r_max_internal", 0.0);
    r.r_max_over_w0 = j.value("r_max_over_w0", 0.0);
    r.radial_samples = j.value("radial_samples", 0);
    r.azimuthal_samples = j.value("azimuthal_samples", 0);
    r.ring_samples = j.value("ring_samples", 0);
    r.refinement_iterations = j.value("refinement_iterations", 0);
    r.fringe_count_warning = j.value("fringe_count_warning", false);
    r.r_max_fallback = j.value("r_max_fallback", false);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw GridError("read_report: " + std::string(e.what()));
  }
}

}  // namespace vortexlab
