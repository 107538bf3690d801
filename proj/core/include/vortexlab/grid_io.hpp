#pragma once

// Parallel grid sampling of a pointwise field and CSV / PNG / JSON output.
//
// Grid coordinates are stored in units of a species length scale (w0 for
// photon and GW fields, 1/q for electrons); `GridSpec::unit` converts them to
// the internal units the field is evaluated in.

#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vortexlab/analysis.hpp"
#include "vortexlab/jet.hpp"

namespace vortexlab {

class GridError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GridKind { polar, cartesian };

/// Polar grids: first axis phi in [0, 2 pi) (endpoint excluded), second axis r.
/// Cartesian grids: first axis x, second axis y. Both ranges are inclusive.
struct GridSpec {
  GridKind kind = GridKind::cartesian;
  double first_min = -1.0, first_max = 1.0;
  double second_min = -1.0, second_max = 1.0;
  int first_count = 64;
  int second_count = 64;
  double unit = 1.0;  // internal length per grid unit
  double t = 0.0;
  double z = 0.0;

  static GridSpec polar(double r_min, double r_max, int n_r, int n_phi, double unit = 1.0);
  static GridSpec cartesian(double half_width, int n, double unit = 1.0);

  void validate() const;
  std::size_t size() const noexcept {
    return static_cast<std::size_t>(first_count) * static_cast<std::size_t>(second_count);
  }
  double first(int i) const;
  double second(int j) const;
  /// Node (i, j) as internal (r, phi).
  std::pair<double, double> polar_node(int i, int j) const;
};

using Metadata = std::vector<std::pair<std::string, std::string>>;

struct FieldGrid {
  GridSpec spec;
  std::vector<double> intensity;  // unit peak; index j * first_count + i
  double peak = 0.0;              // raw intensity = intensity * peak
  std::vector<std::string> component_names;
  std::vector<std::vector<cplx>> components;  // raw amplitudes, same layout
  Metadata metadata;

  double at(int i, int j) const { return intensity[index(i, j)]; }
  double raw(int i, int j) const { return at(i, j) * peak; }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(spec.first_count) + static_cast<std::size_t>(i);
  }
};

struct PointValue {
  double intensity = 0.0;
  std::vector<cplx> components;
};
using PointSampler = std::function<PointValue(double r, double phi)>;

/// Evaluates every node in parallel; throws GridError naming the node on a
/// non-finite or negative intensity.
FieldGrid sample_grid(const RingIntensity& field, const GridSpec& spec, unsigned workers = 0);
FieldGrid sample_grid(const PointSampler& field, const GridSpec& spec, std::vector<std::string> component_names,
                      unsigned workers = 0);

/// `# key=value` header lines, then one row per second-axis index.
void write_csv(const FieldGrid& grid, const std::filesystem::path& path);
FieldGrid read_csv(const std::filesystem::path& path);

enum class Colormap { gray, hot };
Colormap parse_colormap(const std::string& name);

/// 8-bit raster, unit-peak intensity mapped linearly to [0, 255]. Second axis runs bottom to top.
void write_png(const FieldGrid& grid, const std::filesystem::path& path, Colormap colormap = Colormap::hot);

/// Flat JSON object with the VisibilityReport keys plus `extra` string entries.
void write_report(const VisibilityReport& report, const std::filesystem::path& path, const Metadata& extra = {});
VisibilityReport read_report(const std::filesystem::path& path);

}  // namespace vortexlab
