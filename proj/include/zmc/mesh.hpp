#pragma once

#include "zmc/surface.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace zmc {

// Uniform evaluation grid over a rectangle. Row-major with y as the row
// index: entry (ix, iy) lives at iy * nx + ix.
struct GridMesh {
  std::vector<double> xs, ys;
  std::vector<double> t;
  std::vector<char> causal;  // 'S', 'T', 'L'
  std::vector<double> residual;
  std::vector<unsigned char> certified;  // 1 if inside the certified box
  int nx = 0, ny = 0;
  double residual_max = 0.0;  // max |residual| over the grid
  // Half-widths of the certified box used for the flags (0 disables them).
  double x_certified = 0.0, y_certified = 0.0;

  std::size_t index(int ix, int iy) const {
    return static_cast<std::size_t>(iy) * static_cast<std::size_t>(nx) +
           static_cast<std::size_t>(ix);
  }
};

// Axis with steps points from lo to hi. Interpolated (not lo + i*h) so a
// symmetric range with odd steps hits 0 exactly at the midpoint -- the
// mesh's on-line column then carries t = y and causal = 'L' bit-exactly.
std::vector<double> uniform_axis(double lo, double hi, int steps);

GridMesh build_mesh(const TruncatedSolution& sol,
                    std::pair<double, double> x_range,
                    std::pair<double, double> y_range, int steps,
                    double tol = TruncatedSolution::kCausalTol,
                    double x_certified = 0.0, double y_certified = 0.0);

// CSV rows "x,y,t,causal,residual" (plus ",certified" when flags are on),
// shortest round-trip number formatting throughout.
void write_mesh_csv(const GridMesh& mesh, std::ostream& os, bool with_certified);
void write_mesh_csv(const GridMesh& mesh, const std::string& path, bool with_certified);

// Wavefront OBJ: leading comment lines, "v x y t" vertices in grid order,
// 1-based quad faces per grid cell.
void write_mesh_obj(const GridMesh& mesh, std::ostream& os,
                    const std::vector<std::string>& comments);
void write_mesh_obj(const GridMesh& mesh, const std::string& path,
                    const std::vector<std::string>& comments);

}  // namespace zmc
