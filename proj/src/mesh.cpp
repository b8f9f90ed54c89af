#include "zmc/mesh.hpp"

#include "zmc/util.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace zmc {

std::vector<double> uniform_axis(double lo, double hi, int steps) {
  if (steps < 2) throw std::invalid_argument("axis needs at least 2 steps");
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double u = static_cast<double>(i) / (steps - 1);
    out[static_cast<std::size_t>(i)] = lo * (1.0 - u) + hi * u;
  }
  return out;
}

GridMesh build_mesh(const TruncatedSolution& sol,
                    std::pair<double, double> x_range,
                    std::pair<double, double> y_range, int steps, double tol,
                    double x_certified, double y_certified) {
  GridMesh m;
  m.xs = uniform_axis(x_range.first, x_range.second, steps);
  m.ys = uniform_axis(y_range.first, y_range.second, steps);
  m.nx = steps;
  m.ny = steps;
  m.x_certified = x_certified;
  m.y_certified = y_certified;
  const std::size_t total = m.xs.size() * m.ys.size();
  m.t.resize(total);
  m.causal.resize(total);
  m.residual.resize(total);
  m.certified.resize(total);
  for (int iy = 0; iy < m.ny; ++iy) {
    const double y = m.ys[static_cast<std::size_t>(iy)];
    for (int ix = 0; ix < m.nx; ++ix) {
      const double x = m.xs[static_cast<std::size_t>(ix)];
      const std::size_t at = m.index(ix, iy);
      m.t[at] = sol.evaluate(x, y);
      m.causal[at] = causal_code(sol.causal_type(x, y, tol));
      m.residual[at] = sol.residual_numeric(x, y);
      m.certified[at] = (x_certified > 0.0 && std::abs(x) <= x_certified &&
                         std::abs(y) <= y_certified)
                            ? 1
                            : 0;
      m.residual_max = std::max(m.residual_max, std::abs(m.residual[at]));
    }
  }
  return m;
}

void write_mesh_csv(const GridMesh& mesh, std::ostream& os, bool with_certified) {
  os << "x,y,t,causal,residual";
  if (with_certified) os << ",certified";
  os << "\n";
  for (int iy = 0; iy < mesh.ny; ++iy) {
    for (int ix = 0; ix < mesh.nx; ++ix) {
      const std::size_t at = mesh.index(ix, iy);
      os << format_double(mesh.xs[static_cast<std::size_t>(ix)]) << ","
         << format_double(mesh.ys[static_cast<std::size_t>(iy)]) << ","
         << format_double(mesh.t[at]) << "," << mesh.causal[at] << ","
         << format_double(mesh.residual[at]);
      if (with_certified) os << "," << static_cast<int>(mesh.certified[at]);
      os << "\n";
    }
  }
}

void write_mesh_csv(const GridMesh& mesh, const std::string& path, bool with_certified) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  write_mesh_csv(mesh, os, with_certified);
  if (!os.good()) throw std::runtime_error("write failed for " + path);
}

void write_mesh_obj(const GridMesh& mesh, std::ostream& os,
                    const std::vector<std::string>& comments) {
  for (const auto& line : comments) os << "# " << line << "\n";
  for (int iy = 0; iy < mesh.ny; ++iy)
    for (int ix = 0; ix < mesh.nx; ++ix)
      os << "v " << format_double(mesh.xs[static_cast<std::size_t>(ix)]) << " "
         << format_double(mesh.ys[static_cast<std::size_t>(iy)]) << " "
         << format_double(mesh.t[mesh.index(ix, iy)]) << "\n";
  for (int iy = 0; iy + 1 < mesh.ny; ++iy) {
    for (int ix = 0; ix + 1 < mesh.nx; ++ix) {
      const std::size_t v00 = mesh.index(ix, iy) + 1;  // OBJ is 1-based
      const std::size_t v10 = v00 + 1;
      const std::size_t v01 = v00 + static_cast<std::size_t>(mesh.nx);
      const std::size_t v11 = v01 + 1;
      os << "f " << v00 << " " << v10 << " " << v11 << " " << v01 << "\n";
    }
  }
}

void write_mesh_obj(const GridMesh& mesh, const std::string& path,
                    const std::vector<std::string>& comments) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  write_mesh_obj(mesh, os, comments);
  if (!os.good()) throw std::runtime_error("write failed for " + path);
}

}  // namespace zmc
