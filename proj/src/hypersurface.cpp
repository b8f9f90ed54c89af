#include "zmc/hypersurface.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zmc {

HypersurfaceSlice::HypersurfaceSlice(TruncatedSolution base, int ambient_dim)
    : base_(std::move(base)), dim_(ambient_dim) {
  if (dim_ < 2) throw std::invalid_argument("ambient dimension must be >= 2");
}

void HypersurfaceSlice::require_dim(std::span<const double> point) const {
  if (static_cast<int>(point.size()) != dim_)
    throw std::invalid_argument("expected " + std::to_string(dim_) +
                                " coordinates, got " + std::to_string(point.size()));
}

double HypersurfaceSlice::evaluate(std::span<const double> point) const {
  require_dim(point);
  return base_.evaluate(point[0], point[1]);
}

double HypersurfaceSlice::residual(std::span<const double> point) const {
  require_dim(point);
  return base_.residual_numeric(point[0], point[1]);
}

double HypersurfaceSlice::causal_quantity(std::span<const double> point) const {
  require_dim(point);
  return base_.causal_quantity(point[0], point[1]);
}

double residual_ambient_form(const HypersurfaceSlice& h, std::span<const double> point) {
  const int n = h.ambient_dim();
  if (static_cast<int>(point.size()) != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " coordinates");
  const Partials p = h.base().partials(point[0], point[1]);

  std::vector<double> grad(static_cast<std::size_t>(n), 0.0);
  grad[0] = p.fx;
  grad[1] = p.fy;
  std::vector<std::vector<double>> hess(static_cast<std::size_t>(n),
                                        std::vector<double>(static_cast<std::size_t>(n), 0.0));
  hess[0][0] = p.fxx;
  hess[0][1] = hess[1][0] = p.fxy;
  hess[1][1] = p.fyy;

  double grad_sq = 0.0, trace = 0.0, quad = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto iu = static_cast<std::size_t>(i);
    grad_sq += grad[iu] * grad[iu];
    trace += hess[iu][iu];
    for (int j = 0; j < n; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      quad += hess[iu][ju] * grad[iu] * grad[ju];
    }
  }
  return (1.0 - grad_sq) * trace + quad;
}

}  // namespace zmc
