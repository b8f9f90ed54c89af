#pragma once

#include "zmc/surface.hpp"

#include <span>

namespace zmc {

// Cylindrical lift of the surface into R^{n+1} with signature (-+...+):
// F(x_1, ..., x_n) = f(x_1, x_2). The graph-equation operator in n
// variables collapses onto the two active coordinates, so every quantity
// delegates to the base solution; the collapse itself is re-verified
// numerically by residual_ambient_form.
class HypersurfaceSlice {
 public:
  HypersurfaceSlice(TruncatedSolution base, int ambient_dim);

  int ambient_dim() const { return dim_; }
  const TruncatedSolution& base() const { return base_; }

  double evaluate(std::span<const double> point) const;
  double residual(std::span<const double> point) const;
  double causal_quantity(std::span<const double> point) const;

 private:
  void require_dim(std::span<const double> point) const;

  TruncatedSolution base_;
  int dim_;
};

// The n-dimensional operator
//   (1 - sum_j F_{x_j}^2) sum_i F_{x_i x_i} + sum_{i,j} F_{x_i x_j} F_{x_i} F_{x_j}
// evaluated literally with the cylindrical gradient/Hessian (zeros beyond
// the first two slots). Only a cross-check for the delegation above; the
// two agree to rounding, not bit-exactly, since the loop orders differ.
double residual_ambient_form(const HypersurfaceSlice& h, std::span<const double> point);

}  // namespace zmc
