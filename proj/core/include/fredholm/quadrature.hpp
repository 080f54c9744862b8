#ifndef FREDHOLM_QUADRATURE_HPP
#define FREDHOLM_QUADRATURE_HPP

#include <Eigen/Core>
#include <memory>

namespace fredholm {

// A fixed quadrature rule on [0, 1].  Grid-basis vectors carry a shared
// pointer to their rule; the weighted sum  sum_j w_j conj(v_j) x_j  is the
// inner product of the discretized L^2 space.
struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;

  int size() const { return static_cast<int>(nodes.size()); }
};

// Gauss-Legendre nodes and weights mapped to [0, 1], exact for polynomials
// of degree <= 2n-1.  Rules are cached so that equal resolutions share one
// instance.
std::shared_ptr<const QuadratureRule> gauss_legendre(int n);

// n equispaced nodes with unit weights.  This is the plain coordinate space
// used for matrix-presented operators; norms reduce to the Euclidean norm.
std::shared_ptr<const QuadratureRule> unit_weight_grid(int n);

}  // namespace fredholm

#endif  // FREDHOLM_QUADRATURE_HPP
