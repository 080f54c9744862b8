#ifndef FREDHOLM_SPACE_HPP
#define FREDHOLM_SPACE_HPP

#include <memory>

#include "fredholm/quadrature.hpp"

namespace fredholm {

enum class BasisKind { Fourier, Grid };

// The finite model of the separable Hilbert space: either the Fourier modes
// e_n with |n| <= N on the circle, or the values at the nodes of a
// quadrature rule on [0, 1].  Operators and vectors agree on a SpaceSpec
// before any arithmetic happens.
class SpaceSpec {
 public:
  static SpaceSpec fourier(int max_index);
  static SpaceSpec grid(std::shared_ptr<const QuadratureRule> rule);
  // Unit-weight grid of dimension n; the natural home for matrix toys.
  static SpaceSpec coordinate(int n);

  BasisKind kind() const { return kind_; }
  // Fourier: max index N.  Grid: node count.
  int resolution() const;
  int dim() const;
  const QuadratureRule& rule() const;
  const std::shared_ptr<const QuadratureRule>& rule_ptr() const { return rule_; }
  int max_index() const;

  // Position of Fourier index n inside the coefficient array.
  int offset(int n) const { return n + max_index(); }

  bool operator==(const SpaceSpec& other) const;
  bool operator!=(const SpaceSpec& other) const { return !(*this == other); }

  // Throws BasisMismatch / ResolutionMismatch with a readable message.
  void require_same(const SpaceSpec& other) const;

 private:
  SpaceSpec(BasisKind kind, int max_index,
            std::shared_ptr<const QuadratureRule> rule)
      : kind_(kind), max_index_(max_index), rule_(std::move(rule)) {}

  BasisKind kind_;
  int max_index_ = 0;  // Fourier only
  std::shared_ptr<const QuadratureRule> rule_;  // Grid only
};

}  // namespace fredholm

#endif  // FREDHOLM_SPACE_HPP
