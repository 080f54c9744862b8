#ifndef FREDHOLM_OPERATORS_HPP
#define FREDHOLM_OPERATORS_HPP

#include <Eigen/Core>
#include <functional>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "fredholm/coeff_vector.hpp"

namespace fredholm {

// ---------------------------------------------------------------------------
// Symbol envelopes.
//
// A multiplier stores finitely many symbol values, so every certificate that
// talks about the tail |n| > N needs a declared, monotone-in-|n| majorant.
// Three families cover the symbols the solver meets:
//   Power:         |sigma(n)| <= C (1+|n|)^m with m <= 0
//   Geometric:     |sigma(n)| <= C q^{|n|}   with 0 < q < 1
//   FiniteSupport: sigma(n) = 0 for |n| > max_index
// ---------------------------------------------------------------------------

struct PowerEnvelope {
  double constant;
  double order;  // m <= 0
};

struct GeometricEnvelope {
  double constant;
  double ratio;  // in (0, 1)
};

struct FiniteSupportEnvelope {
  int max_index;
};

using SymbolEnvelope =
    std::variant<PowerEnvelope, GeometricEnvelope, FiniteSupportEnvelope>;

// Fourier multiplier x^(n) -> sigma(n) x^(n) with stored values on |n| <= N.
class DiagonalMultiplier {
 public:
  // symbol_values holds sigma(-N)..sigma(N).  If an envelope is declared it
  // is checked against the stored values at construction.
  DiagonalMultiplier(int max_index, Eigen::VectorXcd symbol_values,
                     std::optional<SymbolEnvelope> envelope);

  static DiagonalMultiplier from_function(
      int max_index, const std::function<Complex(int)>& symbol,
      std::optional<SymbolEnvelope> envelope);

  SpaceSpec space() const { return SpaceSpec::fourier(max_index_); }
  int max_index() const { return max_index_; }
  Complex symbol(int n) const { return values_[n + max_index_]; }
  const Eigen::VectorXcd& symbol_values() const { return values_; }
  const std::optional<SymbolEnvelope>& envelope() const { return envelope_; }

  // Certified bound on sup_{|n| > cutoff} |sigma(n)|; UnboundedSymbol if no
  // envelope was declared.  Includes a 1e-12 relative floating-point guard.
  double tail_bound(int cutoff) const;
  // Certified bound on sup_n |sigma(n)| over the whole (ideal) index range.
  double sup_bound() const;

 private:
  int max_index_;
  Eigen::VectorXcd values_;
  std::optional<SymbolEnvelope> envelope_;
  double stored_max_ = 0.0;
};

// ---------------------------------------------------------------------------
// F = sum_i u_i <v_i, .>.  Construction orthonormalizes the left family by
// column-pivoted Gram-Schmidt (drop threshold 1e-12 relative to the largest
// norm) and rewrites the functionals accordingly, so after construction the
// left vectors are orthonormal and the stored rank is the numerical rank.
// ---------------------------------------------------------------------------
class FiniteRankOperator {
 public:
  FiniteRankOperator(SpaceSpec space, std::vector<CoeffVector> left_vectors,
                     std::vector<CoeffVector> right_functionals);

  static FiniteRankOperator zero(const SpaceSpec& space);

  const SpaceSpec& space() const { return space_; }
  int rank() const { return static_cast<int>(left_.size()); }
  const CoeffVector& left_vector(int k) const { return left_[k]; }
  const CoeffVector& right_functional(int k) const { return right_[k]; }

  CoeffVector apply(const CoeffVector& x) const;
  // Hilbert-Schmidt bound sqrt(sum_k ||w_k||^2); valid because the left
  // family is orthonormal.
  double hs_bound() const;

 private:
  SpaceSpec space_;
  std::vector<CoeffVector> left_;   // orthonormal
  std::vector<CoeffVector> right_;  // rewritten functionals
};

// ---------------------------------------------------------------------------
// Operator presentations.  A CompactOperator is a tagged union over the ways
// a compact operator reaches the solver; Sum and Scaled make the set closed
// under the arithmetic the splitting step needs (K = T - F).
// ---------------------------------------------------------------------------
class CompactOperator {
 public:
  struct Diagonal {
    DiagonalMultiplier multiplier;
  };
  // Finite-rank presentation.  On a grid space this is the degenerate kernel
  // k(s,t) = sum_i a_i(s) b_i(t); on a Fourier space it is a smooth
  // finite-rank perturbation.
  struct Separable {
    FiniteRankOperator op;
  };
  // Nystrom presentation: (Tx)(s_i) = sum_j w_j k(s_i, t_j) x(t_j).
  struct Sampled {
    std::shared_ptr<const QuadratureRule> rule;
    Eigen::MatrixXcd samples;
  };
  struct Matrix {
    SpaceSpec space;
    Eigen::MatrixXcd entries;
  };
  struct Sum {
    std::shared_ptr<const CompactOperator> left;
    std::shared_ptr<const CompactOperator> right;
  };
  struct Scaled {
    Complex factor;
    std::shared_ptr<const CompactOperator> inner;
  };

  using Node = std::variant<Diagonal, Separable, Sampled, Matrix, Sum, Scaled>;

  static CompactOperator diagonal(DiagonalMultiplier multiplier);
  static CompactOperator separable(FiniteRankOperator op);
  static CompactOperator sampled(std::shared_ptr<const QuadratureRule> rule,
                                 Eigen::MatrixXcd samples);
  // Space defaults to the unit-weight coordinate grid of the matrix size.
  static CompactOperator matrix(Eigen::MatrixXcd entries,
                                std::optional<SpaceSpec> space = std::nullopt);
  static CompactOperator sum(CompactOperator left, CompactOperator right);
  static CompactOperator scaled(Complex factor, CompactOperator inner);
  static CompactOperator zero(const SpaceSpec& space);

  const Node& node() const { return *node_; }
  const SpaceSpec& space() const { return space_; }

 private:
  CompactOperator(std::shared_ptr<const Node> node, SpaceSpec space)
      : node_(std::move(node)), space_(std::move(space)) {}

  std::shared_ptr<const Node> node_;
  SpaceSpec space_;
};

CoeffVector apply(const CompactOperator& T, const CoeffVector& x);
CoeffVector apply(const FiniteRankOperator& F, const CoeffVector& x);

// Certified upper bound on the operator norm:
//   multiplier      certified symbol supremum (envelope required)
//   finite rank     Hilbert-Schmidt bound
//   sampled kernel  weighted Hilbert-Schmidt bound
//   matrix          power iteration on the weighted matrix, x 1.01
//   sum / scaled    triangle inequality
double norm_upper_bound(const CompactOperator& T);

// Largest-singular-value estimate used for the Matrix branch; exposed for
// tests.  The estimate converges from below; the caller owns safety factors.
double power_iteration_norm(const Eigen::MatrixXcd& matrix);

// Orthonormalizes a family by column-pivoted modified Gram-Schmidt,
// dropping directions below drop_tol relative to the largest input norm.
// Returns the orthonormal family and the coefficient matrix C with
// input_i = sum_k C(k,i) q_k.
struct OrthonormalFamily {
  std::vector<CoeffVector> basis;
  Eigen::MatrixXcd coefficients;
};
OrthonormalFamily orthonormalize(const std::vector<CoeffVector>& family,
                                 double drop_tol = 1e-12);

}  // namespace fredholm

#endif  // FREDHOLM_OPERATORS_HPP
