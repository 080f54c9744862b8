#include "fredholm/operators.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fredholm/errors.hpp"

namespace fredholm {

namespace {

// Relative guard applied to certified bounds so that a measured quantity
// equal to the bound up to rounding still certifies.
constexpr double kCertificateGuard = 1.0 + 1e-12;

double envelope_eval_beyond(const SymbolEnvelope& envelope, int cutoff,
                            const Eigen::VectorXcd& values, int max_index) {
  // Supremum of the envelope over |n| > cutoff; all families are monotone
  // nonincreasing in |n| so the supremum sits at |n| = cutoff + 1.
  if (const auto* power = std::get_if<PowerEnvelope>(&envelope))
    return power->constant * std::pow(1.0 + (cutoff + 1), power->order);
  if (const auto* geo = std::get_if<GeometricEnvelope>(&envelope))
    return geo->constant * std::pow(geo->ratio, cutoff + 1);
  const auto& finite = std::get<FiniteSupportEnvelope>(envelope);
  double sup = 0.0;
  for (int n = -max_index; n <= max_index; ++n) {
    if (std::abs(n) > cutoff && std::abs(n) <= finite.max_index)
      sup = std::max(sup, std::abs(values[n + max_index]));
  }
  return sup;
}

void validate_envelope(const SymbolEnvelope& envelope,
                       const Eigen::VectorXcd& values, int max_index) {
  if (const auto* power = std::get_if<PowerEnvelope>(&envelope)) {
    if (power->order > 0.0)
      raise(ErrorCode::ValidationError, "power envelope order must be <= 0");
    if (power->constant < 0.0)
      raise(ErrorCode::ValidationError, "envelope constant must be >= 0");
  } else if (const auto* geo = std::get_if<GeometricEnvelope>(&envelope)) {
    if (!(geo->ratio > 0.0 && geo->ratio < 1.0))
      raise(ErrorCode::ValidationError, "geometric envelope ratio must be in (0,1)");
    if (geo->constant < 0.0)
      raise(ErrorCode::ValidationError, "envelope constant must be >= 0");
  }
  for (int n = -max_index; n <= max_index; ++n) {
    const double mag = std::abs(values[n + max_index]);
    double bound;
    if (const auto* power = std::get_if<PowerEnvelope>(&envelope)) {
      bound = power->constant * std::pow(1.0 + std::abs(n), power->order);
    } else if (const auto* geo = std::get_if<GeometricEnvelope>(&envelope)) {
      bound = geo->constant * std::pow(geo->ratio, std::abs(n));
    } else {
      const auto& finite = std::get<FiniteSupportEnvelope>(envelope);
      if (std::abs(n) > finite.max_index && mag != 0.0)
        raise(ErrorCode::UnboundedSymbol,
              "symbol value at n=" + std::to_string(n) +
                  " outside declared finite support");
      continue;
    }
    if (mag > bound * (1.0 + 1e-9))
      raise(ErrorCode::UnboundedSymbol,
            "symbol value at n=" + std::to_string(n) +
                " exceeds declared envelope");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// DiagonalMultiplier
// ---------------------------------------------------------------------------

DiagonalMultiplier::DiagonalMultiplier(int max_index,
                                       Eigen::VectorXcd symbol_values,
                                       std::optional<SymbolEnvelope> envelope)
    : max_index_(max_index),
      values_(std::move(symbol_values)),
      envelope_(std::move(envelope)) {
  if (max_index_ < 0)
    raise(ErrorCode::ValidationError, "multiplier resolution must be >= 0");
  if (values_.size() != 2 * max_index_ + 1)
    raise(ErrorCode::ResolutionMismatch,
          "symbol table size does not match 2N+1");
  for (Eigen::Index i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i].real()) || !std::isfinite(values_[i].imag()))
      raise(ErrorCode::ValidationError, "non-finite symbol value");
    stored_max_ = std::max(stored_max_, std::abs(values_[i]));
  }
  if (envelope_) validate_envelope(*envelope_, values_, max_index_);
}

DiagonalMultiplier DiagonalMultiplier::from_function(
    int max_index, const std::function<Complex(int)>& symbol,
    std::optional<SymbolEnvelope> envelope) {
  Eigen::VectorXcd values(2 * max_index + 1);
  for (int n = -max_index; n <= max_index; ++n) values[n + max_index] = symbol(n);
  return DiagonalMultiplier(max_index, std::move(values), std::move(envelope));
}

double DiagonalMultiplier::tail_bound(int cutoff) const {
  if (!envelope_)
    raise(ErrorCode::UnboundedSymbol,
          "multiplier lacks a declared envelope; no tail certificate");
  const double sup =
      envelope_eval_beyond(*envelope_, cutoff, values_, max_index_);
  return sup == 0.0 ? 0.0 : sup * kCertificateGuard;
}

double DiagonalMultiplier::sup_bound() const {
  if (!envelope_)
    raise(ErrorCode::UnboundedSymbol,
          "multiplier lacks a declared envelope; no norm certificate");
  return std::max(stored_max_, tail_bound(max_index_));
}

// ---------------------------------------------------------------------------
// Orthonormalization
// ---------------------------------------------------------------------------

OrthonormalFamily orthonormalize(const std::vector<CoeffVector>& family,
                                 double drop_tol) {
  OrthonormalFamily result;
  const int count = static_cast<int>(family.size());
  if (count == 0) return result;

  double max_norm = 0.0;
  for (const auto& v : family) max_norm = std::max(max_norm, norm(v));
  if (max_norm == 0.0) {
    result.coefficients.resize(0, count);
    return result;
  }

  std::vector<CoeffVector> residual = family;
  std::vector<bool> used(count, false);
  while (true) {
    int pick = -1;
    double pick_norm = 0.0;
    for (int i = 0; i < count; ++i) {
      if (used[i]) continue;
      const double r = norm(residual[i]);
      if (r > pick_norm) {
        pick_norm = r;
        pick = i;
      }
    }
    if (pick < 0 || pick_norm <= drop_tol * max_norm) break;

    // Second projection sweep before normalizing ("twice is enough").
    CoeffVector q = residual[pick];
    for (const auto& b : result.basis) q -= pair(b, q) * b;
    const double qn = norm(q);
    if (qn <= drop_tol * max_norm) {
      used[pick] = true;
      continue;
    }
    q *= Complex(1.0 / qn, 0.0);
    used[pick] = true;
    for (int j = 0; j < count; ++j) {
      if (!used[j]) residual[j] -= pair(q, residual[j]) * q;
    }
    result.basis.push_back(std::move(q));
  }

  const int rank = static_cast<int>(result.basis.size());
  result.coefficients.resize(rank, count);
  for (int k = 0; k < rank; ++k)
    for (int i = 0; i < count; ++i)
      result.coefficients(k, i) = pair(result.basis[k], family[i]);
  return result;
}

// ---------------------------------------------------------------------------
// FiniteRankOperator
// ---------------------------------------------------------------------------

FiniteRankOperator::FiniteRankOperator(SpaceSpec space,
                                       std::vector<CoeffVector> left_vectors,
                                       std::vector<CoeffVector> right_functionals)
    : space_(std::move(space)) {
  if (left_vectors.size() != right_functionals.size())
    raise(ErrorCode::ValidationError,
          "left vector and right functional counts differ");
  for (const auto& u : left_vectors) space_.require_same(u.space());
  for (const auto& v : right_functionals) space_.require_same(v.space());

  OrthonormalFamily on = orthonormalize(left_vectors);
  const int rank = static_cast<int>(on.basis.size());
  for (int k = 0; k < rank; ++k) {
    CoeffVector w = CoeffVector::zero(space_);
    for (int i = 0; i < static_cast<int>(right_functionals.size()); ++i) {
      const Complex c = std::conj(on.coefficients(k, i));
      if (c != Complex(0.0, 0.0)) w += c * right_functionals[i];
    }
    if (norm(w) == 0.0) continue;  // direction never reached by F
    left_.push_back(on.basis[k]);
    right_.push_back(std::move(w));
  }
}

FiniteRankOperator FiniteRankOperator::zero(const SpaceSpec& space) {
  return FiniteRankOperator(space, {}, {});
}

CoeffVector FiniteRankOperator::apply(const CoeffVector& x) const {
  space_.require_same(x.space());
  CoeffVector y = CoeffVector::zero(space_);
  for (int k = 0; k < rank(); ++k) y += pair(right_[k], x) * left_[k];
  return y;
}

double FiniteRankOperator::hs_bound() const {
  double acc = 0.0;
  for (const auto& w : right_) acc += norm_squared(w);
  return std::sqrt(acc);
}

// ---------------------------------------------------------------------------
// CompactOperator construction
// ---------------------------------------------------------------------------

CompactOperator CompactOperator::diagonal(DiagonalMultiplier multiplier) {
  SpaceSpec space = multiplier.space();
  auto node = std::make_shared<Node>(Diagonal{std::move(multiplier)});
  return CompactOperator(std::move(node), std::move(space));
}

CompactOperator CompactOperator::separable(FiniteRankOperator op) {
  SpaceSpec space = op.space();
  auto node = std::make_shared<Node>(Separable{std::move(op)});
  return CompactOperator(std::move(node), std::move(space));
}

CompactOperator CompactOperator::sampled(
    std::shared_ptr<const QuadratureRule> rule, Eigen::MatrixXcd samples) {
  if (!rule) raise(ErrorCode::ValidationError, "sampled kernel needs a rule");
  if (samples.rows() != rule->size() || samples.cols() != rule->size())
    raise(ErrorCode::ResolutionMismatch,
          "sample matrix does not match the quadrature rule");
  SpaceSpec space = SpaceSpec::grid(rule);
  auto node = std::make_shared<Node>(Sampled{std::move(rule), std::move(samples)});
  return CompactOperator(std::move(node), std::move(space));
}

CompactOperator CompactOperator::matrix(Eigen::MatrixXcd entries,
                                        std::optional<SpaceSpec> space) {
  if (entries.rows() != entries.cols())
    raise(ErrorCode::ValidationError, "operator matrix must be square");
  SpaceSpec sp = space ? *space
                       : SpaceSpec::coordinate(static_cast<int>(entries.rows()));
  if (sp.dim() != entries.rows())
    raise(ErrorCode::ResolutionMismatch,
          "matrix size does not match the declared space");
  auto node = std::make_shared<Node>(Matrix{sp, std::move(entries)});
  return CompactOperator(std::move(node), std::move(sp));
}

CompactOperator CompactOperator::sum(CompactOperator left, CompactOperator right) {
  left.space().require_same(right.space());
  SpaceSpec space = left.space();
  auto node = std::make_shared<Node>(
      Sum{std::make_shared<CompactOperator>(std::move(left)),
          std::make_shared<CompactOperator>(std::move(right))});
  return CompactOperator(std::move(node), std::move(space));
}

CompactOperator CompactOperator::scaled(Complex factor, CompactOperator inner) {
  SpaceSpec space = inner.space();
  auto node = std::make_shared<Node>(
      Scaled{factor, std::make_shared<CompactOperator>(std::move(inner))});
  return CompactOperator(std::move(node), std::move(space));
}

CompactOperator CompactOperator::zero(const SpaceSpec& space) {
  return separable(FiniteRankOperator::zero(space));
}

// ---------------------------------------------------------------------------
// apply
// ---------------------------------------------------------------------------

namespace {

CoeffVector apply_node(const CompactOperator::Node& node, const SpaceSpec& space,
                       const CoeffVector& x) {
  if (const auto* diag = std::get_if<CompactOperator::Diagonal>(&node)) {
    const auto& mult = diag->multiplier;
    Eigen::VectorXcd out = mult.symbol_values().cwiseProduct(x.coeffs());
    return CoeffVector(space, std::move(out));
  }
  if (const auto* sep = std::get_if<CompactOperator::Separable>(&node))
    return sep->op.apply(x);
  if (const auto* sam = std::get_if<CompactOperator::Sampled>(&node)) {
    Eigen::VectorXcd weighted =
        sam->rule->weights.cast<Complex>().asDiagonal() * x.coeffs();
    return CoeffVector(space, sam->samples * weighted);
  }
  if (const auto* mat = std::get_if<CompactOperator::Matrix>(&node))
    return CoeffVector(space, mat->entries * x.coeffs());
  if (const auto* sum = std::get_if<CompactOperator::Sum>(&node))
    return apply(*sum->left, x) + apply(*sum->right, x);
  const auto& scaled = std::get<CompactOperator::Scaled>(node);
  return scaled.factor * apply(*scaled.inner, x);
}

}  // namespace

CoeffVector apply(const CompactOperator& T, const CoeffVector& x) {
  T.space().require_same(x.space());
  return apply_node(T.node(), T.space(), x);
}

CoeffVector apply(const FiniteRankOperator& F, const CoeffVector& x) {
  return F.apply(x);
}

// ---------------------------------------------------------------------------
// Norm bounds
// ---------------------------------------------------------------------------

double power_iteration_norm(const Eigen::MatrixXcd& matrix) {
  const Eigen::Index n = matrix.cols();
  if (n == 0) return 0.0;
  std::mt19937 rng(0x5eed1234u);
  std::normal_distribution<double> gauss(0.0, 1.0);

  double best = 0.0;
  for (int run = 0; run < 3; ++run) {
    Eigen::VectorXcd v(n);
    if (run == 0) {
      v.setOnes();
    } else {
      for (Eigen::Index i = 0; i < n; ++i) v[i] = Complex(gauss(rng), gauss(rng));
    }
    double vn = v.norm();
    if (vn == 0.0) continue;
    v /= vn;
    double estimate = 0.0;
    for (int iter = 0; iter < 2000; ++iter) {
      Eigen::VectorXcd w = matrix.adjoint() * (matrix * v);
      const double next = std::max(0.0, v.dot(w).real());  // = ||Mv||^2
      const double wn = w.norm();
      if (wn == 0.0) {
        estimate = next;
        break;
      }
      v = w / wn;
      if (std::abs(next - estimate) <= 1e-13 * std::max(next, 1e-300)) {
        estimate = next;
        break;
      }
      estimate = next;
    }
    best = std::max(best, std::sqrt(estimate));
  }
  return best;
}

namespace {

Eigen::MatrixXcd weighted_conjugation(const Eigen::MatrixXcd& entries,
                                      const SpaceSpec& space) {
  if (space.kind() == BasisKind::Fourier) return entries;
  const Eigen::VectorXd& w = space.rule().weights;
  Eigen::VectorXd half = w.cwiseSqrt();
  Eigen::VectorXd inv_half = half.cwiseInverse();
  return half.cast<Complex>().asDiagonal() * entries *
         inv_half.cast<Complex>().asDiagonal();
}

}  // namespace

double norm_upper_bound(const CompactOperator& T) {
  const auto& node = T.node();
  if (const auto* diag = std::get_if<CompactOperator::Diagonal>(&node))
    return diag->multiplier.sup_bound();
  if (const auto* sep = std::get_if<CompactOperator::Separable>(&node))
    return sep->op.hs_bound();
  if (const auto* sam = std::get_if<CompactOperator::Sampled>(&node)) {
    // Weighted Hilbert-Schmidt bound: sqrt(sum_ij w_i w_j |k_ij|^2).
    const Eigen::VectorXd& w = sam->rule->weights;
    double acc = 0.0;
    for (Eigen::Index i = 0; i < sam->samples.rows(); ++i)
      for (Eigen::Index j = 0; j < sam->samples.cols(); ++j)
        acc += w[i] * w[j] * std::norm(sam->samples(i, j));
    return std::sqrt(acc);
  }
  if (const auto* mat = std::get_if<CompactOperator::Matrix>(&node))
    return power_iteration_norm(weighted_conjugation(mat->entries, mat->space)) *
           1.01;
  if (const auto* sum = std::get_if<CompactOperator::Sum>(&node))
    return norm_upper_bound(*sum->left) + norm_upper_bound(*sum->right);
  const auto& scaled = std::get<CompactOperator::Scaled>(node);
  return std::abs(scaled.factor) * norm_upper_bound(*scaled.inner);
}

}  // namespace fredholm
