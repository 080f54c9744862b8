#include "fredholm/coeff_vector.hpp"

#include <cmath>

#include "fredholm/errors.hpp"

namespace fredholm {

namespace {

void check_finite(const Eigen::VectorXcd& coeffs) {
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
    if (!std::isfinite(coeffs[i].real()) || !std::isfinite(coeffs[i].imag()))
      raise(ErrorCode::ValidationError,
            "non-finite coefficient at position " + std::to_string(i));
  }
}

}  // namespace

CoeffVector::CoeffVector(SpaceSpec space, Eigen::VectorXcd coeffs)
    : space_(std::move(space)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != space_.dim())
    raise(ErrorCode::ResolutionMismatch,
          "coefficient count " + std::to_string(coeffs_.size()) +
              " does not match space dimension " + std::to_string(space_.dim()));
  check_finite(coeffs_);
}

CoeffVector CoeffVector::zero(const SpaceSpec& space) {
  return CoeffVector(space, Eigen::VectorXcd::Zero(space.dim()));
}

CoeffVector CoeffVector::fourier_mode(int max_index, int n) {
  if (std::abs(n) > max_index)
    raise(ErrorCode::ResolutionMismatch,
          "mode index " + std::to_string(n) + " outside resolution N=" +
              std::to_string(max_index));
  SpaceSpec space = SpaceSpec::fourier(max_index);
  Eigen::VectorXcd coeffs = Eigen::VectorXcd::Zero(space.dim());
  coeffs[space.offset(n)] = 1.0;
  return CoeffVector(space, std::move(coeffs));
}

CoeffVector CoeffVector::from_function(const SpaceSpec& space,
                                       const std::function<Complex(double)>& f) {
  const QuadratureRule& rule = space.rule();
  Eigen::VectorXcd coeffs(rule.size());
  for (int j = 0; j < rule.size(); ++j) coeffs[j] = f(rule.nodes[j]);
  return CoeffVector(space, std::move(coeffs));
}

CoeffVector& CoeffVector::operator+=(const CoeffVector& other) {
  space_.require_same(other.space_);
  coeffs_ += other.coeffs_;
  return *this;
}

CoeffVector& CoeffVector::operator-=(const CoeffVector& other) {
  space_.require_same(other.space_);
  coeffs_ -= other.coeffs_;
  return *this;
}

CoeffVector& CoeffVector::operator*=(Complex factor) {
  coeffs_ *= factor;
  return *this;
}

CoeffVector operator+(CoeffVector lhs, const CoeffVector& rhs) { return lhs += rhs; }
CoeffVector operator-(CoeffVector lhs, const CoeffVector& rhs) { return lhs -= rhs; }
CoeffVector operator*(Complex factor, CoeffVector x) { return x *= factor; }

Complex pair(const CoeffVector& v, const CoeffVector& x) {
  v.space().require_same(x.space());
  Complex acc(0.0, 0.0);
  if (v.space().kind() == BasisKind::Fourier) {
    for (int i = 0; i < v.dim(); ++i) acc += std::conj(v[i]) * x[i];
  } else {
    const QuadratureRule& rule = v.space().rule();
    for (int i = 0; i < v.dim(); ++i) acc += rule.weights[i] * (std::conj(v[i]) * x[i]);
  }
  return acc;
}

double norm_squared(const CoeffVector& x) {
  // Same loop shape as pair(x, x) so the two agree exactly.
  double acc = 0.0;
  if (x.space().kind() == BasisKind::Fourier) {
    for (int i = 0; i < x.dim(); ++i)
      acc += (std::conj(x[i]) * x[i]).real();
  } else {
    const QuadratureRule& rule = x.space().rule();
    for (int i = 0; i < x.dim(); ++i)
      acc += rule.weights[i] * (std::conj(x[i]) * x[i]).real();
  }
  return acc;
}

double norm(const CoeffVector& x) { return std::sqrt(norm_squared(x)); }

CoeffVector embed_fourier(const CoeffVector& x, int new_max_index) {
  const int old_n = x.space().max_index();
  if (new_max_index < old_n)
    raise(ErrorCode::ResolutionMismatch, "embedding target is smaller than source");
  SpaceSpec target = SpaceSpec::fourier(new_max_index);
  Eigen::VectorXcd coeffs = Eigen::VectorXcd::Zero(target.dim());
  coeffs.segment(target.offset(-old_n), x.dim()) = x.coeffs();
  return CoeffVector(target, std::move(coeffs));
}

}  // namespace fredholm
