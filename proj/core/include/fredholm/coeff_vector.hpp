#ifndef FREDHOLM_COEFF_VECTOR_HPP
#define FREDHOLM_COEFF_VECTOR_HPP

#include <Eigen/Core>
#include <complex>
#include <functional>

#include "fredholm/space.hpp"

namespace fredholm {

using Complex = std::complex<double>;

// A vector of the model space.  Fourier basis: coefficients x^(n) for
// n = -N..N (Parseval norm).  Grid basis: values at the quadrature nodes
// (weighted L^2 norm).  Immutable after construction; all coefficients are
// required to be finite.
class CoeffVector {
 public:
  CoeffVector(SpaceSpec space, Eigen::VectorXcd coeffs);

  static CoeffVector zero(const SpaceSpec& space);
  // Fourier unit mode e_n.
  static CoeffVector fourier_mode(int max_index, int n);
  // Samples f at the nodes of a grid space.
  static CoeffVector from_function(const SpaceSpec& space,
                                   const std::function<Complex(double)>& f);

  const SpaceSpec& space() const { return space_; }
  const Eigen::VectorXcd& coeffs() const { return coeffs_; }
  int dim() const { return static_cast<int>(coeffs_.size()); }

  Complex operator[](int i) const { return coeffs_[i]; }
  // Fourier coefficient by index n in -N..N.
  Complex fourier_coeff(int n) const { return coeffs_[space_.offset(n)]; }

  CoeffVector& operator+=(const CoeffVector& other);
  CoeffVector& operator-=(const CoeffVector& other);
  CoeffVector& operator*=(Complex factor);

 private:
  SpaceSpec space_;
  Eigen::VectorXcd coeffs_;
};

CoeffVector operator+(CoeffVector lhs, const CoeffVector& rhs);
CoeffVector operator-(CoeffVector lhs, const CoeffVector& rhs);
CoeffVector operator*(Complex factor, CoeffVector x);

// Inner product, conjugate-linear in v and linear in x.  Fourier basis:
// sum conj(v^(n)) x^(n); grid basis: sum w_j conj(v_j) x_j.  Summation is a
// plain left-to-right loop so that pair(x, x) reproduces the coefficient
// square sum bit for bit.
Complex pair(const CoeffVector& v, const CoeffVector& x);

double norm_squared(const CoeffVector& x);
double norm(const CoeffVector& x);

// Zero-pads a Fourier vector to a larger max index (the isometric embedding).
CoeffVector embed_fourier(const CoeffVector& x, int new_max_index);

}  // namespace fredholm

#endif  // FREDHOLM_COEFF_VECTOR_HPP
