#include "fredholm/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "fredholm/errors.hpp"

namespace fredholm {

namespace {

// Newton iteration on P_n with the classic Chebyshev-like initial guess.
// Nodes are computed on [-1, 1] and mapped to [0, 1].
std::shared_ptr<QuadratureRule> compute_gauss_legendre(int n) {
  auto rule = std::make_shared<QuadratureRule>();
  rule->nodes.resize(n);
  rule->weights.resize(n);

  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Three-term recurrence for P_n(x) and P_{n-1}(x).
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      dp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    // Recompute the derivative at the converged node for the weight.
    double p0 = 1.0, p1 = 0.0;
    for (int j = 0; j < n; ++j) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
    }
    dp = n * (x * p0 - p1) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);

    // Map x in [-1,1] to [0,1]; the mirror node fills the other half.
    rule->nodes[i] = 0.5 * (1.0 - x);
    rule->nodes[n - 1 - i] = 0.5 * (1.0 + x);
    rule->weights[i] = 0.5 * w;
    rule->weights[n - 1 - i] = 0.5 * w;
  }
  return rule;
}

std::shared_ptr<QuadratureRule> compute_unit_weight(int n) {
  auto rule = std::make_shared<QuadratureRule>();
  rule->nodes.resize(n);
  rule->weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule->nodes[i] = (i + 0.5) / n;
    rule->weights[i] = 1.0;
  }
  return rule;
}

}  // namespace

std::shared_ptr<const QuadratureRule> gauss_legendre(int n) {
  if (n < 1) raise(ErrorCode::ValidationError, "quadrature size must be >= 1");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const QuadratureRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& entry = cache[n];
  if (!entry) entry = compute_gauss_legendre(n);
  return entry;
}

std::shared_ptr<const QuadratureRule> unit_weight_grid(int n) {
  if (n < 1) raise(ErrorCode::ValidationError, "grid size must be >= 1");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const QuadratureRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& entry = cache[n];
  if (!entry) entry = compute_unit_weight(n);
  return entry;
}

}  // namespace fredholm
