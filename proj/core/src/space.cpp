#include "fredholm/space.hpp"

#include "fredholm/errors.hpp"

namespace fredholm {

SpaceSpec SpaceSpec::fourier(int max_index) {
  if (max_index < 0)
    raise(ErrorCode::ValidationError, "Fourier max index must be >= 0");
  return SpaceSpec(BasisKind::Fourier, max_index, nullptr);
}

SpaceSpec SpaceSpec::grid(std::shared_ptr<const QuadratureRule> rule) {
  if (!rule || rule->size() < 1)
    raise(ErrorCode::ValidationError, "grid space needs a nonempty rule");
  return SpaceSpec(BasisKind::Grid, 0, std::move(rule));
}

SpaceSpec SpaceSpec::coordinate(int n) { return grid(unit_weight_grid(n)); }

int SpaceSpec::resolution() const {
  return kind_ == BasisKind::Fourier ? max_index_ : rule_->size();
}

int SpaceSpec::dim() const {
  return kind_ == BasisKind::Fourier ? 2 * max_index_ + 1 : rule_->size();
}

const QuadratureRule& SpaceSpec::rule() const {
  if (kind_ != BasisKind::Grid)
    raise(ErrorCode::BasisMismatch, "quadrature rule requested from a Fourier space");
  return *rule_;
}

int SpaceSpec::max_index() const {
  if (kind_ != BasisKind::Fourier)
    raise(ErrorCode::BasisMismatch, "Fourier index requested from a grid space");
  return max_index_;
}

bool SpaceSpec::operator==(const SpaceSpec& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ == BasisKind::Fourier) return max_index_ == other.max_index_;
  if (rule_ == other.rule_) return true;
  if (rule_->size() != other.rule_->size()) return false;
  return rule_->nodes == other.rule_->nodes && rule_->weights == other.rule_->weights;
}

void SpaceSpec::require_same(const SpaceSpec& other) const {
  if (kind_ != other.kind_)
    raise(ErrorCode::BasisMismatch, "Fourier and grid bases mixed");
  if (kind_ == BasisKind::Fourier) {
    if (max_index_ != other.max_index_)
      raise(ErrorCode::ResolutionMismatch,
            "Fourier resolutions differ: N=" + std::to_string(max_index_) +
                " vs N=" + std::to_string(other.max_index_));
    return;
  }
  if (rule_->size() != other.rule_->size())
    raise(ErrorCode::ResolutionMismatch,
          "grid resolutions differ: n=" + std::to_string(rule_->size()) +
              " vs n=" + std::to_string(other.rule_->size()));
  if (!(*this == other))
    raise(ErrorCode::BasisMismatch, "grids have different nodes or weights");
}

}  // namespace fredholm
