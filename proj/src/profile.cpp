#include "entroscope/profile.hpp"

#include <algorithm>
#include <cmath>

#include "entroscope/error.hpp"
#include "entroscope/expression.hpp"

namespace entroscope {

EntropyProfile::EntropyProfile(std::vector<std::string> variables, std::vector<double> coords)
    : variables_(std::move(variables)), coords_(std::move(coords)) {
  const int n = num_variables();
  if (n < 1 || n > kMaxVariables) fail(ErrorCode::UnsupportedArity, "profile needs 1..24 variables");
  if (coords_.size() != full_mask(n))
    fail(ErrorCode::DimensionMismatch, "profile over " + std::to_string(n) + " variables needs " +
                                           std::to_string(full_mask(n)) + " coordinates, got " +
                                           std::to_string(coords_.size()));
  for (double c : coords_)
    if (!std::isfinite(c) || c < 0) fail(ErrorCode::InvalidArgument, "profile coordinates must be finite and >= 0");
}

EntropyProfile EntropyProfile::zeros(std::vector<std::string> variables) {
  const auto size = full_mask(static_cast<int>(variables.size()));
  return EntropyProfile(std::move(variables), std::vector<double>(size, 0.0));
}

void EntropyProfile::set(SubsetMask s, double value) {
  if (s == 0 || s > coords_.size()) fail(ErrorCode::DimensionMismatch, "subset outside the profile");
  if (!std::isfinite(value) || value < 0) fail(ErrorCode::InvalidArgument, "coordinate must be finite and >= 0");
  coords_[s - 1] = value;
}

EntropyProfile profile_of(const JointDistribution& d) {
  std::vector<double> coords(d.all_variables());
  for (SubsetMask s = 1; s <= d.all_variables(); ++s) {
    // Round-off can leave -1e-17 on a point mass.
    coords[s - 1] = std::max(0.0, entropy(d, s));
  }
  return EntropyProfile(d.names(), std::move(coords));
}

EntropyProfile scale(const EntropyProfile& p, double factor) {
  if (!(factor > 0) || !std::isfinite(factor)) fail(ErrorCode::InvalidArgument, "scale factor must be > 0");
  std::vector<double> coords = p.coords();
  for (double& c : coords) c *= factor;
  return EntropyProfile(p.variables(), std::move(coords));
}

PolymatroidVerdict is_polymatroid(const EntropyProfile& p, double tol) {
  if (tol < 0) fail(ErrorCode::InvalidArgument, "tolerance must be >= 0");
  PolymatroidVerdict verdict;
  for (const auto& e : elemental_family(p.variables())) {
    ++verdict.checked;
    double v = evaluate(e.expression, p);
    if (v < -tol) {
      verdict.polymatroid = false;
      verdict.violations.push_back({e.label, v});
    }
  }
  return verdict;
}

}  // namespace entroscope
