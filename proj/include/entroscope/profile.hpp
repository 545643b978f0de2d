#pragma once

#include <string>
#include <vector>

#include "entroscope/distribution.hpp"
#include "entroscope/subset.hpp"

namespace entroscope {

/// Vector of the 2^n − 1 subset entropies (bits). Coordinate k holds H(S) for
/// the subset with bitmask k + 1 over the declared variable order.
class EntropyProfile {
 public:
  EntropyProfile() = default;
  /// Throws DimensionMismatch on a wrong length and InvalidArgument on
  /// negative or non-finite coordinates.
  EntropyProfile(std::vector<std::string> variables, std::vector<double> coords);
  static EntropyProfile zeros(std::vector<std::string> variables);

  int num_variables() const { return static_cast<int>(variables_.size()); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<double>& coords() const { return coords_; }
  std::size_t dimension() const { return coords_.size(); }

  /// H(S); the empty set reads as 0.
  double operator[](SubsetMask s) const { return s == 0 ? 0.0 : coords_[s - 1]; }
  void set(SubsetMask s, double value);

 private:
  std::vector<std::string> variables_;
  std::vector<double> coords_;
};

EntropyProfile profile_of(const JointDistribution& d);

/// Coordinate-wise multiplication by factor > 0.
EntropyProfile scale(const EntropyProfile& p, double factor);

struct ElementalViolation {
  std::string label;
  double value = 0;  // elemental expression at the profile, < −tol
};

struct PolymatroidVerdict {
  bool polymatroid = true;
  std::size_t checked = 0;
  std::vector<ElementalViolation> violations;
};

/// Checks every elemental Shannon inequality with slack `tol`.
PolymatroidVerdict is_polymatroid(const EntropyProfile& p, double tol = 1e-9);

}  // namespace entroscope
