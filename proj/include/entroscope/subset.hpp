#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace entroscope {

/// Variable subset as a bitmask over the declared variable order (bit i = variable i).
using SubsetMask = std::uint32_t;

inline constexpr int kMaxVariables = 24;

inline int subset_size(SubsetMask s) { return std::popcount(s); }
inline bool is_subset(SubsetMask small, SubsetMask big) { return (small & ~big) == 0; }
inline SubsetMask full_mask(int n) { return n >= 32 ? ~SubsetMask{0} : ((SubsetMask{1} << n) - 1); }

/// Indices of the set bits, ascending.
inline std::vector<int> subset_members(SubsetMask s) {
  std::vector<int> out;
  for (int i = 0; s != 0; ++i, s >>= 1)
    if (s & 1) out.push_back(i);
  return out;
}

/// "a,b,c" style rendering in declared order.
std::string subset_names(SubsetMask s, const std::vector<std::string>& names,
                         const std::string& sep = ",");

}  // namespace entroscope
