#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gabidulin/code.hpp"

namespace gabidulin {

/// Largest number of messages an exhaustive search may enumerate.
inline constexpr std::uint64_t kEnumerationGuard = std::uint64_t{1} << 20;

/// Number of messages with deg f < k, or 0 when it exceeds 2^64.
std::uint64_t message_count(const GabidulinCode<Fp>& code);

/// Every (f, e) with deg f < k, y = f{g} + e and rank weight of e at most t.
/// Throws GuardExceeded when |L|^k > kEnumerationGuard.
std::vector<std::pair<SkewPoly<Fp>, std::vector<Element<Fp>>>> brute_force_nlr(const GabidulinCode<Fp>& code,
                                                                              const std::vector<Element<Fp>>& y,
                                                                              int t);

/// Minimum rank weight over all nonzero codewords, by enumeration.
int min_distance_exhaustive(const GabidulinCode<Fp>& code);

}  // namespace gabidulin
