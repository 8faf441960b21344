#pragma once

#include <vector>

#include "gabidulin/skew_poly.hpp"

namespace gabidulin {

enum class WeightKind { annihilator, moore_L, moore_K, basis };

const char* to_string(WeightKind kind);

/// rows x n matrix (theta^i(x_j)) over L.
template <class S>
Matrix<Element<S>> moore_matrix(const Automorphism<S>& theta, const std::vector<Element<S>>& x, int rows);

/// Rank weight of x in L^n. moore_L and moore_K use the full s x n Moore
/// matrix (s = order of theta); annihilator needs the framework.
template <class S>
int weight(const Automorphism<S>& theta, const std::vector<Element<S>>& x, WeightKind kind);

/// kind = basis measured in a caller-supplied K-basis of L.
template <class S>
int weight(const Automorphism<S>& theta, const std::vector<Element<S>>& x, WeightKind kind,
           const std::vector<Element<S>>& basis);

template <class S>
int rank_distance(const Automorphism<S>& theta, const std::vector<Element<S>>& x, const std::vector<Element<S>>& y,
                  WeightKind kind = WeightKind::moore_L);

}  // namespace gabidulin
