#pragma once

#include <random>
#include <vector>

#include "gabidulin/skew_poly.hpp"

namespace gabidulin {

using Rng = std::mt19937_64;

/// Uniform element for finite bases; integer coordinates in [-bound, bound] over Q.
template <class S>
Element<S> random_element(const Tower<S>& tower, int layer, Rng& rng, int bound = 1);

template <class S>
Element<S> random_nonzero(const Tower<S>& tower, int layer, Rng& rng, int bound = 1);

/// n elements of L that are K-linearly independent (n <= m).
template <class S>
std::vector<Element<S>> random_independent(const Automorphism<S>& theta, int n, Rng& rng, int bound = 1);

/// Vector in L^n of K-rank exactly t: t independent elements of L combined
/// through a random t x n matrix over K of rank t.
template <class S>
std::vector<Element<S>> random_rank_vector(const Automorphism<S>& theta, int n, int t, Rng& rng, int bound = 1);

/// Skew polynomial with deg < k and random coefficients.
template <class S>
SkewPoly<S> random_message(const Automorphism<S>& theta, int k, Rng& rng, int bound = 1);

}  // namespace gabidulin
