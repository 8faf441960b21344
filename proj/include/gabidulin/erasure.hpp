#pragma once

#include <random>

#include <optional>
#include <utility>
#include <vector>

#include "gabidulin/decode.hpp"

namespace gabidulin {

/// Minimum row/column cover of the true entries of an m x n mask, from a
/// maximum bipartite matching and Koenig's construction. Indices are 0-based.
struct LineCover {
  std::vector<int> rows;
  std::vector<int> cols;
  int size() const { return static_cast<int>(rows.size() + cols.size()); }
};

LineCover term_rank_cover(const std::vector<std::vector<bool>>& erased);

/// Received m x n matrix over K; nullopt marks an erased entry.
template <class S>
struct LinePattern {
  std::vector<std::vector<std::optional<Element<S>>>> masked;
  std::vector<int> rows;  // S_r
  std::vector<int> cols;  // S_c
};

/// Y = C(f) + E + A_r_hat * B_r + A_c * B_c_hat with A_r_hat (m x s_r) and
/// B_c_hat (s_c x n) known, both over K.
template <class S>
struct NetworkPattern {
  Matrix<Element<S>> A_r_hat;
  Matrix<Element<S>> B_c_hat;
};

/// Intermediate values of an erasure decode.
template <class S>
struct ErasureTrace {
  std::vector<Element<S>> support;  // punctured or transformed support
  std::vector<Element<S>> word;     // matching received entries
  std::vector<Element<S>> row_space;  // L-elements spanning the row erasures
  SkewPoly<S> V;                    // annihilator of the row-erasure space
  std::vector<Element<S>> inner;    // V{word}
  SkewPoly<S> F;                    // inner decoded message, V * f
};

/// Row vector of L-elements from the columns of an m x n K-matrix in a basis.
template <class S>
std::vector<Element<S>> word_from_matrix(const Matrix<Element<S>>& Y, const std::vector<Element<S>>& basis);

template <class S>
Matrix<Element<S>> matrix_from_word(const std::vector<Element<S>>& y, const std::vector<Element<S>>& basis);

template <class S>
std::optional<SkewPoly<S>> decode_line_erasures(const GabidulinCode<S>& code, const std::vector<Element<S>>& basis,
                                                const LinePattern<S>& pattern,
                                                DecodeMethod method = DecodeMethod::wb,
                                                const WbOptions<S>& options = {}, ErasureTrace<S>* trace = nullptr);

template <class S>
std::optional<SkewPoly<S>> decode_network_erasures(const GabidulinCode<S>& code,
                                                   const std::vector<Element<S>>& basis,
                                                   const std::vector<Element<S>>& y,
                                                   const NetworkPattern<S>& pattern,
                                                   DecodeMethod method = DecodeMethod::wb,
                                                   const WbOptions<S>& options = {},
                                                   ErasureTrace<S>* trace = nullptr);

/// Line-model erasures on the matrix of y: s_r random rows and s_c random
/// columns are chosen as the cover and each of their entries is masked with
/// probability 1/2.
template <class S>
LinePattern<S> random_line_erasures(const std::vector<Element<S>>& y, const std::vector<Element<S>>& basis, int s_r,
                                    int s_c, std::mt19937_64& rng);

template <class S>
struct NetworkCorruption {
  std::vector<Element<S>> y;
  NetworkPattern<S> pattern;
};

/// Adds A_r_hat * B_r + A_c * B_c_hat to the matrix of y with random full-rank
/// A_r_hat (m x s_r) and B_c_hat (s_c x n) over K, random B_r over K and
/// random A_c over L.
template <class S>
NetworkCorruption<S> random_network_erasures(const Automorphism<S>& theta, const std::vector<Element<S>>& y,
                                             const std::vector<Element<S>>& basis, int s_r, int s_c,
                                             std::mt19937_64& rng);

}  // namespace gabidulin
