#pragma once

#include <memory>
#include <vector>

#include "gabidulin/linalg.hpp"
#include "gabidulin/tower.hpp"

namespace gabidulin {

/// theta in Aut_K(L) where L is the top layer of the tower and K the layer
/// below, given by the image of the top generator.
template <class S>
class Automorphism {
 public:
  using Ptr = std::shared_ptr<const Automorphism>;

  static Ptr make(typename Tower<S>::Ptr tower, const Element<S>& generator_image);

  const Tower<S>& tower() const { return *tower_; }
  const typename Tower<S>::Ptr& tower_ptr() const { return tower_; }
  int top() const { return tower_->top(); }
  int k_layer() const { return tower_->top() - 1; }
  int m() const { return tower_->degree(top()); }
  int order() const { return order_; }
  const Element<S>& generator_image() const { return image_; }

  /// theta^i(x); negative i is taken modulo the order. Elements of K (or
  /// below) are returned unchanged.
  Element<S> apply(const Element<S>& x, int i = 1) const;
  /// Matrix of theta^i over K in the power basis (column j = theta^i(a^j)).
  Matrix<Element<S>> matrix(int i) const;
  /// dim_K of the fixed field of theta.
  int fixed_field_dim() const { return fixed_dim_; }
  bool framework() const { return fixed_dim_ == 1; }

  Element<S> zero() const { return tower_->zero(top()); }
  Element<S> one() const { return tower_->one(top()); }

 private:
  struct Entry {
    int row;
    int kind;  // +1, -1, or 0 for a general coefficient
    std::vector<S> value;
  };
  using Column = std::vector<Entry>;

  Automorphism() = default;
  int normalize(int i) const {
    int r = i % order_;
    return r < 0 ? r + order_ : r;
  }

  typename Tower<S>::Ptr tower_;
  Element<S> image_;
  int order_ = 1;
  int fixed_dim_ = 0;
  std::vector<std::vector<Column>> powers_;
  std::vector<Matrix<Element<S>>> dense_;
};

/// m x n matrix over K of the coordinates of v in the power basis of L over K.
template <class S>
Matrix<Element<S>> coordinate_matrix(const std::vector<Element<S>>& v);

/// dim_K span(v) for elements of one layer, measured in the power basis.
template <class S>
int k_rank(const std::vector<Element<S>>& v);

/// As above, after checking that `basis` is a K-basis of L.
template <class S>
int k_rank(const std::vector<Element<S>>& v, const std::vector<Element<S>>& basis);

/// Throws unless `basis` has m K-independent elements.
template <class S>
void check_basis(const std::vector<Element<S>>& basis);

/// Coordinates of x in `basis` (elements of K).
template <class S>
std::vector<Element<S>> basis_coordinates(const Element<S>& x, const std::vector<Element<S>>& basis);

/// Power basis 1, a, ..., a^{m-1} of the top layer over the one below.
template <class S>
std::vector<Element<S>> power_basis(const Tower<S>& tower);

extern template class Automorphism<Rational>;
extern template class Automorphism<Fp>;

}  // namespace gabidulin
