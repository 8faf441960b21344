#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "gabidulin/errors.hpp"
#include "gabidulin/scalar.hpp"

namespace gabidulin {

template <class S>
class Element;

/// Chain of simple extensions over Q or F_p. Layer 0 is the base field,
/// layer i is layer i-1 adjoined a root of a monic modulus.
///
/// Elements hold a plain pointer to their tower; keep the owning shared_ptr
/// alive for as long as any element is in use.
template <class S>
class Tower : public std::enable_shared_from_this<Tower<S>> {
 public:
  using Scalar = S;
  using Ptr = std::shared_ptr<const Tower>;

  static Ptr make(BaseField<S> base);

  /// New tower with one more layer. `modulus` holds c_0..c_d over the current
  /// top layer and must be monic of degree >= 2.
  Ptr extend(const std::vector<Element<S>>& modulus, std::string var = "") const;

  const BaseField<S>& base() const { return base_; }
  int top() const { return static_cast<int>(layers_.size()) - 1; }
  int degree(int layer) const { return layers_.at(layer).degree; }
  std::size_t dim(int layer) const { return layers_.at(layer).dim; }
  const std::string& var(int layer) const { return layers_.at(layer).var; }
  std::vector<Element<S>> modulus(int layer) const;

  /// True when `other` is this tower or one of its ancestors.
  bool extends(const Tower* other) const;

  Element<S> zero(int layer) const;
  Element<S> one(int layer) const;
  Element<S> gen(int layer) const;
  Element<S> scalar(const S& s, int layer) const;
  Element<S> integer(std::int64_t v, int layer) const;
  Element<S> from_flat(int layer, std::vector<S> flat) const;
  Element<S> from_coeffs(int layer, const std::vector<Element<S>>& coeffs) const;
  /// View of `x` (from this tower or an ancestor) as an element of `layer`.
  Element<S> embed(const Element<S>& x, int layer) const;

  // Raw kernels on flat coordinate arrays of length dim(layer).
  void mul(int layer, const S* a, const S* b, S* out) const;
  void inv(int layer, const S* a, S* out) const;

 private:
  struct Layer {
    int degree = 1;
    std::size_t dim = 1;
    std::string var;
    std::vector<std::vector<S>> modulus;  // c_0..c_{d-1}, each flat over layer-1
    std::vector<bool> modulus_nonzero;
  };

  explicit Tower(BaseField<S> base);
  void check_irreducible_finite(int layer) const;

  BaseField<S> base_;
  std::vector<Layer> layers_;
  Ptr parent_;
};

/// Element of one layer of a tower, stored as its flat base-field coordinates
/// in the recursive power basis.
template <class S>
class Element {
 public:
  Element() = default;
  Element(const Tower<S>* tower, int layer, std::vector<S> flat);

  const Tower<S>* tower() const { return t_; }
  int layer() const { return layer_; }
  const std::vector<S>& flat() const { return c_; }
  bool valid() const { return t_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;
  /// Coefficient j over the layer below (layer must be >= 1).
  Element coeff(int j) const;
  std::vector<Element> coeffs() const;

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element operator/(const Element& o) const;
  Element operator-() const;
  Element& operator+=(const Element& o) { return *this = *this + o; }
  Element& operator-=(const Element& o) { return *this = *this - o; }
  Element& operator*=(const Element& o) { return *this = *this * o; }
  Element inv() const;
  Element pow(std::uint64_t e) const;

  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void same_tower(const Element& o) const;

  const Tower<S>* t_ = nullptr;
  int layer_ = 0;
  std::vector<S> c_;
};

template <class S>
std::string to_string(const Element<S>& x) {
  return x.to_string();
}

extern template class Tower<Rational>;
extern template class Tower<Fp>;
extern template class Element<Rational>;
extern template class Element<Fp>;

}  // namespace gabidulin
