#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "gabidulin/automorphism.hpp"

namespace gabidulin {

/// Field-operation tallies for one call. Operations with a structurally
/// trivial operand (0 or 1) are short-circuited and not counted.
struct OpCounter {
  std::uint64_t mul = 0;
  std::uint64_t add = 0;
  std::uint64_t div = 0;
  std::uint64_t theta = 0;
  std::uint64_t coefficient_ops() const { return mul + add; }
};

inline constexpr int kDegNegInf = std::numeric_limits<int>::min();

/// Element of L[X; theta], coefficient i multiplies X^i. Never has a trailing
/// zero coefficient; the zero polynomial has degree kDegNegInf.
template <class S>
class SkewPoly {
 public:
  using Elem = Element<S>;

  SkewPoly() = default;
  explicit SkewPoly(const Automorphism<S>* theta) : theta_(theta) {}
  SkewPoly(const Automorphism<S>* theta, std::vector<Elem> coeffs);

  static SkewPoly monomial(const Automorphism<S>* theta, const Elem& c, int i);
  static SkewPoly constant(const Automorphism<S>* theta, const Elem& c) { return monomial(theta, c, 0); }
  static SkewPoly one(const Automorphism<S>* theta) { return constant(theta, theta->one()); }
  /// X - c
  static SkewPoly x_minus(const Automorphism<S>* theta, const Elem& c);

  const Automorphism<S>& theta() const { return *theta_; }
  const Automorphism<S>* theta_ptr() const { return theta_; }
  int degree() const { return c_.empty() ? kDegNegInf : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Elem& lead() const { return c_.back(); }
  Elem coeff(int i) const;
  const std::vector<Elem>& coeffs() const { return c_; }

  bool operator==(const SkewPoly& o) const { return c_ == o.c_; }
  bool operator!=(const SkewPoly& o) const { return !(*this == o); }

  /// "(c0)X^0 + (c1)X^1 + ..." skipping zero terms; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();

  const Automorphism<S>* theta_ = nullptr;
  std::vector<Elem> c_;
};

// Counted field helpers shared by the decoders.
template <class S>
Element<S> op_mul(const Element<S>& a, const Element<S>& b, OpCounter* ops);
template <class S>
Element<S> op_add(const Element<S>& a, const Element<S>& b, OpCounter* ops);
template <class S>
Element<S> op_sub(const Element<S>& a, const Element<S>& b, OpCounter* ops);
template <class S>
Element<S> op_div(const Element<S>& a, const Element<S>& b, OpCounter* ops);
template <class S>
Element<S> op_theta(const Automorphism<S>& th, const Element<S>& x, int i, OpCounter* ops);

template <class S>
SkewPoly<S> add(const SkewPoly<S>& a, const SkewPoly<S>& b, OpCounter* ops = nullptr);
template <class S>
SkewPoly<S> sub(const SkewPoly<S>& a, const SkewPoly<S>& b, OpCounter* ops = nullptr);
template <class S>
SkewPoly<S> mul(const SkewPoly<S>& a, const SkewPoly<S>& b, OpCounter* ops = nullptr);
/// c * A (left multiplication by a constant).
template <class S>
SkewPoly<S> scale(const Element<S>& c, const SkewPoly<S>& a, OpCounter* ops = nullptr);
/// (c1 X + c0) * A
template <class S>
SkewPoly<S> mul_linear(const Element<S>& c1, const Element<S>& c0, const SkewPoly<S>& a, OpCounter* ops = nullptr);
/// A{b} = sum a_i theta^i(b)
template <class S>
Element<S> eval(const SkewPoly<S>& a, const Element<S>& b, OpCounter* ops = nullptr);

/// A = B*Q + R with deg R < deg B.
template <class S>
std::pair<SkewPoly<S>, SkewPoly<S>> left_divide(const SkewPoly<S>& a, const SkewPoly<S>& b, OpCounter* ops = nullptr);
/// A = Q*B + R with deg R < deg B.
template <class S>
std::pair<SkewPoly<S>, SkewPoly<S>> right_divide(const SkewPoly<S>& a, const SkewPoly<S>& b,
                                                 OpCounter* ops = nullptr);

/// Monic annihilator of span_K(v). A zero pivot on an input already in the
/// span of the accepted inputs skips it; on an independent input it throws
/// HdimViolation.
template <class S>
SkewPoly<S> annihilator(const Automorphism<S>& theta, const std::vector<Element<S>>& v);

/// Joint annihilator and interpolator (Int{g_i} = y_i, deg Int < |g|).
template <class S>
std::pair<SkewPoly<S>, SkewPoly<S>> annihilator_interpolator(const Automorphism<S>& theta,
                                                             const std::vector<Element<S>>& g,
                                                             const std::vector<Element<S>>& y,
                                                             OpCounter* ops = nullptr);
template <class S>
SkewPoly<S> interpolator(const Automorphism<S>& theta, const std::vector<Element<S>>& g,
                         const std::vector<Element<S>>& y);

template <class S>
struct DfAnnInt {
  SkewPoly<S> ann;
  SkewPoly<S> interp;
  Element<S> lambda;
};

/// Division-free variant: Ann = mu * annihilator, Int{g_i} = lambda * y_i.
template <class S>
DfAnnInt<S> df_annihilator_interpolator(const Automorphism<S>& theta, const std::vector<Element<S>>& g,
                                        const std::vector<Element<S>>& y, OpCounter* ops = nullptr);

/// dim_K of {b in L : A{b} = 0}.
template <class S>
int root_space_dim(const SkewPoly<S>& a);

template <class S>
SkewPoly<S> operator+(const SkewPoly<S>& a, const SkewPoly<S>& b) {
  return add(a, b);
}
template <class S>
SkewPoly<S> operator-(const SkewPoly<S>& a, const SkewPoly<S>& b) {
  return sub(a, b);
}
template <class S>
SkewPoly<S> operator*(const SkewPoly<S>& a, const SkewPoly<S>& b) {
  return mul(a, b);
}

extern template class SkewPoly<Rational>;
extern template class SkewPoly<Fp>;

}  // namespace gabidulin
