#pragma once

#include <vector>

#include "gabidulin/skew_poly.hpp"

namespace gabidulin {

/// Gab_{theta,k}(g): evaluations f{g} of skew polynomials with deg f < k.
template <class S>
class GabidulinCode {
 public:
  using Elem = Element<S>;

  GabidulinCode(typename Automorphism<S>::Ptr theta, std::vector<Elem> support, int k);

  const Automorphism<S>& theta() const { return *theta_; }
  const typename Automorphism<S>::Ptr& theta_ptr() const { return theta_; }
  const Tower<S>& tower() const { return theta_->tower(); }
  const std::vector<Elem>& support() const { return g_; }
  int n() const { return static_cast<int>(g_.size()); }
  int k() const { return k_; }
  int d() const { return n() - k_ + 1; }
  int t_max() const { return (n() - k_) / 2; }

 private:
  typename Automorphism<S>::Ptr theta_;
  std::vector<Elem> g_;
  int k_;
};

template <class S>
std::vector<Element<S>> encode(const GabidulinCode<S>& code, const SkewPoly<S>& f);

/// k x n matrix with rows theta^i(g).
template <class S>
Matrix<Element<S>> generator_matrix(const GabidulinCode<S>& code);

/// Support h of the dual code: the kernel vector of the (n-1) x n system with
/// rows theta^c(theta^{-(n-k-1)}(g)). `reverse_pivoting` eliminates with the
/// columns in reverse order, giving an independent solve of the same kernel.
template <class S>
std::vector<Element<S>> dual_support(const GabidulinCode<S>& code, bool reverse_pivoting = false);

/// (n-k) x n matrix with rows theta^i(h), i = 0..n-k-1.
template <class S>
Matrix<Element<S>> parity_check_matrix(const GabidulinCode<S>& code, const std::vector<Element<S>>& h);

extern template class GabidulinCode<Rational>;
extern template class GabidulinCode<Fp>;

}  // namespace gabidulin
