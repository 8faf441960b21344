#include "gabidulin/code.hpp"

#include <algorithm>

#include "gabidulin/rank_metric.hpp"

namespace gabidulin {

template <class S>
GabidulinCode<S>::GabidulinCode(typename Automorphism<S>::Ptr theta, std::vector<Elem> support, int k)
    : theta_(std::move(theta)), k_(k) {
  const int n = static_cast<int>(support.size());
  if (!theta_->framework()) throw InvalidCode("framework violated: the fixed field of theta is larger than K");
  if (k < 1) throw InvalidCode("k ≥ 1 required");
  if (k > n) throw InvalidCode("k ≤ n required (k = " + std::to_string(k) + ", n = " + std::to_string(n) + ")");
  if (n > theta_->m()) throw InvalidCode("n ≤ m required (n = " + std::to_string(n) + ", m = " + std::to_string(theta_->m()) + ")");
  for (auto& x : support) g_.push_back(theta_->tower().embed(x, theta_->top()));
  if (k_rank(g_) != n) throw InvalidCode("support is K-linearly dependent");
}

template <class S>
std::vector<Element<S>> encode(const GabidulinCode<S>& code, const SkewPoly<S>& f) {
  if (f.degree() >= code.k()) throw std::invalid_argument("message degree must be below k");
  std::vector<Element<S>> out;
  out.reserve(code.n());
  for (const auto& g : code.support()) out.push_back(eval(f, g));
  return out;
}

template <class S>
Matrix<Element<S>> generator_matrix(const GabidulinCode<S>& code) {
  return moore_matrix(code.theta(), code.support(), code.k());
}

template <class S>
std::vector<Element<S>> dual_support(const GabidulinCode<S>& code, bool reverse_pivoting) {
  const int n = code.n(), k = code.k();
  if (k >= n) throw std::invalid_argument("dual support needs k < n");
  const Automorphism<S>& th = code.theta();
  std::vector<Element<S>> gt;
  for (const auto& g : code.support()) gt.push_back(th.apply(g, -(n - k - 1)));
  if (reverse_pivoting) std::reverse(gt.begin(), gt.end());
  Matrix<Element<S>> sys = moore_matrix(th, gt, n - 1);
  auto ker = kernel(sys, th.zero(), th.one());
  if (ker.size() != 1) throw ContractViolation("dual system does not have a one-dimensional kernel");
  std::vector<Element<S>> h = ker[0];
  if (reverse_pivoting) std::reverse(h.begin(), h.end());
  return h;
}

template <class S>
Matrix<Element<S>> parity_check_matrix(const GabidulinCode<S>& code, const std::vector<Element<S>>& h) {
  return moore_matrix(code.theta(), h, code.n() - code.k());
}

template class GabidulinCode<Rational>;
template class GabidulinCode<Fp>;

#define GABIDULIN_INSTANTIATE(S)                                                                    \
  template std::vector<Element<S>> encode(const GabidulinCode<S>&, const SkewPoly<S>&);             \
  template Matrix<Element<S>> generator_matrix(const GabidulinCode<S>&);                            \
  template std::vector<Element<S>> dual_support(const GabidulinCode<S>&, bool);                     \
  template Matrix<Element<S>> parity_check_matrix(const GabidulinCode<S>&, const std::vector<Element<S>>&);

GABIDULIN_INSTANTIATE(Rational)
GABIDULIN_INSTANTIATE(Fp)

}  // namespace gabidulin
