#include "gabidulin/rank_metric.hpp"

namespace gabidulin {

const char* to_string(WeightKind kind) {
  switch (kind) {
    case WeightKind::annihilator: return "annihilator";
    case WeightKind::moore_L: return "moore_L";
    case WeightKind::moore_K: return "moore_K";
    case WeightKind::basis: return "basis";
  }
  return "?";
}

template <class S>
Matrix<Element<S>> moore_matrix(const Automorphism<S>& theta, const std::vector<Element<S>>& x, int rows) {
  Matrix<Element<S>> v(rows, x.size(), theta.zero());
  for (std::size_t j = 0; j < x.size(); ++j) {
    Element<S> cur = theta.tower().embed(x[j], theta.top());
    for (int i = 0; i < rows; ++i) {
      v(i, j) = cur;
      cur = theta.apply(cur);
    }
  }
  return v;
}

template <class S>
int weight(const Automorphism<S>& theta, const std::vector<Element<S>>& x, WeightKind kind) {
  if (x.empty()) return 0;
  switch (kind) {
    case WeightKind::annihilator:
      return annihilator(theta, x).degree();
    case WeightKind::moore_L:
      return static_cast<int>(rank(moore_matrix(theta, x, theta.order())));
    case WeightKind::moore_K: {
      const int s = theta.order(), m = theta.m();
      Matrix<Element<S>> v = moore_matrix(theta, x, s);
      Matrix<Element<S>> flat(s * m, x.size(), theta.tower().zero(theta.k_layer()));
      for (int i = 0; i < s; ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
          for (int r = 0; r < m; ++r) flat(i * m + r, j) = v(i, j).coeff(r);
      return static_cast<int>(rank(flat));
    }
    case WeightKind::basis: {
      std::vector<Element<S>> lifted;
      for (const auto& e : x) lifted.push_back(theta.tower().embed(e, theta.top()));
      return k_rank(lifted);
    }
  }
  return 0;
}

template <class S>
int weight(const Automorphism<S>& theta, const std::vector<Element<S>>& x, WeightKind kind,
           const std::vector<Element<S>>& basis) {
  check_basis(basis);
  return weight(theta, x, kind);
}

template <class S>
int rank_distance(const Automorphism<S>& theta, const std::vector<Element<S>>& x, const std::vector<Element<S>>& y,
                  WeightKind kind) {
  if (x.size() != y.size()) throw std::invalid_argument("vectors differ in length");
  std::vector<Element<S>> d;
  for (std::size_t i = 0; i < x.size(); ++i) d.push_back(x[i] - y[i]);
  return weight(theta, d, kind);
}

#define GABIDULIN_INSTANTIATE(S)                                                                                      \
  template Matrix<Element<S>> moore_matrix(const Automorphism<S>&, const std::vector<Element<S>>&, int);               \
  template int weight(const Automorphism<S>&, const std::vector<Element<S>>&, WeightKind);                            \
  template int weight(const Automorphism<S>&, const std::vector<Element<S>>&, WeightKind,                             \
                      const std::vector<Element<S>>&);                                                                \
  template int rank_distance(const Automorphism<S>&, const std::vector<Element<S>>&, const std::vector<Element<S>>&, \
                             WeightKind);

GABIDULIN_INSTANTIATE(Rational)
GABIDULIN_INSTANTIATE(Fp)

}  // namespace gabidulin
