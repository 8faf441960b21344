#include "gabidulin/random.hpp"

namespace gabidulin {

namespace {

Rational draw(const BaseField<Rational>&, Rng& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  return Rational(d(rng));
}

Fp draw(const BaseField<Fp>& f, Rng& rng, int) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.p - 1);
  return Fp(d(rng), f.p);
}

}  // namespace

template <class S>
Element<S> random_element(const Tower<S>& tower, int layer, Rng& rng, int bound) {
  std::vector<S> c;
  for (std::size_t i = 0; i < tower.dim(layer); ++i) c.push_back(draw(tower.base(), rng, bound));
  return tower.from_flat(layer, std::move(c));
}

template <class S>
Element<S> random_nonzero(const Tower<S>& tower, int layer, Rng& rng, int bound) {
  for (;;) {
    Element<S> x = random_element(tower, layer, rng, bound);
    if (!x.is_zero()) return x;
  }
}

template <class S>
std::vector<Element<S>> random_independent(const Automorphism<S>& theta, int n, Rng& rng, int bound) {
  if (n > theta.m()) throw std::invalid_argument("more independent elements requested than [L:K]");
  std::vector<Element<S>> out;
  while (static_cast<int>(out.size()) < n) {
    out.push_back(random_nonzero(theta.tower(), theta.top(), rng, bound));
    if (k_rank(out) != static_cast<int>(out.size())) out.pop_back();
  }
  return out;
}

template <class S>
std::vector<Element<S>> random_rank_vector(const Automorphism<S>& theta, int n, int t, Rng& rng, int bound) {
  const Tower<S>& tower = theta.tower();
  if (t == 0) return std::vector<Element<S>>(n, theta.zero());
  if (t > n || t > theta.m()) throw std::invalid_argument("rank exceeds length or [L:K]");
  std::vector<Element<S>> basis = random_independent(theta, t, rng, bound);
  for (;;) {
    std::vector<Element<S>> v(n, theta.zero());
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < t; ++i) v[j] += basis[i] * random_element(tower, theta.k_layer(), rng, 1);
    if (k_rank(v) == t) return v;
  }
}

template <class S>
SkewPoly<S> random_message(const Automorphism<S>& theta, int k, Rng& rng, int bound) {
  std::vector<Element<S>> c;
  for (int i = 0; i < k; ++i) c.push_back(random_element(theta.tower(), theta.top(), rng, bound));
  return SkewPoly<S>(&theta, std::move(c));
}

#define GABIDULIN_INSTANTIATE(S)                                                                               \
  template Element<S> random_element(const Tower<S>&, int, Rng&, int);                                         \
  template Element<S> random_nonzero(const Tower<S>&, int, Rng&, int);                                         \
  template std::vector<Element<S>> random_independent(const Automorphism<S>&, int, Rng&, int);                 \
  template std::vector<Element<S>> random_rank_vector(const Automorphism<S>&, int, int, Rng&, int);            \
  template SkewPoly<S> random_message(const Automorphism<S>&, int, Rng&, int);

GABIDULIN_INSTANTIATE(Rational)
GABIDULIN_INSTANTIATE(Fp)

}  // namespace gabidulin
