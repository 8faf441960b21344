#include "gabidulin/constructions.hpp"

namespace gabidulin {

Tower<Rational>::Ptr cyclotomic_tower(int p) {
  if (!is_prime(static_cast<std::uint64_t>(p))) throw std::invalid_argument("cyclotomic index must be prime");
  auto q = Tower<Rational>::make(BaseField<Rational>{});
  std::vector<Element<Rational>> mod(p, q->one(0));
  return q->extend(mod);
}

Tower<Fp>::Ptr finite_extension(const Tower<Fp>::Ptr& below, int m) {
  const int layer = below->top();
  const std::uint32_t p = below->base().p;
  // Candidate coefficients: u + v*g with u, v in F_p and g the top generator.
  std::vector<Element<Fp>> alphabet;
  if (layer == 0) {
    for (std::uint32_t v = 0; v < p; ++v) alphabet.push_back(below->integer(v, 0));
  } else {
    Element<Fp> g = below->gen(layer);
    for (std::uint32_t v = 0; v < p; ++v)
      for (std::uint32_t w = 0; w < p; ++w) alphabet.push_back(below->integer(v, layer) + below->integer(w, layer) * g);
  }
  const std::size_t base = alphabet.size();
  std::vector<std::size_t> digits(m, 0);
  for (;;) {
    std::vector<Element<Fp>> mod;
    for (int i = 0; i < m; ++i) mod.push_back(alphabet[digits[i]]);
    mod.push_back(below->one(layer));
    if (!mod[0].is_zero()) {
      try {
        return below->extend(mod);
      } catch (const ReducibleModulus&) {
      }
    }
    int i = 0;
    while (i < m && ++digits[i] == base) digits[i++] = 0;
    if (i == m) throw std::runtime_error("no irreducible polynomial found");
  }
}

Tower<Fp>::Ptr finite_tower(std::uint32_t p, int m) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  return finite_extension(Tower<Fp>::make(BaseField<Fp>{p}), m);
}

template <class S>
typename Automorphism<S>::Ptr power_automorphism(const typename Tower<S>::Ptr& tower, std::uint64_t r) {
  return Automorphism<S>::make(tower, tower->gen(tower->top()).pow(r));
}

typename Automorphism<Fp>::Ptr frobenius(const Tower<Fp>::Ptr& tower) {
  std::uint64_t q = 1;
  for (std::size_t i = 0; i < tower->dim(tower->top() - 1); ++i) q *= tower->base().p;
  return power_automorphism<Fp>(tower, q);
}

template typename Automorphism<Rational>::Ptr power_automorphism<Rational>(const Tower<Rational>::Ptr&, std::uint64_t);
template typename Automorphism<Fp>::Ptr power_automorphism<Fp>(const Tower<Fp>::Ptr&, std::uint64_t);

}  // namespace gabidulin
