#pragma once

#include "gabidulin/constructions.hpp"
#include "gabidulin/random.hpp"
#include "gabidulin/skew_poly.hpp"

namespace gt {

using namespace gabidulin;
using Q = Rational;
using EQ = Element<Rational>;
using EF = Element<Fp>;

struct Kummer {
  Tower<Q>::Ptr k;  // Q[j]/(j^2 + j + 1)
  Tower<Q>::Ptr l;  // K[a]/(a^6 - 2)
  EQ j, a;
};

inline Kummer kummer() {
  Kummer r;
  auto q = Tower<Q>::make(BaseField<Q>{});
  r.k = q->extend({q->integer(1, 0), q->integer(1, 0), q->integer(1, 0)}, "j");
  std::vector<EQ> mod(7, r.k->zero(1));
  mod[0] = r.k->integer(-2, 1);
  mod[6] = r.k->one(1);
  r.l = r.k->extend(mod, "a");
  r.j = r.l->embed(r.l->gen(1), 2);
  r.a = r.l->gen(2);
  return r;
}

/// Q(zeta_7) with the coordinates of `c` (c[i] multiplies a^i).
inline EQ cyc(const Tower<Q>& t, std::initializer_list<long> c) {
  std::vector<Q> v(t.dim(t.top()), Q(0));
  std::size_t i = 0;
  for (long x : c) v[i++] = Q(x);
  return t.from_flat(t.top(), v);
}

inline EF ff(const Tower<Fp>& t, std::initializer_list<long> c) {
  std::vector<Fp> v(t.dim(t.top()), t.base().zero());
  std::size_t i = 0;
  for (long x : c) v[i++] = t.base().from_int(x);
  return t.from_flat(t.top(), v);
}

}  // namespace gt
