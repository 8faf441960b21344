#include "doctest.h"
#include "support.hpp"

using namespace gt;

TEST_CASE("cyclotomic reduction of a^6") {
  auto t = cyclotomic_tower(7);
  EQ a = t->gen(1);
  CHECK(a * a.pow(5) == cyc(*t, {-1, -1, -1, -1, -1, -1}));
  CHECK(t->dim(1) == 6);
  CHECK((a * a.pow(5)).to_string() == "-a^5 - a^4 - a^3 - a^2 - a - 1");
}

TEST_CASE("finite tower over F3 with the seventh cyclotomic modulus") {
  auto f3 = Tower<Fp>::make(BaseField<Fp>{3});
  std::vector<EF> mod(7, f3->one(0));
  auto t = f3->extend(mod);
  CHECK(t->dim(1) == 6);
  auto f2 = Tower<Fp>::make(BaseField<Fp>{2});
  std::vector<EF> mod2(7, f2->one(0));
  CHECK_THROWS_AS(f2->extend(mod2), ReducibleModulus);
}

TEST_CASE("modulus validation") {
  auto q = Tower<Q>::make(BaseField<Q>{});
  CHECK_THROWS(q->extend({q->integer(1, 0), q->integer(2, 0)}));
  CHECK_THROWS(q->extend({q->integer(1, 0), q->integer(0, 0), q->integer(2, 0)}));
  auto bad = q->extend({q->integer(-1, 0), q->integer(0, 0), q->integer(1, 0)});
  EQ x = bad->gen(1) - bad->one(1);
  CHECK_THROWS_AS(x.inv(), ReducibleModulus);
}

TEST_CASE("field axioms on random samples") {
  Rng rng(11);
  auto check_tower = [&](auto tower, int bound) {
    const int L = tower->top();
    for (int i = 0; i < 200; ++i) {
      auto x = random_nonzero(*tower, L, rng, bound);
      CHECK((x * x.inv()).is_one());
    }
    for (int i = 0; i < 50; ++i) {
      auto a = random_element(*tower, L, rng, bound);
      auto b = random_element(*tower, L, rng, bound);
      auto c = random_element(*tower, L, rng, bound);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
    }
  };
  check_tower(cyclotomic_tower(7), 3);
  check_tower(kummer().l, 2);
  check_tower(finite_tower(2, 4), 1);
  check_tower(finite_tower(3, 3), 1);
  check_tower(finite_extension(finite_tower(2, 2), 3), 1);
}

TEST_CASE("automorphism orders") {
  auto t = cyclotomic_tower(7);
  auto th = power_automorphism<Q>(t, 3);
  CHECK(th->order() == 6);
  CHECK(th->apply(t->gen(1)) == t->gen(1).pow(3));
  auto k = kummer();
  auto th1 = Automorphism<Q>::make(k.l, k.j * k.a);
  auto th2 = Automorphism<Q>::make(k.l, (k.j + k.l->one(2)) * k.a);
  CHECK(th1->order() == 3);
  CHECK(th2->order() == 6);
  CHECK_THROWS_AS(Automorphism<Q>::make(k.l, k.j + k.a), NotAutomorphism);
  auto fr = frobenius(finite_tower(2, 5));
  CHECK(fr->order() == 5);
  auto two = finite_extension(finite_tower(2, 2), 3);
  CHECK(frobenius(two)->order() == 3);
}

TEST_CASE("automorphism is a K-algebra map with inverse theta^(s-1)") {
  Rng rng(5);
  auto k = kummer();
  auto th2 = Automorphism<Q>::make(k.l, (k.j + k.l->one(2)) * k.a);
  auto t = cyclotomic_tower(7);
  auto th = power_automorphism<Q>(t, 3);
  for (auto* a : {th.get(), th2.get()}) {
    const auto& tw = a->tower();
    for (int i = 0; i < 100; ++i) {
      auto x = random_element(tw, tw.top(), rng, 2);
      auto y = random_element(tw, tw.top(), rng, 2);
      CHECK(a->apply(x * y) == a->apply(x) * a->apply(y));
      CHECK(a->apply(x + y) == a->apply(x) + a->apply(y));
      CHECK(a->apply(a->apply(x), -1) == x);
      CHECK(a->apply(x, a->order()) == x);
    }
    auto kx = tw.embed(random_element(tw, tw.top() - 1, rng, 3), tw.top());
    CHECK(a->apply(kx) == kx);
  }
}

TEST_CASE("fixed field dimension") {
  auto t = cyclotomic_tower(7);
  CHECK(power_automorphism<Q>(t, 3)->fixed_field_dim() == 1);
  CHECK(power_automorphism<Q>(t, 1)->fixed_field_dim() == 6);
  CHECK(power_automorphism<Q>(t, 2)->fixed_field_dim() == 2);
  auto k = kummer();
  CHECK(Automorphism<Q>::make(k.l, k.j * k.a)->fixed_field_dim() == 2);
  CHECK(Automorphism<Q>::make(k.l, (k.j + k.l->one(2)) * k.a)->fixed_field_dim() == 1);
  CHECK(frobenius(finite_tower(3, 4))->fixed_field_dim() == 1);
}

TEST_CASE("k_rank") {
  auto k = kummer();
  std::vector<EQ> v{k.l->one(2), k.a, k.a.pow(3), k.a.pow(4)};
  CHECK(k_rank(v) == 4);
  CHECK(k_rank(v, power_basis(*k.l)) == 4);
  CHECK(k_rank(std::vector<EQ>(3, k.l->zero(2))) == 0);
  Rng rng(3);
  EQ x = random_nonzero(*k.l, 2, rng, 2);
  std::vector<EQ> mult;
  for (int i = 0; i < 5; ++i) mult.push_back(x * k.l->embed(random_nonzero(*k.l, 1, rng, 3), 2));
  CHECK(k_rank(mult) == 1);
  std::vector<EQ> bad_basis{k.l->one(2), k.a, k.a.pow(2), k.a.pow(3), k.a.pow(4), k.a.pow(4)};
  CHECK_THROWS(k_rank(v, bad_basis));
  std::vector<EQ> perm{v[2], v[0], v[3], v[1] * k.j};
  CHECK(k_rank(perm) == 4);
}
