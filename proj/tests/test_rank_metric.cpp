#include "doctest.h"
#include "gabidulin/rank_metric.hpp"
#include "support.hpp"

using namespace gt;

TEST_CASE("weights outside and inside the framework") {
  auto k = kummer();
  std::vector<EQ> x{k.l->one(2), k.a, k.a.pow(3), k.a.pow(4)};
  auto th1 = Automorphism<Q>::make(k.l, k.j * k.a);
  CHECK(weight(*th1, x, WeightKind::moore_L) == 2);
  CHECK(weight(*th1, x, WeightKind::basis) == 4);
  CHECK(weight(*th1, x, WeightKind::moore_K) == 4);
  CHECK_THROWS_AS(weight(*th1, x, WeightKind::annihilator), HdimViolation);

  auto th2 = Automorphism<Q>::make(k.l, (k.j + k.l->one(2)) * k.a);
  for (auto kind : {WeightKind::annihilator, WeightKind::moore_L, WeightKind::moore_K, WeightKind::basis})
    CHECK(weight(*th2, x, kind) == 4);
  auto ann = annihilator(*th2, x);
  std::vector<EQ> expect(5, k.l->zero(2));
  expect[0] = k.j;
  expect[2] = -(k.j + k.l->one(2));
  expect[4] = k.l->one(2);
  CHECK(ann == SkewPoly<Q>(th2.get(), expect));
  CHECK(weight(*th2, x, WeightKind::basis, power_basis(*k.l)) == 4);
}

TEST_CASE("zero vector has weight zero") {
  auto t = cyclotomic_tower(7);
  auto th = power_automorphism<Q>(t, 3);
  std::vector<EQ> z(4, t->zero(1));
  for (auto kind : {WeightKind::annihilator, WeightKind::moore_L, WeightKind::moore_K, WeightKind::basis})
    CHECK(weight(*th, z, kind) == 0);
}

TEST_CASE("weight equalities on random samples") {
  Rng rng(17);
  auto t = cyclotomic_tower(7);
  auto th = power_automorphism<Q>(t, 3);
  auto f = frobenius(finite_tower(2, 5));
  auto k = kummer();
  auto th1 = Automorphism<Q>::make(k.l, k.j * k.a);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + trial % 6, r = trial % (n + 1);
    auto x = random_rank_vector(*th, n, r, rng);
    int wa = weight(*th, x, WeightKind::annihilator);
    CHECK(wa == r);
    CHECK(weight(*th, x, WeightKind::moore_L) == wa);
    CHECK(weight(*th, x, WeightKind::moore_K) == wa);
    CHECK(weight(*th, x, WeightKind::basis) == wa);
    auto y = random_rank_vector(*f, std::min(n, 5), std::min(r, 5), rng);
    int w = weight(*f, y, WeightKind::basis);
    CHECK(weight(*f, y, WeightKind::moore_L) == w);
    CHECK(weight(*f, y, WeightKind::moore_K) == w);
    CHECK(weight(*f, y, WeightKind::annihilator) == w);
    std::vector<EQ> z;
    for (int i = 0; i < n; ++i) z.push_back(random_element(*k.l, 2, rng));
    CHECK(weight(*th1, z, WeightKind::moore_K) == weight(*th1, z, WeightKind::basis));
    CHECK(weight(*th1, z, WeightKind::moore_L) <= weight(*th1, z, WeightKind::moore_K));
  }
}

TEST_CASE("rank distance is a metric") {
  Rng rng(23);
  auto f = frobenius(finite_tower(2, 4));
  auto rnd = [&] {
    std::vector<EF> v;
    for (int i = 0; i < 4; ++i) v.push_back(random_element(f->tower(), 1, rng));
    return v;
  };
  for (int trial = 0; trial < 200; ++trial) {
    auto x = rnd(), y = rnd(), z = rnd();
    CHECK(rank_distance(*f, x, x) == 0);
    CHECK(rank_distance(*f, x, y) == rank_distance(*f, y, x));
    CHECK(rank_distance(*f, x, z) <= rank_distance(*f, x, y) + rank_distance(*f, y, z));
  }
}
