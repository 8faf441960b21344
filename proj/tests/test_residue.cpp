#include <cmath>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gabidulin/rank_metric.hpp"
#include "gabidulin/residue.hpp"
#include "support.hpp"

using namespace gt;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Matrix<EQ> column(const Tower<Q>& t, std::vector<long> v, bool as_row) {
  Matrix<EQ> m(as_row ? 1 : v.size(), as_row ? v.size() : 1, t.zero(0));
  for (std::size_t i = 0; i < v.size(); ++i) (as_row ? m(0, i) : m(i, 0)) = t.integer(v[i], 0);
  return m;
}

}  // namespace

TEST_CASE("coefficient size") {
  auto t = cyclotomic_tower(7);
  CHECK(size_of(cyc(*t, {1, -1, 0, 1})) == 0.0);
  CHECK(size_of(cyc(*t, {5, 3})) == doctest::Approx(std::log2(5.0)));
  CHECK(size_of(t->zero(1)) == 0.0);
  CHECK_THROWS_AS(size_of(t->from_flat(1, {Q(1, 2), Q(0), Q(0), Q(0), Q(0), Q(0)})), ReductionError);
}

TEST_CASE("inert primes") {
  CHECK(find_inert_prime(*cyclotomic_tower(7)) == 3);
  CHECK(find_inert_prime(*cyclotomic_tower(11)) == 2);
  CHECK(find_inert_prime(*cyclotomic_tower(7), 4) == 5);
  CHECK(find_inert_prime(*cyclotomic_tower(5)) == 2);
  CHECK(find_inert_prime(*cyclotomic_tower(13)) == 2);
  CHECK(find_inert_prime(*cyclotomic_tower(17)) == 3);
  // Brute-force multiplicative order check of the answers.
  for (int p : {5, 7, 11, 13, 17}) {
    std::uint32_t q = find_inert_prime(*cyclotomic_tower(p));
    int order = 1;
    for (long x = q % p; x != 1; x = x * q % p) ++order;
    CHECK(order == p - 1);
  }
  CHECK_THROWS_AS(find_inert_prime(*kummer().l), ReductionError);
}

TEST_CASE("residue context") {
  auto t = cyclotomic_tower(7);
  auto th = power_automorphism<Q>(t, 3);
  auto ctx = make_residue_context(th, 3);
  CHECK(ctx.theta_bar->order() == 6);
  CHECK(ctx.theta_bar->generator_image() == ctx.residue->gen(1).pow(3));
  CHECK_THROWS_AS(make_residue_context(th, 7), ReductionError);
  CHECK_THROWS_AS(make_residue_context(th, 2), ReductionError);
  CHECK_THROWS_AS(make_residue_context(th, 9), ReductionError);
  CHECK(reduce(ctx, cyc(*t, {2, 2, -1, 1, 0, 1})).to_string() == "a^5 + a^3 + 2a^2 + 2a + 2");
}

TEST_CASE("reduction is a ring morphism compatible with theta") {
  Rng rng(17);
  auto t = cyclotomic_tower(7);
  auto th = power_automorphism<Q>(t, 3);
  auto ctx = make_residue_context(th, 3);
  const auto& tb = *ctx.theta_bar;
  for (int i = 0; i < 100; ++i) {
    EQ a = random_element(*t, 1, rng, 4), b = random_element(*t, 1, rng, 4);
    CHECK(reduce(ctx, a + b) == reduce(ctx, a) + reduce(ctx, b));
    CHECK(reduce(ctx, a * b) == reduce(ctx, a) * reduce(ctx, b));
    CHECK(reduce(ctx, th->apply(a)) == tb.apply(reduce(ctx, a)));
  }
  std::vector<EQ> g;
  for (int i = 0; i < 6; ++i) g.push_back(t->gen(1).pow(i));
  GabidulinCode<Q> code(th, g, 3);
  GabidulinCode<Fp> rc(ctx.theta_bar, reduce(ctx, g), 3);
  for (int i = 0; i < 50; ++i) {
    auto f = random_message(*th, 3, rng, 2);
    CHECK(reduce(ctx, encode(code, f)) == encode(rc, reduce(ctx, f)));
  }
  for (int i = 0; i < 100; ++i) {
    auto e = random_rank_vector(*th, 6, 1 + static_cast<int>(rng() % 5), rng);
    CHECK(weight(tb, reduce(ctx, e), WeightKind::moore_L) <= weight(*th, e, WeightKind::moore_L));
  }
}

TEST_CASE("lifting") {
  CHECK_THROWS_AS(Lifter::alphabet({0, 1, 2, 3}, 3), ReductionError);
  auto l = Lifter::alphabet({0, 1}, 3);
  CHECK(l.lift(Fp(1, 3)) == 1);
  CHECK_THROWS_AS(l.lift(Fp(2, 3)), ReductionError);
  auto c = Lifter::centered(2, 5);
  CHECK(c.lift(Fp(4, 5)) == -1);
  CHECK(c.lift(Fp(2, 5)) == 2);
  CHECK_THROWS_AS(Lifter::centered(1, 5).lift(Fp(3, 5)), ReductionError);
}

TEST_CASE("residue decoding with and without errors") {
  Rng rng(23);
  auto t = cyclotomic_tower(7);
  auto th = power_automorphism<Q>(t, 3);
  auto ctx = make_residue_context(th, 3);
  std::vector<EQ> g;
  for (int i = 0; i < 6; ++i) g.push_back(t->gen(1).pow(i));
  GabidulinCode<Q> code(th, g, 2);
  auto lifter = Lifter::alphabet({0, 1}, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<EQ> c;
    for (int i = 0; i < 2; ++i) {
      std::vector<Q> flat;
      for (int j = 0; j < 6; ++j) flat.emplace_back(static_cast<long>(rng() % 2));
      c.push_back(t->from_flat(1, flat));
    }
    SkewPoly<Q> f(th.get(), c);
    auto y = encode(code, f);
    auto e = random_rank_vector(*th, 6, trial % 3, rng);
    for (int i = 0; i < 6; ++i) y[i] += e[i];
    auto r = residue_decode_and_lift(code, y, ctx, lifter);
    if (weight(*ctx.theta_bar, reduce(ctx, e), WeightKind::moore_L) <= code.t_max()) {
      REQUIRE(r);
      CHECK(*r == f);
    }
  }
}

TEST_CASE("network erasure example decoded modulo 3 matches the bundled trace") {
  auto t = cyclotomic_tower(7);
  auto th = power_automorphism<Q>(t, 3);
  std::vector<EQ> g;
  for (int i = 0; i < 6; ++i) g.push_back(t->gen(1).pow(i));
  GabidulinCode<Q> code(th, g, 2);
  std::vector<EQ> y = {cyc(*t, {2, 2, -1, 1, 0, 1}),  cyc(*t, {-1, 0, 1, 1, -1, 1}),  cyc(*t, {0, -2, 1, 0, 4, -2}),
                       cyc(*t, {3, 0, -1, 1, 2, -1}), cyc(*t, {0, 0, -2, 0, 0, -2}), cyc(*t, {2, -1, -2, 1, -1, -1})};
  ResidueJob job;
  job.network = NetworkPattern<Q>{column(*t, {1, -1, 0, 1, 1, -1}, false), column(*t, {1, 0, -1, 0, 0, 1}, true)};
  auto ctx = make_residue_context(th, 3);
  std::string text;
  auto f = residue_decode_traced(code, y, ctx, Lifter::alphabet({0, 1}, 3), job, text);
  REQUIRE(f);
  CHECK(*f == SkewPoly<Q>(th.get(), {t->gen(1).pow(2), t->gen(1).pow(5)}));
  CHECK(text == read_file(std::string(GOLDEN_DIR) + "/cyclotomic7_network_trace.txt"));
  if (text != read_file(std::string(GOLDEN_DIR) + "/cyclotomic7_network_trace.txt")) MESSAGE(text);
}
