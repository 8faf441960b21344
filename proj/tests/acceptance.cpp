#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gabidulin/bench.hpp"
#include "gabidulin/linalg.hpp"
#include "gabidulin/oracle.hpp"
#include "gabidulin/rank_metric.hpp"
#include "support.hpp"

using namespace gt;

namespace {

// Pinned parameters and tolerances.
constexpr double kBudgetGoldenEncoding = 1.0;  // seconds
constexpr double kBudgetKummer = 5.0;
constexpr double kBudgetGoldenTrace = 5.0;
constexpr double kBudgetMrd = 60.0;
constexpr double kBudgetRoundTrip = 600.0;
constexpr double kBudgetErasures = 300.0;
constexpr double kBudgetResidue = 300.0;
constexpr double kBudgetBlowup = 900.0;
constexpr double kBudgetDual = 60.0;

constexpr int kMrdMinCodes = 20;
constexpr int kRoundTripFinite = 500;
constexpr int kRoundTripCyclotomic = 100;
constexpr int kCyclotomicMaxLength = 8;
constexpr int kErasureInstances = 200;
constexpr double kMulBoundFactor = 2.125;
constexpr int kResidueInstances = 100;
constexpr int kResidueMaxLength = 6;
constexpr int kRankSamples = 100;
constexpr double kBlowupFactor = 4.0;
constexpr int kBlowupSeeds = 2;
constexpr int kBenchRepeats = 3;
constexpr int kBenchK = 2;
constexpr int kDualCodes = 50;

const DecodeMethod kMethods[] = {DecodeMethod::gauss, DecodeMethod::wb, DecodeMethod::wb_df, DecodeMethod::wb_lowdeg};

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Outcome timed(double budget, const std::function<Outcome()>& body, double& elapsed) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& ex) {
    o.fail(std::string("exception: ") + ex.what());
  }
  elapsed = seconds_since(t0);
  if (elapsed > budget) o.fail(fmt("time %.1f s exceeds budget %.0f s", elapsed, budget));
  return o;
}

template <class S>
std::vector<Element<S>> plus(std::vector<Element<S>> x, const std::vector<Element<S>>& y) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return x;
}

int uniform(Rng& rng, int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }

/// Error rank: half the time the full radius, otherwise uniform in [0, t_max].
int draw_rank(Rng& rng, int t_max) { return rng() % 2 ? t_max : uniform(rng, 0, t_max); }

struct Cyclo {
  Tower<Q>::Ptr t;
  int p;
};

std::vector<int> generators_mod(int p) {
  std::vector<int> out;
  for (int g = 2; g < p; ++g) {
    int order = 1;
    for (long x = g; x != 1; x = x * g % p) ++order;
    if (order == p - 1) out.push_back(g);
  }
  return out;
}

Automorphism<Q>::Ptr random_cyclotomic_theta(const Tower<Q>::Ptr& t, int p, Rng& rng) {
  auto gens = generators_mod(p);
  return power_automorphism<Q>(t, gens[rng() % gens.size()]);
}

std::vector<Automorphism<Fp>::Ptr> finite_round_trip_fields() {
  std::vector<Automorphism<Fp>::Ptr> out;
  for (int m : {3, 4, 5, 6, 7}) out.push_back(frobenius(finite_tower(2, m)));
  for (int m : {3, 4, 5}) out.push_back(frobenius(finite_tower(3, m)));
  out.push_back(power_automorphism<Fp>(finite_tower(2, 6), 32));
  out.push_back(frobenius(finite_extension(finite_tower(2, 2), 3)));
  out.push_back(frobenius(finite_extension(finite_tower(3, 2), 2)));
  return out;
}

// ---------------------------------------------------------------- 1

Outcome golden_encoding() {
  Outcome o;
  auto t = cyclotomic_tower(7);
  auto th = power_automorphism<Q>(t, 3);
  const EQ a = t->gen(1);
  std::vector<EQ> g;
  for (int i = 0; i < 6; ++i) g.push_back(a.pow(i));
  GabidulinCode<Q> code(th, g, 2);
  auto w = encode(code, SkewPoly<Q>(th.get(), {a.pow(2), a.pow(5)}));
  const std::vector<EQ> expected = {cyc(*t, {0, 0, 1, 0, 0, 1}),      cyc(*t, {0, 1, 0, 1}),
                                   cyc(*t, {0, 0, 0, 0, 2}),         cyc(*t, {1, 0, 0, 0, 0, 1}),
                                   cyc(*t, {-1, -1, -1, 0, -1, -1}), cyc(*t, {0, -1, -1, -1, -1, -1})};
  if (w != expected) o.fail("evaluations differ");
  const long C[6][6] = {{0, 0, 0, 1, -1, 0}, {0, 1, 0, 0, -1, -1}, {1, 0, 0, 0, -1, -1},
                        {0, 1, 0, 0, 0, -1}, {0, 0, 2, 0, -1, -1}, {1, 0, 0, 1, -1, -1}};
  auto M = matrix_from_word(w, power_basis(*t));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (M(i, j) != t->integer(C[i][j], 0)) o.fail("matrix entry differs");
  if (o.pass) o.detail = "6 evaluations and 36 matrix entries match";
  return o;
}

// ---------------------------------------------------------------- 2

Outcome kummer_dichotomy() {
  Outcome o;
  auto k = kummer();
  std::vector<EQ> x{k.l->one(2), k.a, k.a.pow(3), k.a.pow(4)};
  auto th1 = Automorphism<Q>::make(k.l, k.j * k.a);
  auto th2 = Automorphism<Q>::make(k.l, (k.j + k.l->one(2)) * k.a);
  if (th1->fixed_field_dim() != 2) o.fail("theta1 fixed field dimension is not 2");
  if (weight(*th1, x, WeightKind::moore_L) != 2) o.fail("theta1 moore_L weight is not 2");
  if (weight(*th1, x, WeightKind::basis) != 4) o.fail("theta1 basis weight is not 4");
  if (th2->fixed_field_dim() != 1) o.fail("theta2 fixed field dimension is not 1");
  for (auto kind : {WeightKind::annihilator, WeightKind::moore_L, WeightKind::moore_K, WeightKind::basis})
    if (weight(*th2, x, kind) != 4) o.fail(std::string("theta2 weight ") + to_string(kind) + " is not 4");
  if (o.pass) o.detail = "theta1: dim 2, weights 2 vs 4; theta2: dim 1, all weights 4";
  return o;
}

// ---------------------------------------------------------------- 3

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome golden_trace() {
  Outcome o;
  auto t = cyclotomic_tower(7);
  auto th = power_automorphism<Q>(t, 3);
  std::vector<EQ> g;
  for (int i = 0; i < 6; ++i) g.push_back(t->gen(1).pow(i));
  GabidulinCode<Q> code(th, g, 2);
  const std::vector<EQ> y = {cyc(*t, {2, 2, -1, 1, 0, 1}),  cyc(*t, {-1, 0, 1, 1, -1, 1}),
                             cyc(*t, {0, -2, 1, 0, 4, -2}), cyc(*t, {3, 0, -1, 1, 2, -1}),
                             cyc(*t, {0, 0, -2, 0, 0, -2}), cyc(*t, {2, -1, -2, 1, -1, -1})};
  Matrix<EQ> A(6, 1, t->zero(0)), B(1, 6, t->zero(0));
  const long av[6] = {1, -1, 0, 1, 1, -1}, bv[6] = {1, 0, -1, 0, 0, 1};
  for (int i = 0; i < 6; ++i) {
    A(i, 0) = t->integer(av[i], 0);
    B(0, i) = t->integer(bv[i], 0);
  }
  ResidueJob job;
  job.network = NetworkPattern<Q>{A, B};
  auto ctx = make_residue_context(th, 3);
  std::string text;
  auto f = residue_decode_traced(code, y, ctx, Lifter::alphabet({0, 1}, 3), job, text);
  const std::string golden = read_file(std::string(GOLDEN_DIR) + "/cyclotomic7_network_trace.txt");
  if (golden.empty()) o.fail("bundled trace missing");
  if (text != golden) o.fail("trace differs from the bundled trace");
  if (!f || *f != SkewPoly<Q>(th.get(), {t->gen(1).pow(2), t->gen(1).pow(5)})) o.fail("lifted message differs");
  if (o.pass) {
    const auto lines = std::count(text.begin(), text.end(), '\n');
    o.detail = fmt("%.0f trace lines identical; lifted f = a^2 + a^5 X", static_cast<double>(lines));
  }
  return o;
}

// ---------------------------------------------------------------- 4

Outcome mrd_oracle() {
  Outcome o;
  Rng rng(4);
  int codes = 0;
  for (int m : {3, 4, 5}) {
    auto th = frobenius(finite_tower(2, m));
    for (int n = 1; n <= m; ++n)
      for (int k = 1; k <= n; ++k) {
        GabidulinCode<Fp> code(th, random_independent(*th, n, rng), k);
        if (message_count(code) > kEnumerationGuard) continue;
        ++codes;
        const int d = min_distance_exhaustive(code);
        if (d != n - k + 1) o.fail(fmt("m=%.0f n=%.0f k=%.0f: distance %.0f", m, n, k, d));
      }
  }
  if (codes < kMrdMinCodes) o.fail(fmt("only %.0f codes within the enumeration guard", codes));
  if (o.pass) o.detail = fmt("%.0f codes (every (m,n,k) with |L|^k <= 2^20), all d = n-k+1", codes);
  return o;
}

// ------------------------------------------------------------- 5 and 7

struct InvariantTally {
  Outcome outcome;
  long wb_runs = 0;
  long bounded_runs = 0;
  double worst_mul_ratio = 0;  // mul / n^2 over standard and low-degree runs
  long saving_checks = 0;
  long full_rounds = 0;
  long min_saving_margin = -1;  // smallest (saving - k * type1 rounds)
};

struct RoundTripTally {
  Outcome outcome;
  long decodes = 0;
  long brute_checked = 0;
  long brute_skipped = 0;
};

template <class S>
void check_instance(const GabidulinCode<S>& code, const SkewPoly<S>& f, const std::vector<Element<S>>& y,
                    RoundTripTally& rt, InvariantTally& inv, const std::string& label) {
  std::uint64_t coeff_ops[4] = {};
  int type1[4] = {};
  for (int mi = 0; mi < 4; ++mi) {
    const DecodeMethod method = kMethods[mi];
    OpCounter ops;
    WbStats stats;
    WbOptions<S> opt;
    opt.ops = &ops;
    opt.stats = &stats;
    std::optional<DecodeResult<S>> r;
    if (method == DecodeMethod::gauss) {
      r = decode_gauss(code, y, true);
    } else {
      opt.variant = variant_of(method);
      opt.check_invariants = true;
      ++inv.wb_runs;
      try {
        r = decode_wb(code, y, opt);
      } catch (const ContractViolation& ex) {
        inv.outcome.fail(label + " " + to_string(method) + ": " + ex.what());
        continue;
      }
      coeff_ops[mi] = ops.coefficient_ops();
      type1[mi] = stats.type1;
      if (method != DecodeMethod::wb_df) {
        ++inv.bounded_runs;
        const double n2 = static_cast<double>(code.n()) * code.n();
        inv.worst_mul_ratio = std::max(inv.worst_mul_ratio, static_cast<double>(ops.mul) / n2);
        if (static_cast<double>(ops.mul) > kMulBoundFactor * n2)
          inv.outcome.fail(label + " " + to_string(method) + fmt(": %.0f multiplications > 2.125 n^2", ops.mul));
      }
    }
    ++rt.decodes;
    if (!r || r->f != f) rt.outcome.fail(label + " " + to_string(method) + ": message not recovered");
  }
  // Low-degree against standard on the same word.
  const int k = code.k(), n = code.n();
  if (type1[1] != type1[3]) inv.outcome.fail(label + ": type-1 round counts differ between variants");
  const long saving = static_cast<long>(coeff_ops[1]) - static_cast<long>(coeff_ops[3]);
  const long margin = saving - static_cast<long>(k) * type1[1];
  ++inv.saving_checks;
  if (inv.min_saving_margin < 0 || margin < inv.min_saving_margin) inv.min_saving_margin = margin;
  if (margin < 0) inv.outcome.fail(label + fmt(": low-degree saves %.0f < k * %.0f type-1 rounds", saving, type1[1]));
  if (type1[1] == n - k && n > k) {
    ++inv.full_rounds;
    if (saving < static_cast<long>(k) * (n - k)) inv.outcome.fail(label + fmt(": saving %.0f < k(n-k)", saving));
  }
}

void round_trip(RoundTripTally& rt, InvariantTally& inv) {
  Rng rng(5);
  auto fields = finite_round_trip_fields();
  for (int i = 0; i < kRoundTripFinite; ++i) {
    const auto& th = fields[i % fields.size()];
    const int n = uniform(rng, 1, th->m()), k = uniform(rng, 1, n);
    GabidulinCode<Fp> code(th, random_independent(*th, n, rng), k);
    auto f = random_message(*th, k, rng);
    const int t = draw_rank(rng, code.t_max());
    auto y = plus(encode(code, f), random_rank_vector(*th, n, t, rng));
    const std::string label = "finite #" + std::to_string(i);
    check_instance(code, f, y, rt, inv, label);
    if (message_count(code) != 0 && message_count(code) <= kEnumerationGuard) {
      ++rt.brute_checked;
      auto sols = brute_force_nlr(code, y, code.t_max());
      if (sols.size() != 1 || sols[0].first != f) rt.outcome.fail(label + ": brute force disagrees");
    } else {
      ++rt.brute_skipped;
    }
  }
  for (int i = 0; i < kRoundTripCyclotomic; ++i) {
    const int p = std::vector<int>{5, 7, 11}[i % 3];
    auto t = cyclotomic_tower(p);
    auto th = random_cyclotomic_theta(t, p, rng);
    const int n = uniform(rng, 1, std::min(th->m(), kCyclotomicMaxLength)), k = uniform(rng, 1, n);
    GabidulinCode<Q> code(th, random_independent(*th, n, rng), k);
    auto f = random_message(*th, k, rng);
    const int r = draw_rank(rng, code.t_max());
    auto y = plus(encode(code, f), random_rank_vector(*th, n, r, rng));
    check_instance(code, f, y, rt, inv, "cyclotomic #" + std::to_string(i));
  }
}

// ---------------------------------------------------------------- 6

/// One erasure instance with 2t + s_r + s_c <= n - k; returns whether f was recovered.
template <class S>
bool erasure_instance(const typename Automorphism<S>::Ptr& th, bool network, DecodeMethod method, Rng& rng) {
  const int m = th->m();
  const int n = uniform(rng, 2, m), k = uniform(rng, 1, n - 1);
  GabidulinCode<S> code(th, random_independent(*th, n, rng), k);
  auto f = random_message(*th, k, rng);
  const int budget = n - k;
  const int s_r = uniform(rng, 0, budget);
  const int s_c = uniform(rng, 0, budget - s_r);
  const int t = (budget - s_r - s_c) / 2;
  auto y = plus(encode(code, f), random_rank_vector(*th, n, t, rng));
  const auto basis = power_basis(th->tower());
  std::optional<SkewPoly<S>> got;
  if (network) {
    auto nc = random_network_erasures(*th, y, basis, s_r, s_c, rng);
    got = decode_network_erasures(code, basis, nc.y, nc.pattern, method);
  } else {
    got = decode_line_erasures(code, basis, random_line_erasures(y, basis, s_r, s_c, rng), method);
  }
  return got && *got == f;
}

Outcome erasures() {
  Outcome o;
  Rng rng(6);
  std::vector<Automorphism<Fp>::Ptr> finite;
  for (int m : {4, 5, 6, 7}) finite.push_back(frobenius(finite_tower(2, m)));
  finite.push_back(frobenius(finite_tower(3, 4)));
  finite.push_back(frobenius(finite_extension(finite_tower(2, 2), 3)));
  auto c7 = cyclotomic_tower(7);
  int counts[2] = {0, 0};
  for (int model = 0; model < 2; ++model) {
    const bool network = model == 1;
    for (int i = 0; i < kErasureInstances; ++i) {
      const DecodeMethod method = kMethods[i % 4];
      bool ok;
      if (i % 5 == 4)
        ok = erasure_instance<Q>(random_cyclotomic_theta(c7, 7, rng), network, method, rng);
      else
        ok = erasure_instance<Fp>(finite[i % finite.size()], network, method, rng);
      ++counts[model];
      if (!ok) o.fail(std::string(network ? "network" : "line") + " instance #" + std::to_string(i) + " failed");
    }
  }
  if (o.pass) o.detail = fmt("%.0f line and %.0f network instances recovered", counts[0], counts[1]);
  return o;
}

// ---------------------------------------------------------------- 8

Outcome residue_square() {
  Outcome o;
  Rng rng(8);
  int squares = 0;
  for (int i = 0; i < kResidueInstances; ++i) {
    const int p = i % 2 ? 7 : 5;
    auto t = cyclotomic_tower(p);
    auto th = random_cyclotomic_theta(t, p, rng);
    auto ctx = make_residue_context(th, find_inert_prime(*t));
    const int n = uniform(rng, 1, std::min(th->m(), kResidueMaxLength)), k = uniform(rng, 1, n);
    std::vector<EQ> g;
    if (i % 4 < 2) {
      for (int j = 0; j < n; ++j) g.push_back(t->gen(1).pow(j));
    } else {
      do g = random_independent(*th, n, rng);
      while (k_rank(reduce(ctx, g)) != n);
    }
    GabidulinCode<Q> code(th, g, k);
    GabidulinCode<Fp> code_bar(ctx.theta_bar, reduce(ctx, g), k);
    auto f = random_message(*th, k, rng);
    auto y = plus(encode(code, f), random_rank_vector(*th, n, draw_rank(rng, code.t_max()), rng));
    const DecodeMethod method = kMethods[i % 4];
    auto direct = decode(code, y, method);
    auto residue = decode(code_bar, reduce(ctx, y), method);
    ++squares;
    if (!direct || !residue) {
      o.fail("instance #" + std::to_string(i) + ": a decoder failed");
      continue;
    }
    if (reduce(ctx, direct->f) != residue->f) o.fail("instance #" + std::to_string(i) + ": square does not commute");
  }
  int drops = 0;
  for (int i = 0; i < kRankSamples; ++i) {
    const int p = i % 2 ? 7 : 5;
    auto t = cyclotomic_tower(p);
    auto th = random_cyclotomic_theta(t, p, rng);
    auto ctx = make_residue_context(th, find_inert_prime(*t));
    const int n = uniform(rng, 1, th->m() + 2);
    const int r = uniform(rng, 0, std::min(n, th->m()));
    auto e = random_rank_vector(*th, n, r, rng, uniform(rng, 1, 3));
    const int before = weight(*th, e, WeightKind::moore_L);
    const int after = weight(*ctx.theta_bar, reduce(ctx, e), WeightKind::moore_L);
    if (after > before) o.fail(fmt("rank grew from %.0f to %.0f under reduction", before, after));
    if (after < before) ++drops;
  }
  if (o.pass)
    o.detail = fmt("%.0f commuting squares; %.0f error vectors, rank never grows (%.0f strict drops)", squares,
                   kRankSamples, drops);
  return o;
}

// ---------------------------------------------------------------- 9

Outcome blowup_and_speedup() {
  Outcome o;
  int runs = 0, asserted = 0;
  double min_ratio = 1e300, min_ratio_short = 1e300;
  for (int n : {8, 10, 12})
    for (int k = 2; k < n; k += 2)
      for (int s = 1; s <= kBlowupSeeds; ++s) {
        BenchInstance inst = make_bench_instance(n, k, static_cast<std::uint64_t>(s));
        GabidulinCode<Q> code(inst.theta, inst.support, k);
        WbTrace<Q> trace;
        WbOptions<Q> opt;
        opt.variant = WbVariant::division_free;
        opt.trace = &trace;
        reconstruct_wb(code, inst.y, opt);
        const auto sizes = round_sizes(trace);
        ++runs;
        for (std::size_t j = 1; j < sizes.size(); ++j)
          if (sizes[j] < sizes[j - 1]) o.fail(fmt("n=%.0f k=%.0f: size drops at round %.0f", n, k, j));
        const double ratio = sizes.back() / sizes.front();
        if (2 * k <= n) {
          ++asserted;
          min_ratio = std::min(min_ratio, ratio);
          if (ratio < kBlowupFactor) o.fail(fmt("n=%.0f k=%.0f: final/initial size %.2f < 4", n, k, ratio));
        } else {
          min_ratio_short = std::min(min_ratio_short, ratio);
        }
      }
  BenchConfig cfg;
  cfg.repeats = kBenchRepeats;
  cfg.timeout_s = 600.0;
  cfg.seed = 9;
  cfg.sizes = {{8, kBenchK}, {10, kBenchK}, {12, kBenchK}};
  auto rows = run_bench(cfg);
  std::vector<double> ratios;
  double direct12 = 0, residue12 = 0;
  for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
    const BenchRow& d = rows[i];
    const BenchRow& r = rows[i + 1];
    if (d.timeout || r.timeout || !d.all_recovered || !r.all_recovered) o.fail(fmt("bench cell n=%.0f incomplete", d.n));
    ratios.push_back(d.median_ms / r.median_ms);
    if (d.n == 12) {
      direct12 = d.median_ms;
      residue12 = r.median_ms;
    }
  }
  if (!(residue12 < direct12)) o.fail(fmt("n=12: residue %.2f ms is not below direct %.2f ms", residue12, direct12));
  for (std::size_t i = 1; i < ratios.size(); ++i)
    if (!(ratios[i] > ratios[i - 1])) o.fail("direct/residue time ratio does not grow with n");
  if (o.pass) {
    o.detail = fmt("%.0f DF runs monotone, min final/initial %.1f on k <= n/2 (%.1f with two rounds);", runs, min_ratio,
                   min_ratio_short);
    o.detail += fmt(" n=12: %.1f ms direct vs %.2f ms residue;", direct12, residue12);
    o.detail += fmt(" ratios %.0f < %.0f < %.0f", ratios[0], ratios[1], ratios[2]);
  }
  (void)asserted;
  return o;
}

// --------------------------------------------------------------- 10

template <class S>
bool dual_ok(const GabidulinCode<S>& code) {
  auto h = dual_support(code);
  if (k_rank(h) != code.n()) return false;
  auto G = generator_matrix(code), H = parity_check_matrix(code, h);
  const Element<S> zero = code.theta().zero();
  auto P = multiply(G, transpose(H, zero), zero);
  for (std::size_t i = 0; i < P.rows(); ++i)
    for (std::size_t j = 0; j < P.cols(); ++j)
      if (!P(i, j).is_zero()) return false;
  return true;
}

Outcome dual() {
  Outcome o;
  Rng rng(10);
  auto fields = finite_round_trip_fields();
  int finite = 0, cyclo = 0;
  for (int i = 0; i < kDualCodes; ++i) {
    if (i % 2 == 0) {
      const auto& th = fields[i / 2 % fields.size()];
      const int n = uniform(rng, 2, th->m()), k = uniform(rng, 1, n - 1);
      ++finite;
      if (!dual_ok(GabidulinCode<Fp>(th, random_independent(*th, n, rng), k)))
        o.fail("finite code #" + std::to_string(i));
    } else {
      const int p = std::vector<int>{5, 7, 11}[i / 2 % 3];
      auto th = random_cyclotomic_theta(cyclotomic_tower(p), p, rng);
      const int n = uniform(rng, 2, th->m()), k = uniform(rng, 1, n - 1);
      ++cyclo;
      if (!dual_ok(GabidulinCode<Q>(th, random_independent(*th, n, rng), k)))
        o.fail("cyclotomic code #" + std::to_string(i));
    }
  }
  if (o.pass) o.detail = fmt("%.0f finite and %.0f cyclotomic codes: G H^T = 0, k_rank(h) = n", finite, cyclo);
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char* name, const Outcome& o, double secs) {
    std::printf("%s  criterion %2d  %-28s %8.2f s  %s\n", o.pass ? "PASS" : "FAIL", id, name, secs, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  };
  double secs = 0;
  Outcome o;
  o = timed(kBudgetGoldenEncoding, golden_encoding, secs);
  report(1, "golden encoding", o, secs);
  o = timed(kBudgetKummer, kummer_dichotomy, secs);
  report(2, "framework dichotomy", o, secs);
  o = timed(kBudgetGoldenTrace, golden_trace, secs);
  report(3, "golden WB trace", o, secs);
  o = timed(kBudgetMrd, mrd_oracle, secs);
  report(4, "MRD oracle", o, secs);

  RoundTripTally rt;
  InvariantTally inv;
  const Outcome rt_run = timed(kBudgetRoundTrip, [&] {
    round_trip(rt, inv);
    return Outcome{};
  }, secs);
  const double rt_secs = secs;
  if (!rt_run.pass) {
    rt.outcome.fail(rt_run.detail);
    inv.outcome.fail(rt_run.detail);
  }
  if (rt.outcome.pass)
    rt.outcome.detail = fmt("%.0f decodes recovered f; brute force agreed on %.0f instances (%.0f above the guard)",
                            rt.decodes, rt.brute_checked, rt.brute_skipped);
  report(5, "decoder round trip", rt.outcome, rt_secs);

  o = timed(kBudgetErasures, erasures, secs);
  report(6, "erasure bound", o, secs);

  if (inv.outcome.pass)
    inv.outcome.detail = fmt("%.0f checked WB runs; max mul/n^2 = %.3f over %.0f standard/low-degree runs;",
                             inv.wb_runs, inv.worst_mul_ratio, inv.bounded_runs);
  if (inv.outcome.pass)
    inv.outcome.detail += fmt(" low-degree saving >= k * type-1 rounds on %.0f words (min margin %.0f),"
                              " >= k(n-k) on %.0f full runs",
                              inv.saving_checks, inv.min_saving_margin, inv.full_rounds);
  report(7, "LR and degree invariants", inv.outcome, rt_secs);

  o = timed(kBudgetResidue, residue_square, secs);
  report(8, "residue commuting square", o, secs);
  o = timed(kBudgetBlowup, blowup_and_speedup, secs);
  report(9, "blow-up and speedup", o, secs);
  o = timed(kBudgetDual, dual, secs);
  report(10, "dual code", o, secs);

  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
