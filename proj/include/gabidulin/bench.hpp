#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gabidulin/residue.hpp"

namespace gabidulin {

/// Cyclotomic field used for length n: the index p of Phi_p and its inert prime.
struct BenchField {
  int n;
  int p;
  std::uint32_t prime;
};

/// Field assignment for the benchmark lengths n = 4, 6, ..., 16.
const std::vector<BenchField>& reference_fields();
const BenchField& field_for_length(int n);

/// Smallest primitive root modulo a prime p.
int smallest_primitive_root(int p);

/// The (n, k) benchmark grid: every field length n with k = 2, 4, ..., n.
std::vector<std::pair<int, int>> reference_sizes();

/// Integral instance: support (1, a, ..., a^{n-1}), message coefficients with
/// 0/1 coordinates, error = (e_1..e_t) times a t x n matrix with entries in
/// {-1, 0, 1}, each e_i with 0/1 coordinates, and t = floor((n-k)/2).
struct BenchInstance {
  Automorphism<Rational>::Ptr theta;
  std::vector<Element<Rational>> support;
  int k = 0;
  SkewPoly<Rational> f;
  std::vector<Element<Rational>> y;
};

BenchInstance make_bench_instance(int n, int k, std::uint64_t seed);

struct BenchConfig {
  std::vector<std::pair<int, int>> sizes;
  int repeats = 5;
  bool direct = true;
  bool residue = true;
  double timeout_s = 60.0;
  std::uint64_t seed = 1;
  DecodeMethod direct_method = DecodeMethod::wb_df;
  DecodeMethod residue_method = DecodeMethod::wb;
};

struct BenchRow {
  int n = 0;
  int k = 0;
  std::string mode;
  double median_ms = 0.0;
  double max_size_bits = -1.0;  // direct mode only
  int completed = 0;
  bool timeout = false;
  bool all_recovered = true;
};

/// Largest coefficient size over the four polynomials of each recorded state.
std::vector<double> round_sizes(const WbTrace<Rational>& trace);

std::vector<BenchRow> run_bench(const BenchConfig& config);

std::string bench_csv(const std::vector<BenchRow>& rows);
/// One n x k grid of median times per mode.
std::string bench_table(const std::vector<BenchRow>& rows);

}  // namespace gabidulin
