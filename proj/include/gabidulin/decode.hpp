#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gabidulin/code.hpp"

namespace gabidulin {

enum class DecodeMethod { gauss, wb, wb_df, wb_lowdeg };
enum class WbVariant { standard, division_free, low_degree };

const char* to_string(DecodeMethod method);
DecodeMethod parse_method(const std::string& name);
WbVariant variant_of(DecodeMethod method);

template <class S>
struct DecodeResult {
  SkewPoly<S> f;
  std::vector<Element<S>> codeword;
  std::vector<Element<S>> error;
};

/// Snapshot of the reconstruction state. For the low-degree variant N0 and N1
/// hold the reconstituted P*Ann + W*Int.
template <class S>
struct WbSnapshot {
  int position = -1;  // 0-based position consumed by the round; -1 for the initial state
  int type = 0;       // 1 or 2; 0 for the initial state
  SkewPoly<S> N0, W0, N1, W1;
  std::vector<Element<S>> u0, u1;
};

template <class S>
struct WbTrace {
  std::vector<WbSnapshot<S>> states;  // initial state, then one per round
  std::vector<Element<S>> support;    // support after secondary-loop swaps
  bool early_exit = false;
};

struct WbStats {
  int type1 = 0;
  int type2 = 0;
  int swaps = 0;
  bool early_exit = false;
};

template <class S>
struct WbOptions {
  WbVariant variant = WbVariant::standard;
  /// Scale the returned pair so that W is monic.
  bool normalize = false;
  /// Assert the degree bounds and exact degrees after every round, recompute
  /// the discrepancy vectors from scratch, and check the returned pair.
  bool check_invariants = false;
  OpCounter* ops = nullptr;
  WbTrace<S>* trace = nullptr;
  WbStats* stats = nullptr;
};

template <class S>
struct LrPair {
  SkewPoly<S> N;
  SkewPoly<S> W;
};

/// Linear reconstruction: W != 0, deg W <= t, deg N <= k+t-1 (n-k even) or
/// k+t (n-k odd), and W{y_i} = N{g_i} for every i.
template <class S>
bool satisfies_lr(const GabidulinCode<S>& code, const std::vector<Element<S>>& y, const LrPair<S>& pair);

template <class S>
LrPair<S> reconstruct_wb(const GabidulinCode<S>& code, const std::vector<Element<S>>& y,
                         const WbOptions<S>& options = {});

/// Error decoding up to t_max = floor((n-k)/2). Returns nullopt on failure.
template <class S>
std::optional<DecodeResult<S>> decode_wb(const GabidulinCode<S>& code, const std::vector<Element<S>>& y,
                                         const WbOptions<S>& options = {});

template <class S>
std::optional<DecodeResult<S>> decode_gauss(const GabidulinCode<S>& code, const std::vector<Element<S>>& y,
                                            bool check_invariants = false);

template <class S>
std::optional<DecodeResult<S>> decode(const GabidulinCode<S>& code, const std::vector<Element<S>>& y,
                                      DecodeMethod method, WbOptions<S> options = {});

}  // namespace gabidulin
