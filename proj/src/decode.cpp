#include "gabidulin/decode.hpp"

#include <stdexcept>
#include <utility>

#include "gabidulin/rank_metric.hpp"

namespace gabidulin {

const char* to_string(DecodeMethod method) {
  switch (method) {
    case DecodeMethod::gauss: return "gauss";
    case DecodeMethod::wb: return "wb";
    case DecodeMethod::wb_df: return "wb-df";
    case DecodeMethod::wb_lowdeg: return "wb-lowdeg";
  }
  return "?";
}

DecodeMethod parse_method(const std::string& name) {
  for (DecodeMethod m : {DecodeMethod::gauss, DecodeMethod::wb, DecodeMethod::wb_df, DecodeMethod::wb_lowdeg})
    if (name == to_string(m)) return m;
  throw std::invalid_argument("unknown decoding method: " + name);
}

WbVariant variant_of(DecodeMethod method) {
  switch (method) {
    case DecodeMethod::wb_df: return WbVariant::division_free;
    case DecodeMethod::wb_lowdeg: return WbVariant::low_degree;
    default: return WbVariant::standard;
  }
}

namespace {

int n_bound(int n, int k) {
  const int t = (n - k) / 2;
  return (n - k) % 2 == 0 ? k + t - 1 : k + t;
}

template <class S>
struct WbRun {
  // N0/N1 hold P0/P1 for the low-degree variant.
  SkewPoly<S> N0, W0, N1, W1;
  SkewPoly<S> ann, interp;
  bool low = false;
  int rounds = 0;
  bool early_exit = false;
};

template <class S>
SkewPoly<S> reconstitute(const WbRun<S>& st, const SkewPoly<S>& p, const SkewPoly<S>& w) {
  if (!st.low) return p;
  return add(mul(p, st.ann), mul(w, st.interp));
}

template <class S>
void check_degrees(const WbRun<S>& st, int k, int r, const SkewPoly<S>& N0, const SkewPoly<S>& N1) {
  auto fail = [&](const char* what) {
    throw ContractViolation(std::string("degree invariant violated after round ") + std::to_string(r) + ": " + what);
  };
  if (N0.degree() > k + r / 2) fail("deg N0");
  if (st.W0.degree() > (r + 1) / 2) fail("deg W0");
  if (N1.degree() > k - 1 + (r + 1) / 2) fail("deg N1");
  if (st.W1.degree() > r / 2) fail("deg W1");
  const int u = r / 2;
  if (r % 2 == 1) {
    if (N1.degree() != k + u) fail("exact deg N1");
    if (st.W0.degree() != u + 1) fail("exact deg W0");
  } else if (r > 0) {
    if (N0.degree() != k + u) fail("exact deg N0");
    if (st.W1.degree() != u) fail("exact deg W1");
  }
}

template <class S>
void record(WbTrace<S>* trace, const WbRun<S>& st, int position, int type, const std::vector<Element<S>>& u0,
            const std::vector<Element<S>>& u1) {
  if (!trace) return;
  trace->states.push_back({position, type, reconstitute(st, st.N0, st.W0), st.W0, reconstitute(st, st.N1, st.W1),
                           st.W1, u0, u1});
}

template <class S>
WbRun<S> run_wb(const GabidulinCode<S>& code, std::vector<Element<S>> g, std::vector<Element<S>> y,
                const WbOptions<S>& opt) {
  const Automorphism<S>& th = code.theta();
  const Automorphism<S>* tp = &th;
  const int n = code.n(), k = code.k();
  if (static_cast<int>(y.size()) != n) throw std::invalid_argument("received word has the wrong length");
  for (auto& v : y) v = code.tower().embed(v, th.top());
  const std::vector<Element<S>> y_in = y;
  OpCounter* ops = opt.ops;
  const bool df = opt.variant == WbVariant::division_free;
  WbRun<S> st;
  st.low = opt.variant == WbVariant::low_degree;

  std::vector<Element<S>> gk(g.begin(), g.begin() + k), yk(y.begin(), y.begin() + k);
  Element<S> lambda = th.one();
  if (df) {
    DfAnnInt<S> ai = df_annihilator_interpolator(th, gk, yk, ops);
    st.ann = ai.ann;
    st.interp = ai.interp;
    lambda = ai.lambda;
  } else {
    auto ai = annihilator_interpolator(th, gk, yk, ops);
    st.ann = ai.first;
    st.interp = ai.second;
  }
  if (st.low) {
    st.N0 = SkewPoly<S>::one(tp);
    st.N1 = SkewPoly<S>(tp);
  } else {
    st.N0 = st.ann;
    st.N1 = st.interp;
  }
  st.W0 = SkewPoly<S>(tp);
  st.W1 = SkewPoly<S>::constant(tp, lambda);

  std::vector<Element<S>> u0(n, th.zero()), u1(n, th.zero());
  for (int j = k; j < n; ++j) {
    u0[j] = eval(st.ann, g[j], ops);
    u1[j] = op_sub(eval(st.interp, g[j], ops), op_mul(lambda, y[j], ops), ops);
  }
  record(opt.trace, st, -1, 0, u0, u1);
  if (opt.check_invariants) check_degrees(st, k, 0, reconstitute(st, st.N0, st.W0), reconstitute(st, st.N1, st.W1));

  for (int i = k; i < n; ++i) {
    if (u1[i].is_zero() && !u0[i].is_zero()) {
      int j = i + 1;
      while (j < n && !u0[j].is_zero() && u1[j].is_zero()) ++j;
      if (j == n) {
        st.early_exit = true;
        break;
      }
      std::swap(g[i], g[j]);
      std::swap(y[i], y[j]);
      std::swap(u0[i], u0[j]);
      std::swap(u1[i], u1[j]);
      if (opt.stats) ++opt.stats->swaps;
    }
    int type;
    if (!u1[i].is_zero()) {
      type = 1;
      const Element<S> a1 = u1[i], a0 = u0[i];
      const Element<S> ta1 = op_theta(th, a1, 1, ops);
      SkewPoly<S> n1, w1, n0, w0;
      if (df) {
        n1 = mul_linear(a1, -ta1, st.N1, ops);
        w1 = mul_linear(a1, -ta1, st.W1, ops);
        n0 = sub(scale(a1, st.N0, ops), scale(a0, st.N1, ops), ops);
        w0 = sub(scale(a1, st.W0, ops), scale(a0, st.W1, ops), ops);
        for (int j = i + 1; j < n; ++j) {
          Element<S> v1 = op_sub(op_mul(a1, op_theta(th, u1[j], 1, ops), ops), op_mul(ta1, u1[j], ops), ops);
          u0[j] = op_sub(op_mul(a1, u0[j], ops), op_mul(a0, u1[j], ops), ops);
          u1[j] = std::move(v1);
        }
      } else {
        const Element<S> c = op_div(ta1, a1, ops);
        const Element<S> rho = op_div(a0, a1, ops);
        const Element<S> one = th.one();
        n1 = mul_linear(one, -c, st.N1, ops);
        w1 = mul_linear(one, -c, st.W1, ops);
        n0 = sub(st.N0, scale(rho, st.N1, ops), ops);
        w0 = sub(st.W0, scale(rho, st.W1, ops), ops);
        for (int j = i + 1; j < n; ++j) {
          Element<S> v1 = op_sub(op_theta(th, u1[j], 1, ops), op_mul(c, u1[j], ops), ops);
          u0[j] = op_sub(u0[j], op_mul(rho, u1[j], ops), ops);
          u1[j] = std::move(v1);
        }
      }
      st.N1 = std::move(n1);
      st.W1 = std::move(w1);
      st.N0 = std::move(n0);
      st.W0 = std::move(w0);
      if (opt.stats) ++opt.stats->type1;
    } else {
      type = 2;
      const Element<S> zero = th.zero(), one = th.one();
      st.N1 = mul_linear(one, zero, st.N1, ops);
      st.W1 = mul_linear(one, zero, st.W1, ops);
      for (int j = i + 1; j < n; ++j) u1[j] = op_theta(th, u1[j], 1, ops);
      if (opt.stats) ++opt.stats->type2;
    }
    u0[i] = th.zero();
    u1[i] = th.zero();
    std::swap(st.N0, st.N1);
    std::swap(st.W0, st.W1);
    std::swap(u0, u1);
    ++st.rounds;
    record(opt.trace, st, i, type, u0, u1);

    if (opt.check_invariants) {
      SkewPoly<S> N0 = reconstitute(st, st.N0, st.W0), N1 = reconstitute(st, st.N1, st.W1);
      check_degrees(st, k, st.rounds, N0, N1);
      for (int j = 0; j < n; ++j) {
        if (eval(N0, g[j]) - eval(st.W0, y[j]) != u0[j] || eval(N1, g[j]) - eval(st.W1, y[j]) != u1[j])
          throw ContractViolation("maintained discrepancy differs from recomputation at position " +
                                  std::to_string(j));
      }
    }
  }
  if (opt.stats) opt.stats->early_exit = st.early_exit;
  if (opt.trace) {
    opt.trace->support = g;
    opt.trace->early_exit = st.early_exit;
  }

  if (opt.normalize && !st.W1.is_zero() && !st.W1.lead().is_one()) {
    const Element<S> s = st.W1.lead().inv();
    st.N1 = scale(s, st.N1);
    st.W1 = scale(s, st.W1);
  }

  const bool full_check = opt.check_invariants || st.early_exit;
  LrPair<S> pair{reconstitute(st, st.N1, st.W1), st.W1};
  const int t = code.t_max();
  if (pair.W.is_zero() || pair.W.degree() > t || pair.N.degree() > n_bound(n, k))
    throw ContractViolation("reconstruction returned a pair outside the degree bounds");
  if (full_check && !satisfies_lr(code, y_in, pair))
    throw ContractViolation("reconstruction returned a pair that does not interpolate the received word");
  return st;
}

template <class S>
std::optional<DecodeResult<S>> finish(const GabidulinCode<S>& code, const std::vector<Element<S>>& y,
                                      SkewPoly<S> f, bool check) {
  if (f.degree() >= code.k()) return std::nullopt;
  DecodeResult<S> out{std::move(f), {}, {}};
  out.codeword = encode(code, out.f);
  for (int i = 0; i < code.n(); ++i) out.error.push_back(code.tower().embed(y[i], code.theta().top()) - out.codeword[i]);
  if (check && weight(code.theta(), out.error, WeightKind::moore_L) > code.t_max())
    throw ContractViolation("decoded error exceeds the decoding radius");
  return out;
}

}  // namespace

template <class S>
bool satisfies_lr(const GabidulinCode<S>& code, const std::vector<Element<S>>& y, const LrPair<S>& pair) {
  const int n = code.n(), k = code.k();
  if (pair.W.is_zero() || pair.W.degree() > code.t_max() || pair.N.degree() > n_bound(n, k)) return false;
  for (int i = 0; i < n; ++i)
    if (eval(pair.N, code.support()[i]) != eval(pair.W, code.tower().embed(y[i], code.theta().top()))) return false;
  return true;
}

template <class S>
LrPair<S> reconstruct_wb(const GabidulinCode<S>& code, const std::vector<Element<S>>& y,
                         const WbOptions<S>& options) {
  WbRun<S> st = run_wb(code, code.support(), y, options);
  return {reconstitute(st, st.N1, st.W1), st.W1};
}

template <class S>
std::optional<DecodeResult<S>> decode_wb(const GabidulinCode<S>& code, const std::vector<Element<S>>& y,
                                         const WbOptions<S>& options) {
  WbRun<S> st = run_wb(code, code.support(), y, options);
  OpCounter* ops = options.ops;
  SkewPoly<S> f;
  if (st.low) {
    auto [q, r] = left_divide(mul(st.N1, st.ann, ops), st.W1, ops);
    if (!r.is_zero()) return std::nullopt;
    f = add(q, st.interp, ops);
  } else {
    auto [q, r] = left_divide(st.N1, st.W1, ops);
    if (!r.is_zero()) return std::nullopt;
    f = std::move(q);
  }
  return finish(code, y, std::move(f), options.check_invariants);
}

template <class S>
std::optional<DecodeResult<S>> decode_gauss(const GabidulinCode<S>& code, const std::vector<Element<S>>& y,
                                            bool check_invariants) {
  const Automorphism<S>& th = code.theta();
  const int n = code.n(), k = code.k(), t = code.t_max();
  if (static_cast<int>(y.size()) != n) throw std::invalid_argument("received word has the wrong length");
  const int s = (n - k) % 2 == 0 ? t : t + 1;
  const int cols_n = k + s, cols = cols_n + t + 1;
  Matrix<Element<S>> sys(n, cols, th.zero());
  for (int i = 0; i < n; ++i) {
    Element<S> gi = code.support()[i], yi = code.tower().embed(y[i], th.top());
    for (int a = 0; a < cols_n; ++a, gi = th.apply(gi)) sys(i, a) = gi;
    for (int b = 0; b <= t; ++b, yi = th.apply(yi)) sys(i, cols_n + b) = yi;
  }
  auto ker = kernel(sys, th.zero(), th.one());
  if (ker.empty()) throw ContractViolation("reconstruction system has a trivial kernel");
  const auto& v = ker[0];
  std::vector<Element<S>> nc(v.begin(), v.begin() + cols_n), wc;
  for (int b = 0; b <= t; ++b) wc.push_back(-v[cols_n + b]);
  LrPair<S> pair{SkewPoly<S>(&th, nc), SkewPoly<S>(&th, wc)};
  if (pair.W.is_zero()) throw ContractViolation("kernel vector has W = 0");
  if (check_invariants && !satisfies_lr(code, y, pair))
    throw ContractViolation("kernel vector does not solve the reconstruction problem");
  auto [q, r] = left_divide(pair.N, pair.W);
  if (!r.is_zero()) return std::nullopt;
  return finish(code, y, std::move(q), check_invariants);
}

template <class S>
std::optional<DecodeResult<S>> decode(const GabidulinCode<S>& code, const std::vector<Element<S>>& y,
                                      DecodeMethod method, WbOptions<S> options) {
  if (method == DecodeMethod::gauss) return decode_gauss(code, y, options.check_invariants);
  options.variant = variant_of(method);
  return decode_wb(code, y, options);
}

#define GABIDULIN_INSTANTIATE(S)                                                                                  \
  template bool satisfies_lr(const GabidulinCode<S>&, const std::vector<Element<S>>&, const LrPair<S>&);          \
  template LrPair<S> reconstruct_wb(const GabidulinCode<S>&, const std::vector<Element<S>>&, const WbOptions<S>&); \
  template std::optional<DecodeResult<S>> decode_wb(const GabidulinCode<S>&, const std::vector<Element<S>>&,      \
                                                    const WbOptions<S>&);                                         \
  template std::optional<DecodeResult<S>> decode_gauss(const GabidulinCode<S>&, const std::vector<Element<S>>&,   \
                                                       bool);                                                     \
  template std::optional<DecodeResult<S>> decode(const GabidulinCode<S>&, const std::vector<Element<S>>&,         \
                                                 DecodeMethod, WbOptions<S>);

GABIDULIN_INSTANTIATE(Rational)
GABIDULIN_INSTANTIATE(Fp)

}  // namespace gabidulin
