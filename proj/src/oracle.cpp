#include "gabidulin/oracle.hpp"

#include <algorithm>
#include <functional>

#include "gabidulin/errors.hpp"

namespace gabidulin {

namespace {

using Flat = std::vector<std::uint32_t>;

/// Rank over F_p of n vectors of length D.
int rank_mod_p(std::vector<Flat> v, std::uint32_t p) {
  int r = 0;
  const std::size_t D = v.empty() ? 0 : v[0].size();
  for (std::size_t c = 0; c < D && r < static_cast<int>(v.size()); ++c) {
    std::size_t piv = r;
    while (piv < v.size() && v[piv][c] == 0) ++piv;
    if (piv == v.size()) continue;
    std::swap(v[r], v[piv]);
    const std::uint64_t inv = Fp(v[r][c], p).inverse().value();
    for (std::size_t i = r + 1; i < v.size(); ++i) {
      if (v[i][c] == 0) continue;
      const std::uint64_t f = v[i][c] * inv % p;
      for (std::size_t j = c; j < D; ++j) v[i][j] = static_cast<std::uint32_t>((v[i][j] + (p - f) * v[r][j]) % p);
    }
    ++r;
  }
  return r;
}

Flat flat_of(const Element<Fp>& x) {
  Flat out;
  for (const Fp& c : x.flat()) out.push_back(c.value());
  return out;
}

/// Walks every message, keeping the codeword as flat F_p vectors and
/// updating it with one generator addition per odometer step.
void enumerate(const GabidulinCode<Fp>& code, const std::function<void(const std::vector<std::uint32_t>&,
                                                                       const std::vector<Flat>&)>& visit) {
  const std::uint64_t count = message_count(code);
  if (count == 0 || count > kEnumerationGuard) throw GuardExceeded("exhaustive enumeration exceeds 2^20 messages");
  const Automorphism<Fp>& th = code.theta();
  const Tower<Fp>& tw = code.tower();
  const std::uint32_t p = static_cast<std::uint32_t>(tw.base().characteristic());
  const int n = code.n(), k = code.k(), top = th.top();
  const std::size_t D = tw.dim(top);
  std::vector<std::vector<Flat>> gen;  // digit (i, d) -> e_d theta^i(g)
  for (int i = 0; i < k; ++i)
    for (std::size_t d = 0; d < D; ++d) {
      std::vector<Fp> unit(D, tw.base().zero());
      unit[d] = tw.base().one();
      const Element<Fp> e = tw.from_flat(top, unit);
      std::vector<Flat> row;
      for (const auto& g : code.support()) row.push_back(flat_of(e * th.apply(g, i)));
      gen.push_back(std::move(row));
    }
  std::vector<std::uint32_t> digits(gen.size(), 0);
  std::vector<Flat> c(n, Flat(D, 0));
  for (std::uint64_t step = 0; step < count; ++step) {
    visit(digits, c);
    for (std::size_t d = 0; d < digits.size(); ++d) {
      digits[d] = digits[d] + 1 == p ? 0 : digits[d] + 1;
      for (int j = 0; j < n; ++j)
        for (std::size_t l = 0; l < D; ++l) {
          const std::uint32_t s = c[j][l] + gen[d][j][l];
          c[j][l] = s >= p ? s - p : s;
        }
      if (digits[d] != 0) break;
    }
  }
}

SkewPoly<Fp> message_of(const GabidulinCode<Fp>& code, const std::vector<std::uint32_t>& digits) {
  const Tower<Fp>& tw = code.tower();
  const int top = code.theta().top();
  const std::size_t D = tw.dim(top);
  const std::uint32_t p = static_cast<std::uint32_t>(tw.base().characteristic());
  std::vector<Element<Fp>> coeffs;
  for (int i = 0; i < code.k(); ++i) {
    std::vector<Fp> flat;
    for (std::size_t d = 0; d < D; ++d) flat.emplace_back(digits[i * D + d], p);
    coeffs.push_back(tw.from_flat(top, flat));
  }
  return SkewPoly<Fp>(&code.theta(), coeffs);
}

/// K-rank of the entries; a single-layer tower has K = F_p.
int weight_of(const GabidulinCode<Fp>& code, const std::vector<Flat>& e, std::uint32_t p) {
  if (code.theta().top() == 1) return rank_mod_p(e, p);
  const Tower<Fp>& tw = code.tower();
  std::vector<Element<Fp>> v;
  for (const Flat& x : e) {
    std::vector<Fp> flat;
    for (std::uint32_t c : x) flat.emplace_back(c, p);
    v.push_back(tw.from_flat(code.theta().top(), flat));
  }
  return k_rank(v);
}

}  // namespace

std::uint64_t message_count(const GabidulinCode<Fp>& code) {
  const std::uint64_t p = code.tower().base().characteristic();
  const std::uint64_t digits = code.tower().dim(code.theta().top()) * code.k();
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < digits; ++i) {
    if (total > (~std::uint64_t{0}) / p) return 0;
    total *= p;
  }
  return total;
}

std::vector<std::pair<SkewPoly<Fp>, std::vector<Element<Fp>>>> brute_force_nlr(const GabidulinCode<Fp>& code,
                                                                              const std::vector<Element<Fp>>& y,
                                                                              int t) {
  const std::uint32_t p = static_cast<std::uint32_t>(code.tower().base().characteristic());
  const int top = code.theta().top();
  std::vector<Flat> yf;
  for (const auto& v : y) yf.push_back(flat_of(code.tower().embed(v, top)));
  std::vector<std::pair<SkewPoly<Fp>, std::vector<Element<Fp>>>> out;
  std::vector<Flat> e(yf.size());
  enumerate(code, [&](const std::vector<std::uint32_t>& digits, const std::vector<Flat>& c) {
    for (std::size_t j = 0; j < yf.size(); ++j) {
      e[j].resize(yf[j].size());
      for (std::size_t l = 0; l < yf[j].size(); ++l) e[j][l] = (yf[j][l] + p - c[j][l]) % p;
    }
    if (weight_of(code, e, p) > t) return;
    SkewPoly<Fp> f = message_of(code, digits);
    std::vector<Element<Fp>> err;
    for (std::size_t j = 0; j < yf.size(); ++j) {
      std::vector<Fp> flat;
      for (std::uint32_t x : e[j]) flat.emplace_back(x, p);
      err.push_back(code.tower().from_flat(top, flat));
    }
    out.emplace_back(std::move(f), std::move(err));
  });
  return out;
}

int min_distance_exhaustive(const GabidulinCode<Fp>& code) {
  const std::uint32_t p = static_cast<std::uint32_t>(code.tower().base().characteristic());
  int best = code.n() + 1;
  bool first = true;
  enumerate(code, [&](const std::vector<std::uint32_t>&, const std::vector<Flat>& c) {
    if (first) {
      first = false;
      return;
    }
    best = std::min(best, weight_of(code, c, p));
  });
  return best;
}

}  // namespace gabidulin
