#include "gabidulin/erasure.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "gabidulin/linalg.hpp"
#include "gabidulin/random.hpp"

namespace gabidulin {

LineCover term_rank_cover(const std::vector<std::vector<bool>>& erased) {
  const int m = static_cast<int>(erased.size());
  const int n = m == 0 ? 0 : static_cast<int>(erased[0].size());
  std::vector<int> match_col(n, -1), match_row(m, -1);
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int r) {
    for (int c = 0; c < n; ++c) {
      if (!erased[r][c] || seen[c]) continue;
      seen[c] = 1;
      if (match_col[c] < 0 || augment(match_col[c])) {
        match_col[c] = r;
        match_row[r] = c;
        return true;
      }
    }
    return false;
  };
  for (int r = 0; r < m; ++r) {
    if (static_cast<int>(erased[r].size()) != n) throw std::invalid_argument("ragged erasure mask");
    seen.assign(n, 0);
    augment(r);
  }
  // Alternating reachability from unmatched rows.
  std::vector<char> row_z(m, 0), col_z(n, 0);
  std::vector<int> stack;
  for (int r = 0; r < m; ++r)
    if (match_row[r] < 0) {
      row_z[r] = 1;
      stack.push_back(r);
    }
  while (!stack.empty()) {
    int r = stack.back();
    stack.pop_back();
    for (int c = 0; c < n; ++c) {
      if (!erased[r][c] || col_z[c]) continue;
      col_z[c] = 1;
      int r2 = match_col[c];
      if (r2 >= 0 && !row_z[r2]) {
        row_z[r2] = 1;
        stack.push_back(r2);
      }
    }
  }
  LineCover cover;
  for (int r = 0; r < m; ++r)
    if (!row_z[r]) cover.rows.push_back(r);
  for (int c = 0; c < n; ++c)
    if (col_z[c]) cover.cols.push_back(c);
  return cover;
}

template <class S>
std::vector<Element<S>> word_from_matrix(const Matrix<Element<S>>& Y, const std::vector<Element<S>>& basis) {
  if (Y.rows() != basis.size()) throw std::invalid_argument("matrix rows do not match the basis size");
  const Tower<S>& t = *basis.at(0).tower();
  const int top = basis[0].layer();
  std::vector<Element<S>> y;
  for (std::size_t j = 0; j < Y.cols(); ++j) {
    Element<S> v = t.zero(top);
    for (std::size_t i = 0; i < Y.rows(); ++i)
      if (!Y(i, j).is_zero()) v += Y(i, j) * basis[i];
    y.push_back(v);
  }
  return y;
}

template <class S>
Matrix<Element<S>> matrix_from_word(const std::vector<Element<S>>& y, const std::vector<Element<S>>& basis) {
  const Tower<S>& t = *basis.at(0).tower();
  Matrix<Element<S>> Y(basis.size(), y.size(), t.zero(basis[0].layer() - 1));
  for (std::size_t j = 0; j < y.size(); ++j) {
    auto c = basis_coordinates(y[j], basis);
    for (std::size_t i = 0; i < basis.size(); ++i) Y(i, j) = c[i];
  }
  return Y;
}

namespace {

template <class S>
std::optional<SkewPoly<S>> finish_erasures(const GabidulinCode<S>& code, std::vector<Element<S>> g,
                                           std::vector<Element<S>> y, const std::vector<Element<S>>& row_space,
                                           DecodeMethod method, const WbOptions<S>& options,
                                           ErasureTrace<S>* trace) {
  const Automorphism<S>& th = code.theta();
  SkewPoly<S> V = row_space.empty() ? SkewPoly<S>::one(&th) : annihilator(th, row_space);
  const int k_inner = code.k() + V.degree();
  const int n_inner = static_cast<int>(g.size());
  if (k_inner > n_inner) throw std::invalid_argument("too many erasures for this code");
  std::vector<Element<S>> z;
  for (const auto& v : y) z.push_back(eval(V, v));
  if (trace) {
    trace->support = g;
    trace->word = y;
    trace->row_space = row_space;
    trace->V = V;
    trace->inner = z;
  }
  GabidulinCode<S> inner(code.theta_ptr(), g, k_inner);
  auto res = decode(inner, z, method, options);
  if (!res) return std::nullopt;
  if (trace) trace->F = res->f;
  auto [f, r] = left_divide(res->f, V);
  if (!r.is_zero() || f.degree() >= code.k()) return std::nullopt;
  return f;
}

}  // namespace

template <class S>
std::optional<SkewPoly<S>> decode_line_erasures(const GabidulinCode<S>& code, const std::vector<Element<S>>& basis,
                                                const LinePattern<S>& pattern, DecodeMethod method,
                                                const WbOptions<S>& options, ErasureTrace<S>* trace) {
  const Automorphism<S>& th = code.theta();
  const int m = th.m(), n = code.n();
  check_basis(basis);
  if (static_cast<int>(basis.size()) != m || static_cast<int>(pattern.masked.size()) != m)
    throw std::invalid_argument("received matrix must have m rows");
  std::vector<char> in_rows(m, 0), in_cols(n, 0);
  for (int r : pattern.rows) in_rows.at(r) = 1;
  for (int c : pattern.cols) in_cols.at(c) = 1;
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(pattern.masked[i].size()) != n) throw std::invalid_argument("received matrix must have n columns");
    for (int j = 0; j < n; ++j)
      if (!pattern.masked[i][j] && !in_rows[i] && !in_cols[j])
        throw std::invalid_argument("erased entry outside the row/column cover");
  }
  std::vector<Element<S>> g, y, row_space;
  for (int j = 0; j < n; ++j) {
    if (in_cols[j]) continue;
    Element<S> v = th.zero();
    for (int i = 0; i < m; ++i)
      if (pattern.masked[i][j]) v += *pattern.masked[i][j] * basis[i];
    g.push_back(code.support()[j]);
    y.push_back(v);
  }
  for (int r : pattern.rows) row_space.push_back(basis[r]);
  return finish_erasures(code, g, y, row_space, method, options, trace);
}

template <class S>
std::optional<SkewPoly<S>> decode_network_erasures(const GabidulinCode<S>& code,
                                                   const std::vector<Element<S>>& basis,
                                                   const std::vector<Element<S>>& y_in,
                                                   const NetworkPattern<S>& pattern, DecodeMethod method,
                                                   const WbOptions<S>& options, ErasureTrace<S>* trace) {
  const Automorphism<S>& th = code.theta();
  const int m = th.m(), n = code.n();
  check_basis(basis);
  if (static_cast<int>(y_in.size()) != n) throw std::invalid_argument("received word has the wrong length");
  if (pattern.A_r_hat.cols() > 0 && static_cast<int>(pattern.A_r_hat.rows()) != m)
    throw std::invalid_argument("A_r_hat must have m rows");
  if (pattern.B_c_hat.rows() > 0 && static_cast<int>(pattern.B_c_hat.cols()) != n)
    throw std::invalid_argument("B_c_hat must have n columns");

  std::vector<Element<S>> g = code.support(), y;
  for (const auto& v : y_in) y.push_back(code.tower().embed(v, th.top()));
  Matrix<Element<S>> B = pattern.B_c_hat;
  std::vector<char> alive(n, 1);
  for (std::size_t row = 0; row < B.rows(); ++row) {
    int p = -1;
    for (int c = n - 1; c >= 0; --c)
      if (alive[c] && !B(row, c).is_zero()) {
        p = c;
        break;
      }
    if (p < 0) continue;
    const Element<S> inv = B(row, p).inv();
    for (int c = 0; c < n; ++c) {
      if (c == p || !alive[c] || B(row, c).is_zero()) continue;
      const Element<S> factor = B(row, c) * inv;
      for (std::size_t r2 = 0; r2 < B.rows(); ++r2)
        if (!B(r2, p).is_zero()) B(r2, c) -= factor * B(r2, p);
      g[c] -= factor * g[p];
      y[c] -= factor * y[p];
    }
    alive[p] = 0;
  }
  std::vector<Element<S>> gk, yk, row_space;
  for (int c = 0; c < n; ++c)
    if (alive[c]) {
      gk.push_back(g[c]);
      yk.push_back(y[c]);
    }
  for (std::size_t j = 0; j < pattern.A_r_hat.cols(); ++j) {
    Element<S> a = th.zero();
    for (int i = 0; i < m; ++i)
      if (!pattern.A_r_hat(i, j).is_zero()) a += pattern.A_r_hat(i, j) * basis[i];
    row_space.push_back(a);
  }
  return finish_erasures(code, gk, yk, row_space, method, options, trace);
}

template <class S>
LinePattern<S> random_line_erasures(const std::vector<Element<S>>& y, const std::vector<Element<S>>& basis, int s_r,
                                    int s_c, std::mt19937_64& rng) {
  const Matrix<Element<S>> Y = matrix_from_word(y, basis);
  const int m = static_cast<int>(Y.rows()), n = static_cast<int>(Y.cols());
  if (s_r < 0 || s_c < 0 || s_r > m || s_c > n) throw std::invalid_argument("erasure counts out of range");
  std::vector<int> rows(m), cols(n);
  for (int i = 0; i < m; ++i) rows[i] = i;
  for (int j = 0; j < n; ++j) cols[j] = j;
  std::shuffle(rows.begin(), rows.end(), rng);
  std::shuffle(cols.begin(), cols.end(), rng);
  LinePattern<S> p;
  p.rows.assign(rows.begin(), rows.begin() + s_r);
  p.cols.assign(cols.begin(), cols.begin() + s_c);
  std::sort(p.rows.begin(), p.rows.end());
  std::sort(p.cols.begin(), p.cols.end());
  p.masked.assign(m, {});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      const bool on_line = std::binary_search(p.rows.begin(), p.rows.end(), i) ||
                           std::binary_search(p.cols.begin(), p.cols.end(), j);
      const bool erased = on_line && rng() % 2 == 0;
      p.masked[i].push_back(erased ? std::nullopt : std::optional<Element<S>>(Y(i, j)));
    }
  return p;
}

template <class S>
NetworkCorruption<S> random_network_erasures(const Automorphism<S>& theta, const std::vector<Element<S>>& y,
                                             const std::vector<Element<S>>& basis, int s_r, int s_c,
                                             std::mt19937_64& rng) {
  const Tower<S>& t = theta.tower();
  const int m = theta.m(), n = static_cast<int>(y.size()), kl = theta.k_layer();
  if (s_r < 0 || s_c < 0 || s_r > m || s_c > n) throw std::invalid_argument("erasure counts out of range");
  const Element<S> zero = t.zero(kl);
  auto full_rank = [&](std::size_t r, std::size_t c) {
    for (;;) {
      Matrix<Element<S>> M(r, c, zero);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) M(i, j) = random_element(t, kl, rng);
      if (rank(M) == std::min(r, c)) return M;
    }
  };
  NetworkCorruption<S> out;
  out.y = y;
  out.pattern.A_r_hat = full_rank(m, s_r);
  out.pattern.B_c_hat = full_rank(s_c, n);
  for (int j = 0; j < s_r; ++j) {
    Element<S> col = theta.zero();
    for (int i = 0; i < m; ++i) col += out.pattern.A_r_hat(i, j) * basis[i];
    for (int c = 0; c < n; ++c) out.y[c] += random_element(t, kl, rng) * col;
  }
  for (int i = 0; i < s_c; ++i) {
    const Element<S> a = random_element(t, theta.top(), rng);
    for (int c = 0; c < n; ++c) out.y[c] += a * out.pattern.B_c_hat(i, c);
  }
  return out;
}

#define GABIDULIN_INSTANTIATE(S)                                                                                 \
  template LinePattern<S> random_line_erasures(const std::vector<Element<S>>&, const std::vector<Element<S>>&, int, \
                                                int, std::mt19937_64&);                                         \
  template NetworkCorruption<S> random_network_erasures(const Automorphism<S>&, const std::vector<Element<S>>&,   \
                                                        const std::vector<Element<S>>&, int, int,               \
                                                        std::mt19937_64&);                                      \
  template std::vector<Element<S>> word_from_matrix(const Matrix<Element<S>>&, const std::vector<Element<S>>&);  \
  template Matrix<Element<S>> matrix_from_word(const std::vector<Element<S>>&, const std::vector<Element<S>>&);  \
  template std::optional<SkewPoly<S>> decode_line_erasures(const GabidulinCode<S>&,                              \
                                                           const std::vector<Element<S>>&,                       \
                                                           const LinePattern<S>&, DecodeMethod,                  \
                                                           const WbOptions<S>&, ErasureTrace<S>*);               \
  template std::optional<SkewPoly<S>> decode_network_erasures(                                                   \
      const GabidulinCode<S>&, const std::vector<Element<S>>&, const std::vector<Element<S>>&,                   \
      const NetworkPattern<S>&, DecodeMethod, const WbOptions<S>&, ErasureTrace<S>*);

GABIDULIN_INSTANTIATE(Rational)
GABIDULIN_INSTANTIATE(Fp)

}  // namespace gabidulin
