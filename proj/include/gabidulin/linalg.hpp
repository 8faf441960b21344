#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gabidulin {

/// Dense row-major matrix over an exact field type F. F needs +, -, *, inv(),
/// is_zero(); there is no default scalar, so a fill value is always supplied.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const F& fill) : r_(rows), c_(cols), a_(rows * cols, fill) {}

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  F& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  std::vector<F> row(std::size_t i) const { return {a_.begin() + i * c_, a_.begin() + (i + 1) * c_}; }
  std::vector<F> col(std::size_t j) const {
    std::vector<F> out;
    out.reserve(r_);
    for (std::size_t i = 0; i < r_; ++i) out.push_back((*this)(i, j));
    return out;
  }
  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<F> a_;
};

/// Reduced row echelon form in place; pivots are the first nonzero entry in
/// each column scan. Returns pivot column indices in increasing order.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    if (!m(r, c).is_one()) {
      F s = m(r, c).inv();
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(r, j) = m(r, j) * s;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      F f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return rref(m).size();
}

/// Basis of {x : m x = 0}. One vector per free column (increasing order);
/// each has a 1 at its own free column and 0 at the other free columns.
template <class F>
std::vector<std::vector<F>> kernel(Matrix<F> m, const F& zero, const F& one) {
  std::vector<std::size_t> piv = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : piv) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> v(m.cols(), zero);
    v[f] = one;
    for (std::size_t i = 0; i < piv.size(); ++i)
      if (!m(i, f).is_zero()) v[piv[i]] = zero - m(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
Matrix<F> transpose(const Matrix<F>& m, const F& zero) {
  Matrix<F> t(m.cols(), m.rows(), zero);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

template <class F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b, const F& zero) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not match");
  Matrix<F> out(a.rows(), b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (a(i, l).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = out(i, j) + a(i, l) * b(l, j);
    }
  return out;
}

}  // namespace gabidulin
