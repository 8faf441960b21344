#include "gabidulin/automorphism.hpp"

namespace gabidulin {

template <class S>
typename Automorphism<S>::Ptr Automorphism<S>::make(typename Tower<S>::Ptr tower, const Element<S>& generator_image) {
  const int top = tower->top();
  if (top < 1) throw std::invalid_argument("automorphism needs at least one extension layer");
  std::shared_ptr<Automorphism> a(new Automorphism());
  a->tower_ = tower;
  a->image_ = tower->embed(generator_image, top);
  const int m = tower->degree(top);
  const int kl = top - 1;

  // Root check: T(beta) = 0.
  std::vector<Element<S>> mod = tower->modulus(top);
  Element<S> acc = tower->zero(top);
  for (int i = m; i >= 0; --i) acc = acc * a->image_ + mod[i];
  if (!acc.is_zero()) throw NotAutomorphism("generator image is not a root of the top modulus");

  // Order: iterate beta_i = theta(beta_{i-1}) = sum c_j beta^j until back at the generator.
  const Element<S> gen = tower->gen(top);
  std::vector<Element<S>> images{gen};
  auto substitute = [&](const Element<S>& x) {
    Element<S> r = tower->zero(top);
    Element<S> pw = tower->one(top);
    for (int j = 0; j < m; ++j) {
      Element<S> c = x.coeff(j);
      if (!c.is_zero()) r += pw * c;
      pw *= a->image_;
    }
    return r;
  };
  Element<S> cur = a->image_;
  while (cur != gen) {
    if (static_cast<int>(images.size()) > m) throw NotAutomorphism("automorphism order exceeds the layer degree");
    images.push_back(cur);
    cur = substitute(cur);
  }
  a->order_ = static_cast<int>(images.size());

  const Element<S> kzero = tower->zero(kl);
  for (int i = 0; i < a->order_; ++i) {
    Matrix<Element<S>> dense(m, m, kzero);
    std::vector<Column> cols(m);
    Element<S> pw = tower->one(top);
    for (int j = 0; j < m; ++j) {
      for (int r = 0; r < m; ++r) {
        Element<S> v = pw.coeff(r);
        dense(r, j) = v;
        if (v.is_zero()) continue;
        Entry e{r, 0, {}};
        if (v.is_one()) e.kind = 1;
        else if ((-v).is_one()) e.kind = -1;
        else e.value = v.flat();
        cols[j].push_back(std::move(e));
      }
      pw *= images[i];
    }
    a->powers_.push_back(std::move(cols));
    a->dense_.push_back(std::move(dense));
  }

  Matrix<Element<S>> fix = a->dense_[a->order_ > 1 ? 1 : 0];
  for (int r = 0; r < m; ++r) fix(r, r) = fix(r, r) - tower->one(kl);
  a->fixed_dim_ = m - static_cast<int>(rank(fix));
  return a;
}

template <class S>
Element<S> Automorphism<S>::apply(const Element<S>& x, int i) const {
  if (x.tower() != tower_.get()) throw std::invalid_argument("element from a different tower");
  if (x.layer() < top()) return x;
  const int p = normalize(i);
  if (p == 0) return x;
  const Tower<S>& t = *tower_;
  const int kl = k_layer();
  const std::size_t bs = t.dim(kl);
  const std::vector<S>& c = x.flat();
  std::vector<S> out(c.size(), t.base().zero());
  std::vector<S> prod(bs, t.base().zero());
  const auto& cols = powers_[p];
  for (int j = 0; j < m(); ++j) {
    const S* xj = c.data() + j * bs;
    bool zero = true;
    for (std::size_t q = 0; q < bs && zero; ++q) zero = is_zero(xj[q]);
    if (zero) continue;
    for (const Entry& e : cols[j]) {
      S* o = out.data() + e.row * bs;
      if (e.kind == 1) {
        for (std::size_t q = 0; q < bs; ++q) o[q] += xj[q];
      } else if (e.kind == -1) {
        for (std::size_t q = 0; q < bs; ++q) o[q] -= xj[q];
      } else {
        t.mul(kl, xj, e.value.data(), prod.data());
        for (std::size_t q = 0; q < bs; ++q) o[q] += prod[q];
      }
    }
  }
  return t.from_flat(top(), std::move(out));
}

template <class S>
Matrix<Element<S>> Automorphism<S>::matrix(int i) const {
  return dense_[normalize(i)];
}

template <class S>
Matrix<Element<S>> coordinate_matrix(const std::vector<Element<S>>& v) {
  if (v.empty()) throw std::invalid_argument("empty vector");
  const Tower<S>& t = *v[0].tower();
  const int layer = v[0].layer();
  const int m = t.degree(layer);
  Matrix<Element<S>> out(m, v.size(), t.zero(layer - 1));
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].tower() != &t || v[j].layer() != layer) throw std::invalid_argument("mixed towers or layers");
    for (int r = 0; r < m; ++r) out(r, j) = v[j].coeff(r);
  }
  return out;
}

template <class S>
int k_rank(const std::vector<Element<S>>& v) {
  if (v.empty()) return 0;
  return static_cast<int>(rank(coordinate_matrix(v)));
}

template <class S>
void check_basis(const std::vector<Element<S>>& basis) {
  if (basis.empty()) throw std::invalid_argument("empty basis");
  const int m = basis[0].tower()->degree(basis[0].layer());
  if (static_cast<int>(basis.size()) != m) throw std::invalid_argument("basis size differs from [L:K]");
  if (k_rank(basis) != m) throw std::invalid_argument("basis is not K-linearly independent");
}

template <class S>
int k_rank(const std::vector<Element<S>>& v, const std::vector<Element<S>>& basis) {
  check_basis(basis);
  return k_rank(v);
}

template <class S>
std::vector<Element<S>> basis_coordinates(const Element<S>& x, const std::vector<Element<S>>& basis) {
  std::vector<Element<S>> cols = basis;
  cols.push_back(x);
  Matrix<Element<S>> a = coordinate_matrix(cols);
  std::vector<std::size_t> piv = rref(a);
  const std::size_t m = basis.size();
  if (piv.size() != m || piv.back() != m - 1) throw std::invalid_argument("basis is not K-linearly independent");
  std::vector<Element<S>> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back(a(i, m));
  return out;
}

template <class S>
std::vector<Element<S>> power_basis(const Tower<S>& tower) {
  std::vector<Element<S>> out;
  Element<S> pw = tower.one(tower.top());
  for (int j = 0; j < tower.degree(tower.top()); ++j) {
    out.push_back(pw);
    pw *= tower.gen(tower.top());
  }
  return out;
}

template class Automorphism<Rational>;
template class Automorphism<Fp>;

#define GABIDULIN_INSTANTIATE(S)                                                                    \
  template Matrix<Element<S>> coordinate_matrix(const std::vector<Element<S>>&);                   \
  template int k_rank(const std::vector<Element<S>>&);                                              \
  template int k_rank(const std::vector<Element<S>>&, const std::vector<Element<S>>&);              \
  template void check_basis(const std::vector<Element<S>>&);                                        \
  template std::vector<Element<S>> basis_coordinates(const Element<S>&, const std::vector<Element<S>>&); \
  template std::vector<Element<S>> power_basis(const Tower<S>&);

GABIDULIN_INSTANTIATE(Rational)
GABIDULIN_INSTANTIATE(Fp)

}  // namespace gabidulin
