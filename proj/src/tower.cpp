#include "gabidulin/tower.hpp"

#include <algorithm>
#include <sstream>

namespace gabidulin {

namespace {

// Dense univariate polynomials over one layer, lowest degree first.
template <class S>
using UPoly = std::vector<Element<S>>;

template <class S>
void trim(UPoly<S>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

template <class S>
UPoly<S> psub(const UPoly<S>& a, const UPoly<S>& b, const Element<S>& zero) {
  UPoly<S> r(std::max(a.size(), b.size()), zero);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

template <class S>
UPoly<S> pmul(const UPoly<S>& a, const UPoly<S>& b, const Element<S>& zero) {
  if (a.empty() || b.empty()) return {};
  UPoly<S> r(a.size() + b.size() - 1, zero);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

template <class S>
void pdivmod(UPoly<S> a, const UPoly<S>& b, const Element<S>& zero, UPoly<S>* q, UPoly<S>* r) {
  Element<S> lead_inv = b.back().inv();
  UPoly<S> quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, zero);
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Element<S> c = a.back() * lead_inv;
    quot[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    trim(a);
  }
  trim(quot);
  if (q) *q = std::move(quot);
  if (r) *r = std::move(a);
}

template <class S>
UPoly<S> mulmod(const UPoly<S>& a, const UPoly<S>& b, const UPoly<S>& f, const Element<S>& zero) {
  UPoly<S> r;
  pdivmod(pmul(a, b, zero), f, zero, static_cast<UPoly<S>*>(nullptr), &r);
  return r;
}

template <class S>
UPoly<S> powmod(UPoly<S> base, std::uint64_t e, const UPoly<S>& f, const Element<S>& zero,
                const Element<S>& one) {
  UPoly<S> r{one};
  while (e) {
    if (e & 1) r = mulmod(r, base, f, zero);
    e >>= 1;
    if (e) base = mulmod(base, base, f, zero);
  }
  return r;
}

template <class S>
UPoly<S> pgcd(UPoly<S> a, UPoly<S> b, const Element<S>& zero) {
  while (!b.empty()) {
    UPoly<S> r;
    pdivmod(a, b, zero, static_cast<UPoly<S>*>(nullptr), &r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

template <class S>
Tower<S>::Tower(BaseField<S> base) : base_(std::move(base)) {
  Layer l0;
  layers_.push_back(l0);
}

template <class S>
typename Tower<S>::Ptr Tower<S>::make(BaseField<S> base) {
  return Ptr(new Tower(std::move(base)));
}

template <class S>
typename Tower<S>::Ptr Tower<S>::extend(const std::vector<Element<S>>& modulus, std::string var) const {
  const int below = top();
  const int d = static_cast<int>(modulus.size()) - 1;
  if (d < 2) throw std::invalid_argument("modulus must have degree >= 2");
  std::shared_ptr<Tower> t(new Tower(base_));
  t->layers_ = layers_;
  t->parent_ = this->shared_from_this();
  Layer layer;
  layer.degree = d;
  layer.dim = dim(below) * static_cast<std::size_t>(d);
  if (var.empty()) {
    static const char* names[] = {"a", "j", "b", "c", "e"};
    var = t->layers_.size() <= 5 ? names[t->layers_.size() - 1] : "x" + std::to_string(t->layers_.size());
  }
  layer.var = var;
  for (int i = 0; i <= d; ++i) {
    const Element<S>& c = modulus[i];
    if (!c.valid() || !extends(c.tower()) || c.layer() > below)
      throw std::invalid_argument("modulus coefficient outside the base of the extension");
    Element<S> e = embed(c, below);
    if (i == d) {
      if (!e.is_one()) throw std::invalid_argument("modulus must be monic");
      break;
    }
    layer.modulus_nonzero.push_back(!e.is_zero());
    layer.modulus.push_back(e.flat());
  }
  t->layers_.push_back(layer);
  if (base_.characteristic() != 0) t->check_irreducible_finite(t->top());
  return t;
}

template <class S>
void Tower<S>::check_irreducible_finite(int layer) const {
  // Rabin-style test: gcd(f, X^(q^i) - X) = 1 for i <= d/2, where q is the
  // size of the field below.
  const int below = layer - 1;
  const int d = degree(layer);
  const Element<S> zero = this->zero(below), one = this->one(below);
  UPoly<S> f = modulus(layer);
  UPoly<S> x{zero, one};
  UPoly<S> h = x;
  const std::uint64_t p = base_.characteristic();
  for (int i = 1; i <= d / 2; ++i) {
    for (std::size_t r = 0; r < dim(below); ++r) h = powmod(h, p, f, zero, one);
    UPoly<S> g = pgcd(f, psub(h, x, zero), zero);
    if (g.size() != 1) throw ReducibleModulus("modulus is reducible over the field below");
  }
}

template <class S>
std::vector<Element<S>> Tower<S>::modulus(int layer) const {
  const Layer& l = layers_.at(layer);
  std::vector<Element<S>> out;
  for (const auto& c : l.modulus) out.push_back(from_flat(layer - 1, c));
  out.push_back(one(layer - 1));
  return out;
}

template <class S>
bool Tower<S>::extends(const Tower* other) const {
  for (const Tower* t = this; t; t = t->parent_.get())
    if (t == other) return true;
  return false;
}

template <class S>
Element<S> Tower<S>::zero(int layer) const {
  return Element<S>(this, layer, std::vector<S>(dim(layer), base_.zero()));
}

template <class S>
Element<S> Tower<S>::one(int layer) const {
  return scalar(base_.one(), layer);
}

template <class S>
Element<S> Tower<S>::gen(int layer) const {
  if (layer < 1) throw std::invalid_argument("base layer has no generator");
  std::vector<S> c(dim(layer), base_.zero());
  c[dim(layer - 1)] = base_.one();
  return Element<S>(this, layer, std::move(c));
}

template <class S>
Element<S> Tower<S>::scalar(const S& s, int layer) const {
  std::vector<S> c(dim(layer), base_.zero());
  c[0] = s;
  return Element<S>(this, layer, std::move(c));
}

template <class S>
Element<S> Tower<S>::integer(std::int64_t v, int layer) const {
  return scalar(base_.from_int(v), layer);
}

template <class S>
Element<S> Tower<S>::from_flat(int layer, std::vector<S> flat) const {
  if (flat.size() != dim(layer)) throw std::invalid_argument("coordinate vector has wrong length");
  return Element<S>(this, layer, std::move(flat));
}

template <class S>
Element<S> Tower<S>::from_coeffs(int layer, const std::vector<Element<S>>& coeffs) const {
  if (layer < 1) throw std::invalid_argument("base layer has no coefficient vector");
  if (static_cast<int>(coeffs.size()) > degree(layer))
    throw std::invalid_argument("too many coefficients for layer degree");
  std::vector<S> flat(dim(layer), base_.zero());
  const std::size_t b = dim(layer - 1);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    Element<S> c = embed(coeffs[j], layer - 1);
    std::copy(c.flat().begin(), c.flat().end(), flat.begin() + j * b);
  }
  return Element<S>(this, layer, std::move(flat));
}

template <class S>
Element<S> Tower<S>::embed(const Element<S>& x, int layer) const {
  if (!x.valid() || !extends(x.tower())) throw std::invalid_argument("element from an unrelated tower");
  if (x.layer() > layer) throw std::invalid_argument("cannot embed into a lower layer");
  if (x.tower() == this && x.layer() == layer) return x;
  std::vector<S> flat(dim(layer), base_.zero());
  std::copy(x.flat().begin(), x.flat().end(), flat.begin());
  return Element<S>(this, layer, std::move(flat));
}

template <class S>
void Tower<S>::mul(int layer, const S* a, const S* b, S* out) const {
  if (layer == 0) {
    out[0] = a[0] * b[0];
    return;
  }
  const Layer& l = layers_[layer];
  const int d = l.degree;
  const std::size_t bs = dim(layer - 1);
  if (bs == 1) {
    std::vector<S> tmp(2 * d - 1, base_.zero());
    for (int u = 0; u < d; ++u) {
      if (is_zero(a[u])) continue;
      for (int v = 0; v < d; ++v)
        if (!is_zero(b[v])) tmp[u + v] += a[u] * b[v];
    }
    for (int e = 2 * d - 2; e >= d; --e) {
      if (is_zero(tmp[e])) continue;
      for (int j = 0; j < d; ++j)
        if (l.modulus_nonzero[j]) tmp[e - d + j] -= tmp[e] * l.modulus[j][0];
    }
    std::copy(tmp.begin(), tmp.begin() + d, out);
    return;
  }
  auto block_zero = [bs](const S* x) {
    for (std::size_t i = 0; i < bs; ++i)
      if (!is_zero(x[i])) return false;
    return true;
  };
  std::vector<S> tmp((2 * d - 1) * bs, base_.zero());
  std::vector<S> prod(bs, base_.zero());
  for (int u = 0; u < d; ++u) {
    if (block_zero(a + u * bs)) continue;
    for (int v = 0; v < d; ++v) {
      if (block_zero(b + v * bs)) continue;
      mul(layer - 1, a + u * bs, b + v * bs, prod.data());
      for (std::size_t i = 0; i < bs; ++i) tmp[(u + v) * bs + i] += prod[i];
    }
  }
  for (int e = 2 * d - 2; e >= d; --e) {
    if (block_zero(tmp.data() + e * bs)) continue;
    for (int j = 0; j < d; ++j) {
      if (!l.modulus_nonzero[j]) continue;
      mul(layer - 1, tmp.data() + e * bs, l.modulus[j].data(), prod.data());
      for (std::size_t i = 0; i < bs; ++i) tmp[(e - d + j) * bs + i] -= prod[i];
    }
  }
  std::copy(tmp.begin(), tmp.begin() + d * bs, out);
}

template <class S>
void Tower<S>::inv(int layer, const S* a, S* out) const {
  if (layer == 0) {
    out[0] = inverse(a[0]);
    return;
  }
  const int below = layer - 1;
  const std::size_t bs = dim(below);
  const int d = degree(layer);
  const Element<S> zero = this->zero(below);
  UPoly<S> x;
  for (int j = 0; j < d; ++j)
    x.push_back(from_flat(below, std::vector<S>(a + j * bs, a + (j + 1) * bs)));
  trim(x);
  if (x.empty()) throw std::domain_error("division by zero");
  UPoly<S> r0 = modulus(layer), r1 = x;
  UPoly<S> s0, s1{one(below)};
  while (!r1.empty()) {
    UPoly<S> q, r;
    pdivmod(r0, r1, zero, &q, &r);
    UPoly<S> s2 = psub(s0, pmul(q, s1, zero), zero);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw ReducibleModulus("inversion failed: modulus shares a factor with the element");
  Element<S> c = r0[0].inv();
  std::fill(out, out + dim(layer), base_.zero());
  for (std::size_t j = 0; j < s0.size(); ++j) {
    Element<S> v = s0[j] * c;
    std::copy(v.flat().begin(), v.flat().end(), out + j * bs);
  }
}

// ---------------------------------------------------------------------------

template <class S>
Element<S>::Element(const Tower<S>* tower, int layer, std::vector<S> flat)
    : t_(tower), layer_(layer), c_(std::move(flat)) {}

template <class S>
void Element<S>::same_tower(const Element& o) const {
  if (t_ != o.t_ || t_ == nullptr) throw std::invalid_argument("elements from different towers");
}

template <class S>
bool Element<S>::is_zero() const {
  for (const S& x : c_)
    if (!gabidulin::is_zero(x)) return false;
  return true;
}

template <class S>
bool Element<S>::is_one() const {
  if (c_.empty() || !gabidulin::is_one(c_[0])) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!gabidulin::is_zero(c_[i])) return false;
  return true;
}

template <class S>
Element<S> Element<S>::coeff(int j) const {
  if (layer_ < 1) throw std::invalid_argument("base element has no coefficients");
  const std::size_t bs = t_->dim(layer_ - 1);
  return Element(t_, layer_ - 1, std::vector<S>(c_.begin() + j * bs, c_.begin() + (j + 1) * bs));
}

template <class S>
std::vector<Element<S>> Element<S>::coeffs() const {
  std::vector<Element> out;
  for (int j = 0; j < t_->degree(layer_); ++j) out.push_back(coeff(j));
  return out;
}

template <class S>
Element<S> Element<S>::operator+(const Element& o) const {
  same_tower(o);
  if (o.layer_ > layer_) return o + *this;
  Element r = *this;
  for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

template <class S>
Element<S> Element<S>::operator-(const Element& o) const {
  same_tower(o);
  if (o.layer_ > layer_) return -(o - *this);
  Element r = *this;
  for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

template <class S>
Element<S> Element<S>::operator-() const {
  Element r = *this;
  for (S& x : r.c_) x = -x;
  return r;
}

template <class S>
Element<S> Element<S>::operator*(const Element& o) const {
  same_tower(o);
  if (o.layer_ > layer_) return o * *this;
  Element r(t_, layer_, std::vector<S>(c_.size(), t_->base().zero()));
  if (o.layer_ == layer_) {
    t_->mul(layer_, c_.data(), o.c_.data(), r.c_.data());
    return r;
  }
  // o lives in a lower layer: scale every chunk of that layer's size.
  const std::size_t bs = o.c_.size();
  for (std::size_t off = 0; off < c_.size(); off += bs) t_->mul(o.layer_, c_.data() + off, o.c_.data(), r.c_.data() + off);
  return r;
}

template <class S>
Element<S> Element<S>::inv() const {
  Element r(t_, layer_, std::vector<S>(c_.size(), t_->base().zero()));
  t_->inv(layer_, c_.data(), r.c_.data());
  return r;
}

template <class S>
Element<S> Element<S>::operator/(const Element& o) const {
  return *this * o.inv();
}

template <class S>
Element<S> Element<S>::pow(std::uint64_t e) const {
  Element r = t_->one(layer_), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

template <class S>
bool Element<S>::operator==(const Element& o) const {
  if (t_ != o.t_) return false;
  const std::vector<S>& big = c_.size() >= o.c_.size() ? c_ : o.c_;
  const std::vector<S>& small = c_.size() >= o.c_.size() ? o.c_ : c_;
  for (std::size_t i = 0; i < big.size(); ++i) {
    if (i < small.size()) {
      if (big[i] != small[i]) return false;
    } else if (!gabidulin::is_zero(big[i])) {
      return false;
    }
  }
  return true;
}

namespace {

template <class S>
bool negative(const S& s);
template <>
bool negative(const Rational& s) {
  return sgn(s) < 0;
}
template <>
bool negative(const Fp&) {
  return false;
}

template <class S>
std::string format(const Element<S>& x) {
  if (x.layer() == 0) return to_string(x.flat()[0]);
  const Tower<S>& t = *x.tower();
  const std::string& v = t.var(x.layer());
  std::vector<std::pair<bool, std::string>> terms;  // (negated, body)
  for (int j = t.degree(x.layer()) - 1; j >= 0; --j) {
    Element<S> c = x.coeff(j);
    if (c.is_zero()) continue;
    std::string mono = j == 0 ? "" : (j == 1 ? v : v + "^" + std::to_string(j));
    bool neg = false;
    std::string cs;
    if (c.layer() == 0) {
      S s = c.flat()[0];
      if (negative(s)) {
        neg = true;
        s = -s;
      }
      cs = to_string(s);
      if (cs.find('/') != std::string::npos && !mono.empty()) cs = "(" + cs + ")";
      if (cs == "1" && !mono.empty()) cs.clear();
    } else {
      cs = format(c);
      bool single = cs.find(' ') == std::string::npos;
      if (cs == "1" && !mono.empty()) cs.clear();
      else if (!single && !mono.empty()) cs = "(" + cs + ")";
    }
    terms.emplace_back(neg, cs + mono);
  }
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0) out += terms[i].first ? "-" : "";
    else out += terms[i].first ? " - " : " + ";
    out += terms[i].second;
  }
  return out;
}

}  // namespace

template <class S>
std::string Element<S>::to_string() const {
  return format(*this);
}

template class Tower<Rational>;
template class Tower<Fp>;
template class Element<Rational>;
template class Element<Fp>;

}  // namespace gabidulin
