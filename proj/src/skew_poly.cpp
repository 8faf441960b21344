#include "gabidulin/skew_poly.hpp"

#include <algorithm>

namespace gabidulin {

namespace {

template <class S>
Element<S> zero_of(const Element<S>& a, const Element<S>& b) {
  return a.tower()->zero(std::max(a.layer(), b.layer()));
}

template <class S>
void check_same(const SkewPoly<S>& a, const SkewPoly<S>& b) {
  if (a.theta_ptr() != b.theta_ptr()) throw std::invalid_argument("skew polynomials over different automorphisms");
}

}  // namespace

template <class S>
Element<S> op_mul(const Element<S>& a, const Element<S>& b, OpCounter* ops) {
  if (a.is_zero() || b.is_zero()) return zero_of(a, b);
  if (a.is_one() && a.layer() <= b.layer()) return b;
  if (b.is_one() && b.layer() <= a.layer()) return a;
  if (ops) ++ops->mul;
  return a * b;
}

template <class S>
Element<S> op_add(const Element<S>& a, const Element<S>& b, OpCounter* ops) {
  if (a.is_zero() && a.layer() <= b.layer()) return b;
  if (b.is_zero() && b.layer() <= a.layer()) return a;
  if (ops) ++ops->add;
  return a + b;
}

template <class S>
Element<S> op_sub(const Element<S>& a, const Element<S>& b, OpCounter* ops) {
  if (b.is_zero() && b.layer() <= a.layer()) return a;
  if (a.is_zero() && a.layer() <= b.layer()) return -b;
  if (ops) ++ops->add;
  return a - b;
}

template <class S>
Element<S> op_div(const Element<S>& a, const Element<S>& b, OpCounter* ops) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_zero() || b.is_one()) return a.layer() >= b.layer() ? a : zero_of(a, b) + a;
  if (ops) ++ops->div;
  return a / b;
}

template <class S>
Element<S> op_theta(const Automorphism<S>& th, const Element<S>& x, int i, OpCounter* ops) {
  if (x.is_zero() || x.layer() < th.top() || i % th.order() == 0) return x;
  if (ops) ++ops->theta;
  return th.apply(x, i);
}

template <class S>
SkewPoly<S>::SkewPoly(const Automorphism<S>* theta, std::vector<Elem> coeffs) : theta_(theta), c_(std::move(coeffs)) {
  for (Elem& c : c_) c = theta_->tower().embed(c, theta_->top());
  trim();
}

template <class S>
SkewPoly<S> SkewPoly<S>::monomial(const Automorphism<S>* theta, const Elem& c, int i) {
  std::vector<Elem> v(i + 1, theta->zero());
  v[i] = c;
  return SkewPoly(theta, std::move(v));
}

template <class S>
SkewPoly<S> SkewPoly<S>::x_minus(const Automorphism<S>* theta, const Elem& c) {
  return SkewPoly(theta, {-c, theta->one()});
}

template <class S>
Element<S> SkewPoly<S>::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return theta_->zero();
  return c_[i];
}

template <class S>
void SkewPoly<S>::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

template <class S>
std::string SkewPoly<S>::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c_[i].to_string() + ")X^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

template <class S>
SkewPoly<S> add(const SkewPoly<S>& a, const SkewPoly<S>& b, OpCounter* ops) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  check_same(a, b);
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<Element<S>> r;
  r.reserve(n);
  for (std::size_t i = 0; i < n; ++i) r.push_back(op_add(a.coeff(i), b.coeff(i), ops));
  return SkewPoly<S>(a.theta_ptr(), std::move(r));
}

template <class S>
SkewPoly<S> sub(const SkewPoly<S>& a, const SkewPoly<S>& b, OpCounter* ops) {
  if (b.is_zero()) return a;
  const Automorphism<S>* th = b.theta_ptr();
  if (!a.is_zero()) check_same(a, b);
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<Element<S>> r;
  r.reserve(n);
  for (std::size_t i = 0; i < n; ++i) r.push_back(op_sub(i < a.coeffs().size() ? a.coeffs()[i] : th->zero(), b.coeff(i), ops));
  return SkewPoly<S>(th, std::move(r));
}

template <class S>
SkewPoly<S> mul(const SkewPoly<S>& a, const SkewPoly<S>& b, OpCounter* ops) {
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  check_same(a, b);
  const Automorphism<S>& th = a.theta();
  std::vector<Element<S>> r(a.degree() + b.degree() + 1, th.zero());
  std::vector<Element<S>> tb = b.coeffs();  // theta^i(b_j), advanced per row
  for (int i = 0; i <= a.degree(); ++i) {
    if (i > 0)
      for (auto& x : tb) x = op_theta(th, x, 1, ops);
    const Element<S>& ai = a.coeffs()[i];
    if (ai.is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j) r[i + j] = op_add(r[i + j], op_mul(ai, tb[j], ops), ops);
  }
  return SkewPoly<S>(a.theta_ptr(), std::move(r));
}

template <class S>
SkewPoly<S> scale(const Element<S>& c, const SkewPoly<S>& a, OpCounter* ops) {
  if (c.is_zero()) return SkewPoly<S>(a.theta_ptr());
  std::vector<Element<S>> r;
  r.reserve(a.coeffs().size());
  for (const auto& x : a.coeffs()) r.push_back(op_mul(c, x, ops));
  return SkewPoly<S>(a.theta_ptr(), std::move(r));
}

template <class S>
SkewPoly<S> mul_linear(const Element<S>& c1, const Element<S>& c0, const SkewPoly<S>& a, OpCounter* ops) {
  if (a.is_zero()) return a;
  const Automorphism<S>& th = a.theta();
  const int d = a.degree();
  std::vector<Element<S>> r(d + 2, th.zero());
  for (int i = 0; i <= d + 1; ++i) {
    Element<S> hi = i >= 1 ? op_mul(c1, op_theta(th, a.coeffs()[i - 1], 1, ops), ops) : th.zero();
    Element<S> lo = i <= d ? op_mul(c0, a.coeffs()[i], ops) : th.zero();
    r[i] = op_add(hi, lo, ops);
  }
  return SkewPoly<S>(a.theta_ptr(), std::move(r));
}

template <class S>
Element<S> eval(const SkewPoly<S>& a, const Element<S>& b, OpCounter* ops) {
  if (a.is_zero()) return b.tower()->zero(b.tower()->top());
  const Automorphism<S>& th = a.theta();
  Element<S> acc = th.zero();
  Element<S> tb = th.tower().embed(b, th.top());
  for (int i = 0; i <= a.degree(); ++i) {
    if (i > 0) tb = op_theta(th, tb, 1, ops);
    acc = op_add(acc, op_mul(a.coeffs()[i], tb, ops), ops);
  }
  return acc;
}

template <class S>
std::pair<SkewPoly<S>, SkewPoly<S>> left_divide(const SkewPoly<S>& a, const SkewPoly<S>& b, OpCounter* ops) {
  if (b.is_zero()) throw std::domain_error("division by the zero skew polynomial");
  const Automorphism<S>& th = b.theta();
  const int db = b.degree();
  std::vector<Element<S>> r = a.coeffs();
  if (a.degree() < db) return {SkewPoly<S>(b.theta_ptr()), a};
  std::vector<Element<S>> q(a.degree() - db + 1, th.zero());
  Element<S> binv = op_div(th.one(), b.lead(), ops);
  while (static_cast<int>(r.size()) - 1 >= db) {
    const int dr = static_cast<int>(r.size()) - 1;
    const int d = dr - db;
    Element<S> qc = op_theta(th, op_mul(r.back(), binv, ops), -db, ops);
    q[d] = qc;
    Element<S> tq = qc;
    for (int i = 0; i < db; ++i) {
      if (i > 0) tq = op_theta(th, tq, 1, ops);
      r[i + d] = op_sub(r[i + d], op_mul(b.coeffs()[i], tq, ops), ops);
    }
    r.pop_back();
    while (!r.empty() && r.back().is_zero()) r.pop_back();
  }
  return {SkewPoly<S>(b.theta_ptr(), std::move(q)), SkewPoly<S>(b.theta_ptr(), std::move(r))};
}

template <class S>
std::pair<SkewPoly<S>, SkewPoly<S>> right_divide(const SkewPoly<S>& a, const SkewPoly<S>& b, OpCounter* ops) {
  if (b.is_zero()) throw std::domain_error("division by the zero skew polynomial");
  const Automorphism<S>& th = b.theta();
  const int db = b.degree();
  std::vector<Element<S>> r = a.coeffs();
  if (a.degree() < db) return {SkewPoly<S>(b.theta_ptr()), a};
  std::vector<Element<S>> q(a.degree() - db + 1, th.zero());
  while (static_cast<int>(r.size()) - 1 >= db) {
    const int dr = static_cast<int>(r.size()) - 1;
    const int d = dr - db;
    Element<S> qc = op_div(r.back(), op_theta(th, b.lead(), d, ops), ops);
    q[d] = qc;
    for (int i = 0; i < db; ++i)
      r[i + d] = op_sub(r[i + d], op_mul(qc, op_theta(th, b.coeffs()[i], d, ops), ops), ops);
    r.pop_back();
    while (!r.empty() && r.back().is_zero()) r.pop_back();
  }
  return {SkewPoly<S>(b.theta_ptr(), std::move(q)), SkewPoly<S>(b.theta_ptr(), std::move(r))};
}

template <class S>
SkewPoly<S> annihilator(const Automorphism<S>& theta, const std::vector<Element<S>>& v) {
  SkewPoly<S> a = SkewPoly<S>::one(&theta);
  std::vector<Element<S>> taken;
  for (const auto& x0 : v) {
    Element<S> x = theta.tower().embed(x0, theta.top());
    Element<S> p = eval(a, x);
    if (p.is_zero()) {
      std::vector<Element<S>> ext = taken;
      ext.push_back(x);
      if (k_rank(ext) == static_cast<int>(taken.size())) continue;
      throw HdimViolation("zero pivot on a K-independent input: the fixed field of theta is larger than K");
    }
    a = mul_linear(theta.one(), -(theta.apply(p) / p), a);
    taken.push_back(x);
  }
  return a;
}

template <class S>
std::pair<SkewPoly<S>, SkewPoly<S>> annihilator_interpolator(const Automorphism<S>& theta,
                                                             const std::vector<Element<S>>& g,
                                                             const std::vector<Element<S>>& y, OpCounter* ops) {
  if (g.size() != y.size()) throw std::invalid_argument("support and values differ in length");
  SkewPoly<S> ann = SkewPoly<S>::one(&theta);
  SkewPoly<S> in(&theta);
  for (std::size_t i = 0; i < g.size(); ++i) {
    Element<S> a = eval(ann, g[i], ops);
    if (a.is_zero()) throw InvalidCode("support is K-linearly dependent");
    Element<S> b = eval(in, g[i], ops);
    Element<S> c = op_div(op_sub(y[i], b, ops), a, ops);
    in = add(in, scale(c, ann, ops), ops);
    Element<S> ratio = op_div(op_theta(theta, a, 1, ops), a, ops);
    ann = mul_linear(theta.one(), -ratio, ann, ops);
  }
  return {ann, in};
}

template <class S>
SkewPoly<S> interpolator(const Automorphism<S>& theta, const std::vector<Element<S>>& g,
                         const std::vector<Element<S>>& y) {
  return annihilator_interpolator(theta, g, y).second;
}

template <class S>
DfAnnInt<S> df_annihilator_interpolator(const Automorphism<S>& theta, const std::vector<Element<S>>& g,
                                        const std::vector<Element<S>>& y, OpCounter* ops) {
  if (g.size() != y.size()) throw std::invalid_argument("support and values differ in length");
  DfAnnInt<S> r{SkewPoly<S>::one(&theta), SkewPoly<S>(&theta), theta.one()};
  for (std::size_t i = 0; i < g.size(); ++i) {
    Element<S> a = eval(r.ann, g[i], ops);
    if (a.is_zero()) throw InvalidCode("support is K-linearly dependent");
    Element<S> b = eval(r.interp, g[i], ops);
    Element<S> c = op_sub(op_mul(r.lambda, y[i], ops), b, ops);
    r.interp = add(scale(a, r.interp, ops), scale(c, r.ann, ops), ops);
    r.lambda = op_mul(a, r.lambda, ops);
    r.ann = mul_linear(a, -op_theta(theta, a, 1, ops), r.ann, ops);
  }
  return r;
}

template <class S>
int root_space_dim(const SkewPoly<S>& a) {
  if (a.is_zero()) throw std::invalid_argument("root space of the zero polynomial");
  std::vector<Element<S>> images;
  for (const auto& b : power_basis(a.theta().tower())) images.push_back(eval(a, b));
  return a.theta().m() - k_rank(images);
}

template class SkewPoly<Rational>;
template class SkewPoly<Fp>;

#define GABIDULIN_INSTANTIATE(S)                                                                                 \
  template Element<S> op_mul(const Element<S>&, const Element<S>&, OpCounter*);                                   \
  template Element<S> op_add(const Element<S>&, const Element<S>&, OpCounter*);                                   \
  template Element<S> op_sub(const Element<S>&, const Element<S>&, OpCounter*);                                   \
  template Element<S> op_div(const Element<S>&, const Element<S>&, OpCounter*);                                   \
  template Element<S> op_theta(const Automorphism<S>&, const Element<S>&, int, OpCounter*);                       \
  template SkewPoly<S> add(const SkewPoly<S>&, const SkewPoly<S>&, OpCounter*);                                   \
  template SkewPoly<S> sub(const SkewPoly<S>&, const SkewPoly<S>&, OpCounter*);                                   \
  template SkewPoly<S> mul(const SkewPoly<S>&, const SkewPoly<S>&, OpCounter*);                                   \
  template SkewPoly<S> scale(const Element<S>&, const SkewPoly<S>&, OpCounter*);                                  \
  template SkewPoly<S> mul_linear(const Element<S>&, const Element<S>&, const SkewPoly<S>&, OpCounter*);          \
  template Element<S> eval(const SkewPoly<S>&, const Element<S>&, OpCounter*);                                    \
  template std::pair<SkewPoly<S>, SkewPoly<S>> left_divide(const SkewPoly<S>&, const SkewPoly<S>&, OpCounter*);   \
  template std::pair<SkewPoly<S>, SkewPoly<S>> right_divide(const SkewPoly<S>&, const SkewPoly<S>&, OpCounter*);  \
  template SkewPoly<S> annihilator(const Automorphism<S>&, const std::vector<Element<S>>&);                       \
  template std::pair<SkewPoly<S>, SkewPoly<S>> annihilator_interpolator(                                          \
      const Automorphism<S>&, const std::vector<Element<S>>&, const std::vector<Element<S>>&, OpCounter*);        \
  template SkewPoly<S> interpolator(const Automorphism<S>&, const std::vector<Element<S>>&,                        \
                                    const std::vector<Element<S>>&);                                              \
  template DfAnnInt<S> df_annihilator_interpolator(const Automorphism<S>&, const std::vector<Element<S>>&,        \
                                                   const std::vector<Element<S>>&, OpCounter*);                   \
  template int root_space_dim(const SkewPoly<S>&);

GABIDULIN_INSTANTIATE(Rational)
GABIDULIN_INSTANTIATE(Fp)

}  // namespace gabidulin
