#include "gabidulin/residue.hpp"

#include <cmath>

#include "gabidulin/trace.hpp"

namespace gabidulin {

namespace {

void require_single_layer(const Tower<Rational>& t) {
  if (t.top() != 1) throw ReductionError("reduction needs a single extension layer over Q");
}

Fp reduce_scalar(const Rational& c, std::uint32_t q) {
  if (c.get_den() != 1) throw ReductionError("non-integral coordinate " + to_string(c));
  Integer r = c.get_num() % q;
  if (r < 0) r += q;
  return Fp(r.get_si(), q);
}

std::optional<Tower<Fp>::Ptr> residue_tower(const Tower<Rational>& source, std::uint32_t q) {
  auto base = Tower<Fp>::make(BaseField<Fp>{q});
  std::vector<Element<Fp>> mod;
  for (const auto& c : source.modulus(1)) {
    const Rational& v = c.flat()[0];
    if (v.get_den() % q == 0) return std::nullopt;
    mod.push_back(base->scalar(reduce_scalar(Rational(v.get_num()), q) / reduce_scalar(Rational(v.get_den()), q), 0));
  }
  try {
    return base->extend(mod, source.var(1));
  } catch (const ReducibleModulus&) {
    return std::nullopt;
  }
}

}  // namespace

double size_of(const Element<Rational>& x) {
  mpz_class best = 0;
  for (const Rational& c : x.flat()) {
    if (c.get_den() != 1) throw ReductionError("size of a non-integral element");
    mpz_class a = abs(c.get_num());
    if (a > best) best = a;
  }
  if (best == 0) return 0.0;
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, best.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp);
}

double size_of(const std::vector<Element<Rational>>& v) {
  double s = 0.0;
  for (const auto& x : v) s = std::max(s, size_of(x));
  return s;
}

double size_of(const SkewPoly<Rational>& a) { return size_of(a.coeffs()); }

std::uint32_t find_inert_prime(const Tower<Rational>& source, std::uint32_t min, std::uint32_t cap) {
  require_single_layer(source);
  for (std::uint32_t q = std::max<std::uint32_t>(min, 2); q <= cap; ++q) {
    if (!is_prime(q)) continue;
    if (residue_tower(source, q)) return q;
  }
  throw ReductionError("no inert prime below " + std::to_string(cap));
}

ResidueContext make_residue_context(const Automorphism<Rational>::Ptr& theta, std::uint32_t q) {
  const Tower<Rational>& src = theta->tower();
  require_single_layer(src);
  if (!is_prime(q)) throw ReductionError(std::to_string(q) + " is not prime");
  for (const auto& c : src.modulus(1))
    if (c.flat()[0].get_den() != 1) throw ReductionError("defining polynomial is not integral");
  auto res = residue_tower(src, q);
  if (!res) throw ReductionError(std::to_string(q) + " is not inert");
  ResidueContext ctx{theta, q, *res, nullptr};
  std::vector<Fp> img;
  for (const Rational& c : theta->generator_image().flat()) img.push_back(reduce_scalar(c, q));
  ctx.theta_bar = Automorphism<Fp>::make(ctx.residue, ctx.residue->from_flat(1, img));
  return ctx;
}

Element<Fp> reduce(const ResidueContext& ctx, const Element<Rational>& x) {
  const Element<Rational> v = ctx.theta->tower().embed(x, 1);
  std::vector<Fp> flat;
  for (const Rational& c : v.flat()) flat.push_back(reduce_scalar(c, ctx.q));
  return ctx.residue->from_flat(1, flat);
}

std::vector<Element<Fp>> reduce(const ResidueContext& ctx, const std::vector<Element<Rational>>& v) {
  std::vector<Element<Fp>> out;
  for (const auto& x : v) out.push_back(reduce(ctx, x));
  return out;
}

SkewPoly<Fp> reduce(const ResidueContext& ctx, const SkewPoly<Rational>& a) {
  return SkewPoly<Fp>(ctx.theta_bar.get(), reduce(ctx, a.coeffs()));
}

Matrix<Element<Fp>> reduce(const ResidueContext& ctx, const Matrix<Element<Rational>>& m) {
  Matrix<Element<Fp>> out(m.rows(), m.cols(), ctx.residue->zero(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Element<Rational>& x = m(i, j);
      if (x.layer() != 0) throw ReductionError("matrix entries must lie in the base field");
      out(i, j) = ctx.residue->scalar(reduce_scalar(x.flat()[0], ctx.q), 0);
    }
  return out;
}

Lifter Lifter::alphabet(std::vector<long> values, std::uint32_t q) {
  Lifter l;
  l.q_ = q;
  l.table_.assign(q, std::nullopt);
  for (long v : values) {
    long r = ((v % static_cast<long>(q)) + q) % q;
    if (l.table_[r]) throw ReductionError("lift alphabet is not injective modulo " + std::to_string(q));
    l.table_[r] = v;
  }
  return l;
}

Lifter Lifter::centered(long bound, std::uint32_t q) {
  Lifter l;
  l.q_ = q;
  l.centered_ = true;
  l.bound_ = bound;
  return l;
}

Integer Lifter::lift(const Fp& x) const {
  if (x.modulus() != q_) throw ReductionError("lifting from the wrong residue field");
  if (centered_) {
    long v = x.value();
    if (2 * v > static_cast<long>(q_)) v -= q_;
    if (std::abs(v) > bound_) throw ReductionError("centered lift exceeds the bound");
    return Integer(v);
  }
  const auto& hit = table_[x.value()];
  if (!hit) throw ReductionError("residue " + std::to_string(x.value()) + " matches no alphabet member");
  return Integer(*hit);
}

Element<Rational> lift(const ResidueContext& ctx, const Element<Fp>& x, const Lifter& lifter) {
  const Element<Fp> v = ctx.residue->embed(x, 1);
  std::vector<Rational> flat;
  for (const Fp& c : v.flat()) flat.emplace_back(lifter.lift(c));
  return ctx.theta->tower().from_flat(1, flat);
}

SkewPoly<Rational> lift(const ResidueContext& ctx, const SkewPoly<Fp>& a, const Lifter& lifter) {
  std::vector<Element<Rational>> c;
  for (const auto& x : a.coeffs()) c.push_back(lift(ctx, x, lifter));
  return SkewPoly<Rational>(ctx.theta.get(), c);
}

std::optional<SkewPoly<Rational>> residue_decode_and_lift(const GabidulinCode<Rational>& code,
                                                          const std::vector<Element<Rational>>& y,
                                                          const ResidueContext& ctx, const Lifter& lifter,
                                                          const ResidueJob& job, SkewPoly<Fp>* residue_message) {
  if (&code.theta() != ctx.theta.get()) throw ReductionError("code and residue context use different automorphisms");
  std::optional<GabidulinCode<Fp>> rc;
  try {
    rc.emplace(ctx.theta_bar, reduce(ctx, code.support()), code.k());
  } catch (const InvalidCode&) {
    throw ReductionError("reduced support is linearly dependent");
  }
  const auto basis = power_basis(*ctx.residue);
  std::optional<SkewPoly<Fp>> f;
  if (job.line) {
    LinePattern<Fp> lp{{}, job.line->rows, job.line->cols};
    for (const auto& row : job.line->masked) {
      lp.masked.emplace_back();
      for (const auto& e : row) {
        if (!e) {
          lp.masked.back().push_back(std::nullopt);
        } else {
          if (e->layer() != 0) throw ReductionError("matrix entries must lie in the base field");
          lp.masked.back().push_back(ctx.residue->scalar(reduce_scalar(e->flat()[0], ctx.q), 0));
        }
      }
    }
    f = decode_line_erasures(*rc, basis, lp, job.method, job.options, job.erasure_trace);
  } else {
    auto yr = reduce(ctx, y);
    if (job.network) {
      NetworkPattern<Fp> np{reduce(ctx, job.network->A_r_hat), reduce(ctx, job.network->B_c_hat)};
      f = decode_network_erasures(*rc, basis, yr, np, job.method, job.options, job.erasure_trace);
    } else {
      auto r = decode(*rc, yr, job.method, job.options);
      if (r) f = r->f;
    }
  }
  if (!f) return std::nullopt;
  if (residue_message) *residue_message = *f;
  return lift(ctx, *f, lifter);
}

std::optional<SkewPoly<Rational>> residue_decode_traced(const GabidulinCode<Rational>& code,
                                                        const std::vector<Element<Rational>>& y,
                                                        const ResidueContext& ctx, const Lifter& lifter,
                                                        ResidueJob job, std::string& text) {
  WbTrace<Fp> wb;
  ErasureTrace<Fp> er;
  job.options.trace = &wb;
  job.erasure_trace = &er;
  const bool erasures = job.line || job.network;
  std::vector<std::string> lines;
  if (!job.line) lines.push_back("y_reduced = " + format_elements(reduce(ctx, y)));
  SkewPoly<Fp> fr;
  auto f = residue_decode_and_lift(code, y, ctx, lifter, job, &fr);
  if (erasures) append_erasure_trace(lines, er);
  append_wb_trace(lines, wb);
  append_result(lines, wb);
  if (f) {
    if (erasures) lines.push_back("F = " + er.F.to_string());
    lines.push_back("f_residue = " + fr.to_string());
    lines.push_back("f = " + f->to_string());
  } else {
    lines.push_back("fail");
  }
  text = join_lines(lines);
  return f;
}

}  // namespace gabidulin
