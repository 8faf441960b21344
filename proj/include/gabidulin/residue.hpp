#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gabidulin/erasure.hpp"

namespace gabidulin {

/// log2 of the largest absolute power-basis coordinate (0 for the zero
/// element). Throws ReductionError on a non-integral coordinate.
double size_of(const Element<Rational>& x);
double size_of(const std::vector<Element<Rational>>& v);
double size_of(const SkewPoly<Rational>& a);

/// Smallest prime q in [min, cap] modulo which the defining polynomial of a
/// single-layer tower over Q stays irreducible.
std::uint32_t find_inert_prime(const Tower<Rational>& source, std::uint32_t min = 2, std::uint32_t cap = 10000);

struct ResidueContext {
  Automorphism<Rational>::Ptr theta;
  std::uint32_t q = 0;
  Tower<Fp>::Ptr residue;
  Automorphism<Fp>::Ptr theta_bar;
};

ResidueContext make_residue_context(const Automorphism<Rational>::Ptr& theta, std::uint32_t q);

Element<Fp> reduce(const ResidueContext& ctx, const Element<Rational>& x);
std::vector<Element<Fp>> reduce(const ResidueContext& ctx, const std::vector<Element<Rational>>& v);
SkewPoly<Fp> reduce(const ResidueContext& ctx, const SkewPoly<Rational>& a);
Matrix<Element<Fp>> reduce(const ResidueContext& ctx, const Matrix<Element<Rational>>& m);

/// How residue coordinates are mapped back to integers.
class Lifter {
 public:
  /// Each coordinate lifts to the unique alphabet member congruent to it.
  static Lifter alphabet(std::vector<long> values, std::uint32_t q);
  /// Each coordinate lifts to its representative in (-q/2, q/2], which must
  /// not exceed `bound` in absolute value.
  static Lifter centered(long bound, std::uint32_t q);

  Integer lift(const Fp& x) const;

 private:
  Lifter() = default;
  std::vector<std::optional<long>> table_;  // residue -> alphabet member
  bool centered_ = false;
  long bound_ = 0;
  std::uint32_t q_ = 0;
};

Element<Rational> lift(const ResidueContext& ctx, const Element<Fp>& x, const Lifter& lifter);
SkewPoly<Rational> lift(const ResidueContext& ctx, const SkewPoly<Fp>& a, const Lifter& lifter);

struct ResidueJob {
  DecodeMethod method = DecodeMethod::wb;
  std::optional<LinePattern<Rational>> line;
  std::optional<NetworkPattern<Rational>> network;
  WbOptions<Fp> options;
  ErasureTrace<Fp>* erasure_trace = nullptr;
};

/// Reduces code, word and erasure data modulo q, decodes over the residue
/// field, and lifts the message. Returns nullopt when the residue decoder
/// fails; throws ReductionError when reduction or lifting is impossible.
std::optional<SkewPoly<Rational>> residue_decode_and_lift(const GabidulinCode<Rational>& code,
                                                          const std::vector<Element<Rational>>& y,
                                                          const ResidueContext& ctx, const Lifter& lifter,
                                                          const ResidueJob& job = {},
                                                          SkewPoly<Fp>* residue_message = nullptr);

/// Same pipeline with the WB method forced onto a trace; writes the
/// reduced word, erasure processing, reconstruction rounds and results.
std::optional<SkewPoly<Rational>> residue_decode_traced(const GabidulinCode<Rational>& code,
                                                        const std::vector<Element<Rational>>& y,
                                                        const ResidueContext& ctx, const Lifter& lifter,
                                                        ResidueJob job, std::string& text);

}  // namespace gabidulin
