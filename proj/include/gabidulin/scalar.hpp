#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gabidulin {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parse "a", "-a" or "a/b" into a canonical rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }
inline Rational inverse(const Rational& q) {
  if (is_zero(q)) throw std::domain_error("division by zero");
  return 1 / q;
}

/// Element of the prime field F_p. The modulus travels with the value so the
/// type is self-contained; p must be below 2^31.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t value, std::uint32_t p);

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  Fp operator+(const Fp& o) const {
    std::uint32_t s = v_ + o.v_;
    return raw(s >= p_ ? s - p_ : s, p_);
  }
  Fp operator-(const Fp& o) const { return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_); }
  Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp operator*(const Fp& o) const {
    return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % p_), p_);
  }
  Fp operator/(const Fp& o) const { return *this * o.inverse(); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  bool operator==(const Fp& o) const { return v_ == o.v_; }
  bool operator!=(const Fp& o) const { return v_ != o.v_; }

  Fp inverse() const;

 private:
  static Fp raw(std::uint32_t v, std::uint32_t p) {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }
  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

inline bool is_zero(const Fp& x) { return x.value() == 0; }
inline bool is_one(const Fp& x) { return x.value() == 1; }
inline Fp inverse(const Fp& x) { return x.inverse(); }
std::string to_string(const Fp& x);

bool is_prime(std::uint64_t n);

/// Runtime description of the base field: Q or F_p.
template <class S>
struct BaseField;

template <>
struct BaseField<Rational> {
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(std::int64_t v) const { return Rational(static_cast<long>(v)); }
  Rational parse(const std::string& s) const { return parse_rational(s); }
  std::uint32_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }
};

template <>
struct BaseField<Fp> {
  std::uint32_t p = 2;
  Fp zero() const { return Fp(0, p); }
  Fp one() const { return Fp(1, p); }
  Fp from_int(std::int64_t v) const { return Fp(v, p); }
  Fp parse(const std::string& s) const;
  std::uint32_t characteristic() const { return p; }
  std::string name() const { return "F" + std::to_string(p); }
};

}  // namespace gabidulin
