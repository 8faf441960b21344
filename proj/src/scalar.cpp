#include "gabidulin/scalar.hpp"

#include <cctype>

namespace gabidulin {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Fp::Fp(std::int64_t value, std::uint32_t p) : p_(p) {
  if (p < 2 || p >= (1u << 31)) throw std::invalid_argument("prime modulus out of range");
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  v_ = static_cast<std::uint32_t>(r);
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("division by zero");
  std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return Fp(x0, p_);
}

std::string to_string(const Fp& x) { return std::to_string(x.value()); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Fp BaseField<Fp>::parse(const std::string& s) const {
  Rational q = parse_rational(s);
  Fp num(mpz_class(q.get_num() % p).get_si(), p);
  Fp den(mpz_class(q.get_den() % p).get_si(), p);
  return num / den;
}

}  // namespace gabidulin
