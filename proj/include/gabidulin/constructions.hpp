#pragma once

#include <cstdint>

#include "gabidulin/automorphism.hpp"

namespace gabidulin {

/// Q[a]/(1 + a + ... + a^(p-1)) for a prime p.
Tower<Rational>::Ptr cyclotomic_tower(int p);

/// F_p extended by the first irreducible monic polynomial of degree m in
/// lexicographic order of coefficient vectors.
Tower<Fp>::Ptr finite_tower(std::uint32_t p, int m);

/// Extends `below` by the first irreducible monic polynomial of degree m over
/// its top layer (which must be a finite field).
Tower<Fp>::Ptr finite_extension(const Tower<Fp>::Ptr& below, int m);

/// theta : a -> a^r on the top generator.
template <class S>
typename Automorphism<S>::Ptr power_automorphism(const typename Tower<S>::Ptr& tower, std::uint64_t r);

/// Frobenius x -> x^q of the top layer over the layer below (q = its size).
typename Automorphism<Fp>::Ptr frobenius(const Tower<Fp>::Ptr& tower);

}  // namespace gabidulin
