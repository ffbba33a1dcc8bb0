#pragma once

#include <cstdint>

#include "oscone/exactalg/field.hpp"
#include "oscone/exactalg/rational.hpp"

namespace oscone {

/// m(m-1)...(m-r+1)/r! for any integer m, including negative ones.
/// Each partial product of i+1 consecutive integers is divisible by (i+1)!,
/// so the running division is exact.
inline BigInt gen_binomial(const BigInt& m, unsigned r) {
  BigInt acc = 1;
  for (unsigned i = 0; i < r; ++i) {
    acc *= m - i;
    acc /= i + 1;
  }
  return acc;
}

inline BigInt gen_binomial(long long m, unsigned r) { return gen_binomial(BigInt(m), r); }

/// x(x-1)...(x-j+1)/j! for rational x.
inline Rational frac_binomial(const Rational& x, unsigned j) {
  Rational acc(1);
  for (unsigned i = 0; i < j; ++i) {
    acc *= (x - Rational(static_cast<long long>(i))) / Rational(static_cast<long long>(i + 1));
  }
  return acc;
}

/// binom(1/k, j) embedded in `field`. The coefficients of (1+x)^(1/k) only
/// have primes dividing k in their denominators, so the image exists exactly
/// when the characteristic does not divide k.
template <ExactField Field>
typename Field::element_type frac_binomial_in(const Field& field, std::uint64_t k, unsigned j) {
  if (k == 0) throw InvalidArgument("k must be positive");
  std::uint64_t p = field.characteristic();
  if (p != 0 && k % p == 0) {
    throw WildCharacteristic("binom(1/" + std::to_string(k) + ", j) has no image in " +
                             field.name());
  }
  return field.from_rational(frac_binomial(Rational(1, BigInt(k)), j));
}

inline BigInt factorial(unsigned n) {
  BigInt acc = 1;
  for (unsigned i = 2; i <= n; ++i) acc *= i;
  return acc;
}

inline BigInt pow2(unsigned e) { return BigInt(1) << e; }

}  // namespace oscone
