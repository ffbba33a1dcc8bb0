#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include "oscone/errors.hpp"
#include "oscone/exactalg/prime_field.hpp"
#include "oscone/exactalg/rational.hpp"

namespace oscone {

// A field descriptor is a small value that knows how to make elements.
// Containers hold a copy so they can produce zeros and embed constants.
template <class F>
concept ExactField = requires(const F& f, const typename F::element_type& a,
                              long long n, const Rational& q) {
  typename F::element_type;
  { f.zero() } -> std::same_as<typename F::element_type>;
  { f.one() } -> std::same_as<typename F::element_type>;
  { f.from_int(n) } -> std::same_as<typename F::element_type>;
  { f.from_rational(q) } -> std::same_as<typename F::element_type>;
  { f.characteristic() } -> std::same_as<std::uint64_t>;
  { f.name() } -> std::convertible_to<std::string>;
  { a + a } -> std::same_as<typename F::element_type>;
  { a - a } -> std::same_as<typename F::element_type>;
  { a * a } -> std::same_as<typename F::element_type>;
  { a / a } -> std::same_as<typename F::element_type>;
  { -a } -> std::same_as<typename F::element_type>;
  { a == a } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
};

struct RationalField {
  using element_type = Rational;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(long long n) const { return Rational(n); }
  Rational from_rational(const Rational& q) const { return q; }
  std::uint64_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

class PrimeField {
 public:
  using element_type = PrimeFieldElement;

  explicit PrimeField(std::uint64_t p) : p_(p) { require_prime(p); }

  PrimeFieldElement zero() const { return {0, p_}; }
  PrimeFieldElement one() const { return {1, p_}; }
  PrimeFieldElement from_int(long long n) const {
    auto m = static_cast<long long>(p_);
    long long r = n % m;
    if (r < 0) r += m;
    return {static_cast<std::uint64_t>(r), p_};
  }
  PrimeFieldElement from_big(const BigInt& n) const {
    BigInt r = n % p_;
    if (r < 0) r += p_;
    return {r.convert_to<std::uint64_t>(), p_};
  }
  /// Reduces a/b mod p; a denominator divisible by p has no image.
  PrimeFieldElement from_rational(const Rational& q) const {
    PrimeFieldElement den = from_big(q.denominator());
    if (den.is_zero()) {
      throw DivisionByZero("denominator of " + q.to_string() + " vanishes mod " +
                           std::to_string(p_));
    }
    return from_big(q.numerator()) / den;
  }
  std::uint64_t characteristic() const { return p_; }
  std::uint64_t modulus() const { return p_; }
  std::string name() const { return "F_" + std::to_string(p_); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

static_assert(ExactField<RationalField>);
static_assert(ExactField<PrimeField>);

/// Characteristic guard shared by every tame-only operation: rejects char 2
/// and any characteristic dividing k.
template <ExactField Field>
void require_tame(const Field& field, std::uint64_t k) {
  std::uint64_t p = field.characteristic();
  if (p == 0) return;
  if (p == 2) throw WildCharacteristic("characteristic 2 is excluded");
  if (k % p == 0) {
    throw WildCharacteristic("characteristic " + std::to_string(p) + " divides k = " +
                             std::to_string(k));
  }
}

}  // namespace oscone
