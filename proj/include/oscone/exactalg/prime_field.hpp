#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "oscone/errors.hpp"

namespace oscone {

/// Largest modulus accepted; keeps residue products inside 64 bits.
inline constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

/// Throws BadPrime unless p is a prime below kMaxPrime.
inline void require_prime(std::uint64_t p) {
  if (p > kMaxPrime || !is_prime(p)) {
    throw BadPrime("modulus " + std::to_string(p) + " is not a supported prime");
  }
}

/// Element of F_p. Carries its modulus so mixed-field arithmetic is caught.
class PrimeFieldElement {
 public:
  PrimeFieldElement() = default;
  PrimeFieldElement(std::uint64_t residue, std::uint64_t modulus)
      : residue_(residue % modulus), modulus_(modulus) {}

  std::uint64_t residue() const { return residue_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return residue_ == 0; }

  PrimeFieldElement pow(std::uint64_t e) const {
    PrimeFieldElement base = *this;
    PrimeFieldElement acc(1, modulus_);
    while (e != 0) {
      if (e & 1U) acc = acc * base;
      base = base * base;
      e >>= 1U;
    }
    return acc;
  }

  PrimeFieldElement inverse() const {
    if (residue_ == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(modulus_));
    return pow(modulus_ - 2);
  }

  PrimeFieldElement operator-() const {
    return {residue_ == 0 ? 0 : modulus_ - residue_, modulus_, Raw{}};
  }

  friend PrimeFieldElement operator+(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    check_same(a, b);
    std::uint64_t s = a.residue_ + b.residue_;
    if (s >= a.modulus_) s -= a.modulus_;
    return {s, a.modulus_, Raw{}};
  }
  friend PrimeFieldElement operator-(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    return a + (-b);
  }
  friend PrimeFieldElement operator*(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    check_same(a, b);
    return {(a.residue_ * b.residue_) % a.modulus_, a.modulus_, Raw{}};
  }
  friend PrimeFieldElement operator/(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    return a * b.inverse();
  }
  PrimeFieldElement& operator+=(const PrimeFieldElement& o) { return *this = *this + o; }
  PrimeFieldElement& operator-=(const PrimeFieldElement& o) { return *this = *this - o; }
  PrimeFieldElement& operator*=(const PrimeFieldElement& o) { return *this = *this * o; }
  PrimeFieldElement& operator/=(const PrimeFieldElement& o) { return *this = *this / o; }

  friend bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    return a.residue_ == b.residue_ && a.modulus_ == b.modulus_;
  }

  std::string to_string() const { return std::to_string(residue_); }
  friend std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& x) {
    return os << x.residue_;
  }

 private:
  struct Raw {};
  PrimeFieldElement(std::uint64_t r, std::uint64_t m, Raw) : residue_(r), modulus_(m) {}

  static void check_same(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    if (a.modulus_ != b.modulus_) {
      throw InvalidArgument("mixed moduli " + std::to_string(a.modulus_) + " and " +
                            std::to_string(b.modulus_));
    }
  }

  std::uint64_t residue_ = 0;
  std::uint64_t modulus_ = 1;
};

}  // namespace oscone
