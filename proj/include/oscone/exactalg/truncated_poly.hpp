#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "oscone/errors.hpp"
#include "oscone/exactalg/field.hpp"

namespace oscone {

/// Dense polynomial in one variable modulo t^cap.
template <ExactField Field>
class TruncatedUniPoly {
 public:
  using scalar_type = typename Field::element_type;

  TruncatedUniPoly(Field field, std::size_t cap)
      : field_(std::move(field)), coeffs_(cap, field_.zero()) {
    if (cap == 0) throw InvalidArgument("truncation cap must be positive");
  }

  /// Coefficients beyond cap are dropped; missing ones are zero.
  TruncatedUniPoly(Field field, std::size_t cap, const std::vector<scalar_type>& coeffs)
      : TruncatedUniPoly(std::move(field), cap) {
    for (std::size_t i = 0; i < coeffs.size() && i < cap; ++i) coeffs_[i] = coeffs[i];
  }

  static TruncatedUniPoly constant(Field field, std::size_t cap, scalar_type c) {
    TruncatedUniPoly out(std::move(field), cap);
    out.coeffs_[0] = std::move(c);
    return out;
  }

  /// The monomial t (zero when cap == 1).
  static TruncatedUniPoly variable(Field field, std::size_t cap) {
    TruncatedUniPoly out(std::move(field), cap);
    if (cap > 1) out.coeffs_[1] = out.field_.one();
    return out;
  }

  const Field& field() const { return field_; }
  std::size_t cap() const { return coeffs_.size(); }
  const std::vector<scalar_type>& coefficients() const { return coeffs_; }
  const scalar_type& operator[](std::size_t i) const { return coeffs_.at(i); }
  void set(std::size_t i, scalar_type c) { coeffs_.at(i) = std::move(c); }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  friend TruncatedUniPoly operator+(const TruncatedUniPoly& a, const TruncatedUniPoly& b) {
    check_compatible(a, b);
    TruncatedUniPoly out = a;
    for (std::size_t i = 0; i < out.cap(); ++i) out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return out;
  }
  friend TruncatedUniPoly operator-(const TruncatedUniPoly& a, const TruncatedUniPoly& b) {
    check_compatible(a, b);
    TruncatedUniPoly out = a;
    for (std::size_t i = 0; i < out.cap(); ++i) out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return out;
  }
  friend TruncatedUniPoly operator*(const TruncatedUniPoly& a, const TruncatedUniPoly& b) {
    check_compatible(a, b);
    TruncatedUniPoly out(a.field_, a.cap());
    const std::size_t cap = a.cap();
    for (std::size_t i = 0; i < cap; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < cap; ++j) {
        out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }
  friend TruncatedUniPoly operator*(const scalar_type& s, const TruncatedUniPoly& a) {
    TruncatedUniPoly out = a;
    for (auto& c : out.coeffs_) c = s * c;
    return out;
  }

  TruncatedUniPoly pow(unsigned e) const {
    TruncatedUniPoly acc = constant(field_, cap(), field_.one());
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
  }

  friend bool operator==(const TruncatedUniPoly& a, const TruncatedUniPoly& b) {
    return a.cap() == b.cap() && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < cap(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + coeffs_[i].to_string() + ")";
      if (i > 0) out += "*t^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  static void check_compatible(const TruncatedUniPoly& a, const TruncatedUniPoly& b) {
    if (a.cap() != b.cap() || !(a.field_ == b.field_)) {
      throw InvalidArgument("truncated polynomials over different rings");
    }
  }

  Field field_;
  std::vector<scalar_type> coeffs_;
};

/// Multiplicative inverse modulo t^cap.
template <ExactField Field>
TruncatedUniPoly<Field> series_inverse(const TruncatedUniPoly<Field>& f) {
  const auto& field = f.field();
  if (f[0].is_zero()) throw NonUnit("constant term is zero; series is not invertible");
  const auto inv0 = field.one() / f[0];
  TruncatedUniPoly<Field> g(field, f.cap());
  g.set(0, inv0);
  for (std::size_t n = 1; n < f.cap(); ++n) {
    auto acc = field.zero();
    for (std::size_t i = 1; i <= n; ++i) acc += f[i] * g[n - i];
    g.set(n, -(acc * inv0));
  }
  return g;
}

}  // namespace oscone
