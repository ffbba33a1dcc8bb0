#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "oscone/errors.hpp"
#include "oscone/exactalg/field.hpp"
#include "oscone/exactalg/truncated_poly.hpp"

namespace oscone {

/// Negative-degree tail c_{-k} t^{-k} + ... + c_{-1} t^{-1} of a local series.
template <ExactField Field>
class LaurentPrincipalPart {
 public:
  using scalar_type = typename Field::element_type;

  LaurentPrincipalPart(Field field, unsigned order)
      : field_(std::move(field)), coeffs_(order, field_.zero()) {
    if (order == 0) throw InvalidArgument("principal part order must be positive");
  }

  /// Principal part of t^{-shift} * f(t), where f is a power series mod t^cap.
  static LaurentPrincipalPart from_shifted_series(const TruncatedUniPoly<Field>& f,
                                                  unsigned shift) {
    LaurentPrincipalPart out(f.field(), shift);
    for (unsigned i = 0; i < shift && i < f.cap(); ++i) {
      out.set(static_cast<int>(i) - static_cast<int>(shift), f[i]);
    }
    return out;
  }

  const Field& field() const { return field_; }
  unsigned order() const { return static_cast<unsigned>(coeffs_.size()); }

  /// Coefficient of t^degree; zero outside [-order, -1].
  scalar_type coefficient(int degree) const {
    if (degree >= 0 || degree < -static_cast<int>(order())) return field_.zero();
    return coeffs_[static_cast<std::size_t>(-degree - 1)];
  }
  void set(int degree, scalar_type c) {
    if (degree >= 0 || degree < -static_cast<int>(order())) {
      throw InvalidArgument("degree " + std::to_string(degree) + " outside principal range");
    }
    coeffs_[static_cast<std::size_t>(-degree - 1)] = std::move(c);
  }

  friend bool operator==(const LaurentPrincipalPart& a, const LaurentPrincipalPart& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const {
    std::string out;
    for (int deg = -static_cast<int>(order()); deg <= -1; ++deg) {
      auto c = coefficient(deg);
      if (c.is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")*t^" + std::to_string(deg);
    }
    return out.empty() ? "0" : out;
  }

 private:
  Field field_;
  std::vector<scalar_type> coeffs_;  // index i holds degree -(i+1)
};

}  // namespace oscone
