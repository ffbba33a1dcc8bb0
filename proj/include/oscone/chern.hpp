#pragma once

// Chern-class calculus on P^1 x P^(d-2) for the degeneracy locus of the
// 2 x (d-1) matrix with rows (u_0..u_{d-2}) and (t_0 q_1j - t_1 q_0j).
//
// s and t are the hyperplane classes of P^1 and P^(d-2); the Chow ring is
// k[s,t]/(s^2, t^(d-1)). The cokernel bundle F of the first column satisfies
// c(F) = 1/(1-t), and the locus is the zero scheme of a section of F(3,2)
// (of F(2) in a single fiber).

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "oscone/errors.hpp"
#include "oscone/exactalg/binomial.hpp"
#include "oscone/exactalg/field.hpp"
#include "oscone/exactalg/truncated_poly.hpp"

namespace oscone::chern {

inline void require_dimension(int d) {
  if (d < 3) throw BadDimension("d must be at least 3, got " + std::to_string(d));
}

/// Element of k[s,t]/(s^2, t^(d-1)).
template <ExactField Field>
class TruncatedBigradedPoly {
 public:
  using scalar_type = typename Field::element_type;

  TruncatedBigradedPoly(Field field, int d) : field_(std::move(field)), d_(d) {
    require_dimension(d);
    for (auto& row : coeffs_) row.assign(static_cast<std::size_t>(d - 1), field_.zero());
  }

  static TruncatedBigradedPoly constant(Field field, int d, scalar_type c) {
    TruncatedBigradedPoly out(std::move(field), d);
    out.coeffs_[0][0] = std::move(c);
    return out;
  }
  /// a*s + b*t
  static TruncatedBigradedPoly linear(Field field, int d, scalar_type a, scalar_type b) {
    TruncatedBigradedPoly out(std::move(field), d);
    out.coeffs_[1][0] = std::move(a);
    if (d - 1 > 1) out.coeffs_[0][1] = std::move(b);
    return out;
  }
  static TruncatedBigradedPoly t_power(Field field, int d, int e) {
    TruncatedBigradedPoly out(std::move(field), d);
    if (e >= 0 && e < d - 1) out.coeffs_[0][static_cast<std::size_t>(e)] = out.field_.one();
    return out;
  }

  const Field& field() const { return field_; }
  int d() const { return d_; }
  int t_cap() const { return d_ - 1; }

  /// Coefficient of s^s_deg t^t_deg (zero outside the truncation).
  scalar_type coefficient(int s_deg, int t_deg) const {
    if (s_deg < 0 || s_deg > 1 || t_deg < 0 || t_deg >= t_cap()) return field_.zero();
    return coeffs_[static_cast<std::size_t>(s_deg)][static_cast<std::size_t>(t_deg)];
  }

  friend TruncatedBigradedPoly operator+(const TruncatedBigradedPoly& a,
                                         const TruncatedBigradedPoly& b) {
    check_compatible(a, b);
    TruncatedBigradedPoly out = a;
    for (std::size_t s = 0; s < 2; ++s) {
      for (std::size_t t = 0; t < out.coeffs_[s].size(); ++t) {
        out.coeffs_[s][t] = a.coeffs_[s][t] + b.coeffs_[s][t];
      }
    }
    return out;
  }

  friend TruncatedBigradedPoly operator*(const TruncatedBigradedPoly& a,
                                         const TruncatedBigradedPoly& b) {
    check_compatible(a, b);
    TruncatedBigradedPoly out(a.field_, a.d_);
    const std::size_t cap = static_cast<std::size_t>(a.t_cap());
    for (std::size_t sa = 0; sa < 2; ++sa) {
      for (std::size_t sb = 0; sa + sb < 2; ++sb) {
        for (std::size_t ta = 0; ta < cap; ++ta) {
          if (a.coeffs_[sa][ta].is_zero()) continue;
          for (std::size_t tb = 0; ta + tb < cap; ++tb) {
            out.coeffs_[sa + sb][ta + tb] += a.coeffs_[sa][ta] * b.coeffs_[sb][tb];
          }
        }
      }
    }
    return out;
  }

  TruncatedBigradedPoly pow(int e) const {
    TruncatedBigradedPoly acc = constant(field_, d_, field_.one());
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
  }

  friend bool operator==(const TruncatedBigradedPoly& a, const TruncatedBigradedPoly& b) {
    return a.d_ == b.d_ && a.coeffs_ == b.coeffs_;
  }

 private:
  static void check_compatible(const TruncatedBigradedPoly& a, const TruncatedBigradedPoly& b) {
    if (a.d_ != b.d_ || !(a.field_ == b.field_)) {
      throw InvalidArgument("bigraded classes from different rings");
    }
  }

  Field field_;
  int d_;
  std::array<std::vector<scalar_type>, 2> coeffs_;
};

namespace detail {
inline BigInt to_integer(const Rational& q, const char* what) {
  if (!q.is_integer()) throw InternalMismatch(std::string(what) + " is not an integer");
  return q.numerator();
}
}  // namespace detail

/// c(F) = 1/(1-t) mod t^(d-1).
inline TruncatedUniPoly<RationalField> cokernel_total_chern(int d) {
  require_dimension(d);
  RationalField q;
  const auto cap = static_cast<std::size_t>(d - 1);
  auto one_minus_t = TruncatedUniPoly<RationalField>::constant(q, cap, q.one()) -
                     TruncatedUniPoly<RationalField>::variable(q, cap);
  return series_inverse(one_minus_t);
}

/// c_k(F (x) L) for a rank-r bundle F with total class `c` and c_1(L) = l,
/// via sum_i binom(r-i, k-i) c_i(F) l^(k-i).
inline Rational twisted_chern_class(const TruncatedUniPoly<RationalField>& c, int rank, int k,
                                    const Rational& l) {
  Rational acc(0);
  for (int i = 0; i <= k && i < static_cast<int>(c.cap()); ++i) {
    Rational lpow(1);
    for (int e = 0; e < k - i; ++e) lpow *= l;
    acc += Rational(gen_binomial(rank - i, static_cast<unsigned>(k - i))) * c[i] * lpow;
  }
  return acc;
}

/// Class of the locus: c_{d-2}(F~(3,2)) = sum_i t^i (3s+2t)^(d-2-i).
inline TruncatedBigradedPoly<RationalField> osculating_cone_class(int d) {
  require_dimension(d);
  RationalField q;
  using Poly = TruncatedBigradedPoly<RationalField>;
  const Poly twist = Poly::linear(q, d, Rational(3), Rational(2));
  Poly acc(q, d);
  for (int i = 0; i <= d - 2; ++i) acc = acc + Poly::t_power(q, d, i) * twist.pow(d - 2 - i);
  return acc;
}

inline BigInt fiber_count_closed_form(int d) {
  require_dimension(d);
  return pow2(static_cast<unsigned>(d - 1)) - 1;
}

/// c_{d-2}(F(2)) from the twisting identity (rank d-2, c_1 = 2).
inline BigInt fiber_count_twisting(int d) {
  require_dimension(d);
  return detail::to_integer(twisted_chern_class(cokernel_total_chern(d), d - 2, d - 2, Rational(2)),
                            "twisted Chern number");
}

/// Restriction of the locus class to one fiber: drop the 3s part, read off t^(d-2).
inline BigInt fiber_count_from_class(int d) {
  return detail::to_integer(osculating_cone_class(d).coefficient(0, d - 2), "fiber coefficient");
}

/// Fiber length 2^(d-1)-1; all routes must agree.
inline BigInt fiber_count(int d) {
  BigInt twisting = fiber_count_twisting(d);
  BigInt from_class = fiber_count_from_class(d);
  BigInt closed = fiber_count_closed_form(d);
  if (twisting != closed || from_class != closed) {
    throw InternalMismatch("fiber count routes disagree at d=" + std::to_string(d) + ": " +
                           twisting.str() + ", " + from_class.str() + ", " + closed.str());
  }
  return closed;
}

/// Degree against the Segre hyperplane: coefficient of s t^(d-2) in C (s+t).
inline BigInt degree_from_bigraded_class(int d) {
  RationalField q;
  using Poly = TruncatedBigradedPoly<RationalField>;
  auto hyperplane = Poly::linear(q, d, q.one(), q.one());
  return detail::to_integer((osculating_cone_class(d) * hyperplane).coefficient(1, d - 2),
                            "degree coefficient");
}

/// 2^(d-1) - 1 + 3 * sum_{i=1}^{d-2} i 2^(i-1)
inline BigInt degree_explicit_sum(int d) {
  require_dimension(d);
  BigInt sum = 0;
  for (int i = 1; i <= d - 2; ++i) sum += BigInt(i) * pow2(static_cast<unsigned>(i - 1));
  return pow2(static_cast<unsigned>(d - 1)) - 1 + 3 * sum;
}

/// (3(d-1) - 4) 2^(d-2) + 2
inline BigInt degree_closed_form(int d) {
  require_dimension(d);
  return BigInt(3 * (d - 1) - 4) * pow2(static_cast<unsigned>(d - 2)) + 2;
}

inline BigInt osculating_cone_degree(int d) {
  BigInt from_class = degree_from_bigraded_class(d);
  BigInt sum = degree_explicit_sum(d);
  BigInt closed = degree_closed_form(d);
  if (from_class != closed || sum != closed) {
    throw InternalMismatch("degree routes disagree at d=" + std::to_string(d) + ": " +
                           from_class.str() + ", " + sum.str() + ", " + closed.str());
  }
  return closed;
}

}  // namespace oscone::chern
