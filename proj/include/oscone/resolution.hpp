#pragma once

// Hilbert polynomials read off graded free resolutions over products of
// projective spaces.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "oscone/errors.hpp"
#include "oscone/exactalg/binomial.hpp"
#include "oscone/exactalg/rational.hpp"

namespace oscone::resolution {

/// S(twist)^multiplicity; `twist` has one entry per projective factor.
struct Summand {
  std::vector<long long> twist;
  unsigned multiplicity = 1;
};

/// Free resolution 0 <- F_0 <- F_1 <- ... of a quotient S/I over the Cox ring
/// of P^{n_1} x ... x P^{n_r}. steps[0] is F_0.
struct GradedResolution {
  std::vector<int> ambient_dims;
  std::vector<std::vector<Summand>> steps;
};

inline void validate(const GradedResolution& res) {
  if (res.ambient_dims.empty()) throw InconsistentResolution("ambient space has no factors");
  for (int n : res.ambient_dims) {
    if (n < 0) throw InconsistentResolution("negative projective dimension");
  }
  if (res.steps.empty() || res.steps.front().empty()) {
    throw InconsistentResolution("step 0 must be a nonzero free module");
  }
  for (const auto& step : res.steps) {
    for (const auto& summand : step) {
      if (summand.twist.size() != res.ambient_dims.size()) {
        throw InconsistentResolution("twist has " + std::to_string(summand.twist.size()) +
                                     " entries for " + std::to_string(res.ambient_dims.size()) +
                                     " factors");
      }
    }
  }
}

inline long long rank(const std::vector<Summand>& step) {
  long long r = 0;
  for (const auto& s : step) r += s.multiplicity;
  return r;
}

/// sum_i (-1)^i rank F_i; zero for a quotient of positive codimension.
inline long long alternating_rank_sum(const GradedResolution& res) {
  validate(res);
  long long acc = 0;
  for (std::size_t i = 0; i < res.steps.size(); ++i) {
    acc += (i % 2 == 0 ? 1 : -1) * rank(res.steps[i]);
  }
  return acc;
}

/// Hilbert polynomial of S(twist) at `point`: prod_f binom(x_f + twist_f + n_f, n_f).
inline BigInt summand_dimension(const std::vector<int>& dims, const Summand& summand,
                                const std::vector<long long>& point) {
  BigInt acc = 1;
  for (std::size_t f = 0; f < dims.size(); ++f) {
    acc *= gen_binomial(BigInt(point[f]) + summand.twist[f] + dims[f],
                        static_cast<unsigned>(dims[f]));
  }
  return acc * summand.multiplicity;
}

/// Alternating sum of the twisted dimension polynomials evaluated at `point`.
inline Rational hilbert_poly_eval(const GradedResolution& res, const std::vector<long long>& point) {
  validate(res);
  if (point.size() != res.ambient_dims.size()) {
    throw InconsistentResolution("evaluation point has wrong number of coordinates");
  }
  BigInt acc = 0;
  for (std::size_t i = 0; i < res.steps.size(); ++i) {
    BigInt step_sum = 0;
    for (const auto& summand : res.steps[i]) {
      step_sum += summand_dimension(res.ambient_dims, summand, point);
    }
    acc += (i % 2 == 0) ? step_sum : BigInt(-step_sum);
  }
  return Rational(acc);
}

inline Rational hilbert_poly_eval(const GradedResolution& res, long long x) {
  return hilbert_poly_eval(res, std::vector<long long>{x});
}

inline Rational hilbert_poly_eval(const GradedResolution& res, long long x, long long y) {
  return hilbert_poly_eval(res, std::vector<long long>{x, y});
}

/// Hilbert-Burch resolution of a general d=4 fiber in P^2: three cubic minors
/// with syzygies in degrees 4 and 5.
inline GradedResolution generic_fiber_resolution_d4() {
  return {{2},
          {{{{0}, 1}},
           {{{-3}, 3}},
           {{{-4}, 1}, {{-5}, 1}}}};
}

/// 0 -> S(-3,-4) + S(-6,-5) -> S(-3,-3)^3 -> S on P^1 x P^2.
inline GradedResolution osculating_cone_resolution_d4() {
  return {{1, 2},
          {{{{0, 0}, 1}},
           {{{-3, -3}, 3}},
           {{{-3, -4}, 1}, {{-6, -5}, 1}}}};
}

/// Invariants of a curve on P^1 x P^(n) from its bigraded Hilbert polynomial
/// H(x,y) = a x + b y + chi.
struct CurveInvariants {
  BigInt fiber_degree;    // a: points over a general point of P^1
  BigInt base_degree;     // b: degree of the image in P^n
  BigInt total_degree;    // a + b
  BigInt arithmetic_genus;  // 1 - chi
};

inline CurveInvariants curve_invariants(const GradedResolution& res) {
  if (res.ambient_dims.size() != 2) throw InconsistentResolution("expected a product P^1 x P^n");
  Rational h00 = hilbert_poly_eval(res, 0, 0);
  Rational h10 = hilbert_poly_eval(res, 1, 0);
  Rational h01 = hilbert_poly_eval(res, 0, 1);
  Rational h11 = hilbert_poly_eval(res, 1, 1);
  // A curve's Hilbert polynomial is bilinear-free: H(1,1) - H(1,0) - H(0,1) + H(0,0) = 0.
  if (!(h11 - h10 - h01 + h00).is_zero()) {
    throw InconsistentResolution("Hilbert polynomial is not that of a curve");
  }
  CurveInvariants inv;
  inv.fiber_degree = (h10 - h00).numerator();
  inv.base_degree = (h01 - h00).numerator();
  inv.total_degree = inv.fiber_degree + inv.base_degree;
  inv.arithmetic_genus = 1 - h00.numerator();
  return inv;
}

/// The double sum sum_{i=1}^{d-2} (-1)^i sum_{j=1}^{i} binom(d-1,i+1)(1-3j)binom(d-3-i-j,d-2),
/// i.e. H(0,0) - 1 for the Eagon-Northcott resolution of the locus.
inline BigInt genus_double_sum(int d) {
  if (d < 3) throw BadDimension("d must be at least 3, got " + std::to_string(d));
  BigInt total = 0;
  for (int i = 1; i <= d - 2; ++i) {
    BigInt inner = 0;
    for (int j = 1; j <= i; ++j) {
      inner += gen_binomial(d - 1, static_cast<unsigned>(i + 1)) * (1 - 3 * j) *
               gen_binomial(d - 3 - i - j, static_cast<unsigned>(d - 2));
    }
    total += (i % 2 == 0) ? inner : BigInt(-inner);
  }
  return total;
}

/// (3(d-1)(d-2) - 4) 2^(d-3) + 2
inline BigInt genus_closed_form(int d) {
  if (d < 3) throw BadDimension("d must be at least 3, got " + std::to_string(d));
  return BigInt(3 * (d - 1) * (d - 2) - 4) * pow2(static_cast<unsigned>(d - 3)) + 2;
}

/// g = 1 - H(0,0) with H(0,0) = 1 + double sum.
inline BigInt genus_from_sum(int d) {
  BigInt genus = 1 - (1 + genus_double_sum(d));
  BigInt closed = genus_closed_form(d);
  if (genus != closed) {
    throw InternalMismatch("genus sum " + genus.str() + " != closed form " + closed.str() +
                           " at d=" + std::to_string(d));
  }
  return genus;
}

}  // namespace oscone::resolution
