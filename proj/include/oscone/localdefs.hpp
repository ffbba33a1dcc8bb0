#pragma once

// Local deformation equations at a point p of multiplicity k in D:
//
//   E_i(lambda, c) = sum_{j=i}^{k} lambda_j lambda_{k+i-j} + 2 c lambda_i,  i = 1..k,
//
// their solution families, an exhaustive F_p oracle, and the k-th root basis
// beta_i = beta_1^i with beta_k = t^-k + c_{k-1} t^-(k-1) + ... + c_1 t^-1.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "oscone/errors.hpp"
#include "oscone/exactalg/binomial.hpp"
#include "oscone/exactalg/field.hpp"
#include "oscone/exactalg/laurent.hpp"
#include "oscone/exactalg/truncated_poly.hpp"

namespace oscone::localdefs {

/// The k quadratic equations in (lambda_1..lambda_k, c) over `Field`.
template <ExactField Field>
class LocalSystem {
 public:
  using scalar_type = typename Field::element_type;

  LocalSystem(Field field, unsigned k) : field_(std::move(field)), k_(k) {
    if (k == 0) throw InvalidArgument("multiplicity k must be positive");
  }

  unsigned k() const { return k_; }
  const Field& field() const { return field_; }

  /// E_i at (lambda, c); `lambda` is 0-based (lambda[0] = lambda_1).
  scalar_type equation(unsigned i, const std::vector<scalar_type>& lambda,
                       const scalar_type& c) const {
    if (i < 1 || i > k_ || lambda.size() != k_) throw InvalidArgument("bad equation index");
    scalar_type acc = field_.zero();
    for (unsigned j = i; j <= k_; ++j) acc += lambda[j - 1] * lambda[k_ + i - j - 1];
    return acc + field_.from_int(2) * c * lambda[i - 1];
  }

  bool is_solution(const std::vector<scalar_type>& lambda, const scalar_type& c) const {
    for (unsigned i = 1; i <= k_; ++i) {
      if (!equation(i, lambda, c).is_zero()) return false;
    }
    return true;
  }

 private:
  Field field_;
  unsigned k_;
};

/// A linearly parameterized family of points (lambda_1..lambda_k, c): each
/// coordinate is sum_a coords[x][a] * param_a.
struct SolutionFamily {
  std::string name;
  unsigned num_params = 0;
  /// Case 1 families range over c != 0 (param 0 is c); case 2 over all params.
  bool first_param_nonzero = false;
  std::vector<std::vector<Rational>> coords;  // k+1 rows (lambda_1..lambda_k, c)
};

struct SolutionSet {
  unsigned k = 0;
  std::vector<SolutionFamily> families;
};

inline unsigned free_count(unsigned k) { return k / 2; }

/// Case 1 (c != 0): lambda = 0 or lambda = -2c e_k.
/// Case 2 (c = 0): lambda_1..lambda_{floor(k/2)} free, the rest zero.
inline SolutionSet characterize_solutions(unsigned k) {
  if (k == 0) throw InvalidArgument("multiplicity k must be positive");
  SolutionSet set{k, {}};

  SolutionFamily zero{"case1: c != 0, lambda = 0", 1, true,
                      std::vector<std::vector<Rational>>(k + 1, {Rational(0)})};
  zero.coords[k][0] = 1;
  SolutionFamily top{"case1: c != 0, lambda_k = -2c", 1, true,
                     std::vector<std::vector<Rational>>(k + 1, {Rational(0)})};
  top.coords[k - 1][0] = -2;
  top.coords[k][0] = 1;

  const unsigned m = free_count(k);
  SolutionFamily free{"case2: c = 0, lambda_1..lambda_" + std::to_string(m) + " free", m, false,
                      std::vector<std::vector<Rational>>(k + 1, std::vector<Rational>(m))};
  for (unsigned a = 0; a < m; ++a) free.coords[a][a] = 1;

  set.families = {std::move(zero), std::move(top), std::move(free)};
  return set;
}

/// Substitutes a family into every E_i and expands: E_i becomes a quadratic
/// form sum_{a,b} Q_ab param_a param_b, which must vanish identically.
inline bool family_satisfies_symbolically(unsigned k, const SolutionFamily& family) {
  const unsigned m = family.num_params;
  const auto& x = family.coords;  // x[0..k-1] lambdas, x[k] = c
  for (unsigned i = 1; i <= k; ++i) {
    std::vector<std::vector<Rational>> q(m, std::vector<Rational>(m));
    auto add_product = [&](const std::vector<Rational>& u, const std::vector<Rational>& v,
                           const Rational& scale) {
      for (unsigned a = 0; a < m; ++a) {
        for (unsigned b = 0; b < m; ++b) q[std::min(a, b)][std::max(a, b)] += scale * u[a] * v[b];
      }
    };
    for (unsigned j = i; j <= k; ++j) add_product(x[j - 1], x[k + i - j - 1], Rational(1));
    add_product(x[k], x[i - 1], Rational(2));
    for (const auto& row : q) {
      for (const auto& coeff : row) {
        if (!coeff.is_zero()) return false;
      }
    }
  }
  return true;
}

using Tuple = std::vector<std::uint32_t>;  // (lambda_1..lambda_k, c) residues

/// Every point of every family over F_p, sorted and deduplicated.
inline std::vector<Tuple> instantiate(const SolutionSet& set, const PrimeField& field) {
  const std::uint64_t p = field.modulus();
  std::vector<Tuple> out;
  for (const auto& fam : set.families) {
    std::vector<std::vector<PrimeFieldElement>> coeffs;
    for (const auto& row : fam.coords) {
      std::vector<PrimeFieldElement> r;
      for (const auto& q : row) r.push_back(field.from_rational(q));
      coeffs.push_back(std::move(r));
    }
    std::vector<std::uint64_t> params(fam.num_params, 0);
    if (fam.first_param_nonzero && fam.num_params > 0) params[0] = 1;
    while (true) {
      Tuple t;
      t.reserve(coeffs.size());
      for (const auto& row : coeffs) {
        PrimeFieldElement v = field.zero();
        for (unsigned a = 0; a < fam.num_params; ++a) v += row[a] * field.from_int(static_cast<long long>(params[a]));
        t.push_back(static_cast<std::uint32_t>(v.residue()));
      }
      out.push_back(std::move(t));
      // odometer over the parameter box
      unsigned a = 0;
      for (; a < fam.num_params; ++a) {
        if (++params[a] < p) break;
        params[a] = (a == 0 && fam.first_param_nonzero) ? 1 : 0;
      }
      if (a == fam.num_params) break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline constexpr std::uint64_t kEnumerationBudget = 100'000'000;

/// Exhaustive search of F_p^(k+1) in lexicographic order. The first
/// coordinate is partitioned across `workers` threads; per-thread results are
/// concatenated in order, so the output is sorted.
inline std::vector<Tuple> brute_force_solutions(unsigned k, std::uint64_t p, unsigned workers = 1) {
  if (k == 0) throw InvalidArgument("multiplicity k must be positive");
  require_prime(p);
  if (p == 2) throw WildCharacteristic("characteristic 2 is excluded");
  std::uint64_t size = 1;
  for (unsigned i = 0; i <= k; ++i) {
    size *= p;
    if (size > kEnumerationBudget) {
      throw BudgetExceeded("p^(k+1) exceeds the enumeration budget of 10^8");
    }
  }

  const unsigned len = k + 1;
  auto scan = [k, p, len](std::uint64_t first_lo, std::uint64_t first_hi) {
    std::vector<Tuple> found;
    std::vector<std::uint64_t> x(len, 0);
    for (std::uint64_t first = first_lo; first < first_hi; ++first) {
      std::fill(x.begin(), x.end(), 0);
      x[0] = first;
      while (true) {
        const std::uint64_t c = x[k];
        bool ok = true;
        for (unsigned i = 1; i <= k && ok; ++i) {
          std::uint64_t acc = 2 * c % p * x[i - 1];
          for (unsigned j = i; j <= k; ++j) acc += x[j - 1] * x[k + i - j - 1];
          ok = acc % p == 0;
        }
        if (ok) found.emplace_back(x.begin(), x.end());
        // advance coordinates 1..k, last one fastest
        bool advanced = false;
        for (unsigned pos = len - 1; pos >= 1; --pos) {
          if (++x[pos] < p) {
            advanced = true;
            break;
          }
          x[pos] = 0;
        }
        if (!advanced) break;
      }
    }
    return found;
  };

  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(p)));
  if (workers == 1) return scan(0, p);
  std::vector<std::vector<Tuple>> parts(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      std::uint64_t lo = p * w / workers;
      std::uint64_t hi = p * (w + 1) / workers;
      pool.emplace_back([&parts, &scan, w, lo, hi] { parts[w] = scan(lo, hi); });
    }
  }
  std::vector<Tuple> out;
  for (auto& part : parts) {
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

inline std::uint64_t expected_cardinality(unsigned k, std::uint64_t p) {
  std::uint64_t free_points = 1;
  for (unsigned i = 0; i < free_count(k); ++i) free_points *= p;
  return 2 * (p - 1) + free_points;
}

struct CaseSplitVerdict {
  bool equal = false;
  std::size_t brute_force_count = 0;
  std::size_t characterized_count = 0;
  std::uint64_t expected_count = 0;
};

inline CaseSplitVerdict verify_case_split(unsigned k, std::uint64_t p, unsigned workers = 1) {
  auto brute = brute_force_solutions(k, p, workers);
  auto characterized = instantiate(characterize_solutions(k), PrimeField(p));
  return {brute == characterized, brute.size(), characterized.size(), expected_cardinality(k, p)};
}

/// beta_1 = t^-1 * unit, unit = sum_{j<k} binom(1/k, j) (c_1 t^(k-1) + ... + c_{k-1} t)^j
/// mod t^k, and the principal parts of beta_i = beta_1^i.
template <ExactField Field>
struct KthRoot {
  unsigned k;
  TruncatedUniPoly<Field> unit;                     // beta_1 * t, mod t^k
  std::vector<LaurentPrincipalPart<Field>> powers;  // principal parts of beta_1..beta_k
  LaurentPrincipalPart<Field> target;               // principal part of F

  /// Coefficient of t^degree in beta_1, for degree in [-1, k-2].
  typename Field::element_type beta1_coefficient(int degree) const {
    int idx = degree + 1;
    if (idx < 0 || idx >= static_cast<int>(unit.cap())) return unit.field().zero();
    return unit[static_cast<std::size_t>(idx)];
  }
  bool matches() const { return powers.back() == target; }
};

template <ExactField Field>
KthRoot<Field> kth_root_principal_part(const Field& field,
                                       const std::vector<typename Field::element_type>& c,
                                       unsigned k) {
  if (k == 0) throw InvalidArgument("k must be positive");
  if (c.size() != k - 1) {
    throw InvalidArgument("expected " + std::to_string(k - 1) + " coefficients c_1..c_{k-1}, got " +
                          std::to_string(c.size()));
  }
  require_tame(field, k);

  using Poly = TruncatedUniPoly<Field>;
  // G(t) = c_1 t^(k-1) + ... + c_{k-1} t, so t^k F = 1 + G.
  Poly g(field, k);
  for (unsigned i = 1; i < k; ++i) g.set(k - i, c[i - 1]);

  Poly unit(field, k);
  Poly g_pow = Poly::constant(field, k, field.one());
  for (unsigned j = 0; j < k; ++j) {
    unit = unit + frac_binomial_in(field, k, j) * g_pow;
    g_pow = g_pow * g;
  }

  std::vector<LaurentPrincipalPart<Field>> powers;
  Poly unit_pow = unit;
  for (unsigned i = 1; i <= k; ++i) {
    // beta_1^i = t^-i unit^i; only unit^i mod t^i reaches negative degree.
    powers.push_back(LaurentPrincipalPart<Field>::from_shifted_series(unit_pow, i));
    unit_pow = unit_pow * unit;
  }

  LaurentPrincipalPart<Field> target(field, k);
  target.set(-static_cast<int>(k), field.one());
  for (unsigned i = 1; i < k; ++i) target.set(-static_cast<int>(i), c[i - 1]);

  return {k, std::move(unit), std::move(powers), std::move(target)};
}

}  // namespace oscone::localdefs
