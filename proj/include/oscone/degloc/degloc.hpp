#pragma once

// Random instances of the 2 x (d-1) matrix A_(t0,t1) with rows (u_0..u_{d-2})
// and (t0 q_1j - t1 q_0j), q_ij of bidegree (2,2) in (t0,t1) x (u_0..u_{d-2}).
// A fiber over (lambda:mu) is cut out by the 2x2 minors u_a q_b - u_b q_a;
// its length is measured by where the Hilbert function settles.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "oscone/degloc/linalg.hpp"
#include "oscone/errors.hpp"
#include "oscone/exactalg/binomial.hpp"
#include "oscone/exactalg/prime_field.hpp"

namespace oscone::degloc {

using Exponents = std::vector<unsigned>;

/// Monomials of degree `degree` in `vars` variables in graded lex order
/// (u0^2, u0u1, ..., u_{n-1}^2 for degree 2).
inline std::vector<Exponents> monomials(unsigned vars, unsigned degree) {
  std::vector<Exponents> out;
  Exponents cur(vars, 0);
  auto rec = [&](auto&& self, unsigned var, unsigned left) -> void {
    if (var + 1 == vars) {
      cur[var] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur[var] = e;
      self(self, var + 1, left - e);
    }
  };
  if (vars > 0) rec(rec, 0, degree);
  return out;
}

/// Monomial basis with reverse lookup.
class MonomialBasis {
 public:
  MonomialBasis(unsigned vars, unsigned degree) : list_(monomials(vars, degree)) {
    for (std::size_t i = 0; i < list_.size(); ++i) index_.emplace(list_[i], i);
  }
  std::size_t size() const { return list_.size(); }
  const Exponents& operator[](std::size_t i) const { return list_[i]; }
  std::size_t index_of(const Exponents& e) const { return index_.at(e); }

 private:
  std::vector<Exponents> list_;
  std::map<Exponents, std::size_t> index_;
};

inline constexpr int kMinDegree = 3;
inline constexpr int kMaxDegree = 6;
inline constexpr std::size_t kTMonomials = 3;  // t0^2, t0 t1, t1^2

inline std::size_t u_quadric_count(int d) { return static_cast<std::size_t>(d * (d - 1) / 2); }
/// Coefficients in one bidegree-(2,2) form.
inline std::size_t coefficients_per_quadric(int d) { return kTMonomials * u_quadric_count(d); }

/// Coefficient arrays of q_ij; quadrics[i * (d-1) + j] = q_ij, each laid out
/// t-monomial major (t0^2, t0t1, t1^2) and u-monomial minor (graded lex).
struct BiHomInstance {
  int d = 0;
  std::uint64_t p = 0;
  std::uint64_t seed = 0;
  std::vector<std::vector<std::uint64_t>> quadrics;

  const std::vector<std::uint64_t>& q(int i, int j) const {
    return quadrics.at(static_cast<std::size_t>(i * (d - 1) + j));
  }
  friend bool operator==(const BiHomInstance&, const BiHomInstance&) = default;
};

inline void check_instance_params(int d, std::uint64_t p) {
  if (d < kMinDegree || d > kMaxDegree) {
    throw BadDimension("degeneracy-locus instances need 3 <= d <= 6, got " + std::to_string(d));
  }
  require_prime(p);
  if (p == 2) throw BadPrime("p must be odd");
}

/// Validates shape and coefficient ranges.
inline void validate(const BiHomInstance& inst) {
  check_instance_params(inst.d, inst.p);
  if (inst.quadrics.size() != static_cast<std::size_t>(2 * (inst.d - 1))) {
    throw InvalidArgument("instance must hold 2(d-1) quadrics");
  }
  for (const auto& q : inst.quadrics) {
    if (q.size() != coefficients_per_quadric(inst.d)) {
      throw InvalidArgument("quadric has " + std::to_string(q.size()) + " coefficients, expected " +
                            std::to_string(coefficients_per_quadric(inst.d)));
    }
    for (auto c : q) {
      if (c >= inst.p) throw InvalidArgument("coefficient not reduced mod p");
    }
  }
}

/// Coefficients are successive mt19937_64 outputs reduced mod p, in storage
/// order; the engine's output sequence is fixed by the standard.
inline BiHomInstance generate_instance(int d, std::uint64_t p, std::uint64_t seed) {
  check_instance_params(d, p);
  std::mt19937_64 rng(seed);
  BiHomInstance inst{d, p, seed, {}};
  for (int i = 0; i < 2 * (d - 1); ++i) {
    std::vector<std::uint64_t> q(coefficients_per_quadric(d));
    for (auto& c : q) c = rng() % p;
    inst.quadrics.push_back(std::move(q));
  }
  return inst;
}

/// All q_ij identically zero; every fiber is the whole P^(d-2).
inline BiHomInstance zero_instance(int d, std::uint64_t p) {
  check_instance_params(d, p);
  return {d, p, 0,
          std::vector<std::vector<std::uint64_t>>(static_cast<std::size_t>(2 * (d - 1)),
                                                  std::vector<std::uint64_t>(coefficients_per_quadric(d), 0))};
}

/// Rank-drop ideal of A_(lambda,mu) inside F_p[u_0..u_{d-2}].
struct FiberSystem {
  int d = 0;
  std::uint64_t p = 0;
  std::uint64_t lambda = 0;
  std::uint64_t mu = 0;
  std::vector<Row> quadrics;    // q_j in the degree-2 basis
  std::vector<Row> generators;  // u_a q_b - u_b q_a, a < b, in the degree-3 basis
  std::vector<std::pair<int, int>> generator_pairs;

  unsigned vars() const { return static_cast<unsigned>(d - 1); }
};

inline FiberSystem specialize_fiber(const BiHomInstance& inst, std::uint64_t lambda,
                                    std::uint64_t mu) {
  validate(inst);
  const std::uint64_t p = inst.p;
  lambda %= p;
  mu %= p;
  if (lambda == 0 && mu == 0) throw ZeroFiberPoint("(0:0) is not a point of P^1");

  const int n = inst.d - 1;
  const std::size_t nq = u_quadric_count(inst.d);
  const std::uint64_t tvals[kTMonomials] = {lambda * lambda % p, lambda * mu % p, mu * mu % p};

  FiberSystem sys{inst.d, p, lambda, mu, {}, {}, {}};
  // q_j = t0 q_1j - t1 q_0j at (t0,t1) = (lambda,mu)
  for (int j = 0; j < n; ++j) {
    Row q(nq, 0);
    for (std::size_t m = 0; m < nq; ++m) {
      std::uint64_t v1 = 0, v0 = 0;
      for (std::size_t tau = 0; tau < kTMonomials; ++tau) {
        v1 = (v1 + inst.q(1, j)[tau * nq + m] * tvals[tau]) % p;
        v0 = (v0 + inst.q(0, j)[tau * nq + m] * tvals[tau]) % p;
      }
      q[m] = (lambda * v1 % p + (p - mu) * v0 % p) % p;
    }
    sys.quadrics.push_back(std::move(q));
  }

  const MonomialBasis deg2(static_cast<unsigned>(n), 2);
  const MonomialBasis deg3(static_cast<unsigned>(n), 3);
  auto times_variable = [&](const Row& quad, int var) {
    Row out(deg3.size(), 0);
    for (std::size_t m = 0; m < deg2.size(); ++m) {
      if (quad[m] == 0) continue;
      Exponents e = deg2[m];
      ++e[static_cast<std::size_t>(var)];
      out[deg3.index_of(e)] = quad[m];
    }
    return out;
  };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      Row lhs = times_variable(sys.quadrics[static_cast<std::size_t>(b)], a);
      Row rhs = times_variable(sys.quadrics[static_cast<std::size_t>(a)], b);
      for (std::size_t m = 0; m < lhs.size(); ++m) lhs[m] = (lhs[m] + p - rhs[m]) % p;
      sys.generators.push_back(std::move(lhs));
      sys.generator_pairs.emplace_back(a, b);
    }
  }
  return sys;
}

/// dim_k (S/I)_m for S = F_p[u_0..u_{d-2}], m >= 3.
inline std::size_t hilbert_function(const FiberSystem& sys, int m) {
  if (m < 3) throw InvalidArgument("Hilbert function is evaluated from degree 3 on");
  const unsigned n = sys.vars();
  const MonomialBasis target(n, static_cast<unsigned>(m));
  const MonomialBasis shifts(n, static_cast<unsigned>(m - 3));
  const MonomialBasis deg3(n, 3);

  EchelonBasis basis(target.size(), sys.p);
  for (const auto& gen : sys.generators) {
    for (std::size_t s = 0; s < shifts.size(); ++s) {
      Row row(target.size(), 0);
      bool nonzero = false;
      for (std::size_t c = 0; c < deg3.size(); ++c) {
        if (gen[c] == 0) continue;
        Exponents e = deg3[c];
        for (unsigned v = 0; v < n; ++v) e[v] += shifts[s][v];
        row[target.index_of(e)] = gen[c];
        nonzero = true;
      }
      if (nonzero) basis.insert(std::move(row));
      if (basis.rank() == target.size()) return 0;
    }
  }
  return target.size() - basis.rank();
}

/// Window of degrees over which stabilization is judged, and how many
/// trailing equal values count as stable.
struct StabilizationWindow {
  int lo;
  int hi;
  int required_run;
};

inline StabilizationWindow stabilization_window(int d) {
  if (d <= 4) return {4, 8, 5};
  return {4, 10, 4};
}

enum class FiberStatus { Stable, Unstable };

struct FiberResult {
  std::uint64_t lambda;
  std::uint64_t mu;
  std::vector<std::size_t> hilbert_values;  // at m = lo..hi
  FiberStatus status;
  std::size_t stable_value;  // meaningful when Stable
};

struct CertifyReport {
  int d;
  std::uint64_t p;
  std::uint64_t seed;
  std::size_t fibers_requested;
  StabilizationWindow window;
  BigInt expected;  // 2^(d-1) - 1
  std::vector<FiberResult> fibers;

  std::size_t stable_expected() const {
    return static_cast<std::size_t>(std::count_if(fibers.begin(), fibers.end(), [&](const FiberResult& f) {
      return f.status == FiberStatus::Stable && BigInt(f.stable_value) == expected;
    }));
  }
  /// STABLE fibers whose value is not 2^(d-1) - 1.
  std::size_t stable_unexpected() const {
    return static_cast<std::size_t>(std::count_if(fibers.begin(), fibers.end(), [&](const FiberResult& f) {
      return f.status == FiberStatus::Stable && BigInt(f.stable_value) != expected;
    }));
  }
  double stable_fraction() const {
    return fibers.empty() ? 0.0
                          : static_cast<double>(stable_expected()) / static_cast<double>(fibers.size());
  }
};

/// The i-th point of P^1(F_p): (i:1) for i < p, then (1:0).
inline std::pair<std::uint64_t, std::uint64_t> fiber_point(std::uint64_t i, std::uint64_t p) {
  if (i < p) return {i, 1};
  return {1, 0};
}

inline FiberResult examine_fiber(const BiHomInstance& inst, std::uint64_t lambda, std::uint64_t mu) {
  const auto window = stabilization_window(inst.d);
  const FiberSystem sys = specialize_fiber(inst, lambda, mu);
  FiberResult res{lambda, mu, {}, FiberStatus::Unstable, 0};
  for (int m = window.lo; m <= window.hi; ++m) res.hilbert_values.push_back(hilbert_function(sys, m));
  const auto& v = res.hilbert_values;
  int run = 1;
  for (std::size_t i = v.size() - 1; i > 0 && v[i - 1] == v[i]; --i) ++run;
  if (run >= window.required_run) {
    res.status = FiberStatus::Stable;
    res.stable_value = v.back();
  }
  return res;
}

/// Hilbert-function certification of the first `fibers` points of P^1(F_p).
inline CertifyReport certify_generic_length(const BiHomInstance& inst, std::size_t fibers,
                                            unsigned workers = 1) {
  validate(inst);
  if (fibers > inst.p + 1) throw InvalidArgument("more fibers requested than points in P^1(F_p)");
  CertifyReport report{inst.d, inst.p, inst.seed, fibers, stabilization_window(inst.d),
                       pow2(static_cast<unsigned>(inst.d - 1)) - 1, {}};
  report.fibers.resize(fibers);
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < fibers; i += stride) {
      auto [lambda, mu] = fiber_point(i, inst.p);
      report.fibers[i] = examine_fiber(inst, lambda, mu);
    }
  };
  workers = std::max(1U, workers);
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }
  return report;
}

}  // namespace oscone::degloc
