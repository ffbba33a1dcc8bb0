#pragma once

// Stratification of one fiber of the osculating cone over P^1 from the
// ramification profile D = k_1 p_1 + ... + k_n p_n, plus the global counts
// attached to a pencil on a curve of genus 2(d-1).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oscone/errors.hpp"
#include "oscone/exactalg/binomial.hpp"
#include "oscone/resolution.hpp"

namespace oscone::fiberstrat {

/// Supports up to this many distinct points in a fiber (2^(n-1) splits).
inline constexpr std::size_t kMaxSupport = 24;

class RamificationProfile {
 public:
  explicit RamificationProfile(std::vector<unsigned> multiplicities,
                               std::uint64_t characteristic = 0)
      : multiplicities_(std::move(multiplicities)), characteristic_(characteristic) {
    if (multiplicities_.empty()) throw InvalidArgument("profile needs at least one point");
    for (unsigned k : multiplicities_) {
      if (k == 0) throw InvalidArgument("multiplicities must be positive");
    }
  }

  const std::vector<unsigned>& multiplicities() const { return multiplicities_; }
  std::uint64_t characteristic() const { return characteristic_; }
  std::size_t support_size() const { return multiplicities_.size(); }
  unsigned degree() const {
    unsigned d = 0;
    for (unsigned k : multiplicities_) d += k;
    return d;
  }

  /// Characteristic 0, or p odd dividing no multiplicity >= 2.
  bool is_tame() const {
    if (characteristic_ == 0) return true;
    if (characteristic_ == 2) return false;
    return std::none_of(multiplicities_.begin(), multiplicities_.end(),
                        [&](unsigned k) { return k >= 2 && k % characteristic_ == 0; });
  }

 private:
  std::vector<unsigned> multiplicities_;
  std::uint64_t characteristic_;
};

/// D = D1 + D2, recorded as per-point multiplicities (zero where absent).
struct Decomposition {
  std::vector<unsigned> part1;
  std::vector<unsigned> part2;
};

enum class StratumKind { Case1Point, Case2Component };

struct Stratum {
  StratumKind kind;
  int dimension;  // projective
  std::string label;
  Decomposition decomposition;
};

struct FiberStratification {
  std::vector<Stratum> strata;
  /// True when no positive-dimensional component can appear: D is reduced,
  /// or has a single double or triple point.
  bool generic_count = false;

  std::size_t case1_points() const {
    return static_cast<std::size_t>(std::count_if(
        strata.begin(), strata.end(),
        [](const Stratum& s) { return s.kind == StratumKind::Case1Point; }));
  }
  std::optional<Stratum> case2_component() const {
    for (const auto& s : strata) {
      if (s.kind == StratumKind::Case2Component) return s;
    }
    return std::nullopt;
  }
};

/// "2p1+p3" style label; empty divisor is "0".
inline std::string divisor_label(const std::vector<unsigned>& mult) {
  std::string out;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (mult[i] > 1) out += std::to_string(mult[i]);
    out += "p" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

/// The support split {I, I^c} encoded by `mask` over points 1..n-1, with
/// point 0 always in I^c so each unordered pair appears once.
inline Decomposition split_from_mask(const std::vector<unsigned>& mult, std::uint64_t mask) {
  Decomposition dec{std::vector<unsigned>(mult.size(), 0), std::vector<unsigned>(mult.size(), 0)};
  for (std::size_t i = 0; i < mult.size(); ++i) {
    bool in_first = i > 0 && ((mask >> (i - 1)) & 1U) != 0;
    (in_first ? dec.part1 : dec.part2)[i] = mult[i];
  }
  return dec;
}

inline FiberStratification stratify_fiber(const RamificationProfile& profile) {
  if (!profile.is_tame()) {
    throw WildRamification("profile is wildly ramified in characteristic " +
                           std::to_string(profile.characteristic()));
  }
  const auto& mult = profile.multiplicities();
  const std::size_t n = mult.size();
  if (n > kMaxSupport) throw BudgetExceeded("too many support points to enumerate splits");

  FiberStratification out;
  // Case 1: one point per unordered split of the support into two nonempty sets.
  const std::uint64_t splits = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 1; mask < splits; ++mask) {
    Decomposition dec = split_from_mask(mult, mask);
    std::string label = divisor_label(dec.part1) + " | " + divisor_label(dec.part2);
    out.strata.push_back({StratumKind::Case1Point, 0, std::move(label), std::move(dec)});
  }
  // Case 2: the span of sum floor(k_i/2) p_i.
  int floor_sum = 0;
  std::vector<unsigned> floors(n), ceils(n);
  for (std::size_t i = 0; i < n; ++i) {
    floors[i] = mult[i] / 2;
    ceils[i] = mult[i] - floors[i];
    floor_sum += static_cast<int>(floors[i]);
  }
  if (floor_sum - 1 >= 0) {
    out.strata.push_back({StratumKind::Case2Component, floor_sum - 1,
                          "span(" + divisor_label(floors) + ")", Decomposition{floors, ceils}});
  }

  std::vector<unsigned> sorted = mult;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  bool rest_reduced = std::all_of(sorted.begin() + 1, sorted.end(), [](unsigned k) { return k == 1; });
  out.generic_count = rest_reduced && sorted.front() <= 3;
  return out;
}

/// g - (r+1)(g-d+r)
inline long long brill_noether_rho(long long g, long long d, long long r) {
  return g - (r + 1) * (g - d + r);
}

/// (2d-2)! / (d! (d-1)!)
inline BigInt pencil_count(int d) {
  if (d < 2) throw BadDimension("pencil count needs d >= 2");
  return factorial(static_cast<unsigned>(2 * d - 2)) /
         (factorial(static_cast<unsigned>(d)) * factorial(static_cast<unsigned>(d - 1)));
}

/// Points of a general fiber grouped by min(deg D1, deg D2).
inline std::map<unsigned, BigInt> general_fiber_component_counts(int d) {
  if (d < 3) throw BadDimension("d must be at least 3");
  std::map<unsigned, BigInt> counts;
  BigInt total = 0;
  for (int i = 1; 2 * i <= d; ++i) {
    BigInt c = gen_binomial(d, static_cast<unsigned>(i));
    if (2 * i == d) c /= 2;
    counts[static_cast<unsigned>(i)] = c;
    total += c;
  }
  if (total != pow2(static_cast<unsigned>(d - 1)) - 1) {
    throw InternalMismatch("component counts do not sum to 2^(d-1)-1");
  }
  return counts;
}

struct RiemannHurwitzResult {
  long long ramification_count;
  long long companion_genus;
  /// chi(C) + chi(C') - chi(OC_3); only defined for g = 2(d-1), d >= 3.
  std::optional<long long> intersection_chi;
};

/// Simple branching throughout: R = 2g - 2 + 2d for a degree-d cover of P^1,
/// and a companion cover of degree e with the same ramification points has
/// genus (-2e + R)/2 + 1.
inline RiemannHurwitzResult riemann_hurwitz_checks(long long g, long long d,
                                                   long long companion_degree) {
  if (g < 0 || d < 1 || companion_degree < 1) {
    throw InvalidArgument("need g >= 0, d >= 1 and companion degree >= 1");
  }
  RiemannHurwitzResult out{};
  out.ramification_count = 2 * g - 2 + 2 * d;
  long long twice = -2 * companion_degree + out.ramification_count;
  if (twice % 2 != 0) throw NonIntegerGenus("companion genus is not an integer");
  out.companion_genus = twice / 2 + 1;
  if (d >= 3 && g == 2 * (d - 1)) {
    auto cone_genus = resolution::genus_from_sum(static_cast<int>(d));
    out.intersection_chi =
        (1 - g) + (1 - out.companion_genus) - (1 - cone_genus.convert_to<long long>());
  }
  return out;
}

}  // namespace oscone::fiberstrat
