#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oscone/chern.hpp"
#include "oscone/resolution.hpp"

namespace oscone {

/// Degree, genus and fiber length of the osculating cone as produced by one
/// computation route. Routes that do not reach a quantity leave it empty.
struct InvariantReport {
  int d = 0;
  std::optional<BigInt> fiber_points;
  std::optional<BigInt> degree;
  std::optional<BigInt> genus;
  std::string method;  // "closed-form" | "chern-sum" | "resolution-sum"
};

inline InvariantReport invariants_closed_form(int d) {
  return {d, chern::fiber_count_closed_form(d), chern::degree_closed_form(d),
          resolution::genus_closed_form(d), "closed-form"};
}

/// Fiber count from the twisting identity, degree from the bigraded class.
inline InvariantReport invariants_chern(int d) {
  return {d, chern::fiber_count_twisting(d), chern::degree_from_bigraded_class(d), std::nullopt,
          "chern-sum"};
}

/// Genus from the Betti-number double sum; at d = 4 the explicit
/// Hilbert-Burch resolution also yields the fiber length and degree.
inline InvariantReport invariants_resolution(int d) {
  InvariantReport report{d, std::nullopt, std::nullopt,
                         1 - (1 + resolution::genus_double_sum(d)), "resolution-sum"};
  if (d == 4) {
    auto inv = resolution::curve_invariants(resolution::osculating_cone_resolution_d4());
    if (inv.arithmetic_genus != *report.genus) {
      throw InternalMismatch("Hilbert-Burch genus disagrees with the double sum");
    }
    report.fiber_points = inv.fiber_degree;
    report.degree = inv.total_degree;
  }
  return report;
}

inline std::vector<InvariantReport> all_invariant_reports(int d) {
  return {invariants_closed_form(d), invariants_chern(d), invariants_resolution(d)};
}

}  // namespace oscone
