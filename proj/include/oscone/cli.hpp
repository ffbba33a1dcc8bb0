#pragma once

// Command-line front end. Every subcommand fills a Report:
//
//   {"command": ..., "inputs": {...}, "results": {...},
//    "checks": [{"name", "expected", "actual", "pass"}], "field_used": "Q" | "F_p"}
//
// Exit status: 0 all checks pass, 1 a check failed, 2 usage error,
// 3 hypothesis violation (characteristic 2, wild ramification).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oscone/chern.hpp"
#include "oscone/degloc/degloc.hpp"
#include "oscone/degloc/instance_io.hpp"
#include "oscone/errors.hpp"
#include "oscone/fiberstrat.hpp"
#include "oscone/invariants.hpp"
#include "oscone/localdefs.hpp"
#include "oscone/resolution.hpp"

namespace oscone::cli {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kHypothesis = 3 };

struct Check {
  std::string name;
  json expected;
  json actual;
  bool pass = false;
};

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  std::vector<Check> checks;
  std::string field_used = "Q";

  void check(std::string name, json expected, json actual) {
    bool pass = expected == actual;
    checks.push_back({std::move(name), std::move(expected), std::move(actual), pass});
  }
  bool all_pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }

  json to_json() const {
    json j{{"command", command}, {"inputs", inputs}, {"results", results}, {"field_used", field_used}};
    j["checks"] = json::array();
    for (const auto& c : checks) {
      j["checks"].push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    }
    return j;
  }

  void print_text(std::ostream& out) const {
    out << "command: " << command << "\n";
    out << "field: " << field_used << "\n";
    for (const auto& [k, v] : inputs.items()) out << "input " << k << " = " << v.dump() << "\n";
    for (const auto& [k, v] : results.items()) out << k << " = " << v.dump() << "\n";
    for (const auto& c : checks) {
      out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": expected " << c.expected.dump()
          << ", actual " << c.actual.dump() << "\n";
    }
  }
};

/// Exact integers go out as JSON numbers when they fit, otherwise as strings.
inline json big(const BigInt& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
    return n.convert_to<std::int64_t>();
  }
  return n.str();
}

inline json big(const std::optional<BigInt>& n) { return n ? big(*n) : json(nullptr); }

/// "q" -> 0, "fp:<p>" -> p.
inline std::uint64_t parse_field(const std::string& text) {
  if (text == "q" || text == "Q") return 0;
  if (text.rfind("fp:", 0) == 0) {
    try {
      std::size_t used = 0;
      auto p = std::stoull(text.substr(3), &used);
      if (used == text.size() - 3) {
        require_prime(p);
        return p;
      }
    } catch (const std::logic_error&) {
    }
  }
  throw InvalidArgument("--field expects q or fp:<prime>, got '" + text + "'");
}

inline std::string field_label(std::uint64_t p) { return p == 0 ? "Q" : "F_" + std::to_string(p); }

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// ---------------------------------------------------------------------------

inline Report run_invariants(int d) {
  Report r;
  r.command = "invariants";
  r.inputs = {{"d", d}};
  json reports = json::array();
  for (const auto& rep : all_invariant_reports(d)) {
    reports.push_back({{"method", rep.method},
                       {"fiber_points", big(rep.fiber_points)},
                       {"degree", big(rep.degree)},
                       {"genus", big(rep.genus)}});
  }
  const BigInt fiber = chern::fiber_count_closed_form(d);
  const BigInt degree = chern::degree_closed_form(d);
  const BigInt genus = resolution::genus_closed_form(d);
  r.results = {{"fiber_points", big(fiber)}, {"degree", big(degree)}, {"genus", big(genus)},
               {"routes", reports},
               {"degree_explicit_sum", big(chern::degree_explicit_sum(d))},
               {"fiber_points_from_class", big(chern::fiber_count_from_class(d))}};

  r.check("fiber_points: twisting identity = 2^(d-1)-1", big(fiber), big(chern::fiber_count_twisting(d)));
  r.check("fiber_points: class restricted to a fiber = 2^(d-1)-1", big(fiber),
          big(chern::fiber_count_from_class(d)));
  r.check("degree: bigraded class = closed form", big(degree), big(chern::degree_from_bigraded_class(d)));
  r.check("degree: explicit sum = closed form", big(degree), big(chern::degree_explicit_sum(d)));
  r.check("genus: Betti double sum = closed form", big(genus),
          big(1 - (1 + resolution::genus_double_sum(d))));
  if (d == 4) {
    auto inv = resolution::curve_invariants(resolution::osculating_cone_resolution_d4());
    r.check("fiber_points: Hilbert-Burch resolution", big(fiber), big(inv.fiber_degree));
    r.check("degree: Hilbert-Burch resolution", big(degree), big(inv.total_degree));
    r.check("genus: Hilbert-Burch resolution", big(genus), big(inv.arithmetic_genus));
    r.check("generic fiber: Hilbert polynomial of the P^2 resolution", big(fiber),
            big(resolution::hilbert_poly_eval(resolution::generic_fiber_resolution_d4(), 4).numerator()));
  }
  return r;
}

inline Report run_fiber(const std::vector<unsigned>& profile, std::uint64_t characteristic) {
  Report r;
  r.command = "fiber";
  r.field_used = field_label(characteristic);
  r.inputs = {{"profile", profile}, {"char", characteristic}};
  fiberstrat::RamificationProfile prof(profile, characteristic);
  auto strat = fiberstrat::stratify_fiber(prof);

  json strata = json::array();
  for (const auto& s : strat.strata) {
    strata.push_back({{"kind", s.kind == fiberstrat::StratumKind::Case1Point ? "CASE1_POINT" : "CASE2_COMPONENT"},
                      {"dimension", s.dimension},
                      {"label", s.label}});
  }
  auto comp = strat.case2_component();
  r.results = {{"d", prof.degree()},
               {"support", prof.support_size()},
               {"case1_points", strat.case1_points()},
               {"case2_dimension", comp ? json(comp->dimension) : json(nullptr)},
               {"generic_count", strat.generic_count},
               {"strata", strata}};

  const std::size_t n = prof.support_size();
  r.check("case1 points = 2^(n-1)-1", (std::uint64_t{1} << (n - 1)) - 1, strat.case1_points());
  int floor_sum = 0;
  for (unsigned k : profile) floor_sum += static_cast<int>(k / 2);
  r.check("case2 dimension = sum floor(k_i/2) - 1",
          floor_sum >= 1 ? json(floor_sum - 1) : json(nullptr),
          comp ? json(comp->dimension) : json(nullptr));
  const bool reduced = floor_sum == 0;
  if (reduced && prof.degree() >= 3) {
    r.check("reduced fiber: points = Chern count", big(chern::fiber_count(static_cast<int>(prof.degree()))),
            strat.case1_points());
  }
  return r;
}

inline Report run_localsolve(unsigned k, std::uint64_t p, unsigned workers) {
  Report r;
  r.command = "localsolve";
  r.field_used = field_label(p);
  r.inputs = {{"k", k}, {"p", p}};
  if (p == 2) throw WildCharacteristic("characteristic 2 is excluded");
  auto set = localdefs::characterize_solutions(k);
  auto verdict = localdefs::verify_case_split(k, p, workers);
  json families = json::array();
  for (const auto& f : set.families) families.push_back(f.name);
  r.results = {{"brute_force_count", verdict.brute_force_count},
               {"characterized_count", verdict.characterized_count},
               {"expected_count", verdict.expected_count},
               {"free_coordinates", localdefs::free_count(k)},
               {"families", families}};
  r.check("brute force = characterization (as sets)", true, verdict.equal);
  r.check("cardinality = 2(p-1) + p^floor(k/2)", verdict.expected_count, verdict.brute_force_count);
  for (const auto& f : set.families) {
    r.check("symbolic substitution: " + f.name, true, localdefs::family_satisfies_symbolically(k, f));
  }
  return r;
}

template <ExactField Field>
void fill_kthroot(Report& r, const Field& field, const std::vector<Rational>& coeffs, unsigned k) {
  std::vector<typename Field::element_type> c;
  for (const auto& q : coeffs) {
    try {
      c.push_back(field.from_rational(q));
    } catch (const DivisionByZero&) {
      throw InvalidArgument("coefficient " + q.to_string() + " has no image in " + field.name());
    }
  }
  auto root = localdefs::kth_root_principal_part(field, c, k);
  json beta1 = json::object();
  for (int deg = -1; deg <= static_cast<int>(k) - 2; ++deg) {
    beta1[std::to_string(deg)] = root.beta1_coefficient(deg).to_string();
  }
  json powers = json::array();
  for (const auto& pp : root.powers) powers.push_back(pp.to_string());
  r.results = {{"beta1", beta1}, {"beta_principal_parts", powers}, {"target", root.target.to_string()}};
  for (int deg = -static_cast<int>(k); deg <= -1; ++deg) {
    r.check("principal part of beta_1^k at t^" + std::to_string(deg), root.target.coefficient(deg).to_string(),
            root.powers.back().coefficient(deg).to_string());
  }
}

inline Report run_kthroot(unsigned k, std::uint64_t p, const std::vector<Rational>& coeffs) {
  Report r;
  r.command = "kthroot";
  r.field_used = field_label(p);
  json cj = json::array();
  for (const auto& q : coeffs) cj.push_back(q.to_string());
  r.inputs = {{"k", k}, {"p", p}, {"coeffs", cj}};
  if (p == 0) {
    fill_kthroot(r, RationalField{}, coeffs, k);
  } else {
    fill_kthroot(r, PrimeField(p), coeffs, k);
  }
  return r;
}

struct DeglocOptions {
  std::optional<int> d;
  std::uint64_t p = 101;
  std::uint64_t seed = 1;
  std::size_t fibers = 20;
  unsigned workers = 1;
  std::string instance_path;
  std::string save_path;
};

inline constexpr double kMinStableFraction = 0.9;

inline Report run_degloc(const DeglocOptions& opt) {
  Report r;
  r.command = "degloc";
  degloc::BiHomInstance inst;
  if (!opt.instance_path.empty()) {
    inst = degloc::load_instance(opt.instance_path);
  } else {
    if (!opt.d) throw InvalidArgument("degloc needs --d (or --instance)");
    inst = degloc::generate_instance(*opt.d, opt.p, opt.seed);
  }
  if (!opt.save_path.empty()) degloc::save_instance(inst, opt.save_path);
  r.field_used = field_label(inst.p);
  r.inputs = {{"d", inst.d}, {"p", inst.p}, {"seed", inst.seed}, {"fibers", opt.fibers}};
  if (!opt.instance_path.empty()) r.inputs["instance"] = opt.instance_path;

  auto report = degloc::certify_generic_length(inst, opt.fibers, opt.workers);
  json fibers = json::array();
  for (const auto& f : report.fibers) {
    const bool stable = f.status == degloc::FiberStatus::Stable;
    fibers.push_back({{"point", {f.lambda, f.mu}},
                      {"hilbert", f.hilbert_values},
                      {"status", stable ? "STABLE" : "UNSTABLE"},
                      {"value", stable ? json(f.stable_value) : json(nullptr)}});
  }
  r.results = {{"expected_length", big(report.expected)},
               {"window", {report.window.lo, report.window.hi}},
               {"stable_expected", report.stable_expected()},
               {"stable_unexpected", report.stable_unexpected()},
               {"stable_fraction", report.stable_fraction()},
               {"fibers", fibers}};
  r.check("no STABLE value differs from 2^(d-1)-1", 0, report.stable_unexpected());
  r.check("fraction of STABLE(2^(d-1)-1) fibers >= 0.9", true, report.stable_fraction() >= kMinStableFraction);
  return r;
}

inline Report run_rh(long long g, long long d, long long companion) {
  Report r;
  r.command = "rh";
  r.inputs = {{"g", g}, {"d", d}, {"companion_deg", companion}};
  auto res = fiberstrat::riemann_hurwitz_checks(g, d, companion);
  r.results = {{"ramification_count", res.ramification_count},
               {"companion_genus", res.companion_genus},
               {"intersection_chi", res.intersection_chi ? json(*res.intersection_chi) : json(nullptr)}};
  if (res.intersection_chi) {
    r.check("transversal: chi(C and companion) = ramification count", res.ramification_count,
            *res.intersection_chi);
  }
  return r;
}

// ---------------------------------------------------------------------------

/// Runs the CLI on `args` (without the program name).
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants and checks for osculating cones to Brill-Noether loci", "oscone"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::string field_text;
  app.add_flag("--json", as_json, "Emit the report as JSON");
  app.add_option("--field", field_text, "Scalar field: q or fp:<p>");

  int inv_d = 0;
  auto* invariants = app.add_subcommand("invariants", "Degree, genus and fiber length by every route");
  invariants->add_option("--d", inv_d, "Pencil degree d >= 3")->required();

  std::string profile_text;
  std::uint64_t fiber_char = 0;
  auto* fiber = app.add_subcommand("fiber", "Stratify one fiber from its ramification profile");
  fiber->add_option("--profile", profile_text, "Multiplicities k1,k2,...")->required();
  auto* fiber_char_opt = fiber->add_option("--char", fiber_char, "Characteristic (0 or a prime)");

  unsigned ls_k = 0;
  std::uint64_t ls_p = 0;
  unsigned ls_workers = 1;
  auto* localsolve = app.add_subcommand("localsolve", "Local system: classification vs exhaustive F_p search");
  localsolve->add_option("--k", ls_k, "Multiplicity k >= 1")->required();
  auto* ls_p_opt = localsolve->add_option("--p", ls_p, "Odd prime");
  localsolve->add_option("--workers", ls_workers, "Enumeration threads");

  unsigned kr_k = 0;
  std::uint64_t kr_p = 0;
  std::string kr_coeffs;
  auto* kthroot = app.add_subcommand("kthroot", "k-th root basis beta_1 and its principal parts");
  kthroot->add_option("--k", kr_k, "Multiplicity k >= 1")->required();
  auto* kr_p_opt = kthroot->add_option("--p", kr_p, "Work over F_p instead of Q");
  auto* kr_coeffs_opt = kthroot->add_option("--coeffs", kr_coeffs, "c_1,...,c_{k-1} (integers or a/b)");

  DeglocOptions dl;
  auto* deg = app.add_subcommand("degloc", "Certify the generic fiber length of a random instance");
  deg->add_option("--d", dl.d, "3 <= d <= 6");
  deg->add_option("--p", dl.p, "Odd prime (default 101)");
  deg->add_option("--seed", dl.seed, "Instance seed (default 1)");
  deg->add_option("--fibers", dl.fibers, "Number of fibers to sample (default 20)");
  deg->add_option("--workers", dl.workers, "Fiber-level threads");
  deg->add_option("--instance", dl.instance_path, "Load the instance from a JSON file");
  deg->add_option("--save-instance", dl.save_path, "Write the instance to a JSON file");

  long long rh_g = 0, rh_d = 0, rh_e = 0;
  auto* rh = app.add_subcommand("rh", "Riemann-Hurwitz counts for a simply branched pencil");
  rh->add_option("--g", rh_g, "Genus")->required();
  rh->add_option("--d", rh_d, "Degree of the pencil")->required();
  rh->add_option("--companion-deg", rh_e, "Degree of the companion cover")->required();

  std::string command = args.empty() ? std::string() : args.front();
  auto emit_error = [&](const std::string& kind, const std::string& message, int code) {
    err << "oscone: " << message << "\n";
    if (as_json) {
      out << json{{"command", command}, {"error", {{"kind", kind}, {"message", message}}}, {"exit_code", code}}.dump(2)
          << "\n";
    }
    return code;
  };

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return emit_error("usage", e.what(), kUsage);
  }

  try {
    std::uint64_t field_p = field_text.empty() ? 0 : parse_field(field_text);
    Report report;
    if (*invariants) {
      report = run_invariants(inv_d);
    } else if (*fiber) {
      std::vector<unsigned> profile;
      for (const auto& item : split_list(profile_text)) {
        try {
          profile.push_back(static_cast<unsigned>(std::stoul(item)));
        } catch (const std::logic_error&) {
          throw InvalidArgument("bad multiplicity '" + item + "'");
        }
      }
      std::uint64_t ch = fiber_char_opt->count() > 0 ? fiber_char : field_p;
      if (ch == 2) throw WildRamification("characteristic 2 is excluded");
      if (ch != 0) require_prime(ch);
      report = run_fiber(profile, ch);
    } else if (*localsolve) {
      std::uint64_t p = ls_p_opt->count() > 0 ? ls_p : field_p;
      if (p == 0) throw InvalidArgument("localsolve needs --p or --field fp:<p>");
      report = run_localsolve(ls_k, p, ls_workers);
    } else if (*kthroot) {
      std::uint64_t p = kr_p_opt->count() > 0 ? kr_p : field_p;
      if (p != 0) require_prime(p);
      std::vector<Rational> coeffs;
      if (kr_coeffs_opt->count() > 0) {
        for (const auto& item : split_list(kr_coeffs)) coeffs.push_back(Rational::parse(item));
      } else {
        for (unsigned i = 1; i < kr_k; ++i) coeffs.emplace_back(static_cast<long long>(i));
      }
      report = run_kthroot(kr_k, p, coeffs);
    } else if (*deg) {
      if (!field_text.empty() && field_p != 0 && dl.instance_path.empty()) dl.p = field_p;
      report = run_degloc(dl);
    } else if (*rh) {
      report = run_rh(rh_g, rh_d, rh_e);
    }

    if (as_json) {
      out << report.to_json().dump(2) << "\n";
    } else {
      report.print_text(out);
    }
    return report.all_pass() ? kOk : kCheckFailed;
  } catch (const HypothesisViolation& e) {
    return emit_error("hypothesis", std::string("hypothesis violation (wild/even characteristic): ") + e.what(),
                      kHypothesis);
  } catch (const InvalidArgument& e) {
    return emit_error("usage", e.what(), kUsage);
  } catch (const Error& e) {
    return emit_error("internal", e.what(), kCheckFailed);
  }
}

}  // namespace oscone::cli
