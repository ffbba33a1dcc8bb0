#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "oscone/chern.hpp"
#include "oscone/degloc/degloc.hpp"
#include "oscone/degloc/instance_io.hpp"
#include "oscone/resolution.hpp"

using namespace oscone;
using namespace oscone::degloc;

namespace {

std::uint64_t power_mod(std::uint64_t b, unsigned e, std::uint64_t p) {
  std::uint64_t acc = 1;
  for (unsigned i = 0; i < e; ++i) acc = acc * b % p;
  return acc;
}

// Evaluates a polynomial given in `basis` order at the point u.
std::uint64_t eval_poly(const Row& coeffs, const MonomialBasis& basis, const std::vector<std::uint64_t>& u,
                        std::uint64_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::uint64_t term = coeffs[i];
    for (std::size_t v = 0; v < u.size(); ++v) term = term * power_mod(u[v], basis[i][v], p) % p;
    acc = (acc + term) % p;
  }
  return acc;
}

// q_ij(t0, t1, u) straight from the stored layout.
std::uint64_t eval_biform(const std::vector<std::uint64_t>& q, int d, std::uint64_t t0, std::uint64_t t1,
                          const std::vector<std::uint64_t>& u, std::uint64_t p) {
  const MonomialBasis deg2(static_cast<unsigned>(d - 1), 2);
  const std::uint64_t tm[3] = {t0 * t0 % p, t0 * t1 % p, t1 * t1 % p};
  std::uint64_t acc = 0;
  for (std::size_t tau = 0; tau < 3; ++tau) {
    Row slice(q.begin() + static_cast<long>(tau * deg2.size()),
              q.begin() + static_cast<long>((tau + 1) * deg2.size()));
    acc = (acc + tm[tau] * eval_poly(slice, deg2, u, p)) % p;
  }
  return acc;
}

}  // namespace

TEST_CASE("graded lex monomial order", "[degloc]") {
  auto m = monomials(3, 2);
  std::vector<Exponents> expected{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  CHECK(m == expected);
  CHECK(monomials(3, 4).size() == 15);
  CHECK(monomials(5, 10).size() == 1001);
}

TEST_CASE("finite-field rank and rref", "[degloc][linalg]") {
  const std::uint64_t p = 7;
  std::vector<Row> rows{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  CHECK(rank_mod_p(rows, 3, p) == 2);
  EchelonBasis basis(3, p);
  for (const auto& r : rows) basis.insert(r);
  auto rref = basis.rref();
  REQUIRE(rref.size() == 2);
  CHECK(rref[0] == Row{1, 0, 1});
  CHECK(rref[1] == Row{0, 1, 1});
  CHECK(rank_mod_p({{3, 0}, {0, 5}}, 2, p) == 2);
}

TEST_CASE("instance generation is deterministic and guarded", "[degloc]") {
  auto a = generate_instance(4, 101, 1);
  auto b = generate_instance(4, 101, 1);
  CHECK(a == b);
  CHECK(a.quadrics.size() == 6);
  std::size_t total = 0;
  for (const auto& q : a.quadrics) total += q.size();
  CHECK(total == 108);
  CHECK_FALSE(a == generate_instance(4, 101, 2));
  CHECK_THROWS_AS(generate_instance(7, 101, 1), BadDimension);
  CHECK_THROWS_AS(generate_instance(2, 101, 1), BadDimension);
  CHECK_THROWS_AS(generate_instance(4, 2, 1), BadPrime);
  CHECK_THROWS_AS(generate_instance(4, 100, 1), BadPrime);
}

TEST_CASE("fiber specialization", "[degloc]") {
  auto inst = generate_instance(4, 101, 1);
  auto sys = specialize_fiber(inst, 5, 1);
  CHECK(sys.generators.size() == 3);
  CHECK(specialize_fiber(generate_instance(5, 101, 1), 5, 1).generators.size() == 6);
  CHECK_THROWS_AS(specialize_fiber(inst, 0, 0), ZeroFiberPoint);
  CHECK_THROWS_AS(specialize_fiber(inst, 101, 202), ZeroFiberPoint);
}

TEST_CASE("specialized minors agree with direct evaluation of the matrix", "[degloc][property]") {
  std::mt19937_64 rng(5);
  for (int d = 3; d <= 6; ++d) {
    const std::uint64_t p = 101;
    auto inst = generate_instance(d, p, 11 + static_cast<std::uint64_t>(d));
    const MonomialBasis deg3(static_cast<unsigned>(d - 1), 3);
    for (int trial = 0; trial < 10; ++trial) {
      std::uint64_t lambda = rng() % p, mu = 1 + rng() % (p - 1);
      auto sys = specialize_fiber(inst, lambda, mu);
      std::vector<std::uint64_t> u(static_cast<std::size_t>(d - 1));
      for (auto& x : u) x = rng() % p;
      std::vector<std::uint64_t> q(static_cast<std::size_t>(d - 1));
      for (int j = 0; j < d - 1; ++j) {
        std::uint64_t v1 = eval_biform(inst.q(1, j), d, lambda, mu, u, p);
        std::uint64_t v0 = eval_biform(inst.q(0, j), d, lambda, mu, u, p);
        q[static_cast<std::size_t>(j)] = (lambda * v1 + (p - mu) * v0 % p) % p;
      }
      for (std::size_t g = 0; g < sys.generators.size(); ++g) {
        auto [a, b] = sys.generator_pairs[g];
        auto ua = u[static_cast<std::size_t>(a)], ub = u[static_cast<std::size_t>(b)];
        auto qa = q[static_cast<std::size_t>(a)], qb = q[static_cast<std::size_t>(b)];
        std::uint64_t minor = (ua * qb % p + p - ub * qa % p) % p;
        // swapping a and b negates the minor
        std::uint64_t swapped = (ub * qa % p + p - ua * qb % p) % p;
        CHECK(eval_poly(sys.generators[g], deg3, u, p) == minor);
        CHECK((minor + swapped) % p == 0);
      }
    }
  }
}

TEST_CASE("projective invariance of fibers", "[degloc][property]") {
  auto inst = generate_instance(4, 101, 3);
  for (std::uint64_t c : {2, 17, 100}) {
    auto base = specialize_fiber(inst, 7, 9);
    auto scaled = specialize_fiber(inst, 7 * c, 9 * c);
    auto rref_of = [](const FiberSystem& s) {
      EchelonBasis basis(s.generators.front().size(), s.p);
      for (const auto& g : s.generators) basis.insert(g);
      return basis.rref();
    };
    CHECK(rref_of(base) == rref_of(scaled));
    for (int m = 3; m <= 8; ++m) CHECK(hilbert_function(base, m) == hilbert_function(scaled, m));
  }
}

TEST_CASE("Hilbert function of a generic d=4 fiber", "[degloc]") {
  auto sys = specialize_fiber(generate_instance(4, 101, 1), 3, 1);
  const auto hb = resolution::generic_fiber_resolution_d4();
  CHECK(hilbert_function(sys, 3) == 7);
  for (int m = 4; m <= 8; ++m) {
    INFO("m=" << m);
    CHECK(Rational(static_cast<long long>(hilbert_function(sys, m))) == resolution::hilbert_poly_eval(hb, m));
  }
  CHECK_THROWS_AS(hilbert_function(sys, 2), InvalidArgument);
}

TEST_CASE("zero ideal has the full ring dimension", "[degloc]") {
  auto sys = specialize_fiber(zero_instance(4, 101), 1, 1);
  CHECK(hilbert_function(sys, 4) == 15);
  CHECK(hilbert_function(sys, 3) == 10);
}

TEST_CASE("Hilbert function rises to the length and stays", "[degloc][property]") {
  // A saturated zero-dimensional ideal has a nondecreasing Hilbert function.
  for (int d = 3; d <= 5; ++d) {
    auto inst = generate_instance(d, 101, 21);
    const auto expected = chern::fiber_count(d);
    for (std::uint64_t lambda = 0; lambda < 6; ++lambda) {
      auto sys = specialize_fiber(inst, lambda, 1);
      std::size_t prev = 0;
      for (int m = 3; m <= stabilization_window(d).hi; ++m) {
        auto h = hilbert_function(sys, m);
        CHECK(h >= prev);
        CHECK(BigInt(h) <= expected);
        prev = h;
      }
      CHECK(BigInt(prev) == expected);
    }
  }
}

TEST_CASE("certification of generic instances", "[degloc]") {
  // Regression value for (d, p, seed, N) = (4, 101, 1, 20).
  auto report = certify_generic_length(generate_instance(4, 101, 1), 20);
  CHECK(report.fibers.size() == 20);
  CHECK(report.stable_expected() == 20);
  CHECK(report.stable_unexpected() == 0);
  CHECK(report.expected == 7);

  auto d3 = certify_generic_length(generate_instance(3, 101, 8), 10);
  CHECK(d3.stable_expected() == 10);
  for (const auto& f : d3.fibers) CHECK(f.stable_value == 3);

  auto d5 = certify_generic_length(generate_instance(5, 101, 2), 3);
  CHECK(d5.stable_expected() == 3);
  CHECK(d5.expected == 15);
}

TEST_CASE("degenerate instance never certifies", "[degloc]") {
  auto report = certify_generic_length(zero_instance(4, 101), 12);
  for (const auto& f : report.fibers) CHECK(f.status == FiberStatus::Unstable);
  CHECK(report.stable_expected() == 0);
}

TEST_CASE("certification is deterministic and worker-independent", "[degloc]") {
  auto inst = generate_instance(4, 103, 9);
  auto a = certify_generic_length(inst, 15, 1);
  auto b = certify_generic_length(inst, 15, 4);
  REQUIRE(a.fibers.size() == b.fibers.size());
  for (std::size_t i = 0; i < a.fibers.size(); ++i) {
    CHECK(a.fibers[i].lambda == b.fibers[i].lambda);
    CHECK(a.fibers[i].hilbert_values == b.fibers[i].hilbert_values);
  }
  CHECK_THROWS_AS(certify_generic_length(generate_instance(3, 5, 1), 7), InvalidArgument);
  auto all = certify_generic_length(generate_instance(3, 5, 1), 6);
  CHECK(all.fibers.back().lambda == 1);
  CHECK(all.fibers.back().mu == 0);
}

TEST_CASE("instance JSON round trip", "[degloc][io]") {
  auto inst = generate_instance(5, 103, 77);
  auto path = std::filesystem::temp_directory_path() / "oscone_instance_test.json";
  save_instance(inst, path.string());
  CHECK(load_instance(path.string()) == inst);

  auto j = to_json(inst);
  CHECK(j.at("quadrics").size() == 8);
  CHECK(j.at("quadrics")[0].size() == 30);
  j["quadrics"][0][0] = 103;
  CHECK_THROWS_AS(instance_from_json(j), InvalidArgument);
  j = to_json(inst);
  j["quadrics"].erase(0);
  CHECK_THROWS_AS(instance_from_json(j), InvalidArgument);
  CHECK_THROWS_AS(instance_from_json(nlohmann::json{{"d", 4}}), InvalidArgument);

  {
    std::ofstream bad(path);
    bad << "{not json";
  }
  CHECK_THROWS_AS(load_instance(path.string()), InvalidArgument);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_instance(path.string()), InvalidArgument);
}
