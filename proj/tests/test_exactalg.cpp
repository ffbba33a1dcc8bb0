#include <catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "oscone/exactalg/binomial.hpp"
#include "oscone/exactalg/field.hpp"
#include "oscone/exactalg/laurent.hpp"
#include "oscone/exactalg/truncated_poly.hpp"

using namespace oscone;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(-1000, 1000);
  std::uniform_int_distribution<long long> den(1, 500);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

template <ExactField Field>
TruncatedUniPoly<Field> random_unit_series(const Field& field, std::size_t cap, auto&& draw) {
  TruncatedUniPoly<Field> f(field, cap);
  for (std::size_t i = 0; i < cap; ++i) f.set(i, draw());
  while (f[0].is_zero()) f.set(0, draw());
  return f;
}

}  // namespace

TEST_CASE("Rational values are kept reduced", "[exactalg][rational]") {
  Rational q(BigInt(6), BigInt(-4));
  CHECK(q.numerator() == -3);
  CHECK(q.denominator() == 2);
  Rational zero(BigInt(0), BigInt(-7));
  CHECK(zero.numerator() == 0);
  CHECK(zero.denominator() == 1);
  CHECK(Rational::parse("-10/4") == Rational(BigInt(-5), BigInt(2)));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("x/2"), InvalidArgument);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), DivisionByZero);
  CHECK_THROWS_AS(Rational(3) / Rational(0), DivisionByZero);
  CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(1), BigInt(2)));
}

TEST_CASE("Rational arithmetic is exact", "[exactalg][rational][property]") {
  std::mt19937_64 rng(20261017);
  for (int trial = 0; trial < 500; ++trial) {
    Rational a = random_rational(rng);
    Rational b = random_rational(rng);
    CHECK((a + b) - b == a);
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    CHECK(boost::multiprecision::gcd(a.numerator(), a.denominator()) == 1);
    CHECK(a.denominator() > 0);
  }
}

TEST_CASE("Prime field arithmetic", "[exactalg][fp]") {
  PrimeField f(13);
  auto a = f.from_int(-1);
  CHECK(a.residue() == 12);
  CHECK(a * a == f.one());
  CHECK((f.from_int(5) / f.from_int(7)) * f.from_int(7) == f.from_int(5));
  CHECK_THROWS_AS(f.one() / f.zero(), DivisionByZero);
  CHECK(f.from_rational(Rational(BigInt(1), BigInt(2))) * f.from_int(2) == f.one());
  CHECK_THROWS_AS(f.from_rational(Rational(BigInt(1), BigInt(13))), DivisionByZero);
  CHECK_THROWS_AS(PrimeField(15), BadPrime);
  CHECK_THROWS_AS(f.one() + PrimeField(7).one(), InvalidArgument);

  for (std::uint64_t x = 1; x < 13; ++x) CHECK(f.from_int(static_cast<long long>(x)).inverse() * f.from_int(static_cast<long long>(x)) == f.one());
}

TEST_CASE("gen_binomial handles negative upper arguments", "[exactalg][binomial]") {
  CHECK(gen_binomial(-1, 2) == 1);
  CHECK(gen_binomial(-3, 2) == 6);
  CHECK(gen_binomial(17, 0) == 1);
  CHECK(gen_binomial(-17, 0) == 1);
  CHECK(gen_binomial(5, 7) == 0);
  CHECK(gen_binomial(10, 3) == 120);
  CHECK(gen_binomial(-2, 1) == -2);
}

TEST_CASE("gen_binomial satisfies Pascal's rule", "[exactalg][binomial][property]") {
  for (long long m = -20; m <= 20; ++m) {
    for (unsigned r = 1; r <= 10; ++r) {
      INFO("m=" << m << " r=" << r);
      CHECK(gen_binomial(m, r) == gen_binomial(m - 1, r) + gen_binomial(m - 1, r - 1));
    }
  }
}

TEST_CASE("frac_binomial values", "[exactalg][binomial]") {
  const Rational half(BigInt(1), BigInt(2));
  const Rational third(BigInt(1), BigInt(3));
  CHECK(frac_binomial(half, 1) == half);
  CHECK(frac_binomial(half, 2) == Rational(BigInt(-1), BigInt(8)));
  CHECK(frac_binomial(third, 2) == Rational(BigInt(-1), BigInt(9)));
  CHECK(frac_binomial(third, 0) == Rational(1));
}

TEST_CASE("frac_binomial denominators divide k^j j!", "[exactalg][binomial][property]") {
  for (unsigned k = 1; k <= 8; ++k) {
    for (unsigned j = 0; j <= 8; ++j) {
      Rational scaled = frac_binomial(Rational(BigInt(1), BigInt(k)), j) *
                        Rational(BigInt(boost::multiprecision::pow(BigInt(k), j))) *
                        Rational(factorial(j));
      INFO("k=" << k << " j=" << j);
      CHECK(scaled.is_integer());
    }
  }
}

TEST_CASE("frac_binomial_in rejects wild characteristic", "[exactalg][binomial]") {
  CHECK_THROWS_AS(frac_binomial_in(PrimeField(3), 3, 2), WildCharacteristic);
  CHECK_THROWS_AS(frac_binomial_in(PrimeField(5), 10, 1), WildCharacteristic);
  // binom(1/2, 2) = -1/8 = -1 * 8^{-1} mod 7 = -1 = 6
  CHECK(frac_binomial_in(PrimeField(7), 2, 2).residue() == 6);
  CHECK(frac_binomial_in(RationalField{}, 3, 2) == Rational(BigInt(-1), BigInt(9)));
}

TEST_CASE("series_inverse examples", "[exactalg][series]") {
  RationalField q;
  using P = TruncatedUniPoly<RationalField>;
  P one_minus_t(q, 3, {Rational(1), Rational(-1)});
  CHECK(series_inverse(one_minus_t) == P(q, 3, {Rational(1), Rational(1), Rational(1)}));

  P one(q, 5, {Rational(1)});
  CHECK(series_inverse(one) == one);

  P one_plus_t(q, 4, {Rational(1), Rational(1)});
  CHECK(series_inverse(one_plus_t) == P(q, 4, {Rational(1), Rational(-1), Rational(1), Rational(-1)}));

  P t(q, 4, {Rational(0), Rational(1)});
  CHECK_THROWS_AS(series_inverse(t), NonUnit);
}

TEST_CASE("series_inverse inverts random units over Q and F_p", "[exactalg][series][property]") {
  std::mt19937_64 rng(7);
  RationalField q;
  PrimeField fp(1000003);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t cap = 1 + static_cast<std::size_t>(trial % 12);
    auto fq = random_unit_series(q, cap, [&] { return random_rational(rng); });
    auto prod_q = fq * series_inverse(fq);
    CHECK(prod_q == TruncatedUniPoly<RationalField>::constant(q, cap, q.one()));

    auto ff = random_unit_series(fp, cap, [&] { return fp.from_int(static_cast<long long>(rng() % 1000003)); });
    auto prod_f = ff * series_inverse(ff);
    CHECK(prod_f == TruncatedUniPoly<PrimeField>::constant(fp, cap, fp.one()));
  }
}

TEST_CASE("truncated multiplication drops high degrees", "[exactalg][series]") {
  RationalField q;
  using P = TruncatedUniPoly<RationalField>;
  auto t = P::variable(q, 3);
  CHECK(t.pow(2) == P(q, 3, {Rational(0), Rational(0), Rational(1)}));
  CHECK(t.pow(3).is_zero());
  CHECK_THROWS_AS(P(q, 0), InvalidArgument);
}

TEST_CASE("principal parts index negative degrees", "[exactalg][laurent]") {
  RationalField q;
  LaurentPrincipalPart<RationalField> pp(q, 3);
  pp.set(-3, Rational(1));
  pp.set(-1, Rational(5));
  CHECK(pp.coefficient(-3) == Rational(1));
  CHECK(pp.coefficient(-2) == Rational(0));
  CHECK(pp.coefficient(0) == Rational(0));
  CHECK(pp.coefficient(-4) == Rational(0));
  CHECK_THROWS_AS(pp.set(0, Rational(1)), InvalidArgument);

  TruncatedUniPoly<RationalField> f(q, 4, {Rational(1), Rational(2), Rational(3), Rational(4)});
  auto shifted = LaurentPrincipalPart<RationalField>::from_shifted_series(f, 2);
  CHECK(shifted.coefficient(-2) == Rational(1));
  CHECK(shifted.coefficient(-1) == Rational(2));
}
