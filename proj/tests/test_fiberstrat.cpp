#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "oscone/chern.hpp"
#include "oscone/fiberstrat.hpp"

using namespace oscone;
using namespace oscone::fiberstrat;

namespace {

std::size_t ordered_split_count(std::size_t n) {
  // Ordered pairs (I, I^c) with both sides nonempty, by explicit enumeration.
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (mask != 0 && mask != (std::uint64_t{1} << n) - 1) ++count;
  }
  return count;
}

std::vector<unsigned> all_ones(unsigned d) { return std::vector<unsigned>(d, 1); }

}  // namespace

TEST_CASE("reduced fiber of degree 4", "[fiberstrat]") {
  auto s = stratify_fiber(RamificationProfile({1, 1, 1, 1}));
  CHECK(s.case1_points() == 7);
  CHECK_FALSE(s.case2_component().has_value());
  CHECK(s.generic_count);
}

TEST_CASE("one simple ramification point", "[fiberstrat]") {
  auto s = stratify_fiber(RamificationProfile({2, 1, 1}));
  CHECK(s.case1_points() == 3);
  REQUIRE(s.case2_component().has_value());
  CHECK(s.case2_component()->dimension == 0);
  CHECK(s.case2_component()->label == "span(p1)");
  CHECK(s.generic_count);
}

TEST_CASE("two double points give a line", "[fiberstrat]") {
  auto s = stratify_fiber(RamificationProfile({2, 2}));
  CHECK(s.case1_points() == 1);
  REQUIRE(s.case2_component().has_value());
  CHECK(s.case2_component()->dimension == 1);
  CHECK_FALSE(s.generic_count);
}

TEST_CASE("generic-count profiles", "[fiberstrat]") {
  CHECK(stratify_fiber(RamificationProfile({1, 3, 1})).generic_count);
  CHECK_FALSE(stratify_fiber(RamificationProfile({4, 1})).generic_count);
  CHECK_FALSE(stratify_fiber(RamificationProfile({2, 1, 2})).generic_count);
  auto total = stratify_fiber(RamificationProfile({4}));
  CHECK(total.case1_points() == 0);
  CHECK(total.case2_component()->dimension == 1);
}

TEST_CASE("split labels cover every unordered pair once", "[fiberstrat]") {
  auto s = stratify_fiber(RamificationProfile({2, 1, 1}));
  std::set<std::string> labels;
  for (const auto& st : s.strata) {
    if (st.kind != StratumKind::Case1Point) continue;
    labels.insert(st.label);
    unsigned total = 0;
    for (std::size_t i = 0; i < 3; ++i) total += st.decomposition.part1[i] + st.decomposition.part2[i];
    CHECK(total == 4);
  }
  CHECK(labels == std::set<std::string>{"p2 | 2p1+p3", "p3 | 2p1+p2", "p2+p3 | 2p1"});
}

TEST_CASE("case 1 count is 2^(n-1)-1 for n <= 10", "[fiberstrat][property]") {
  for (unsigned n = 1; n <= 10; ++n) {
    std::vector<unsigned> mult(n);
    for (unsigned i = 0; i < n; ++i) mult[i] = 1 + (i * 7 + n) % 3;
    auto s = stratify_fiber(RamificationProfile(mult));
    INFO("n=" << n);
    CHECK(s.case1_points() == (std::size_t{1} << (n - 1)) - 1);
    CHECK(ordered_split_count(n) / 2 == s.case1_points());
    std::set<std::string> labels;
    for (const auto& st : s.strata) labels.insert(st.label);
    CHECK(labels.size() == s.strata.size());
  }
}

TEST_CASE("reduced fibers match the Chern count and have no component", "[fiberstrat][property]") {
  for (unsigned d = 3; d <= 10; ++d) {
    auto s = stratify_fiber(RamificationProfile(all_ones(d)));
    CHECK(BigInt(s.case1_points()) == chern::fiber_count(static_cast<int>(d)));
    CHECK_FALSE(s.case2_component().has_value());
  }
}

TEST_CASE("wild ramification is rejected", "[fiberstrat]") {
  CHECK_THROWS_AS(stratify_fiber(RamificationProfile({2, 2}, 2)), WildRamification);
  CHECK_THROWS_AS(stratify_fiber(RamificationProfile({3, 1}, 3)), WildRamification);
  CHECK_NOTHROW(stratify_fiber(RamificationProfile({3, 1}, 5)));
  CHECK_NOTHROW(stratify_fiber(RamificationProfile({1, 1, 1}, 3)));
  CHECK_THROWS_AS(RamificationProfile({}), InvalidArgument);
  CHECK_THROWS_AS(RamificationProfile({2, 0}), InvalidArgument);
}

TEST_CASE("Brill-Noether number and pencil count", "[fiberstrat]") {
  CHECK(brill_noether_rho(6, 4, 1) == 0);
  CHECK(brill_noether_rho(4, 3, 1) == 0);
  CHECK(brill_noether_rho(6, 5, 0) == 5);
  CHECK(pencil_count(4) == 5);
  CHECK(pencil_count(2) == 1);
  CHECK(pencil_count(3) == 2);
  CHECK(pencil_count(10) == 4862);
  CHECK_THROWS_AS(pencil_count(1), BadDimension);
}

TEST_CASE("general fiber component counts", "[fiberstrat]") {
  CHECK(general_fiber_component_counts(4) == std::map<unsigned, BigInt>{{1, 4}, {2, 3}});
  CHECK(general_fiber_component_counts(3) == std::map<unsigned, BigInt>{{1, 3}});
  CHECK(general_fiber_component_counts(6) == std::map<unsigned, BigInt>{{1, 6}, {2, 15}, {3, 10}});
  for (int d = 3; d <= 14; ++d) {
    BigInt total = 0;
    for (const auto& [i, c] : general_fiber_component_counts(d)) total += c;
    CHECK(total == chern::fiber_count(d));
  }
}

TEST_CASE("Riemann-Hurwitz checks", "[fiberstrat]") {
  auto genus6 = riemann_hurwitz_checks(6, 4, 3);
  CHECK(genus6.ramification_count == 18);
  CHECK(genus6.companion_genus == 7);
  REQUIRE(genus6.intersection_chi.has_value());
  CHECK(*genus6.intersection_chi == 18);

  auto identity = riemann_hurwitz_checks(0, 1, 1);
  CHECK(identity.ramification_count == 0);
  CHECK(identity.companion_genus == 0);
  CHECK_FALSE(identity.intersection_chi.has_value());

  CHECK(riemann_hurwitz_checks(4, 3, 2).ramification_count == 12);
  CHECK_THROWS_AS(riemann_hurwitz_checks(-1, 3, 2), InvalidArgument);
}
