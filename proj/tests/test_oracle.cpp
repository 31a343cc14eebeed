#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace latlin;
using latlin::test::fin;

namespace {

const Algebra kMaxPlus = Algebra::max_plus();
const Algebra kBool = Algebra::boolean();
const Algebra kChain3 = Algebra::finite_chain(3);
const Algebra kPow2 = Algebra::power_set(2);

Vector vec(const Algebra& alg, const std::vector<std::string>& literals) {
  std::vector<Element> entries;
  for (const auto& s : literals) entries.push_back(parse_element(alg, s));
  return Vector(alg, std::move(entries));
}

Matrix mat(const Algebra& alg, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Element>> parsed;
  for (const auto& row : rows) {
    std::vector<Element> entries;
    for (const auto& s : row) entries.push_back(parse_element(alg, s));
    parsed.push_back(std::move(entries));
  }
  return Matrix::from_rows(alg, parsed);
}

bool grid_has(const std::vector<Element>& coords, const Element& e) {
  for (const Element& x : coords) {
    if (equal(x, e)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("enumerate_solutions examples", "[oracle]") {
  auto ones = enumerate_solutions(mat(kBool, {{"1"}}), vec(kBool, {"1"}));
  REQUIRE(ones.size() == 1);
  CHECK(vec_equal(ones[0], vec(kBool, {"1"})));

  auto annihilated = enumerate_solutions(mat(kBool, {{"0"}}), vec(kBool, {"0"}));
  REQUIRE(annihilated.size() == 2);
  CHECK(vec_equal(annihilated[0], vec(kBool, {"0"})));
  CHECK(vec_equal(annihilated[1], vec(kBool, {"1"})));

  auto chain = enumerate_solutions(mat(kChain3, {{"3", "1"}, {"2", "2"}}), vec(kChain3, {"2", "2"}));
  REQUIRE(chain.size() == 4);
  for (int second = 0; second <= 3; ++second) {
    CHECK(vec_equal(chain[static_cast<std::size_t>(second)],
                    Vector(kChain3, {Element::chain(kChain3, 2), Element::chain(kChain3, second)})));
  }

  CHECK_THROWS_AS(enumerate_solutions(mat(kMaxPlus, {{"0"}}), vec(kMaxPlus, {"0"})), Error);
  try {
    enumerate_solutions(mat(kMaxPlus, {{"0"}}), vec(kMaxPlus, {"0"}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CarrierNotFinite);
  }

  Matrix wide(kChain3, 1, 12, std::vector<Element>(12, Element::chain(kChain3, 1)));
  CHECK_THROWS_AS(enumerate_solutions(wide, vec(kChain3, {"1"}), 1000), Error);
  try {
    enumerate_solutions(wide, vec(kChain3, {"1"}), 1000);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EnumerationTooLarge);
  }
}

TEST_CASE("build_grid covers the breakpoints", "[oracle]") {
  SECTION("saturated system keeps a finite probe") {
    SampleGrid grid = build_grid(mat(kMaxPlus, {{"inf"}}), vec(kMaxPlus, {"inf"}));
    REQUIRE(grid.coordinates.size() == 1);
    CHECK(grid_has(grid.coordinates[0], kMaxPlus.bottom()));
    CHECK(grid_has(grid.coordinates[0], kMaxPlus.top()));
    bool has_finite = false;
    for (const Element& e : grid.coordinates[0]) has_finite |= (e.ext() == Element::Ext::Finite);
    CHECK(has_finite);
  }
  SECTION("identity row") {
    SampleGrid grid = build_grid(mat(kMaxPlus, {{"0"}}), vec(kMaxPlus, {"5"}));
    CHECK(grid_has(grid.coordinates[0], kMaxPlus.bottom()));
    CHECK(grid_has(grid.coordinates[0], fin(kMaxPlus, 5)));
    CHECK(grid_has(grid.coordinates[0], kMaxPlus.top()));
  }
  SECTION("residual breakpoint") {
    SampleGrid grid = build_grid(mat(kMaxPlus, {{"3"}}), vec(kMaxPlus, {"7"}));
    CHECK(grid_has(grid.coordinates[0], kMaxPlus.bottom()));
    CHECK(grid_has(grid.coordinates[0], fin(kMaxPlus, 4)));
    CHECK(grid_has(grid.coordinates[0], kMaxPlus.top()));
  }
  SECTION("grid points are sorted and distinct") {
    latlin::test::Rng rng(8401);
    auto pool = latlin::test::dense_pool(kMaxPlus);
    for (int trial = 0; trial < 50; ++trial) {
      int m = 1 + rng.below(3);
      int n = 1 + rng.below(3);
      Matrix a = latlin::test::random_matrix(rng, kMaxPlus, m, n, pool);
      Vector w = latlin::test::random_vector(rng, kMaxPlus, m, pool);
      SampleGrid grid = build_grid(a, w);
      REQUIRE(grid.coordinates.size() == static_cast<std::size_t>(n));
      for (const auto& coord : grid.coordinates) {
        for (std::size_t t = 0; t + 1 < coord.size(); ++t) {
          CHECK(less(coord[t], coord[t + 1]));
        }
      }
    }
  }
}

TEST_CASE("region matches the definition on every grid point", "[oracle][laws]") {
  latlin::test::Rng rng(8402);
  auto pool = latlin::test::dense_pool(kMaxPlus);
  for (int trial = 0; trial < 100; ++trial) {
    int m = 1 + rng.below(3);
    int n = 1 + rng.below(3);
    Matrix a = latlin::test::random_matrix(rng, kMaxPlus, m, n, pool);
    Vector w = latlin::test::random_vector(rng, kMaxPlus, m, pool);
    SolutionRegion region = solve(a, w);
    SampleGrid grid = build_grid(a, w);
    grid.for_each(kMaxPlus, [&](const Vector& v) {
      CHECK(region.contains(v) == verify(a, w, v));
    });
  }
}

TEST_CASE("check_solution_structure examples", "[oracle]") {
  SECTION("empty set passes vacuously") {
    CHECK(check_solution_structure({}).pass);
  }
  SECTION("chain solution set") {
    auto sols = enumerate_solutions(mat(kChain3, {{"3", "1"}, {"2", "2"}}), vec(kChain3, {"2", "2"}));
    StructureReport report = check_solution_structure(sols);
    CHECK(report.pass);
    // terminal point (2,3)
    Vector terminal = sols.front();
    for (const Vector& v : sols) terminal = vec_join(terminal, v);
    CHECK(vec_equal(terminal, vec(kChain3, {"2", "3"})));
  }
  SECTION("power-set system") {
    Matrix a(kPow2, 1, 1, {kPow2.top()});
    Vector w(kPow2, {Element::subset(kPow2, 0b01)});
    auto sols = enumerate_solutions(a, w);
    REQUIRE(sols.size() == 1);
    CHECK(equal(sols[0].at(1), Element::subset(kPow2, 0b01)));
    CHECK(check_solution_structure(sols).pass);
  }
  SECTION("a non-convex set fails") {
    std::vector<Vector> bad{vec(kChain3, {"0"}), vec(kChain3, {"2"})};
    StructureReport report = check_solution_structure(bad);
    CHECK_FALSE(report.pass);
    CHECK_FALSE(report.detail.empty());
  }
}

TEST_CASE("structure check refuses oversized order intervals", "[oracle]") {
  // [bottom, top] over chain-min:3 in 12 coordinates spans 4^12 carrier points
  std::vector<Vector> x{Vector::filled(kChain3, 12, kChain3.bottom()),
                        Vector::filled(kChain3, 12, kChain3.top())};
  CHECK_THROWS_AS(check_solution_structure(x, 1'000'000), Error);
  try {
    check_solution_structure(x, 1'000'000);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EnumerationTooLarge);
  }
}

TEST_CASE("solution sets over finite join-semiring carriers have the interval-union shape", "[oracle][laws]") {
  for (const Algebra& alg : {kBool, kChain3, Algebra::finite_chain(4), kPow2, Algebra::power_set(3)}) {
    INFO("algebra " << alg.name());
    latlin::test::Rng rng(8403);
    auto pool = latlin::test::full_carrier(alg);
    for (int trial = 0; trial < 120; ++trial) {
      int m = 1 + rng.below(2);
      int n = 1 + rng.below(2);
      Matrix a = latlin::test::random_matrix(rng, alg, m, n, pool);
      Vector w = latlin::test::random_vector(rng, alg, m, pool);
      StructureReport report = check_solution_structure(enumerate_solutions(a, w));
      INFO(report.detail);
      CHECK(report.pass);
    }
  }
}
