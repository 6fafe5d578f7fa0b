#include <catch2/catch_amalgamated.hpp>

#include "heffter/errors.hpp"
#include "heffter/json_io.hpp"
#include "heffter/topology.hpp"
#include "example_tables.hpp"

using namespace heffter;

namespace {

std::vector<Int> symmetric(const std::vector<Int>& vs, const RingContext& ctx) {
  std::vector<Int> out;
  for (Int v : vs) out.push_back(ctx.symmetric(v));
  return out;
}

HeffterArray full_array(Int n) {
  HeffterArray arr{RingContext(2 * n * n + 1, 1), n, n, {}};
  Int v = 1;
  for (Int r = 1; r <= n; ++r)
    for (Int c = 1; c <= n; ++c) arr.cells[{r, c}] = v++;
  return arr;
}

HeffterSystem degree2_rows() {
  HeffterSystem sys{RingContext(45, 5), 4, 0, {}};
  for (const auto& table : example_tables::kSystemP20) {
    Block blk;
    for (Int x : table) blk.elements.push_back(sys.ctx.canonical(x));
    sys.blocks.push_back(std::move(blk));
  }
  return sys;
}

HeffterSystem degree2_cols() {
  HeffterSystem sys{RingContext(45, 5), 4, 1, {}};
  for (const auto& table : example_tables::kSystemQ20) {
    Block blk;
    for (Int x : table) blk.elements.push_back(sys.ctx.canonical(x));
    sys.blocks.push_back(std::move(blk));
  }
  return sys;
}

}  // namespace

TEST_CASE("base cycles are the partial sums") {
  const RelativeHeffterSpace space = build_space_prime(7, 6);
  const CycleDecomposition d0 = base_cycles(space.classes[0]);
  CHECK(symmetric(d0.base_cycles[0], d0.ctx) == std::vector<Int>{7, 8, 6, 9, 5, 0});
  CHECK(symmetric(d0.base_cycles[1], d0.ctx) == std::vector<Int>{-19, 8, 19, 9, 18, 0});

  const RelativeHeffterSpace d15 = build_space_divisor(15, 5);
  const CycleDecomposition dd = base_cycles(d15.classes[0]);
  CHECK(symmetric(dd.base_cycles[0], dd.ctx) == std::vector<Int>{-10, -12, -9, -5, 0});
}

TEST_CASE("all printed cycle tables are reproduced") {
  const RelativeHeffterSpace space = build_space_prime(7, 6);
  for (std::size_t j = 0; j < 7; ++j) {
    const CycleDecomposition dec = base_cycles(space.classes[j]);
    REQUIRE(dec.base_cycles.size() == example_tables::kCycles7_6[j].size());
    for (std::size_t i = 0; i < dec.base_cycles.size(); ++i)
      REQUIRE(symmetric(dec.base_cycles[i], dec.ctx) == example_tables::kCycles7_6[j][i]);
  }
}

TEST_CASE("base cycles reject broken blocks") {
  HeffterSystem sys = build_system_prime(7, 6, 0);
  SECTION("non zero-sum") {
    sys.blocks[0].elements[0] = sys.ctx.canonical(sys.blocks[0].elements[0] + 1);
    CHECK_THROWS_AS(base_cycles(sys), NotZeroSumError);
  }
  SECTION("repeated partial sum") {
    // swap two entries of a row so that a prefix sum repeats: block 0 is
    // (7,1,-2,3,-4,-5); (3,-5,-2,7,1,-4) repeats prefix 3
    Block& blk = sys.blocks[0];
    blk.elements.clear();
    for (Int v : {3, -5, -2, 7, 1, -4}) blk.elements.push_back(sys.ctx.canonical(v));
    CHECK_THROWS_AS(base_cycles(sys), NotSimpleError);
  }
}

TEST_CASE("development of one class") {
  const RelativeHeffterSpace space = build_space_prime(7, 6);
  CycleDecomposition dec = develop(base_cycles(space.classes[0]));
  CHECK(dec.is_developed);
  CHECK(dec.developed.size() == 637);
  Int edges = 0;
  for (const auto& cycle : dec.developed) edges += static_cast<Int>(cycle.size());
  CHECK(edges == 3822);
  CHECK(verify_decomposition(dec).pass());
}

TEST_CASE("development edge cases") {
  RingContext z21(21, 3);
  CycleDecomposition one{z21, 3, {{z21.canonical(1), z21.canonical(3), 0}}, {}, false};
  const CycleDecomposition dev = develop(one);
  CHECK(dev.developed.size() == 21);

  CycleDecomposition empty{z21, 3, {}, {}, false};
  CHECK(develop(empty).developed.empty());
}

TEST_CASE("decomposition audit catches a dropped base cycle") {
  const RelativeHeffterSpace space = build_space_prime(5, 3);
  CycleDecomposition dec = base_cycles(space.classes[0]);
  dec.base_cycles.pop_back();
  const CycleDecomposition dev = develop(dec);
  const VerificationReport report = verify_decomposition(dev);
  REQUIRE_FALSE(report.pass());
}

TEST_CASE("undeveloped decompositions are rejected by the audit") {
  const RelativeHeffterSpace space = build_space_prime(5, 3);
  const CycleDecomposition dec = base_cycles(space.classes[0]);
  CHECK_FALSE(verify_decomposition(dec).pass());
}

TEST_CASE("orthogonal decompositions") {
  const RelativeHeffterSpace space = build_space_prime(7, 6);
  const CycleDecomposition d0 = develop(base_cycles(space.classes[0]));
  const CycleDecomposition d1 = develop(base_cycles(space.classes[1]));
  CHECK(decompositions_orthogonal(d0, d1));
  CHECK_FALSE(decompositions_orthogonal(d0, d0));
}

TEST_CASE("degree-2 array systems develop and are orthogonal") {
  const CycleDecomposition rows = develop(base_cycles(degree2_rows()));
  const CycleDecomposition cols = develop(base_cycles(degree2_cols()));
  CHECK(verify_decomposition(rows).pass());
  CHECK(verify_decomposition(cols).pass());
  CHECK(decompositions_orthogonal(rows, cols));
}

TEST_CASE("knight trace on the fully filled 3x3") {
  const HeffterArray arr = full_array(3);
  TourOrientation all_plus{{1, 1, 1}, {1, 1, 1}};
  const TourTrace trace = knight_trace(arr, all_plus, {1, 1});
  CHECK(trace.visited == std::vector<Cell>{{1, 1}, {2, 2}, {3, 3}});
  CHECK_FALSE(trace.is_solution);
}

TEST_CASE("knight solve on fully filled arrays") {
  for (Int n : {3, 5}) {
    CAPTURE(n);
    const auto solution = knight_solve(full_array(n));
    REQUIRE(solution.has_value());
    const TourTrace trace = knight_trace(full_array(n), *solution, {1, 1});
    REQUIRE(trace.is_solution);
    REQUIRE(static_cast<Int>(trace.visited.size()) == n * n);
  }
  CHECK_FALSE(knight_solve(full_array(4)).has_value());
  CHECK_FALSE(knight_solve(full_array(6)).has_value());
}

TEST_CASE("knight solve bound") {
  HeffterArray arr{RingContext(451, 1), 15, 15, {}};
  arr.cells[{1, 1}] = 1;
  CHECK_THROWS_AS(knight_solve(arr), TooLargeError);
}

TEST_CASE("solutions work from every start cell") {
  const HeffterArray arr = build_diagonal_array(5, 3);
  const auto solution = knight_solve(arr);
  REQUIRE(solution.has_value());
  for (const auto& [cell, value] : arr.cells) {
    const TourTrace trace = knight_trace(arr, *solution, cell);
    REQUIRE(trace.is_solution);
    REQUIRE(trace.visited.size() == arr.cells.size());
  }
}

TEST_CASE("knight orbits partition the filled cells") {
  const HeffterArray arr = full_array(4);
  TourOrientation o{{1, 1, 1, 1}, {1, 1, 1, 1}};
  std::set<Cell> seen;
  std::size_t covered = 0;
  for (const auto& [cell, value] : arr.cells) {
    if (seen.count(cell)) continue;
    const TourTrace trace = knight_trace(arr, o, cell);
    for (const Cell& c : trace.visited) {
      REQUIRE_FALSE(seen.count(c));
      seen.insert(c);
      ++covered;
    }
  }
  CHECK(covered == arr.cells.size());
}

TEST_CASE("even block size leaves the tour unsolvable") {
  // k even: no solution exists for a cyclically k-diagonal array
  CHECK_FALSE(knight_solve(build_diagonal_array(7, 4)).has_value());
  CHECK_FALSE(knight_solve(build_diagonal_array(5, 4)).has_value());
}

TEST_CASE("compatible orderings from knight solutions") {
  for (auto [p, k] : std::vector<std::pair<Int, Int>>{{5, 3}, {7, 3}, {7, 5}}) {
    CAPTURE(p, k);
    const HeffterArray arr = build_diagonal_array(p, k);
    const auto solution = knight_solve(arr);
    REQUIRE(solution.has_value());
    REQUIRE(compatible_check(arr, orientation_orderings(arr, *solution)));
  }
}

TEST_CASE("natural orderings on the 3x3 are not compatible") {
  const HeffterArray arr = full_array(3);
  TourOrientation all_plus{{1, 1, 1}, {1, 1, 1}};
  CHECK_FALSE(compatible_check(arr, orientation_orderings(arr, all_plus)));
}

TEST_CASE("a single filled row is always compatible") {
  // all filled cells on one row: any row ordering composes to one full cycle
  HeffterArray arr{RingContext(11, 1), 5, 1, {}};
  for (Int c = 1; c <= 5; ++c) arr.cells[{1, c}] = c;
  LineOrderings orderings;
  orderings.rows = {{2, 4, 1, 5, 3}, {}, {}, {}, {}};
  orderings.cols = {{1}, {1}, {1}, {1}, {1}};
  CHECK(compatible_check(arr, orderings));
}

TEST_CASE("compatible_check validates orderings") {
  const HeffterArray arr = full_array(3);
  LineOrderings bad;
  bad.rows = {{1, 2, 3}, {1, 2, 3}, {1, 1, 3}};  // row 3 repeats a column
  bad.cols = {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}};
  CHECK_THROWS_AS(compatible_check(arr, bad), std::invalid_argument);
}

TEST_CASE("genus values") {
  CHECK(genus(15, 5, 15) == Rational(3631, 1));
  CHECK(genus(15, 5, 15).is_integer());
  const Rational g = genus(5, 4, 5);
  CHECK(g == Rational(407, 2));
  CHECK_FALSE(g.is_integer());
  CHECK(genus(3, 3, 3) == Rational(22, 1));
  CHECK_THROWS_AS(genus(0, 3, 3), std::invalid_argument);
}

TEST_CASE("genus is integral for odd n = t, odd k") {
  for (Int n : {3, 5, 7, 9, 15})
    for (Int k : {3, 5, 7})
      CHECK(genus(n, k, n).is_integer());
}

TEST_CASE("additional class audits at desk scale") {
  const auto audit = [](const RelativeHeffterSpace& space) {
    std::vector<CycleDecomposition> devs;
    for (const HeffterSystem& sys : space.classes) {
      CycleDecomposition dec = develop(base_cycles(sys));
      REQUIRE(verify_decomposition(dec).pass());
      devs.push_back(std::move(dec));
    }
    for (std::size_t a = 0; a < devs.size(); ++a)
      for (std::size_t b = a + 1; b < devs.size(); ++b)
        REQUIRE(decompositions_orthogonal(devs[a], devs[b]));
  };
  audit(build_space_prime(3, 3));
  audit(build_space_prime(5, 4));
  audit(build_space_prime(7, 4));
  audit(build_space_prime(7, 5));
  audit(build_space_divisor(15, 3));
}

TEST_CASE("knight solve returns the lexicographically least solution") {
  // frozen from an independent enumeration of all 2^(2n-1) orientations
  const auto sol3 = knight_solve(full_array(3));
  REQUIRE(sol3.has_value());
  CHECK(orientation_to_string(*sol3) == "+++;++-");
  const auto sol5 = knight_solve(full_array(5));
  REQUIRE(sol5.has_value());
  CHECK(orientation_to_string(*sol5) == "+++++;++++-");
}
