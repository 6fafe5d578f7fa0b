#include <catch2/catch_amalgamated.hpp>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "heffter/errors.hpp"
#include "heffter/json_io.hpp"

using namespace heffter;

namespace {
std::string fixture(const std::string& name) {
  const char* dir = std::getenv("HEFFTER_FIXTURES");
  REQUIRE(dir != nullptr);
  std::ifstream in(std::string(dir) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}
}  // namespace

TEST_CASE("space round trip") {
  const RelativeHeffterSpace space = build_space_divisor(15, 5);
  const std::string json = space_to_json(space);
  const RelativeHeffterSpace back = space_from_json(json);
  REQUIRE(back.classes.size() == space.classes.size());
  for (std::size_t c = 0; c < space.classes.size(); ++c) {
    REQUIRE(back.classes[c].blocks.size() == space.classes[c].blocks.size());
    for (std::size_t b = 0; b < space.classes[c].blocks.size(); ++b)
      REQUIRE(back.classes[c].blocks[b].elements == space.classes[c].blocks[b].elements);
  }
  CHECK(back.family == SpaceFamily::divisor);
  CHECK(space_to_json(back) == json);  // byte-stable
}

TEST_CASE("array round trip and grid") {
  const HeffterArray arr = build_diagonal_array(7, 6);
  const std::string json = array_to_json(arr);
  const HeffterArray back = array_from_json(json);
  CHECK(back.cells == arr.cells);
  CHECK(back.n == arr.n);
  CHECK(array_to_json(back) == json);
  CHECK(array_to_grid(back) == array_to_grid(arr));
}

TEST_CASE("decomposition round trip") {
  const RelativeHeffterSpace space = build_space_prime(5, 3);
  const CycleDecomposition dec = develop(base_cycles(space.classes[2]));
  const std::string json = decomposition_to_json(dec);
  const CycleDecomposition back = decomposition_from_json(json);
  CHECK(back.base_cycles == dec.base_cycles);
  CHECK(back.developed == dec.developed);
  CHECK(back.is_developed);
  CHECK(decomposition_to_json(back) == json);
}

TEST_CASE("report serialization is stable") {
  VerificationReport report;
  report.subject = "space";
  report.add("orthogonality", "classes (0,1) blocks (2,3) share more than one element");
  report.note("globally_simple", "true");
  const std::string json = report_to_json(report);
  CHECK(json.find("\"verdict\": \"fail\"") != std::string::npos);
  CHECK(json.find("orthogonality") != std::string::npos);
  CHECK(json.find("globally_simple") != std::string::npos);
}

TEST_CASE("violation cap bounds report size") {
  VerificationReport report;
  for (int i = 0; i < 500; ++i) report.add("axiom-x", "violation " + std::to_string(i));
  CHECK(report.violations.size() == 100);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(space_from_json("{ not json"), ParseError);
  CHECK_THROWS_AS(space_from_json("{}"), ParseError);
  CHECK_THROWS_AS(space_from_json(R"({"w":45,"t":5,"k":4,"family":"weird","classes":[]})"),
                  ParseError);
  CHECK_THROWS_AS(array_from_json(R"({"n":3,"k":3,"t":1,"w":19,"cells":[[1,1,1],[1,1,2]]})"),
                  ParseError);  // duplicate cell
  CHECK_THROWS_AS(array_from_json(R"({"n":3,"k":3,"t":1,"w":19,"cells":[[4,1,1]]})"),
                  ParseError);  // out of range
  CHECK_THROWS_AS(array_from_json(R"({"n":3,"k":3,"t":2,"w":20,"cells":[]})"),
                  ParseError);  // even order
  CHECK_THROWS_AS(decomposition_from_json(R"({"w":21,"t":3,"k":3})"), ParseError);
}

TEST_CASE("document detection") {
  CHECK(detect_document(space_to_json(build_space_prime(3, 3))) == DocumentKind::space);
  CHECK(detect_document(array_to_json(build_diagonal_array(3, 3))) == DocumentKind::array);
  const CycleDecomposition dec = base_cycles(build_space_prime(3, 3).classes[0]);
  CHECK(detect_document(decomposition_to_json(dec)) == DocumentKind::decomposition);
  CHECK_THROWS_AS(detect_document("{}"), ParseError);
}

TEST_CASE("fixtures parse and verify") {
  const RelativeHeffterSpace space = space_from_json(fixture("space_20_4_2.json"));
  CHECK(space.family == SpaceFamily::external);
  CHECK(verify_space(space).pass());
  CHECK(density(space) == Rational(6, 19));

  const RelativeHeffterSpace bad = space_from_json(fixture("space_20_4_2_negated.json"));
  CHECK_FALSE(verify_space(bad).pass());

  const HeffterArray arr = array_from_json(fixture("array_h5_5x5.json"));
  CHECK(verify_array(arr).pass());
  CHECK(array_to_grid(arr) == fixture("array_h5_5x5.grid"));
}

TEST_CASE("orientation strings") {
  TourOrientation o{{1, -1, 1}, {-1, 1, 1}};
  CHECK(orientation_to_string(o) == "+-+;-++");
  const TourOrientation back = orientation_from_strings("+-+", "-++");
  CHECK(back.rows == o.rows);
  CHECK(back.cols == o.cols);
  CHECK_THROWS_AS(orientation_from_strings("+x", "+"), ParseError);
}
