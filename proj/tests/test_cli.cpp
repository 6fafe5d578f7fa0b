#include <array>
#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

std::string cli_path() {
  const char* path = std::getenv("HEFFTER_CLI");
  REQUIRE(path != nullptr);
  return path;
}

std::string fixtures_dir() {
  const char* dir = std::getenv("HEFFTER_FIXTURES");
  REQUIRE(dir != nullptr);
  return dir;
}

RunResult run(const std::string& args) {
  const std::string command = cli_path() + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    output.append(buffer.data(), got);
  const int status = pclose(pipe);
  return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string temp_file(const std::string& name) {
  return std::string("/tmp/heffter_cli_test_") + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("construct space writes a verified file") {
  const std::string out = temp_file("s15.json");
  const RunResult r = run("construct space --family divisor --n 15 --k 5 --out " + out);
  CAPTURE(r.output);
  REQUIRE(r.exit_code == 0);
  const std::string text = slurp(out);
  CHECK(text.find("\"w\": 165") != std::string::npos);
  CHECK(text.find("\"r\": 5") != std::string::npos);

  // round trip through verify
  const RunResult v = run("verify " + out);
  CHECK(v.exit_code == 0);
  CHECK(v.output.find("\"verdict\": \"pass\"") != std::string::npos);
}

TEST_CASE("construct grid matches the printed example") {
  const RunResult r = run("construct array --family diagonal --p 7 --k 6 --format grid");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.substr(0, r.output.find('\n')) == "7 1 -2 3 -4 -5 .");
  CHECK(r.output.find("-25 -15 16 -17 8 . 33") != std::string::npos);
}

TEST_CASE("construct rejects bad parameters with exit 2") {
  CHECK(run("construct space --family prime --p 8 --k 3").exit_code == 2);
  CHECK(run("construct space --family divisor --n 14 --k 7").exit_code == 2);
  CHECK(run("construct space --family nonsense --n 15 --k 5").exit_code == 2);
  CHECK(run("construct array --family diagonal --p 7 --k 6 --format yaml").exit_code == 2);
}

TEST_CASE("byte-stable output across runs") {
  const std::string out1 = temp_file("stable1.json");
  const std::string out2 = temp_file("stable2.json");
  REQUIRE(run("construct space --family prime --p 7 --k 6 --out " + out1).exit_code == 0);
  REQUIRE(run("construct space --family prime --p 7 --k 6 --out " + out2).exit_code == 0);
  CHECK(slurp(out1) == slurp(out2));
}

TEST_CASE("verify fixture files") {
  CHECK(run("verify " + fixtures_dir() + "/space_20_4_2.json").exit_code == 0);
  const RunResult bad = run("verify " + fixtures_dir() + "/space_20_4_2_negated.json");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("\"verdict\": \"fail\"") != std::string::npos);
  CHECK(run("verify " + fixtures_dir() + "/malformed.json").exit_code == 2);
  CHECK(run("verify /does/not/exist.json").exit_code == 2);
  CHECK(run("verify " + fixtures_dir() + "/array_h5_5x5.json").exit_code == 0);
}

TEST_CASE("decompose emits base cycles and audits development") {
  const std::string space_file = temp_file("p76.json");
  REQUIRE(run("construct space --family prime --p 7 --k 6 --out " + space_file).exit_code ==
          0);
  const RunResult base = run("decompose " + space_file + " --class 0");
  REQUIRE(base.exit_code == 0);
  CHECK(base.output.find("\"developed\": false") != std::string::npos);

  const std::string dec_file = temp_file("d0.json");
  const RunResult dev =
      run("decompose " + space_file + " --class 0 --develop --out " + dec_file);
  REQUIRE(dev.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(slurp(dec_file));
  REQUIRE(doc.contains("cycles"));
  CHECK(doc["cycles"].size() == 637);
  CHECK(doc["base_cycles"].size() == 7);

  // verifying the emitted decomposition passes
  CHECK(run("verify " + dec_file).exit_code == 0);
}

TEST_CASE("knight solve and trace") {
  const RunResult none = run("knight solve " + fixtures_dir() + "/full4.json");
  REQUIRE(none.exit_code == 0);
  CHECK(none.output == "none\n");

  const RunResult some = run("knight solve " + fixtures_dir() + "/full3.json");
  REQUIRE(some.exit_code == 0);
  CHECK(some.output.find("rows +") != std::string::npos);

  const RunResult trace = run("knight trace " + fixtures_dir() +
                              "/full3.json --rows +++ --cols +++ --start-row 1 --start-col 1");
  REQUIRE(trace.exit_code == 0);
  CHECK(trace.output.find("\"is_solution\": false") != std::string::npos);
  CHECK(trace.output.find("\"length\": 3") != std::string::npos);
}

TEST_CASE("genus output") {
  const RunResult g = run("genus --n 15 --k 5 --t 15");
  REQUIRE(g.exit_code == 0);
  CHECK(g.output == "3631\n");
  const RunResult ng = run("genus --n 5 --k 4 --t 5");
  REQUIRE(ng.exit_code == 0);
  CHECK(ng.output == "407/2 (non-integral)\n");
}

TEST_CASE("density output") {
  const RunResult d = run("density " + fixtures_dir() + "/space_20_4_2.json");
  REQUIRE(d.exit_code == 0);
  CHECK(d.output == "6/19\n");
}

TEST_CASE("ordering oracle") {
  const RunResult found = run("oracle simple-ordering --w 21 --block 1,2,-3");
  REQUIRE(found.exit_code == 0);
  CHECK(found.output == "-3,1,2\n");
  const RunResult bad = run("oracle simple-ordering --w 45 --block 1,2,3");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("construct space").exit_code == 2);
  CHECK(run("construct space --family divisor --n 15 --k 5 --bogus-flag 3").exit_code == 2);
}

TEST_CASE("construct output matches the shipped golden files") {
  const std::string golden = fixtures_dir() + "/golden";
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"construct space --family divisor --n 15 --k 5", "space_divisor_15_5.json"},
      {"construct space --family net --p 5", "space_net_5.json"},
      {"construct space --family prime --p 7 --k 6", "space_prime_7_6.json"},
      {"construct array --family block --n 15 --k 5 --format grid", "array_block_15_5.grid"},
      {"construct array --family block --n 15 --k 5 --format json", "array_block_15_5.json"},
      {"construct array --family diagonal --p 7 --k 6 --format grid",
       "array_diagonal_7_6.grid"},
      {"construct array --family diagonal --p 7 --k 6 --format json",
       "array_diagonal_7_6.json"},
  };
  for (const auto& [args, file] : cases) {
    CAPTURE(args, file);
    const std::string out = temp_file("golden_out");
    REQUIRE(run(args + " --out " + out).exit_code == 0);
    REQUIRE(slurp(out) == slurp(golden + "/" + file));
  }
}

TEST_CASE("decompose output matches the shipped golden files") {
  const std::string golden = fixtures_dir() + "/golden";
  for (int cls = 0; cls < 7; ++cls) {
    CAPTURE(cls);
    const std::string out = temp_file("golden_dec");
    REQUIRE(run("decompose " + golden + "/space_prime_7_6.json --class " +
                std::to_string(cls) + " --out " + out)
                .exit_code == 0);
    REQUIRE(slurp(out) == slurp(golden + "/dec_7_6_class" + std::to_string(cls) + ".json"));
  }
}

TEST_CASE("verify audits developed cycles as given") {
  const std::string golden = fixtures_dir() + "/golden";
  const std::string dec_file = temp_file("tampered.json");
  // develop, then corrupt one vertex of one developed cycle
  REQUIRE(run("decompose " + golden + "/space_prime_7_6.json --class 0 --develop --out " +
              dec_file)
              .exit_code == 0);
  std::string text = slurp(dec_file);
  const std::size_t cycles_at = text.find("\"cycles\"");
  REQUIRE(cycles_at != std::string::npos);
  const std::size_t v = text.find("      -45,", cycles_at);
  REQUIRE(v != std::string::npos);
  text.replace(v, 10, "      -44,");
  std::ofstream(dec_file) << text;
  CHECK(run("verify " + dec_file).exit_code == 1);
}

TEST_CASE("failure reports are byte-stable") {
  const RunResult r = run("verify " + fixtures_dir() + "/space_20_4_2_negated.json");
  REQUIRE(r.exit_code == 1);
  CHECK(r.output == slurp(fixtures_dir() + "/golden/report_negated.json"));
}

TEST_CASE("oracle rejects oversized blocks") {
  // eleven elements exceeds the exhaustive bound
  const RunResult r =
      run("oracle simple-ordering --w 165 --block 1,2,3,4,5,6,7,8,9,10,-55");
  CHECK(r.exit_code == 2);
}

TEST_CASE("density of a constructed net") {
  const std::string out = temp_file("net5.json");
  REQUIRE(run("construct space --family net --p 5 --out " + out).exit_code == 0);
  const RunResult d = run("density " + out);
  REQUIRE(d.exit_code == 0);
  CHECK(d.output == "5/6\n");
}

TEST_CASE("arrays from arbitrary class pairs") {
  const RunResult ok =
      run("construct array --family diagonal --p 7 --k 6 --class-a 1 --class-b 2");
  CHECK(ok.exit_code == 0);
  // composite k: the requested classes are provably not orthogonal
  const RunResult bad =
      run("construct array --family block --n 9 --k 9 --class-a 1 --class-b 3");
  CHECK(bad.exit_code == 1);
  const RunResult out_of_range = run("decompose " + fixtures_dir() +
                                     "/golden/space_prime_7_6.json --class 99");
  CHECK(out_of_range.exit_code == 2);
}
