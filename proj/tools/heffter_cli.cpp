// Command-line front end. Everything goes through the shared-library C API in
// heffter.h; exit codes are 0 (success / verification passed), 1 (a
// mathematical check failed) and 2 (usage or parse errors).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "heffter.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitUsage = 2;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) {
  throw CliError{code, message};
}

void check(heffter_status status) {
  if (status == HEFFTER_OK) return;
  // Shape failures mean the requested object cannot exist; everything else
  // reaching this point is a bad request or malformed input.
  fail(status == HEFFTER_ERR_SHAPE ? kExitMathFail : kExitUsage, heffter_last_error());
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  heffter_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(kExitUsage, "cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) fail(kExitUsage, "cannot write file: " + out_path);
  out << text;
}

using SpacePtr = std::unique_ptr<heffter_space, decltype(&heffter_space_free)>;
using ArrayPtr = std::unique_ptr<heffter_array, decltype(&heffter_array_free)>;
using DecPtr = std::unique_ptr<heffter_decomposition, decltype(&heffter_decomposition_free)>;
using ReportPtr = std::unique_ptr<heffter_report, decltype(&heffter_report_free)>;

ReportPtr make_report(heffter_report* raw) { return ReportPtr(raw, heffter_report_free); }

/// Runs a verifier, prints the report on failure, and exits 1 if it failed.
void enforce_verified(heffter_report* raw) {
  ReportPtr report = make_report(raw);
  int passed = 0;
  check(heffter_report_passed(report.get(), &passed));
  if (!passed) {
    char* json = nullptr;
    check(heffter_report_to_json(report.get(), &json));
    std::cerr << take_string(json);
    fail(kExitMathFail, "self-verification failed");
  }
}

struct ConstructSpaceOptions {
  std::string family;
  long long n = 0, k = 0, p = 0;
  std::string out_path;
};

int run_construct_space(const ConstructSpaceOptions& opt) {
  heffter_space* raw = nullptr;
  if (opt.family == "divisor") {
    check(heffter_space_build_divisor(opt.n, opt.k, &raw));
  } else if (opt.family == "prime") {
    check(heffter_space_build_prime(opt.p, opt.k, &raw));
  } else if (opt.family == "net") {
    check(heffter_space_build_net(opt.p, &raw));
  } else {
    fail(kExitUsage, "unknown space family: " + opt.family);
  }
  SpacePtr space(raw, heffter_space_free);

  heffter_report* report = nullptr;
  check(heffter_space_verify(space.get(), &report));
  enforce_verified(report);

  char* json = nullptr;
  check(heffter_space_to_json(space.get(), &json));
  emit(take_string(json), opt.out_path);
  return kExitOk;
}

struct ConstructArrayOptions {
  std::string family;
  long long n = 0, k = 0, p = 0;
  long long class_a = -1, class_b = -1;
  std::string format = "json";
  std::string out_path;
};

int run_construct_array(const ConstructArrayOptions& opt) {
  heffter_array* raw = nullptr;
  if (opt.class_a >= 0 || opt.class_b >= 0) {
    if (opt.class_a < 0 || opt.class_b < 0)
      fail(kExitUsage, "--class-a and --class-b must be given together");
    heffter_space* sraw = nullptr;
    if (opt.family == "block")
      check(heffter_space_build_divisor(opt.n, opt.k, &sraw));
    else if (opt.family == "diagonal")
      check(heffter_space_build_prime(opt.p, opt.k, &sraw));
    else
      fail(kExitUsage, "unknown array family: " + opt.family);
    SpacePtr space(sraw, heffter_space_free);
    check(heffter_array_from_classes(space.get(), opt.class_a, opt.class_b, &raw));
  } else if (opt.family == "block") {
    check(heffter_array_build_block(opt.n, opt.k, &raw));
  } else if (opt.family == "diagonal") {
    check(heffter_array_build_diagonal(opt.p, opt.k, &raw));
  } else {
    fail(kExitUsage, "unknown array family: " + opt.family);
  }
  ArrayPtr arr(raw, heffter_array_free);

  heffter_report* report = nullptr;
  check(heffter_array_verify(arr.get(), &report));
  enforce_verified(report);

  char* text = nullptr;
  if (opt.format == "grid")
    check(heffter_array_to_grid(arr.get(), &text));
  else if (opt.format == "json")
    check(heffter_array_to_json(arr.get(), &text));
  else
    fail(kExitUsage, "unknown format: " + opt.format);
  emit(take_string(text), opt.out_path);
  return kExitOk;
}

int run_verify(const std::string& path) {
  const std::string text = read_file(path);
  int kind = -1;
  check(heffter_detect_document(text.c_str(), &kind));

  heffter_report* raw = nullptr;
  if (kind == 0) {
    heffter_space* sraw = nullptr;
    check(heffter_space_from_json(text.c_str(), &sraw));
    SpacePtr space(sraw, heffter_space_free);
    check(heffter_space_verify(space.get(), &raw));
  } else if (kind == 1) {
    heffter_array* araw = nullptr;
    check(heffter_array_from_json(text.c_str(), &araw));
    ArrayPtr arr(araw, heffter_array_free);
    check(heffter_array_verify(arr.get(), &raw));
  } else {
    heffter_decomposition* draw = nullptr;
    check(heffter_decomposition_from_json(text.c_str(), &draw));
    DecPtr dec(draw, heffter_decomposition_free);
    int developed = 0;
    check(heffter_decomposition_is_developed(dec.get(), &developed));
    if (!developed) check(heffter_decomposition_develop(dec.get()));
    check(heffter_decomposition_verify(dec.get(), &raw));
  }
  ReportPtr report = make_report(raw);

  char* json = nullptr;
  check(heffter_report_to_json(report.get(), &json));
  std::cout << take_string(json);
  int passed = 0;
  check(heffter_report_passed(report.get(), &passed));
  return passed ? kExitOk : kExitMathFail;
}

struct DecomposeOptions {
  std::string path;
  long long class_index = 0;
  bool develop = false;
  std::string out_path;
};

int run_decompose(const DecomposeOptions& opt) {
  const std::string text = read_file(opt.path);
  heffter_space* sraw = nullptr;
  check(heffter_space_from_json(text.c_str(), &sraw));
  SpacePtr space(sraw, heffter_space_free);

  heffter_decomposition* draw = nullptr;
  check(heffter_space_decompose(space.get(), opt.class_index, opt.develop ? 1 : 0, &draw));
  DecPtr dec(draw, heffter_decomposition_free);

  if (opt.develop) {
    heffter_report* rraw = nullptr;
    check(heffter_decomposition_verify(dec.get(), &rraw));
    ReportPtr report = make_report(rraw);
    int passed = 0;
    check(heffter_report_passed(report.get(), &passed));
    if (!passed) {
      char* json = nullptr;
      check(heffter_report_to_json(report.get(), &json));
      std::cerr << take_string(json);
      fail(kExitMathFail, "edge-partition audit failed");
    }
  }

  char* json = nullptr;
  check(heffter_decomposition_to_json(dec.get(), &json));
  emit(take_string(json), opt.out_path);
  return kExitOk;
}

int run_knight_solve(const std::string& path) {
  const std::string text = read_file(path);
  heffter_array* araw = nullptr;
  check(heffter_array_from_json(text.c_str(), &araw));
  ArrayPtr arr(araw, heffter_array_free);

  char* rows = nullptr;
  char* cols = nullptr;
  int found = 0;
  check(heffter_knight_solve(arr.get(), &rows, &cols, &found));
  if (!found) {
    std::cout << "none\n";
    return kExitOk;
  }
  std::cout << "rows " << take_string(rows) << "\n";
  std::cout << "cols " << take_string(cols) << "\n";
  return kExitOk;
}

struct KnightTraceOptions {
  std::string path;
  std::string rows, cols;
  long long start_row = 1, start_col = 1;
};

int run_knight_trace(const KnightTraceOptions& opt) {
  const std::string text = read_file(opt.path);
  heffter_array* araw = nullptr;
  check(heffter_array_from_json(text.c_str(), &araw));
  ArrayPtr arr(araw, heffter_array_free);

  char* json = nullptr;
  check(heffter_knight_trace(arr.get(), opt.rows.c_str(), opt.cols.c_str(), opt.start_row,
                             opt.start_col, &json));
  std::cout << take_string(json);
  return kExitOk;
}

int run_genus(long long n, long long k, long long t) {
  long long num = 0, den = 1;
  int integral = 0;
  check(heffter_genus(n, k, t, &num, &den, &integral));
  if (integral)
    std::cout << num << "\n";
  else
    std::cout << num << "/" << den << " (non-integral)\n";
  return kExitOk;
}

int run_density(const std::string& path) {
  const std::string text = read_file(path);
  heffter_space* sraw = nullptr;
  check(heffter_space_from_json(text.c_str(), &sraw));
  SpacePtr space(sraw, heffter_space_free);
  long long num = 0, den = 1;
  check(heffter_space_density(space.get(), &num, &den));
  std::cout << num << "/" << den << "\n";
  return kExitOk;
}

int run_oracle_ordering(long long w, const std::string& block_csv) {
  std::vector<long long> block;
  std::stringstream ss(block_csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      block.push_back(std::stoll(token));
    } catch (const std::exception&) {
      fail(kExitUsage, "invalid block element: " + token);
    }
  }
  if (block.empty()) fail(kExitUsage, "block must not be empty");

  std::vector<long long> ordering(block.size());
  int found = 0;
  check(heffter_simple_ordering(w, block.data(), static_cast<long long>(block.size()),
                                ordering.data(), &found));
  if (!found) {
    std::cout << "none\n";
    return kExitOk;
  }
  for (std::size_t i = 0; i < ordering.size(); ++i)
    std::cout << (i ? "," : "") << ordering[i];
  std::cout << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simple cyclic relative Heffter spaces, arrays, decompositions and tours"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "build and verify an object");
  construct->require_subcommand(1);

  ConstructSpaceOptions so;
  auto* cspace = construct->add_subcommand("space", "build a relative Heffter space");
  cspace->add_option("--family", so.family, "divisor | prime | net")->required();
  cspace->add_option("--n", so.n, "side parameter (divisor family)");
  cspace->add_option("--k", so.k, "block size");
  cspace->add_option("--p", so.p, "prime parameter (prime/net family)");
  cspace->add_option("--out", so.out_path, "output path (stdout if omitted)");

  ConstructArrayOptions ao;
  auto* carray = construct->add_subcommand("array", "build a relative Heffter array");
  carray->add_option("--family", ao.family, "block | diagonal")->required();
  carray->add_option("--n", ao.n, "side parameter (block family)");
  carray->add_option("--k", ao.k, "block size");
  carray->add_option("--p", ao.p, "prime parameter (diagonal family)");
  carray->add_option("--class-a", ao.class_a, "row class index (default per family)");
  carray->add_option("--class-b", ao.class_b, "column class index (default per family)");
  carray->add_option("--format", ao.format, "json | grid")->default_val("json");
  carray->add_option("--out", ao.out_path, "output path (stdout if omitted)");

  // verify
  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "verify a serialized object");
  verify->add_option("path", verify_path, "JSON file")->required();

  // decompose
  DecomposeOptions deco;
  auto* decompose = app.add_subcommand("decompose", "derive a cycle decomposition");
  decompose->add_option("path", deco.path, "space JSON file")->required();
  decompose->add_option("--class", deco.class_index, "parallel class index")->default_val(0);
  decompose->add_flag("--develop", deco.develop, "expand and audit the full orbit");
  decompose->add_option("--out", deco.out_path, "output path (stdout if omitted)");

  // knight
  auto* knight = app.add_subcommand("knight", "Crazy Knight's Tour");
  knight->require_subcommand(1);
  std::string solve_path;
  auto* ksolve = knight->add_subcommand("solve", "search for a solution orientation");
  ksolve->add_option("path", solve_path, "array JSON file")->required();
  KnightTraceOptions kt;
  auto* ktrace = knight->add_subcommand("trace", "trace one orbit of an orientation");
  ktrace->add_option("path", kt.path, "array JSON file")->required();
  ktrace->add_option("--rows", kt.rows, "row orientations, e.g. ++-")->required();
  ktrace->add_option("--cols", kt.cols, "column orientations")->required();
  ktrace->add_option("--start-row", kt.start_row, "start row")->default_val(1);
  ktrace->add_option("--start-col", kt.start_col, "start column")->default_val(1);

  // genus
  long long gn = 0, gk = 0, gt = 0;
  auto* genus_cmd = app.add_subcommand("genus", "biembedding surface genus");
  genus_cmd->add_option("--n", gn)->required();
  genus_cmd->add_option("--k", gk)->required();
  genus_cmd->add_option("--t", gt)->required();

  // density
  std::string density_path;
  auto* density_cmd = app.add_subcommand("density", "collinearity density of a space");
  density_cmd->add_option("path", density_path, "space JSON file")->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exhaustive oracles");
  oracle->require_subcommand(1);
  long long ow = 0;
  std::string oblock;
  auto* oorder = oracle->add_subcommand("simple-ordering", "least simple ordering of a block");
  oorder->add_option("--w", ow, "group order")->required();
  oorder->add_option("--block", oblock, "comma-separated elements")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cspace->parsed()) return run_construct_space(so);
    if (carray->parsed()) return run_construct_array(ao);
    if (verify->parsed()) return run_verify(verify_path);
    if (decompose->parsed()) return run_decompose(deco);
    if (ksolve->parsed()) return run_knight_solve(solve_path);
    if (ktrace->parsed()) return run_knight_trace(kt);
    if (genus_cmd->parsed()) return run_genus(gn, gk, gt);
    if (density_cmd->parsed()) return run_density(density_path);
    if (oorder->parsed()) return run_oracle_ordering(ow, oblock);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
