#include "heffter.h"

#include <cstring>
#include <new>
#include <string>

#include "heffter/errors.hpp"
#include "heffter/json_io.hpp"
#include "heffter/ordering.hpp"
#include "heffter/topology.hpp"

using namespace heffter;

extern "C" {

struct heffter_space {
  RelativeHeffterSpace rep;
};
struct heffter_array {
  HeffterArray rep;
};
struct heffter_decomposition {
  CycleDecomposition rep;
};
struct heffter_report {
  VerificationReport rep;
};

}  // extern "C"

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
heffter_status guarded(Fn&& fn) {
  try {
    fn();
    return HEFFTER_OK;
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return HEFFTER_ERR_PARSE;
  } catch (const NotZeroSumError& e) {
    g_last_error = e.what();
    return HEFFTER_ERR_NOT_ZERO_SUM;
  } catch (const NotSimpleError& e) {
    g_last_error = e.what();
    return HEFFTER_ERR_NOT_SIMPLE;
  } catch (const TooLargeError& e) {
    g_last_error = e.what();
    return HEFFTER_ERR_TOO_LARGE;
  } catch (const ShapeError& e) {
    g_last_error = e.what();
    return HEFFTER_ERR_SHAPE;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return HEFFTER_ERR_INVALID;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return HEFFTER_ERR_INVALID;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HEFFTER_ERR_INTERNAL;
  }
}

heffter_status require(bool ok, const char* message) {
  if (ok) return HEFFTER_OK;
  g_last_error = message;
  return HEFFTER_ERR_INVALID;
}

}  // namespace

extern "C" {

const char* heffter_version(void) { return "1.0.0"; }

const char* heffter_last_error(void) { return g_last_error.c_str(); }

void heffter_string_free(char* s) { delete[] s; }

/* ---- spaces ---- */

heffter_status heffter_space_build_divisor(long long n, long long k, heffter_space** out) {
  if (auto st = require(out != nullptr, "null output pointer")) return st;
  return guarded([&] { *out = new heffter_space{build_space_divisor(n, k)}; });
}

heffter_status heffter_space_build_prime(long long p, long long k, heffter_space** out) {
  if (auto st = require(out != nullptr, "null output pointer")) return st;
  return guarded([&] { *out = new heffter_space{build_space_prime(p, k)}; });
}

heffter_status heffter_space_build_net(long long p, heffter_space** out) {
  if (auto st = require(out != nullptr, "null output pointer")) return st;
  return guarded([&] { *out = new heffter_space{build_net(p)}; });
}

heffter_status heffter_space_from_json(const char* json, heffter_space** out) {
  if (auto st = require(json && out, "null argument")) return st;
  return guarded([&] { *out = new heffter_space{space_from_json(json)}; });
}

heffter_status heffter_space_to_json(const heffter_space* space, char** out) {
  if (auto st = require(space && out, "null argument")) return st;
  return guarded([&] { *out = copy_string(space_to_json(space->rep)); });
}

heffter_status heffter_space_verify(const heffter_space* space, heffter_report** out) {
  if (auto st = require(space && out, "null argument")) return st;
  return guarded([&] { *out = new heffter_report{verify_space(space->rep)}; });
}

heffter_status heffter_space_class_count(const heffter_space* space, long long* out) {
  if (auto st = require(space && out, "null argument")) return st;
  *out = space->rep.degree();
  return HEFFTER_OK;
}

heffter_status heffter_space_density(const heffter_space* space, long long* num,
                                     long long* den) {
  if (auto st = require(space && num && den, "null argument")) return st;
  return guarded([&] {
    const Rational delta = density(space->rep);
    *num = delta.num;
    *den = delta.den;
  });
}

void heffter_space_free(heffter_space* space) { delete space; }

/* ---- arrays ---- */

heffter_status heffter_array_build_block(long long n, long long k, heffter_array** out) {
  if (auto st = require(out != nullptr, "null output pointer")) return st;
  return guarded([&] { *out = new heffter_array{build_block_array(n, k)}; });
}

heffter_status heffter_array_build_diagonal(long long p, long long k, heffter_array** out) {
  if (auto st = require(out != nullptr, "null output pointer")) return st;
  return guarded([&] { *out = new heffter_array{build_diagonal_array(p, k)}; });
}

heffter_status heffter_array_from_classes(const heffter_space* space, long long a,
                                          long long b, heffter_array** out) {
  if (auto st = require(space && out, "null argument")) return st;
  if (auto st = require(a >= 0 && b >= 0, "class indices must be nonnegative")) return st;
  return guarded([&] {
    *out = new heffter_array{from_two_classes(space->rep, static_cast<std::size_t>(a),
                                              static_cast<std::size_t>(b))};
  });
}

heffter_status heffter_array_from_json(const char* json, heffter_array** out) {
  if (auto st = require(json && out, "null argument")) return st;
  return guarded([&] { *out = new heffter_array{array_from_json(json)}; });
}

heffter_status heffter_array_to_json(const heffter_array* arr, char** out) {
  if (auto st = require(arr && out, "null argument")) return st;
  return guarded([&] { *out = copy_string(array_to_json(arr->rep)); });
}

heffter_status heffter_array_to_grid(const heffter_array* arr, char** out) {
  if (auto st = require(arr && out, "null argument")) return st;
  return guarded([&] { *out = copy_string(array_to_grid(arr->rep)); });
}

heffter_status heffter_array_verify(const heffter_array* arr, heffter_report** out) {
  if (auto st = require(arr && out, "null argument")) return st;
  return guarded([&] { *out = new heffter_report{verify_array(arr->rep)}; });
}

void heffter_array_free(heffter_array* arr) { delete arr; }

/* ---- decompositions ---- */

heffter_status heffter_space_decompose(const heffter_space* space, long long class_index,
                                       int dev, heffter_decomposition** out) {
  if (auto st = require(space && out, "null argument")) return st;
  if (auto st = require(class_index >= 0 && class_index < space->rep.degree(),
                        "class index out of range"))
    return st;
  return guarded([&] {
    CycleDecomposition dec =
        base_cycles(space->rep.classes[static_cast<std::size_t>(class_index)]);
    if (dev) dec = develop(std::move(dec));
    *out = new heffter_decomposition{std::move(dec)};
  });
}

heffter_status heffter_decomposition_from_json(const char* json,
                                               heffter_decomposition** out) {
  if (auto st = require(json && out, "null argument")) return st;
  return guarded([&] { *out = new heffter_decomposition{decomposition_from_json(json)}; });
}

heffter_status heffter_decomposition_develop(heffter_decomposition* dec) {
  if (auto st = require(dec != nullptr, "null argument")) return st;
  return guarded([&] { dec->rep = develop(std::move(dec->rep)); });
}

heffter_status heffter_decomposition_is_developed(const heffter_decomposition* dec,
                                                  int* out) {
  if (auto st = require(dec && out, "null argument")) return st;
  *out = dec->rep.is_developed ? 1 : 0;
  return HEFFTER_OK;
}

heffter_status heffter_decomposition_to_json(const heffter_decomposition* dec, char** out) {
  if (auto st = require(dec && out, "null argument")) return st;
  return guarded([&] { *out = copy_string(decomposition_to_json(dec->rep)); });
}

heffter_status heffter_decomposition_verify(const heffter_decomposition* dec,
                                            heffter_report** out) {
  if (auto st = require(dec && out, "null argument")) return st;
  return guarded([&] { *out = new heffter_report{verify_decomposition(dec->rep)}; });
}

void heffter_decomposition_free(heffter_decomposition* dec) { delete dec; }

/* ---- knight tour ---- */

heffter_status heffter_knight_solve(const heffter_array* arr, char** rows, char** cols,
                                    int* found) {
  if (auto st = require(arr && rows && cols && found, "null argument")) return st;
  return guarded([&] {
    const auto solution = knight_solve(arr->rep);
    if (!solution) {
      *found = 0;
      *rows = nullptr;
      *cols = nullptr;
      return;
    }
    *found = 1;
    std::string r, c;
    for (int v : solution->rows) r += v > 0 ? '+' : '-';
    for (int v : solution->cols) c += v > 0 ? '+' : '-';
    *rows = copy_string(r);
    *cols = copy_string(c);
  });
}

heffter_status heffter_knight_trace(const heffter_array* arr, const char* rows,
                                    const char* cols, long long start_row,
                                    long long start_col, char** trace_json) {
  if (auto st = require(arr && rows && cols && trace_json, "null argument")) return st;
  return guarded([&] {
    const TourOrientation o = orientation_from_strings(rows, cols);
    const TourTrace trace = knight_trace(arr->rep, o, Cell{start_row, start_col});
    *trace_json = copy_string(trace_to_json(trace));
  });
}

/* ---- numbers ---- */

heffter_status heffter_genus(long long n, long long k, long long t, long long* num,
                             long long* den, int* integral) {
  if (auto st = require(num && den && integral, "null argument")) return st;
  return guarded([&] {
    const Rational g = genus(n, k, t);
    *num = g.num;
    *den = g.den;
    *integral = g.is_integer() ? 1 : 0;
  });
}

heffter_status heffter_simple_ordering(long long w, const long long* block, long long k,
                                       long long* ordering, int* found) {
  if (auto st = require(block && ordering && found, "null argument")) return st;
  if (auto st = require(k > 0, "block must be nonempty")) return st;
  return guarded([&] {
    const RingContext ctx(w, 1);
    std::vector<Int> elements(block, block + k);
    const auto result = find_simple_ordering(elements, ctx);
    if (!result) {
      *found = 0;
      return;
    }
    *found = 1;
    for (std::size_t i = 0; i < result->size(); ++i) ordering[i] = ctx.symmetric((*result)[i]);
  });
}

/* ---- reports ---- */

heffter_status heffter_report_passed(const heffter_report* report, int* out) {
  if (auto st = require(report && out, "null argument")) return st;
  *out = report->rep.pass() ? 1 : 0;
  return HEFFTER_OK;
}

heffter_status heffter_report_to_json(const heffter_report* report, char** out) {
  if (auto st = require(report && out, "null argument")) return st;
  return guarded([&] { *out = copy_string(report_to_json(report->rep)); });
}

void heffter_report_free(heffter_report* report) { delete report; }

heffter_status heffter_detect_document(const char* json, int* kind) {
  if (auto st = require(json && kind, "null argument")) return st;
  return guarded([&] {
    switch (detect_document(json)) {
      case DocumentKind::space: *kind = 0; break;
      case DocumentKind::array: *kind = 1; break;
      case DocumentKind::decomposition: *kind = 2; break;
    }
  });
}

}  // extern "C"
