#include "heffter/arrays.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "heffter/errors.hpp"
#include "heffter/ordering.hpp"

namespace heffter {

std::vector<Int> HeffterArray::row_filled(Int row) const {
  std::vector<Int> out;
  for (auto it = cells.lower_bound({row, 0}); it != cells.end() && it->first.first == row; ++it)
    out.push_back(it->first.second);
  return out;
}

std::vector<Int> HeffterArray::col_filled(Int col) const {
  std::vector<Int> out;
  for (const auto& [cell, value] : cells)
    if (cell.second == col) out.push_back(cell.first);
  return out;
}

std::vector<Int> HeffterArray::row_values(Int row) const {
  std::vector<Int> out;
  for (auto it = cells.lower_bound({row, 0}); it != cells.end() && it->first.first == row; ++it)
    out.push_back(it->second);
  return out;
}

std::vector<Int> HeffterArray::col_values(Int col) const {
  std::vector<Int> out;
  for (const auto& [cell, value] : cells)
    if (cell.second == col) out.push_back(value);
  return out;
}

HeffterArray from_two_classes(const RelativeHeffterSpace& space, std::size_t idx_a,
                              std::size_t idx_b) {
  if (idx_a >= space.classes.size() || idx_b >= space.classes.size() || idx_a == idx_b)
    throw std::invalid_argument("from_two_classes: class indices invalid");
  const HeffterSystem& rows = space.classes[idx_a];
  const HeffterSystem& cols = space.classes[idx_b];
  const Int n = static_cast<Int>(rows.blocks.size());
  if (static_cast<Int>(cols.blocks.size()) != n)
    throw ShapeError("from_two_classes: classes have different block counts");

  HeffterArray arr{space.ctx, n, space.k, {}};
  std::unordered_map<Int, Int> col_of;  // element -> column block index
  for (Int c = 0; c < n; ++c)
    for (Int x : cols.blocks[c].elements) col_of[space.ctx.canonical(x)] = c;

  std::vector<Int> per_col(n, 0);
  for (Int r = 0; r < n; ++r) {
    Int per_row = 0;
    for (Int x : rows.blocks[r].elements) {
      auto it = col_of.find(space.ctx.canonical(x));
      if (it == col_of.end()) continue;
      const Cell cell{r + 1, it->second + 1};
      if (!arr.cells.emplace(cell, space.ctx.canonical(x)).second)
        throw ShapeError("from_two_classes: two blocks share more than one element");
      ++per_row;
      ++per_col[it->second];
    }
    if (per_row != space.k)
      throw ShapeError("from_two_classes: row " + std::to_string(r + 1) + " has " +
                       std::to_string(per_row) + " filled cells, expected " +
                       std::to_string(space.k));
  }
  for (Int c = 0; c < n; ++c)
    if (per_col[c] != space.k)
      throw ShapeError("from_two_classes: column " + std::to_string(c + 1) + " has " +
                       std::to_string(per_col[c]) + " filled cells, expected " +
                       std::to_string(space.k));
  return arr;
}

HeffterArray build_block_array(Int n, Int k) {
  return from_two_classes(build_space_divisor(n, k), 0, 1);
}

HeffterArray build_diagonal_array(Int p, Int k) {
  const RelativeHeffterSpace space = build_space_prime(p, k);
  return from_two_classes(space, 0, space.classes.size() - 1);
}

VerificationReport verify_array(const HeffterArray& arr) {
  VerificationReport report;
  report.subject = "array";

  std::vector<Int> row_count(arr.n + 1, 0), col_count(arr.n + 1, 0);
  std::vector<Int> entries;
  for (const auto& [cell, value] : arr.cells) {
    const auto& [r, c] = cell;
    if (r < 1 || r > arr.n || c < 1 || c > arr.n) {
      report.add("cell-range", "cell (" + std::to_string(r) + "," + std::to_string(c) +
                                   ") outside the array");
      continue;
    }
    ++row_count[r];
    ++col_count[c];
    entries.push_back(arr.ctx.canonical(value));
  }
  for (Int r = 1; r <= arr.n; ++r)
    if (row_count[r] != arr.k)
      report.add("row-count", "row " + std::to_string(r) + " has " +
                                  std::to_string(row_count[r]) + " filled cells, expected " +
                                  std::to_string(arr.k));
  for (Int c = 1; c <= arr.n; ++c)
    if (col_count[c] != arr.k)
      report.add("col-count", "column " + std::to_string(c) + " has " +
                                  std::to_string(col_count[c]) + " filled cells, expected " +
                                  std::to_string(arr.k));

  if (!is_half_set(entries, arr.ctx))
    report.add("entries-half-set", "entries do not form a half-set of Z_w \\ J");

  for (Int r = 1; r <= arr.n; ++r) {
    Int sum = 0;
    for (Int v : arr.row_values(r)) sum += v;
    if (arr.ctx.canonical(sum) != 0)
      report.add("line-zero-sum", "row " + std::to_string(r) + " sums to " +
                                      std::to_string(arr.ctx.symmetric(sum)));
  }
  for (Int c = 1; c <= arr.n; ++c) {
    Int sum = 0;
    for (Int v : arr.col_values(c)) sum += v;
    if (arr.ctx.canonical(sum) != 0)
      report.add("line-zero-sum", "column " + std::to_string(c) + " sums to " +
                                      std::to_string(arr.ctx.symmetric(sum)));
  }

  report.note("globally_simple", is_globally_simple(arr) ? "true" : "false");
  const DiagonalProfile profile = diagonal_profile(arr);
  report.note("cyclically_diagonal", profile.is_cyclically_diagonal ? "true" : "false");
  if (profile.is_cyclically_diagonal)
    report.note("start_diagonal", std::to_string(profile.start_diagonal));
  return report;
}

bool is_globally_simple(const HeffterArray& arr) {
  for (Int r = 1; r <= arr.n; ++r)
    if (!check_simple_ordering(arr.row_values(r), arr.ctx)) return false;
  for (Int c = 1; c <= arr.n; ++c)
    if (!check_simple_ordering(arr.col_values(c), arr.ctx)) return false;
  return true;
}

DiagonalProfile diagonal_profile(const HeffterArray& arr) {
  DiagonalProfile profile;
  profile.k = arr.k;
  if (arr.n == 0 || arr.cells.empty()) return profile;

  // D_i holds the cells {(i,1),(i+1,2),...}; cell (r,c) lies on the diagonal
  // with index (r - c mod n) + 1 in the residue set {1,...,n}.
  std::set<Int> used;
  for (const auto& [cell, value] : arr.cells)
    used.insert(mod_canonical(cell.first - cell.second, arr.n) + 1);
  if (static_cast<Int>(used.size()) != arr.k) return profile;
  if (static_cast<Int>(arr.cells.size()) != arr.n * arr.k) return profile;

  // Exactly k diagonal indices, all fully filled; check they are consecutive
  // cyclically: some start i with used = {i, i+1, ..., i+k-1} mod n.
  for (Int start : used) {
    bool ok = true;
    for (Int offset = 0; offset < arr.k && ok; ++offset)
      ok = used.count(mod_canonical(start - 1 + offset, arr.n) + 1) > 0;
    if (ok) {
      profile.is_cyclically_diagonal = true;
      profile.start_diagonal = start;
      return profile;
    }
  }
  return profile;
}

namespace {
HeffterSystem lines_system(const HeffterArray& arr, bool rows) {
  HeffterSystem sys{arr.ctx, arr.k, 0, {}};
  for (Int line = 1; line <= arr.n; ++line) {
    Block blk;
    blk.i = line - 1;
    blk.elements = rows ? arr.row_values(line) : arr.col_values(line);
    sys.blocks.push_back(std::move(blk));
  }
  return sys;
}
}  // namespace

HeffterSystem rows_system(const HeffterArray& arr) { return lines_system(arr, true); }
HeffterSystem cols_system(const HeffterArray& arr) { return lines_system(arr, false); }

}  // namespace heffter
