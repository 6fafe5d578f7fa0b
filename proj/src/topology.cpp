#include "heffter/topology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "heffter/errors.hpp"
#include "heffter/ordering.hpp"

namespace heffter {

namespace {

/// Canonical form of a cycle up to rotation and reflection: the
/// lexicographically least rotation of either direction, least vertex first.
std::vector<Int> canonical_cycle(const std::vector<Int>& cycle) {
  const std::size_t k = cycle.size();
  std::vector<Int> best;
  std::vector<Int> reversed(cycle.rbegin(), cycle.rend());
  const std::vector<Int>* directions[] = {&cycle, &reversed};
  for (const std::vector<Int>* dir : directions) {
    const auto min_it = std::min_element(dir->begin(), dir->end());
    const std::size_t offset = static_cast<std::size_t>(min_it - dir->begin());
    std::vector<Int> rotated(k);
    for (std::size_t i = 0; i < k; ++i) rotated[i] = (*dir)[(offset + i) % k];
    if (best.empty() || rotated < best) best = std::move(rotated);
  }
  return best;
}

std::uint64_t edge_key(Int a, Int b, Int w) {
  const Int lo = std::min(a, b), hi = std::max(a, b);
  return static_cast<std::uint64_t>(lo) * static_cast<std::uint64_t>(w) +
         static_cast<std::uint64_t>(hi);
}

void for_each_edge(const std::vector<Int>& cycle, auto&& fn) {
  const std::size_t k = cycle.size();
  for (std::size_t i = 0; i < k; ++i) fn(cycle[i], cycle[(i + 1) % k]);
}

}  // namespace

CycleDecomposition base_cycles(const HeffterSystem& sys) {
  CycleDecomposition dec{sys.ctx, sys.k, {}, {}, false};
  dec.base_cycles.reserve(sys.blocks.size());
  for (std::size_t b = 0; b < sys.blocks.size(); ++b) {
    const Block& blk = sys.blocks[b];
    std::vector<Int> vertices;
    vertices.reserve(blk.elements.size());
    Int acc = 0;
    for (Int x : blk.elements) {
      acc = sys.ctx.canonical(acc + x);
      vertices.push_back(acc);
    }
    if (vertices.empty() || vertices.back() != 0)
      throw NotZeroSumError("base_cycles: block " + std::to_string(b) +
                            " does not sum to zero");
    std::vector<Int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw NotSimpleError("base_cycles: block " + std::to_string(b) +
                           " stored order repeats a partial sum");
    dec.base_cycles.push_back(std::move(vertices));
  }
  return dec;
}

CycleDecomposition develop(CycleDecomposition dec) {
  const Int w = dec.ctx.order();
  std::set<std::vector<Int>> seen;
  for (const auto& base : dec.base_cycles) {
    for (Int g = 0; g < w; ++g) {
      std::vector<Int> translated;
      translated.reserve(base.size());
      for (Int v : base) translated.push_back(dec.ctx.canonical(v + g));
      seen.insert(canonical_cycle(translated));
    }
  }
  dec.developed.assign(seen.begin(), seen.end());
  dec.is_developed = true;
  return dec;
}

VerificationReport verify_decomposition(const CycleDecomposition& dec) {
  VerificationReport report;
  report.subject = "decomposition";
  if (!dec.is_developed) {
    report.add("developed", "decomposition has not been developed");
    return report;
  }
  const Int w = dec.ctx.order();
  const Int t = dec.ctx.subgroup_order();

  std::unordered_map<std::uint64_t, int> covered;
  covered.reserve(static_cast<std::size_t>(w) * static_cast<std::size_t>(w - t) / 2);
  for (std::size_t c = 0; c < dec.developed.size(); ++c) {
    const auto& cycle = dec.developed[c];
    if (static_cast<Int>(cycle.size()) != dec.k) {
      report.add("cycle-length", "cycle " + std::to_string(c) + " has length " +
                                     std::to_string(cycle.size()));
      continue;
    }
    std::unordered_set<Int> distinct(cycle.begin(), cycle.end());
    if (distinct.size() != cycle.size()) {
      report.add("cycle-vertices", "cycle " + std::to_string(c) + " repeats a vertex");
      continue;
    }
    for_each_edge(cycle, [&](Int a, Int b) {
      if (dec.ctx.in_subgroup(a - b))
        report.add("edge-between-parts", "edge {" + std::to_string(dec.ctx.symmetric(a)) + "," +
                                             std::to_string(dec.ctx.symmetric(b)) +
                                             "} joins vertices of one part");
      else
        ++covered[edge_key(a, b, w)];
    });
  }

  Int duplicated = 0;
  for (const auto& [key, count] : covered)
    if (count > 1) ++duplicated;
  if (duplicated > 0)
    report.add("edge-partition", std::to_string(duplicated) + " edges covered more than once");
  const Int expected = w * (w - t) / 2;
  if (static_cast<Int>(covered.size()) != expected)
    report.add("edge-partition", "covered " + std::to_string(covered.size()) +
                                     " distinct edges, expected " + std::to_string(expected));

  // Regularity: the developed set must be closed under translation by 1.
  std::set<std::vector<Int>> forms(dec.developed.begin(), dec.developed.end());
  for (const auto& cycle : dec.developed) {
    std::vector<Int> shifted;
    shifted.reserve(cycle.size());
    for (Int v : cycle) shifted.push_back(dec.ctx.canonical(v + 1));
    if (!forms.count(canonical_cycle(shifted))) {
      report.add("regular", "cycle set is not closed under translation");
      break;
    }
  }
  return report;
}

bool decompositions_orthogonal(const CycleDecomposition& d1, const CycleDecomposition& d2) {
  if (!(d1.ctx == d2.ctx))
    throw std::invalid_argument("decompositions_orthogonal: different rings");
  if (!d1.is_developed || !d2.is_developed)
    throw std::invalid_argument("decompositions_orthogonal: both sides must be developed");
  const Int w = d1.ctx.order();

  std::unordered_map<std::uint64_t, std::size_t> cycle_of;
  for (std::size_t c = 0; c < d2.developed.size(); ++c)
    for_each_edge(d2.developed[c],
                  [&](Int a, Int b) { cycle_of[edge_key(a, b, w)] = c; });

  for (const auto& cycle : d1.developed) {
    std::unordered_map<std::size_t, int> hits;
    bool shared_two = false;
    for_each_edge(cycle, [&](Int a, Int b) {
      auto it = cycle_of.find(edge_key(a, b, w));
      if (it != cycle_of.end() && ++hits[it->second] == 2) shared_two = true;
    });
    if (shared_two) return false;
  }
  return true;
}

namespace {

struct Lines {
  std::vector<std::vector<Int>> row_cols;  // per row: filled columns ascending
  std::vector<std::vector<Int>> col_rows;  // per column: filled rows ascending
};

Lines collect_lines(const HeffterArray& arr) {
  Lines lines;
  lines.row_cols.assign(arr.n + 1, {});
  lines.col_rows.assign(arr.n + 1, {});
  for (const auto& [cell, value] : arr.cells) {
    lines.row_cols[cell.first].push_back(cell.second);
    lines.col_rows[cell.second].push_back(cell.first);
  }
  return lines;
}

/// Next entry after position pos in direction dir on a cyclic line.
std::size_t step(std::size_t pos, int dir, std::size_t size) {
  return (pos + (dir > 0 ? 1 : size - 1)) % size;
}

Cell successor(const Lines& lines, const TourOrientation& o, Cell cell) {
  const auto& cols = lines.row_cols[cell.first];
  const std::size_t jpos = static_cast<std::size_t>(
      std::lower_bound(cols.begin(), cols.end(), cell.second) - cols.begin());
  const Int next_col = cols[step(jpos, o.rows[cell.first - 1], cols.size())];
  const auto& rows = lines.col_rows[next_col];
  const std::size_t ipos = static_cast<std::size_t>(
      std::lower_bound(rows.begin(), rows.end(), cell.first) - rows.begin());
  const Int next_row = rows[step(ipos, o.cols[next_col - 1], rows.size())];
  return {next_row, next_col};
}

}  // namespace

TourTrace knight_trace(const HeffterArray& arr, const TourOrientation& o, Cell start) {
  if (!arr.cells.count(start))
    throw std::invalid_argument("knight_trace: start cell is not filled");
  if (static_cast<Int>(o.rows.size()) != arr.n || static_cast<Int>(o.cols.size()) != arr.n)
    throw std::invalid_argument("knight_trace: orientation size mismatch");
  const Lines lines = collect_lines(arr);

  TourTrace trace;
  trace.visited.push_back(start);
  for (Cell cur = successor(lines, o, start); cur != start; cur = successor(lines, o, cur))
    trace.visited.push_back(cur);
  trace.is_solution = trace.visited.size() == arr.cells.size();
  return trace;
}

std::optional<TourOrientation> knight_solve(const HeffterArray& arr) {
  if (arr.n > 14) throw TooLargeError("knight_solve: exhaustive bound is n <= 14");
  if (arr.cells.empty()) return std::nullopt;
  const Lines lines = collect_lines(arr);
  const Cell start = arr.cells.begin()->first;
  const std::size_t total = arr.cells.size();

  TourOrientation o;
  o.rows.assign(arr.n, 1);
  o.cols.assign(arr.n, 1);
  // Odometer over (r_2..r_n, c_1..c_n), last entry fastest, +1 before -1:
  // lexicographic enumeration of orientation pairs with r_1 = +1 fixed.
  while (true) {
    std::size_t count = 1;
    for (Cell cur = successor(lines, o, start); cur != start; cur = successor(lines, o, cur))
      ++count;
    if (count == total) return o;

    Int pos = 2 * arr.n - 1;
    for (; pos >= 1; --pos) {
      int& entry = pos < arr.n ? o.rows[pos] : o.cols[pos - arr.n];
      if (entry == 1) {
        entry = -1;
        break;
      }
      entry = 1;
    }
    if (pos == 0) return std::nullopt;
  }
}

LineOrderings orientation_orderings(const HeffterArray& arr, const TourOrientation& o) {
  if (static_cast<Int>(o.rows.size()) != arr.n || static_cast<Int>(o.cols.size()) != arr.n)
    throw std::invalid_argument("orientation_orderings: orientation size mismatch");
  const Lines lines = collect_lines(arr);
  LineOrderings out;
  for (Int r = 1; r <= arr.n; ++r) {
    std::vector<Int> cols = lines.row_cols[r];
    if (o.rows[r - 1] < 0) std::reverse(cols.begin(), cols.end());
    out.rows.push_back(std::move(cols));
  }
  for (Int c = 1; c <= arr.n; ++c) {
    std::vector<Int> rows = lines.col_rows[c];
    if (o.cols[c - 1] < 0) std::reverse(rows.begin(), rows.end());
    out.cols.push_back(std::move(rows));
  }
  return out;
}

bool compatible_check(const HeffterArray& arr, const LineOrderings& orderings) {
  if (static_cast<Int>(orderings.rows.size()) != arr.n ||
      static_cast<Int>(orderings.cols.size()) != arr.n)
    throw std::invalid_argument("compatible_check: one ordering per line required");
  const Lines lines = collect_lines(arr);
  for (Int r = 1; r <= arr.n; ++r) {
    std::vector<Int> sorted = orderings.rows[r - 1];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != lines.row_cols[r])
      throw std::invalid_argument("compatible_check: row " + std::to_string(r) +
                                  " ordering is not a permutation of its filled cells");
  }
  for (Int c = 1; c <= arr.n; ++c) {
    std::vector<Int> sorted = orderings.cols[c - 1];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != lines.col_rows[c])
      throw std::invalid_argument("compatible_check: column " + std::to_string(c) +
                                  " ordering is not a permutation of its filled cells");
  }
  if (arr.cells.empty()) return false;

  // omega_r maps each cell to the next in its row ordering, omega_c likewise
  // by column; compatible iff the composition is a single full-length cycle.
  std::map<Cell, Cell> row_next, col_next;
  for (Int r = 1; r <= arr.n; ++r) {
    const auto& ord = orderings.rows[r - 1];
    for (std::size_t q = 0; q < ord.size(); ++q)
      row_next[{r, ord[q]}] = {r, ord[(q + 1) % ord.size()]};
  }
  for (Int c = 1; c <= arr.n; ++c) {
    const auto& ord = orderings.cols[c - 1];
    for (std::size_t q = 0; q < ord.size(); ++q)
      col_next[{ord[q], c}] = {ord[(q + 1) % ord.size()], c};
  }
  const Cell start = arr.cells.begin()->first;
  std::size_t count = 1;
  for (Cell cur = col_next.at(row_next.at(start)); cur != start;
       cur = col_next.at(row_next.at(cur)))
    ++count;
  return count == arr.cells.size();
}

Rational genus(Int n, Int k, Int t) {
  if (n < 1 || k < 1 || t < 1) throw std::invalid_argument("genus: parameters must be positive");
  return Rational((n * k - 2 * n - 1) * (2 * n * k + t) + 2, 2);
}

}  // namespace heffter
