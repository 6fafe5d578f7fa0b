#pragma once

#include <map>
#include <utility>
#include <vector>

#include "heffter/spaces.hpp"
#include "heffter/verify.hpp"

namespace heffter {

using Cell = std::pair<Int, Int>;  // (row, col), 1-indexed

/**
 * An n x n partially filled array over Z_w with w = 2nk + t: k filled cells
 * per row and column, entries a half-set of Z_w \ J, every line zero-sum.
 * The struct itself enforces nothing; verify_array audits the axioms.
 */
struct HeffterArray {
  RingContext ctx;
  Int n = 0;
  Int k = 0;
  std::map<Cell, Int> cells;  // canonical residues, ordered by (row, col)

  /// Filled columns of a row / filled rows of a column, ascending.
  std::vector<Int> row_filled(Int row) const;
  std::vector<Int> col_filled(Int col) const;
  std::vector<Int> row_values(Int row) const;  // left to right
  std::vector<Int> col_values(Int col) const;  // top to bottom
};

struct DiagonalProfile {
  bool is_cyclically_diagonal = false;
  Int start_diagonal = 0;  // in [1, n] when diagonal
  Int k = 0;
};

/**
 * Array whose rows/columns realize two parallel classes of a space: the cell
 * (i, j) holds the unique common element of the i-th block of class idx_a and
 * the j-th block of class idx_b, when it exists.
 * Throws ShapeError when some line would not have exactly k filled cells and
 * when two blocks share more than one element.
 */
HeffterArray from_two_classes(const RelativeHeffterSpace& space, std::size_t idx_a,
                              std::size_t idx_b);

/// Block-diagonal globally simple H_n(n;k) from classes P_0, P_1 of the
/// divisor-family space (odd n, k | n).
HeffterArray build_block_array(Int n, Int k);

/// Cyclically k-diagonal globally simple H_p(p;k) from classes P_0, P_{p-1}
/// of the prime-family space.
HeffterArray build_diagonal_array(Int p, Int k);

/// Audits the three array axioms; notes carry global simplicity and the
/// diagonal profile.
VerificationReport verify_array(const HeffterArray& arr);

/// True iff every row read left-to-right and every column read top-to-bottom
/// is a simple ordering.
bool is_globally_simple(const HeffterArray& arr);

/// Detects whether the filled cells are exactly k consecutive toroidal
/// diagonals D_i, ..., D_{i+k-1}.
DiagonalProfile diagonal_profile(const HeffterArray& arr);

/// The rows (in natural reading order) as a Heffter system, and likewise the
/// columns. Row/column index becomes the block label.
HeffterSystem rows_system(const HeffterArray& arr);
HeffterSystem cols_system(const HeffterArray& arr);

}  // namespace heffter
