#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "heffter/arrays.hpp"
#include "heffter/rational.hpp"
#include "heffter/spaces.hpp"
#include "heffter/verify.hpp"

namespace heffter {

/**
 * A cyclic k-cycle decomposition of K_{(w/t) x t} given by base cycles: the
 * vertices of each base cycle are the partial sums of a block, ending at 0.
 * develop() fills the full orbit under translation by Z_w.
 */
struct CycleDecomposition {
  RingContext ctx;
  Int k = 0;
  std::vector<std::vector<Int>> base_cycles;
  std::vector<std::vector<Int>> developed;  // canonical cycle forms
  bool is_developed = false;
};

/// Row/column orientations for the Crazy Knight's Tour: +1 reads a row left
/// to right (a column top to bottom), -1 the reverse.
struct TourOrientation {
  std::vector<int> rows;  // rows[i] orients row i+1
  std::vector<int> cols;
};

struct TourTrace {
  std::vector<Cell> visited;
  bool is_solution = false;
};

/// Orderings of the filled cells of each line: for every row the column
/// indices in visiting order, for every column the row indices.
struct LineOrderings {
  std::vector<std::vector<Int>> rows;
  std::vector<std::vector<Int>> cols;
};

/// One base cycle per block, vertices = partial sums of the stored order.
/// Throws NotZeroSumError / NotSimpleError when a block breaks the premise.
CycleDecomposition base_cycles(const HeffterSystem& sys);

/// All w translates of every base cycle, deduplicated as vertex-set cycles
/// (rotation and reflection of the vertex sequence give the same cycle).
CycleDecomposition develop(CycleDecomposition dec);

/**
 * Audits a developed decomposition: every edge {x,y} with x - y outside J is
 * covered exactly once, no edge joins two vertices of the same part (coset of
 * J), all cycles have length k, and the cycle set is closed under
 * translation.
 */
VerificationReport verify_decomposition(const CycleDecomposition& dec);

/// True iff no cycle of one decomposition shares more than one edge with any
/// cycle of the other. Both must be developed over the same ring.
bool decompositions_orthogonal(const CycleDecomposition& d1, const CycleDecomposition& d2);

/**
 * Follows the composed successor map (next filled cell in the row's
 * orientation, then next filled cell in that column's orientation, both
 * toroidal) from start until it returns there. The orbit is a solution when
 * it covers every filled cell.
 */
TourTrace knight_trace(const HeffterArray& arr, const TourOrientation& o, Cell start);

/**
 * Exhaustive search over the 2^(2n-1) orientations (r_1 fixed to +1 by
 * symmetry), in lexicographic order with +1 before -1; returns the first
 * solution. Bounded at n <= 14 (TooLargeError beyond).
 */
std::optional<TourOrientation> knight_solve(const HeffterArray& arr);

/// The per-line orderings induced by an orientation: ascending for +1,
/// descending for -1.
LineOrderings orientation_orderings(const HeffterArray& arr, const TourOrientation& o);

/// True iff the composition of the column-successor and row-successor
/// permutations defined by the orderings is one cycle through all filled
/// cells. Throws std::invalid_argument on malformed orderings.
bool compatible_check(const HeffterArray& arr, const LineOrderings& orderings);

/// Genus of the orientable surface underlying the biembedding certificate:
/// 1 + (nk - 2n - 1)(2nk + t)/2, exact; non-integral values are representable
/// and flagged by Rational::is_integer.
Rational genus(Int n, Int k, Int t);

}  // namespace heffter
