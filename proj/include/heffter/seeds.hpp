#pragma once

#include <vector>

#include "heffter/zmod.hpp"

namespace heffter {

/**
 * A simple ordering (l_0, ..., l_{k-1}) of a half-set of Z_{2k+1}, kept as
 * plain integers so that the sum over Z is meaningful. Before shifting, the
 * integer sum equals alpha*(2k+1) with alpha in {-1,0,1}; after integer_shift
 * it is exactly 0 while every residue mod 2k+1 is unchanged.
 */
struct OrderedHalfSet {
  Int k = 0;
  std::vector<Int> elements;
  Int integer_sum = 0;
  Int alpha = 0;
};

/// The fixed +-1/+-2 sequence (a_0, ..., a_{k-1}) that weights the subgroup
/// coefficients in every block formula.
struct SeedSequence {
  Int k = 0;
  std::vector<Int> terms;
};

/**
 * The explicit simple ordering of a zero-sum half-set of Z_{2k+1}, one case
 * per k mod 4 (with k = 3 and k = 5 handled specially). The result is checked
 * at construction time: half-set axioms plus pairwise distinct partial sums
 * mod 2k+1. If the case formula ever produced an ordering failing that check,
 * the builder falls back to an exhaustive ordering search over the same set.
 * Requires k >= 3.
 */
OrderedHalfSet base_half_set_ordering(Int k);

/// Subtracts alpha*(2k+1) from the leading element, making the integer sum 0.
OrderedHalfSet integer_shift(const OrderedHalfSet& hs);

/// (1, -2, 2, -2, ..., 2, -2, 1) for odd k >= 3.
SeedSequence odd_seed_sequence(Int k);

/// The +-1 sequence (with leading -2, 2 when k = 2 mod 4) for even k >= 4.
SeedSequence even_seed_sequence(Int k);

/**
 * Sum of the weighted cyclic shift A_i: sum_j j * a_{(i+j) mod k}.
 * Defined for odd k only; equals 0 for i = 0, +k for odd i, -k for even i >= 2.
 */
Int shifted_weighted_sum(const SeedSequence& seq, Int i);

}  // namespace heffter
