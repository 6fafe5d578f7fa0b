#pragma once

#include <optional>
#include <span>
#include <vector>

#include "heffter/zmod.hpp"

namespace heffter {

/// True iff the partial sums b_0, b_0+b_1, ... are pairwise distinct mod m.
/// For zero-sum inputs this is equivalent to no consecutive run summing to 0.
bool simple_ordering_mod(std::span<const Int> elements, Int m);

/// simple_ordering_mod against the full group order of ctx.
bool check_simple_ordering(std::span<const Int> elements, const RingContext& ctx);

/**
 * Exhaustive oracle: the lexicographically least simple ordering of a
 * zero-sum block, least element first (orderings are compared on symmetric
 * representatives). Fixing the first element is sound because every cyclic
 * rotation of a simple ordering of a zero-sum set is simple, so the search
 * space is (k-1)! instead of k!.
 *
 * Returns std::nullopt when no ordering is simple.
 * Throws NotZeroSumError unless the block sums to 0 mod w, and TooLargeError
 * for blocks of more than 10 elements.
 */
std::optional<std::vector<Int>> find_simple_ordering(const std::vector<Int>& block,
                                                     const RingContext& ctx);

}  // namespace heffter
