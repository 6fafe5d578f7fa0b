#include "heffter/ordering.hpp"

#include <algorithm>

#include "heffter/errors.hpp"

namespace heffter {

bool simple_ordering_mod(std::span<const Int> elements, Int m) {
  std::vector<Int> sums;
  sums.reserve(elements.size());
  Int acc = 0;
  for (Int x : elements) {
    acc = mod_canonical(acc + x, m);
    sums.push_back(acc);
  }
  std::sort(sums.begin(), sums.end());
  return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

bool check_simple_ordering(std::span<const Int> elements, const RingContext& ctx) {
  return simple_ordering_mod(elements, ctx.order());
}

std::optional<std::vector<Int>> find_simple_ordering(const std::vector<Int>& block,
                                                     const RingContext& ctx) {
  if (block.size() > 10)
    throw TooLargeError("find_simple_ordering: exhaustive bound is 10 elements");
  Int sum = 0;
  for (Int x : block) sum += ctx.canonical(x);
  if (ctx.canonical(sum) != 0)
    throw NotZeroSumError("find_simple_ordering: block does not sum to zero");

  std::vector<Int> symmetric;
  symmetric.reserve(block.size());
  for (Int x : block) symmetric.push_back(ctx.symmetric(x));
  std::sort(symmetric.begin(), symmetric.end());

  // First element pinned to the least; remaining elements enumerated in
  // lexicographic order, so the first hit is the least ordering overall.
  std::vector<Int> rest(symmetric.begin() + 1, symmetric.end());
  do {
    std::vector<Int> candidate;
    candidate.reserve(symmetric.size());
    candidate.push_back(symmetric.front());
    candidate.insert(candidate.end(), rest.begin(), rest.end());
    if (check_simple_ordering(candidate, ctx)) {
      for (Int& x : candidate) x = ctx.canonical(x);
      return candidate;
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return std::nullopt;
}

}  // namespace heffter
