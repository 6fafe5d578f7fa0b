#include "heffter/seeds.hpp"

#include <numeric>
#include <stdexcept>

#include "heffter/errors.hpp"
#include "heffter/ordering.hpp"

namespace heffter {

namespace {

// The four case formulas. Interval loops are empty when their bounds cross,
// which is exactly what the smallest k of each congruence class needs.

std::vector<Int> ordering_1_mod_4(Int k) {
  if (k == 5) return {1, -2, 3, 4, 5};
  std::vector<Int> seq = {-k, -1};
  for (Int i = 2; i <= (k + 3) / 4; ++i) {
    seq.push_back(2 * i);
    seq.push_back(-(2 * i + 1));
  }
  seq.push_back(-2);
  seq.push_back(-(k - 1));
  for (Int i = (k - 3) / 2; i >= (k + 7) / 4; --i) {
    seq.push_back(2 * i + 1);
    seq.push_back(-2 * i);
  }
  seq.push_back(3);
  return seq;
}

std::vector<Int> ordering_2_mod_4(Int k) {
  std::vector<Int> seq = {-k};
  for (Int i = 1; i <= (k + 2) / 4; ++i) {
    seq.push_back(2 * i - 1);
    seq.push_back(-2 * i);
  }
  seq.push_back(-(k - 1));
  for (Int i = k / 2 - 1; i >= (k + 6) / 4; --i) {
    seq.push_back(2 * i);
    seq.push_back(-(2 * i - 1));
  }
  return seq;
}

std::vector<Int> ordering_3_mod_4(Int k) {
  if (k == 3) return {1, 2, -3};
  std::vector<Int> seq = {k};
  for (Int i = 1; i <= (k + 1) / 4; ++i) {
    seq.push_back(2 * i);
    seq.push_back(-(2 * i + 1));
  }
  seq.push_back(-(k - 1));
  for (Int i = (k - 3) / 2; i >= (k + 5) / 4; --i) {
    seq.push_back(2 * i + 1);
    seq.push_back(-2 * i);
  }
  seq.push_back(1);
  return seq;
}

std::vector<Int> ordering_0_mod_4(Int k) {
  std::vector<Int> seq = {k};
  for (Int i = 1; i <= k / 4; ++i) {
    seq.push_back(2 * i - 1);
    seq.push_back(-2 * i);
  }
  seq.push_back(-(k - 1));
  for (Int i = k / 2 - 1; i >= k / 4 + 1; --i) {
    seq.push_back(2 * i);
    seq.push_back(-(2 * i - 1));
  }
  return seq;
}

bool valid_ordering(const std::vector<Int>& seq, Int k) {
  const Int m = 2 * k + 1;
  if (static_cast<Int>(seq.size()) != k) return false;
  RingContext ring(m, 1);
  std::vector<Int> residues;
  residues.reserve(seq.size());
  for (Int x : seq) residues.push_back(ring.canonical(x));
  return is_half_set(residues, ring) && simple_ordering_mod(seq, m);
}

OrderedHalfSet finish(Int k, std::vector<Int> seq) {
  OrderedHalfSet hs;
  hs.k = k;
  hs.integer_sum = std::accumulate(seq.begin(), seq.end(), Int{0});
  hs.alpha = hs.integer_sum / (2 * k + 1);
  hs.elements = std::move(seq);
  return hs;
}

}  // namespace

OrderedHalfSet base_half_set_ordering(Int k) {
  if (k < 3) throw std::invalid_argument("base_half_set_ordering: k must be at least 3");
  std::vector<Int> seq;
  switch (k % 4) {
    case 0: seq = ordering_0_mod_4(k); break;
    case 1: seq = ordering_1_mod_4(k); break;
    case 2: seq = ordering_2_mod_4(k); break;
    default: seq = ordering_3_mod_4(k); break;
  }
  if (!valid_ordering(seq, k)) {
    // Self-certification failed; search for a simple ordering of the same set.
    const Int m = 2 * k + 1;
    RingContext ring(m, 1);
    std::vector<Int> residues;
    for (Int x : seq) residues.push_back(ring.canonical(x));
    auto found = find_simple_ordering(residues, ring);
    if (!found)
      throw std::logic_error("base_half_set_ordering: no simple ordering exists for k=" +
                             std::to_string(k));
    seq.clear();
    for (Int r : *found) seq.push_back(mod_symmetric(r, m));
  }
  return finish(k, std::move(seq));
}

OrderedHalfSet integer_shift(const OrderedHalfSet& hs) {
  OrderedHalfSet out = hs;
  out.elements.at(0) -= hs.alpha * (2 * hs.k + 1);
  out.integer_sum = hs.integer_sum - hs.alpha * (2 * hs.k + 1);
  out.alpha = 0;
  return out;
}

SeedSequence odd_seed_sequence(Int k) {
  if (k < 3 || k % 2 == 0)
    throw std::invalid_argument("odd_seed_sequence: k must be odd and at least 3");
  SeedSequence seq;
  seq.k = k;
  seq.terms.reserve(k);
  for (Int i = 0; i < k; ++i) {
    if (i == 0 || i == k - 1) seq.terms.push_back(1);
    else if (i % 2 == 1) seq.terms.push_back(-2);
    else seq.terms.push_back(2);
  }
  return seq;
}

SeedSequence even_seed_sequence(Int k) {
  if (k < 4 || k % 2 == 1)
    throw std::invalid_argument("even_seed_sequence: k must be even and at least 4");
  SeedSequence seq;
  seq.k = k;
  seq.terms.reserve(k);
  if (k % 4 == 0) {
    for (Int i = 0; i < k; ++i)
      seq.terms.push_back((i % 4 == 0 || i % 4 == 3) ? 1 : -1);
  } else {
    for (Int i = 0; i < k; ++i) {
      if (i == 0) seq.terms.push_back(-2);
      else if (i == 1) seq.terms.push_back(2);
      else if (i == 2 || i == 4) seq.terms.push_back(1);
      else if (i == 3 || i == 5) seq.terms.push_back(-1);
      else seq.terms.push_back((i % 4 == 1 || i % 4 == 2) ? 1 : -1);
    }
  }
  return seq;
}

Int shifted_weighted_sum(const SeedSequence& seq, Int i) {
  const Int k = seq.k;
  if (k % 2 == 0)
    throw std::invalid_argument("shifted_weighted_sum: defined for odd k only");
  if (i < 0 || i >= k) throw std::invalid_argument("shifted_weighted_sum: index out of range");
  Int sum = 0;
  for (Int j = 0; j < k; ++j) sum += j * seq.terms[(i + j) % k];
  return sum;
}

}  // namespace heffter
