#pragma once

#include <string>
#include <vector>

#include "heffter/rational.hpp"
#include "heffter/seeds.hpp"
#include "heffter/zmod.hpp"

namespace heffter {

/// A zero-sum block, stored in its construction order (which is simple).
/// i and j are the construction indices; for the divisor family j is the
/// coset index in [0, d-1], for the prime family j is the class label.
struct Block {
  std::vector<Int> elements;  // canonical residues
  Int i = 0;
  Int j = 0;
};

/// One parallel class: a partition of a half-set of Z_w \ J into zero-sum
/// blocks of size k. label is s (divisor family) or j (prime family).
struct HeffterSystem {
  RingContext ctx;
  Int k = 0;
  Int label = 0;
  std::vector<Block> blocks;
};

enum class SpaceFamily { divisor, prime, net, external };

std::string family_name(SpaceFamily family);
SpaceFamily family_from_name(const std::string& name);

/// r mutually orthogonal systems on a common half-set, i.e. the parallel
/// classes of a resolved partial linear space.
struct RelativeHeffterSpace {
  RingContext ctx;
  Int k = 0;
  SpaceFamily family = SpaceFamily::divisor;
  std::vector<HeffterSystem> classes;

  Int degree() const { return static_cast<Int>(classes.size()); }
  Int point_count() const { return (ctx.order() - ctx.subgroup_order()) / 2; }
};

/**
 * The system P_s over Z_{n(2k+1)} relative to <2k+1>, for odd n and k | n.
 * s = 0 selects the base system; otherwise s must be a unit label mod k in
 * [1, k-1]. Blocks are listed with the coset index j outer and i inner,
 * matching the row order of the derived arrays.
 */
HeffterSystem build_system_divisor(Int n, Int k, Int s);

/// All Phi(k)+1 systems P_0, P_s (s ranging over units mod k, ascending).
RelativeHeffterSpace build_space_divisor(Int n, Int k);

/// The system P_j over Z_{p(2k+1)} relative to <2k+1>, p prime, 3 <= k <= p.
HeffterSystem build_system_prime(Int p, Int k, Int j);

/// All p systems P_0, ..., P_{p-1}.
RelativeHeffterSpace build_space_prime(Int p, Int k);

/// The (p^2, p; p)_p Heffter net: build_space_prime(p, p).
RelativeHeffterSpace build_net(Int p);

/// Collinearity density r(k-1)/(v-1) where v is the point count.
/// A cyclic relative Heffter space cannot be linear, so this must be < 1;
/// a value >= 1 (possible only for malformed input) raises std::domain_error.
Rational density(const RelativeHeffterSpace& space);

}  // namespace heffter
