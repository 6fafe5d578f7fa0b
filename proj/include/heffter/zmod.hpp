#pragma once

#include <cstdint>
#include <vector>

namespace heffter {

using Int = std::int64_t;

/// Canonical representative of x modulo m, in [0, m).
Int mod_canonical(Int x, Int m);

/// Symmetric representative of x modulo odd m, in [-(m-1)/2, (m-1)/2].
/// Throws std::invalid_argument for even m (the midpoint would be ambiguous).
Int mod_symmetric(Int x, Int m);

/**
 * The ambient cyclic group Z_w together with its distinguished subgroup J
 * of order t, generated by w/t. Everything downstream (half-sets, blocks,
 * arrays, cycle decompositions) does its residue arithmetic through one of
 * these. Construction rejects even w: the constructions all live in odd-order
 * groups and symmetric representatives must be unambiguous.
 *
 * Immutable after construction.
 */
class RingContext {
 public:
  RingContext(Int order, Int subgroup_order);

  Int order() const { return w_; }           // w
  Int subgroup_order() const { return t_; }  // t = |J|
  Int subgroup_generator() const { return w_ / t_; }

  Int canonical(Int x) const { return mod_canonical(x, w_); }
  Int symmetric(Int x) const { return mod_symmetric(x, w_); }

  /// True iff x lies in J = <w/t>.
  bool in_subgroup(Int x) const { return canonical(x) % (w_ / t_) == 0; }

  bool operator==(const RingContext&) const = default;

 private:
  Int w_;
  Int t_;
};

/// Euler totient of k >= 1.
Int totient(Int k);

/// Canonical unit representatives of Z_k in [1, k-1], ascending. Requires k >= 2.
std::vector<Int> units_mod(Int k);

/// Deterministic primality test for the small parameters used here.
bool is_prime(Int p);

struct CosetIndex {
  Int i;  // index into [0, k-1]
  Int j;  // index into [0, d-1]
};

/**
 * Writes a residue x in the subgroup <2k+1> of Z_{kd(2k+1)} uniquely as
 * (i*d + j)(2k+1) with i in [0,k-1], j in [0,d-1].
 * Throws std::invalid_argument if x is not a multiple of 2k+1.
 */
CosetIndex coset_decompose(Int x, Int k, Int d);

/**
 * True iff the residues V satisfy V + (-V) = Z_w \ J as a disjoint union:
 * |V| = (w-t)/2, no element of J, no repeated residue, and no pair {x, -x}.
 * Malformed input yields false, never an error.
 */
bool is_half_set(const std::vector<Int>& values, const RingContext& ctx);

}  // namespace heffter
