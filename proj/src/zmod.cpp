#include "heffter/zmod.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace heffter {

Int mod_canonical(Int x, Int m) {
  if (m <= 0) throw std::invalid_argument("mod_canonical: modulus must be positive");
  Int r = x % m;
  return r < 0 ? r + m : r;
}

Int mod_symmetric(Int x, Int m) {
  if (m <= 0) throw std::invalid_argument("mod_symmetric: modulus must be positive");
  if (m % 2 == 0) throw std::invalid_argument("mod_symmetric: modulus must be odd");
  const Int r = mod_canonical(x, m);
  return r > (m - 1) / 2 ? r - m : r;
}

RingContext::RingContext(Int order, Int subgroup_order) : w_(order), t_(subgroup_order) {
  if (w_ < 1) throw std::invalid_argument("RingContext: order must be positive");
  if (w_ % 2 == 0) throw std::invalid_argument("RingContext: order must be odd");
  if (t_ < 1 || w_ % t_ != 0)
    throw std::invalid_argument("RingContext: subgroup order must divide the group order");
}

Int totient(Int k) {
  if (k < 1) throw std::invalid_argument("totient: k must be positive");
  Int result = k, rem = k;
  for (Int p = 2; p * p <= rem; ++p) {
    if (rem % p == 0) {
      result -= result / p;
      while (rem % p == 0) rem /= p;
    }
  }
  if (rem > 1) result -= result / rem;
  return result;
}

std::vector<Int> units_mod(Int k) {
  if (k < 2) throw std::invalid_argument("units_mod: k must be at least 2");
  std::vector<Int> out;
  for (Int u = 1; u < k; ++u)
    if (std::gcd(u, k) == 1) out.push_back(u);
  return out;
}

bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

CosetIndex coset_decompose(Int x, Int k, Int d) {
  if (k < 1 || d < 1) throw std::invalid_argument("coset_decompose: k and d must be positive");
  const Int g = 2 * k + 1;
  const Int w = k * d * g;
  const Int r = mod_canonical(x, w);
  if (r % g != 0)
    throw std::invalid_argument("coset_decompose: residue is not a multiple of 2k+1");
  const Int q = r / g;  // i*d + j in [0, k*d)
  return CosetIndex{q / d, q % d};
}

bool is_half_set(const std::vector<Int>& values, const RingContext& ctx) {
  const Int w = ctx.order(), t = ctx.subgroup_order();
  if (static_cast<Int>(values.size()) != (w - t) / 2) return false;
  std::unordered_set<Int> seen;
  seen.reserve(values.size() * 2);
  for (Int v : values) {
    const Int r = ctx.canonical(v);
    if (ctx.in_subgroup(r)) return false;
    if (!seen.insert(r).second) return false;
  }
  for (Int r : seen)
    if (seen.count(mod_canonical(-r, w))) return false;
  return true;
}

}  // namespace heffter
