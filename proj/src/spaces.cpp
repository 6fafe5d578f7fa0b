#include "heffter/spaces.hpp"

#include <stdexcept>

#include "heffter/errors.hpp"

namespace heffter {

namespace {

void check_divisor_params(Int n, Int k) {
  if (k < 3) throw std::invalid_argument("divisor family: k must be at least 3");
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("divisor family: n must be odd and >= 3");
  if (n % k != 0) throw std::invalid_argument("divisor family: k must divide n");
}

void check_prime_params(Int p, Int k) {
  if (!is_prime(p) || p < 3) throw std::invalid_argument("prime family: p must be a prime >= 3");
  if (k < 3 || k > p) throw std::invalid_argument("prime family: k must lie in [3, p]");
}

// Shared raw material: the integer-shifted half-set ordering and the seed
// sequence of matching parity.
struct Material {
  std::vector<Int> L;
  std::vector<Int> A;
};

Material material_for(Int k) {
  Material m;
  m.L = integer_shift(base_half_set_ordering(k)).elements;
  m.A = (k % 2 == 1 ? odd_seed_sequence(k) : even_seed_sequence(k)).terms;
  return m;
}

}  // namespace

std::string family_name(SpaceFamily family) {
  switch (family) {
    case SpaceFamily::divisor: return "divisor";
    case SpaceFamily::prime: return "prime";
    case SpaceFamily::net: return "net";
    case SpaceFamily::external: return "external";
  }
  return "divisor";
}

SpaceFamily family_from_name(const std::string& name) {
  if (name == "divisor") return SpaceFamily::divisor;
  if (name == "prime") return SpaceFamily::prime;
  if (name == "net") return SpaceFamily::net;
  if (name == "external") return SpaceFamily::external;
  throw ParseError("unknown space family: " + name);
}

HeffterSystem build_system_divisor(Int n, Int k, Int s) {
  check_divisor_params(n, k);
  if (s != 0 && (s < 1 || s >= k || std::gcd(s, k) != 1))
    throw std::invalid_argument("divisor family: s must be 0 or a unit label mod k");

  const Int d = n / k;
  const Int g = 2 * k + 1;
  const Material mat = material_for(k);

  HeffterSystem sys{RingContext(n * g, n), k, s, {}};
  sys.blocks.reserve(n);
  for (Int j = 0; j < d; ++j) {
    for (Int i = 0; i < k; ++i) {
      Block blk;
      blk.i = i;
      blk.j = j;
      blk.elements.reserve(k);
      for (Int m = 0; m < k; ++m) {
        // Coefficients of (2k+1) act mod n since n(2k+1) = 0 in Z_w.
        const Int coeff = s == 0 ? mod_canonical(i * d + j, n) : mod_canonical(m * d * s + j, n);
        const Int idx = s == 0 ? m : (m + i) % k;
        blk.elements.push_back(sys.ctx.canonical(mat.A[idx] * coeff * g + mat.L[idx]));
      }
      sys.blocks.push_back(std::move(blk));
    }
  }
  return sys;
}

RelativeHeffterSpace build_space_divisor(Int n, Int k) {
  check_divisor_params(n, k);
  RelativeHeffterSpace space{RingContext(n * (2 * k + 1), n), k, SpaceFamily::divisor, {}};
  space.classes.push_back(build_system_divisor(n, k, 0));
  for (Int s : units_mod(k)) space.classes.push_back(build_system_divisor(n, k, s));
  return space;
}

HeffterSystem build_system_prime(Int p, Int k, Int j) {
  check_prime_params(p, k);
  if (j < 0 || j >= p) throw std::invalid_argument("prime family: class label out of range");

  const Int g = 2 * k + 1;
  const Material mat = material_for(k);

  HeffterSystem sys{RingContext(p * g, p), k, j, {}};
  sys.blocks.reserve(p);
  for (Int i = 0; i < p; ++i) {
    Block blk;
    blk.i = i;
    blk.j = j;
    blk.elements.reserve(k);
    for (Int m = 0; m < k; ++m)
      blk.elements.push_back(sys.ctx.canonical(mat.A[m] * mod_canonical(i + j * m, p) * g + mat.L[m]));
    sys.blocks.push_back(std::move(blk));
  }
  return sys;
}

RelativeHeffterSpace build_space_prime(Int p, Int k) {
  check_prime_params(p, k);
  RelativeHeffterSpace space{RingContext(p * (2 * k + 1), p), k, SpaceFamily::prime, {}};
  for (Int j = 0; j < p; ++j) space.classes.push_back(build_system_prime(p, k, j));
  return space;
}

RelativeHeffterSpace build_net(Int p) {
  RelativeHeffterSpace space = build_space_prime(p, p);
  space.family = SpaceFamily::net;
  return space;
}

Rational density(const RelativeHeffterSpace& space) {
  const Int v = space.point_count();
  if (v < 2) throw std::domain_error("density: space has fewer than two points");
  const Rational delta(space.degree() * (space.k - 1), v - 1);
  if (delta.num >= delta.den)
    throw std::domain_error("density: value >= 1, space cannot be a valid cyclic space");
  return delta;
}

}  // namespace heffter
