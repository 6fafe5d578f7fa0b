#include "heffter/verify.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "heffter/ordering.hpp"

namespace heffter {

namespace {
constexpr std::size_t kMaxViolationsPerAxiom = 100;

std::string block_id(std::size_t cls, std::size_t blk) {
  return "class " + std::to_string(cls) + " block " + std::to_string(blk);
}
}  // namespace

void VerificationReport::add(const std::string& axiom, const std::string& detail) {
  std::size_t count = 0;
  for (const auto& v : violations)
    if (v.axiom == axiom) ++count;
  if (count < kMaxViolationsPerAxiom) violations.push_back({axiom, detail});
}

void VerificationReport::note(const std::string& key, const std::string& value) {
  notes.emplace_back(key, value);
}

namespace {

void check_system_into(const HeffterSystem& sys, VerificationReport& report, std::size_t cls) {
  const RingContext& ctx = sys.ctx;
  std::vector<Int> all;
  std::unordered_map<Int, std::size_t> owner;
  for (std::size_t b = 0; b < sys.blocks.size(); ++b) {
    const Block& blk = sys.blocks[b];
    if (static_cast<Int>(blk.elements.size()) != sys.k)
      report.add("block-size", block_id(cls, b) + " has " +
                                   std::to_string(blk.elements.size()) + " elements, expected " +
                                   std::to_string(sys.k));
    Int sum = 0;
    for (Int x : blk.elements) sum += ctx.canonical(x);
    if (ctx.canonical(sum) != 0)
      report.add("block-zero-sum", block_id(cls, b) + " sums to " +
                                       std::to_string(ctx.symmetric(sum)));
    if (!check_simple_ordering(blk.elements, ctx))
      report.add("stored-order-simple", block_id(cls, b) + " has a repeated partial sum");
    for (Int x : blk.elements) {
      const Int r = ctx.canonical(x);
      auto [it, inserted] = owner.emplace(r, b);
      if (!inserted)
        report.add("blocks-disjoint", "element " + std::to_string(ctx.symmetric(r)) +
                                          " appears in blocks " + std::to_string(it->second) +
                                          " and " + std::to_string(b) + " of class " +
                                          std::to_string(cls));
      else
        all.push_back(r);
    }
  }
  if (!is_half_set(all, ctx))
    report.add("union-half-set",
               "class " + std::to_string(cls) + " does not partition a half-set of Z_w \\ J");
}

std::vector<Int> sorted_points(const HeffterSystem& sys) {
  std::vector<Int> pts;
  for (const Block& blk : sys.blocks)
    for (Int x : blk.elements) pts.push_back(sys.ctx.canonical(x));
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace

VerificationReport verify_system(const HeffterSystem& sys) {
  VerificationReport report;
  report.subject = "system";
  check_system_into(sys, report, 0);
  return report;
}

VerificationReport verify_space(const RelativeHeffterSpace& space) {
  VerificationReport report;
  report.subject = "space";
  for (std::size_t c = 0; c < space.classes.size(); ++c) {
    if (!(space.classes[c].ctx == space.ctx))
      report.add("common-ring", "class " + std::to_string(c) + " uses a different ring");
    check_system_into(space.classes[c], report, c);
  }
  if (space.classes.empty()) {
    report.add("resolution", "space has no parallel classes");
    return report;
  }

  // All classes must cover the same point set.
  const std::vector<Int> base_points = sorted_points(space.classes.front());
  for (std::size_t c = 1; c < space.classes.size(); ++c)
    if (sorted_points(space.classes[c]) != base_points)
      report.add("common-point-set",
                 "class " + std::to_string(c) + " covers a different point set than class 0");

  // Orthogonality: blocks from distinct classes meet in at most one element.
  for (std::size_t c1 = 0; c1 < space.classes.size(); ++c1) {
    for (std::size_t c2 = c1 + 1; c2 < space.classes.size(); ++c2) {
      std::unordered_map<Int, std::size_t> where;
      const auto& blocks2 = space.classes[c2].blocks;
      for (std::size_t b2 = 0; b2 < blocks2.size(); ++b2)
        for (Int x : blocks2[b2].elements) where[space.ctx.canonical(x)] = b2;
      const auto& blocks1 = space.classes[c1].blocks;
      for (std::size_t b1 = 0; b1 < blocks1.size(); ++b1) {
        std::map<std::size_t, Int> hits;
        for (Int x : blocks1[b1].elements) {
          auto it = where.find(space.ctx.canonical(x));
          if (it != where.end() && ++hits[it->second] == 2)
            report.add("orthogonality",
                       "classes (" + std::to_string(c1) + "," + std::to_string(c2) +
                           ") blocks (" + std::to_string(b1) + "," + std::to_string(it->second) +
                           ") share more than one element");
        }
      }
    }
  }

  // Partial linear space axiom: two points lie in at most one common block,
  // and every point has degree r = number of classes.
  std::unordered_map<Int, Int> degree;
  std::unordered_map<std::uint64_t, int> pair_seen;
  const std::uint64_t w = static_cast<std::uint64_t>(space.ctx.order());
  for (std::size_t c = 0; c < space.classes.size(); ++c) {
    for (std::size_t b = 0; b < space.classes[c].blocks.size(); ++b) {
      std::vector<Int> elems;
      for (Int x : space.classes[c].blocks[b].elements)
        elems.push_back(space.ctx.canonical(x));
      std::sort(elems.begin(), elems.end());
      for (Int x : elems) ++degree[x];
      for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t d = a + 1; d < elems.size(); ++d) {
          const std::uint64_t key = static_cast<std::uint64_t>(elems[a]) * w +
                                    static_cast<std::uint64_t>(elems[d]);
          if (++pair_seen[key] == 2)
            report.add("pair-coverage",
                       "points " + std::to_string(space.ctx.symmetric(elems[a])) + "," +
                           std::to_string(space.ctx.symmetric(elems[d])) +
                           " lie in more than one block");
        }
    }
  }
  const Int r = space.degree();
  std::vector<std::pair<Int, Int>> by_point(degree.begin(), degree.end());
  std::sort(by_point.begin(), by_point.end());
  for (const auto& [point, deg] : by_point)
    if (deg != r) {
      report.add("uniform-degree", "point " + std::to_string(space.ctx.symmetric(point)) +
                                       " has degree " + std::to_string(deg) + ", expected " +
                                       std::to_string(r));
    }
  return report;
}

}  // namespace heffter
