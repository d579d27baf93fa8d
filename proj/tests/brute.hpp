#pragma once

// Direct enumerations used as reference answers. Nothing here calls the
// library's derived constructions; only raw edge and table accessors.

#include <set>
#include <vector>

#include "dgk/double_groupoid.hpp"

namespace brute {

using namespace dgk;

inline std::vector<ArrowId> arrows(const FiniteGroupoid& g) {
  std::vector<ArrowId> out;
  for (std::size_t a = 0; a < g.arrow_count(); ++a) out.push_back(make_id<ArrowId>(a));
  return out;
}

inline std::vector<BoxId> boxes(const DoubleGroupoid& d) {
  std::vector<BoxId> out;
  for (std::size_t a = 0; a < d.box_count(); ++a) out.push_back(box_id(a));
  return out;
}

/// Quadruples (t, l, r, b) whose sides meet at all four corners.
inline std::size_t quadruples(const FiniteGroupoid& v, const FiniteGroupoid& h) {
  std::size_t n = 0;
  for (ArrowId t : arrows(h))
    for (ArrowId b : arrows(h))
      for (ArrowId l : arrows(v))
        for (ArrowId r : arrows(v))
          n += v.src(l) == h.src(t) && v.tgt(l) == h.src(b) && v.src(r) == h.tgt(t) && v.tgt(r) == h.tgt(b);
  return n;
}

inline std::size_t with_top_right(const DoubleGroupoid& d, ArrowId t, ArrowId r) {
  std::size_t n = 0;
  for (BoxId a : boxes(d)) n += d.top(a) == t && d.right(a) == r;
  return n;
}

inline bool slim(const DoubleGroupoid& d) {
  std::set<BoxFrame> seen;
  for (BoxId a : boxes(d))
    if (!seen.insert(d.frame(a)).second) return false;
  return true;
}

/// Smallest and largest filling count over matching (top, right) pairs.
inline std::pair<std::size_t, std::size_t> filling_range(const DoubleGroupoid& d) {
  std::size_t lo = static_cast<std::size_t>(-1), hi = 0;
  for (ArrowId t : arrows(d.horizontal()))
    for (ArrowId r : arrows(d.vertical())) {
      if (d.horizontal().tgt(t) != d.vertical().src(r)) continue;
      const std::size_t n = with_top_right(d, t, r);
      lo = std::min(lo, n);
      hi = std::max(hi, n);
    }
  return {lo, hi};
}

inline bool is_core(const DoubleGroupoid& d, BoxId a) {
  return d.horizontal().is_identity(d.top(a)) && d.vertical().is_identity(d.right(a));
}

inline bool is_kernel(const DoubleGroupoid& d, BoxId a) {
  return is_core(d, a) && d.horizontal().is_identity(d.bottom(a)) && d.vertical().is_identity(d.left(a));
}

}  // namespace brute
