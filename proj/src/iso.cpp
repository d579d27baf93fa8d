#include "dgk/iso.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace dgk {

Report check_double_iso(const DoubleGroupoid& a, const DoubleGroupoid& b, const DoubleIso& m) {
  Report rep("double groupoid isomorphism");
  Check& shape = rep.law("same base and sizes");
  shape.expect(a.base_size() == b.base_size(), "bases differ");
  shape.expect(a.box_count() == b.box_count() && m.boxes.size() == a.box_count(), "box counts differ");
  shape.expect(m.horizontal.arrow_map.size() == a.horizontal().arrow_count() &&
                   a.horizontal().arrow_count() == b.horizontal().arrow_count(),
               "horizontal arrow counts differ");
  shape.expect(m.vertical.arrow_map.size() == a.vertical().arrow_count() &&
                   a.vertical().arrow_count() == b.vertical().arrow_count(),
               "vertical arrow counts differ");
  if (!rep.ok()) return rep;
  rep.merge(validate_morphism(a.horizontal(), b.horizontal(), m.horizontal), "horizontal: ");
  rep.merge(validate_morphism(a.vertical(), b.vertical(), m.vertical), "vertical: ");
  Check& bij = rep.law("bijective on arrows and boxes");
  bij.expect(is_injective(m.horizontal) && is_injective(m.vertical), "edge map not injective");
  bij.expect(std::set<BoxId>(m.boxes.begin(), m.boxes.end()).size() == m.boxes.size(), "box map not injective");
  for (BoxId x : m.boxes) bij.expect(idx(x) < b.box_count(), "box out of range");
  if (!rep.ok()) return rep;

  auto M = [&](BoxId x) { return m.boxes[idx(x)]; };
  auto B = [&](BoxId x) { return describe(a, x); };
  Check& edges = rep.law("commutes with the edge maps");
  Check& comp = rep.law("commutes with both compositions");
  Check& ids = rep.law("commutes with identities and inverses");
  for (std::size_t i = 0; i < a.box_count(); ++i) {
    BoxId x = box_id(i);
    BoxId y = M(x);
    edges.expect_lazy(b.top(y) == m.horizontal(a.top(x)) && b.bottom(y) == m.horizontal(a.bottom(x)) &&
                          b.left(y) == m.vertical(a.left(x)) && b.right(y) == m.vertical(a.right(x)),
                      [&] { return B(x) + " -> " + describe(b, y); });
    ids.expect_lazy(M(a.hinv(x)) == b.hinv(y) && M(a.vinv(x)) == b.vinv(y), [&] { return B(x); });
    for (BoxId z : a.boxes_with_left(a.right(x)))
      comp.expect_lazy(b.try_hcompose(y, M(z)) == M(a.hcompose(x, z)), [&] { return B(x) + " | " + B(z); });
    for (BoxId z : a.boxes_with_top(a.bottom(x)))
      comp.expect_lazy(b.try_vcompose(y, M(z)) == M(a.vcompose(x, z)), [&] { return B(x) + " / " + B(z); });
  }
  for (std::size_t i = 0; i < a.vertical().arrow_count(); ++i) {
    ArrowId g = make_id<ArrowId>(i);
    ids.expect_lazy(M(a.hid(g)) == b.hid(m.vertical(g)), [&] { return "hid #" + std::to_string(i); });
  }
  for (std::size_t i = 0; i < a.horizontal().arrow_count(); ++i) {
    ArrowId x = make_id<ArrowId>(i);
    ids.expect_lazy(M(a.vid(x)) == b.vid(m.horizontal(x)), [&] { return "vid #" + std::to_string(i); });
  }
  return rep;
}

namespace {

// Partial injective map with forced consequences. `close` is called on each
// newly assigned element and may force further assignments.
struct PartialMap {
  std::vector<std::optional<std::uint32_t>> to;
  std::vector<bool> used;
  std::deque<std::uint32_t> pending;

  PartialMap(std::size_t n, std::size_t m) : to(n), used(m, false) {}

  bool assign(std::uint32_t x, std::uint32_t y) {
    if (to[x]) return *to[x] == y;
    if (used[y]) return false;
    to[x] = y;
    used[y] = true;
    pending.push_back(x);
    return true;
  }
};

template <class Close>
bool propagate(PartialMap& s, Close&& close) {
  while (!s.pending.empty()) {
    std::uint32_t x = s.pending.front();
    s.pending.pop_front();
    if (!close(s, x)) return false;
  }
  return true;
}

// Depth-first search choosing the unassigned element with fewest candidates.
template <class Candidates, class Close, class Emit>
bool search(PartialMap s, Candidates&& cands, Close&& close, Emit&& emit) {
  if (!propagate(s, close)) return true;
  std::optional<std::uint32_t> best;
  std::vector<std::uint32_t> best_list;
  for (std::uint32_t x = 0; x < s.to.size(); ++x) {
    if (s.to[x]) continue;
    std::vector<std::uint32_t> list;
    for (std::uint32_t y : cands(x))
      if (!s.used[y]) list.push_back(y);
    if (!best || list.size() < best_list.size()) {
      best = x;
      best_list = std::move(list);
      if (best_list.size() <= 1) break;
    }
  }
  if (!best) return emit(s);
  for (std::uint32_t y : best_list) {
    PartialMap next = s;
    if (next.assign(*best, y) && !search(std::move(next), cands, close, emit)) return false;
  }
  return true;
}

}  // namespace

std::vector<GroupoidMorphism> groupoid_isos(const FiniteGroupoid& a, const FiniteGroupoid& b,
                                            std::size_t limit) {
  std::vector<GroupoidMorphism> out;
  if (a.object_count() != b.object_count() || a.arrow_count() != b.arrow_count() || limit == 0) return out;
  const std::size_t n = a.arrow_count();
  std::vector<std::vector<std::uint32_t>> cand(n);
  for (std::size_t i = 0; i < n; ++i) {
    ArrowId g = make_id<ArrowId>(i);
    for (ArrowId y : b.hom(a.src(g), a.tgt(g))) cand[i].push_back(static_cast<std::uint32_t>(idx(y)));
  }
  auto cands = [&](std::uint32_t x) -> const std::vector<std::uint32_t>& { return cand[x]; };
  auto A = [](std::uint32_t x) { return make_id<ArrowId>(x); };
  auto U = [](ArrowId x) { return static_cast<std::uint32_t>(idx(x)); };
  auto close = [&](PartialMap& s, std::uint32_t x) {
    const ArrowId g = A(x), mg = A(*s.to[x]);
    if (b.src(mg) != a.src(g) || b.tgt(mg) != a.tgt(g)) return false;
    if (!s.assign(U(a.inverse(g)), U(b.inverse(mg)))) return false;
    for (std::uint32_t z = 0; z < n; ++z) {
      if (!s.to[z]) continue;
      const ArrowId h = A(z), mh = A(*s.to[z]);
      auto force = [&](std::optional<ArrowId> src, std::optional<ArrowId> img) {
        return src && img && s.assign(U(*src), U(*img));
      };
      if (a.composable(g, h) && !force(a.try_compose(g, h), b.try_compose(mg, mh))) return false;
      if (a.composable(h, g) && !force(a.try_compose(h, g), b.try_compose(mh, mg))) return false;
    }
    return true;
  };
  PartialMap start(n, b.arrow_count());
  for (std::size_t p = 0; p < a.object_count(); ++p) {
    ObjectId o = make_id<ObjectId>(p);
    if (!start.assign(U(a.identity(o)), U(b.identity(o)))) return out;
  }
  auto emit = [&](const PartialMap& s) {
    GroupoidMorphism m;
    for (const auto& y : s.to) m.arrow_map.push_back(A(*y));
    if (validate_morphism(a, b, m).ok() && is_injective(m)) out.push_back(std::move(m));
    return out.size() < limit;
  };
  search(std::move(start), cands, close, emit);
  return out;
}

std::optional<std::vector<BoxId>> box_bijection(const DoubleGroupoid& a, const DoubleGroupoid& b,
                                                const GroupoidMorphism& h, const GroupoidMorphism& v) {
  const std::size_t n = a.box_count();
  if (n != b.box_count()) return std::nullopt;
  FrameIndex index(b);
  std::vector<std::vector<std::uint32_t>> cand(n);
  for (std::size_t i = 0; i < n; ++i) {
    BoxId x = box_id(i);
    BoxFrame f{h(a.top(x)), v(a.left(x)), v(a.right(x)), h(a.bottom(x))};
    for (BoxId y : index.boxes(f)) cand[i].push_back(static_cast<std::uint32_t>(idx(y)));
  }
  auto U = [](BoxId x) { return static_cast<std::uint32_t>(idx(x)); };
  auto cands = [&](std::uint32_t x) -> const std::vector<std::uint32_t>& { return cand[x]; };
  auto close = [&](PartialMap& s, std::uint32_t xi) {
    const BoxId x = box_id(xi), mx = box_id(*s.to[xi]);
    if (std::find(cand[xi].begin(), cand[xi].end(), *s.to[xi]) == cand[xi].end()) return false;
    if (!s.assign(U(a.hinv(x)), U(b.hinv(mx))) || !s.assign(U(a.vinv(x)), U(b.vinv(mx)))) return false;
    for (std::uint32_t zi = 0; zi < n; ++zi) {
      if (!s.to[zi]) continue;
      const BoxId z = box_id(zi), mz = box_id(*s.to[zi]);
      // Images may not have been checked yet, so compose in b defensively.
      auto force = [&](std::optional<BoxId> src, std::optional<BoxId> img) {
        return src && img && s.assign(U(*src), U(*img));
      };
      if (a.h_composable(x, z) && !force(a.try_hcompose(x, z), b.try_hcompose(mx, mz))) return false;
      if (a.h_composable(z, x) && !force(a.try_hcompose(z, x), b.try_hcompose(mz, mx))) return false;
      if (a.v_composable(x, z) && !force(a.try_vcompose(x, z), b.try_vcompose(mx, mz))) return false;
      if (a.v_composable(z, x) && !force(a.try_vcompose(z, x), b.try_vcompose(mz, mx))) return false;
    }
    return true;
  };
  PartialMap start(n, n);
  for (std::size_t i = 0; i < a.vertical().arrow_count(); ++i) {
    ArrowId g = make_id<ArrowId>(i);
    if (!start.assign(U(a.hid(g)), U(b.hid(v(g))))) return std::nullopt;
  }
  for (std::size_t i = 0; i < a.horizontal().arrow_count(); ++i) {
    ArrowId x = make_id<ArrowId>(i);
    if (!start.assign(U(a.vid(x)), U(b.vid(h(x))))) return std::nullopt;
  }
  std::optional<std::vector<BoxId>> found;
  auto emit = [&](const PartialMap& s) {
    std::vector<BoxId> m;
    for (const auto& y : s.to) m.push_back(box_id(*y));
    if (check_double_iso(a, b, {h, v, m}).ok()) {
      found = std::move(m);
      return false;
    }
    return true;
  };
  search(std::move(start), cands, close, emit);
  return found;
}

std::optional<DoubleIso> double_iso(const DoubleGroupoid& a, const DoubleGroupoid& b) {
  if (a.base_size() != b.base_size() || a.box_count() != b.box_count()) return std::nullopt;
  const auto hs = groupoid_isos(a.horizontal(), b.horizontal());
  if (hs.empty()) return std::nullopt;
  const auto vs = groupoid_isos(a.vertical(), b.vertical());
  for (const auto& h : hs)
    for (const auto& v : vs)
      if (auto boxes = box_bijection(a, b, h, v)) return DoubleIso{h, v, std::move(*boxes)};
  return std::nullopt;
}

}  // namespace dgk
