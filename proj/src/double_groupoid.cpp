#include "dgk/double_groupoid.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace dgk {

namespace {

std::string ar(ArrowId a) { return "#" + std::to_string(idx(a)); }

std::string frame_str(const BoxFrame& f) {
  return "[t" + ar(f.top) + " l" + ar(f.left) + " r" + ar(f.right) + " b" + ar(f.bottom) + "]";
}

void check_box_list(const std::vector<BoxId>& v, std::size_t expected, std::size_t boxes,
                    const char* name) {
  if (v.size() != expected)
    throw FormatError(name, "expected " + std::to_string(expected) + " entries");
  for (std::size_t i = 0; i < v.size(); ++i)
    if (idx(v[i]) >= boxes)
      throw FormatError(std::string(name) + "[" + std::to_string(i) + "]", "box out of range");
}

}  // namespace

DoubleGroupoid::DoubleGroupoid(DoubleGroupoidTables t)
    : base_(t.base), h_(std::move(t.horizontal)), v_(std::move(t.vertical)) {
  if (h_.object_count() != base_ || v_.object_count() != base_)
    throw FormatError("base", "edge groupoids must have the declared base");
  const std::size_t m = t.boxes;
  auto edges = [&](const std::vector<ArrowId>& e, std::size_t arrows, const char* name) {
    if (e.size() != m) throw FormatError(name, "expected one entry per box");
    for (std::size_t i = 0; i < m; ++i)
      if (idx(e[i]) >= arrows)
        throw FormatError(std::string(name) + "[" + std::to_string(i) + "]", "arrow out of range");
  };
  edges(t.top, h_.arrow_count(), "t");
  edges(t.bottom, h_.arrow_count(), "b");
  edges(t.left, v_.arrow_count(), "l");
  edges(t.right, v_.arrow_count(), "r");
  check_box_list(t.hid, v_.arrow_count(), m, "hid");
  check_box_list(t.vid, h_.arrow_count(), m, "vid");
  check_box_list(t.hinv, m, m, "hinv");
  check_box_list(t.vinv, m, m, "vinv");

  top_ = std::move(t.top);
  bottom_ = std::move(t.bottom);
  left_ = std::move(t.left);
  right_ = std::move(t.right);
  hid_ = std::move(t.hid);
  vid_ = std::move(t.vid);
  hinv_ = std::move(t.hinv);
  vinv_ = std::move(t.vinv);

  auto fill = [&](const std::vector<std::array<std::uint32_t, 3>>& entries,
                  PartialTable<BoxId, BoxId, BoxId>& table, bool horizontal, const char* name) {
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const auto [a, b, c] = entries[k];
      const std::string ctx = std::string(name) + "[" + std::to_string(k) + "]";
      if (a >= m || b >= m || c >= m) throw FormatError(ctx, "box out of range");
      const BoxId x = box_id(a), y = box_id(b);
      const bool ok = horizontal ? h_composable(x, y) : v_composable(x, y);
      if (!ok)
        throw FormatError(ctx, "boxes " + std::to_string(a) + " and " + std::to_string(b) +
                                   " are not composable");
      if (table.contains(x, y)) throw FormatError(ctx, "duplicate entry");
      table.set(x, y, box_id(c));
    }
  };
  fill(t.hcompose, hc_, true, "hcompose");
  fill(t.vcompose, vc_, false, "vcompose");

  by_left_.assign(v_.arrow_count(), {});
  by_top_.assign(h_.arrow_count(), {});
  for (std::size_t i = 0; i < m; ++i) {
    by_left_[idx(left_[i])].push_back(box_id(i));
    by_top_[idx(top_[i])].push_back(box_id(i));
  }
}

BoxId DoubleGroupoid::hcompose(BoxId a, BoxId b) const {
  if (!h_composable(a, b))
    throw NotComposable("boxes " + describe(*this, a) + " and " + describe(*this, b) +
                        " are not horizontally composable");
  auto r = hc_.find(a, b);
  if (!r) throw IncompleteTable("no horizontal entry for " + describe(*this, a) + "," + describe(*this, b));
  return *r;
}

BoxId DoubleGroupoid::vcompose(BoxId a, BoxId b) const {
  if (!v_composable(a, b))
    throw NotComposable("boxes " + describe(*this, a) + " and " + describe(*this, b) +
                        " are not vertically composable");
  auto r = vc_.find(a, b);
  if (!r) throw IncompleteTable("no vertical entry for " + describe(*this, a) + "," + describe(*this, b));
  return *r;
}

DoubleGroupoidTables DoubleGroupoid::tables() const {
  DoubleGroupoidTables t;
  t.base = base_;
  t.horizontal = h_.tables();
  t.vertical = v_.tables();
  t.boxes = box_count();
  t.top = top_;
  t.bottom = bottom_;
  t.left = left_;
  t.right = right_;
  t.hcompose = hc_.sorted_entries();
  t.vcompose = vc_.sorted_entries();
  t.hid = hid_;
  t.vid = vid_;
  t.hinv = hinv_;
  t.vinv = vinv_;
  return t;
}

std::string describe(const DoubleGroupoid& d, BoxId a) {
  if (idx(a) >= d.box_count()) return "B" + std::to_string(idx(a)) + "?";
  return "B" + std::to_string(idx(a)) + frame_str(d.frame(a));
}

Report validate_double(const DoubleGroupoid& d, const ValidateOptions& options) {
  Report rep("double groupoid axioms");
  const auto& h = d.horizontal();
  const auto& v = d.vertical();
  const std::size_t m = d.box_count();
  auto box = [](std::size_t i) { return box_id(i); };
  auto B = [&](BoxId a) { return describe(d, a); };

  rep.merge(validate_groupoid(h), "horizontal edges: ");
  rep.merge(validate_groupoid(v), "vertical edges: ");
  if (!rep.ok()) return rep;

  Check& corners = rep.law("corner coherence");
  for (std::size_t i = 0; i < m; ++i) {
    BoxId a = box(i);
    corners.expect_lazy(h.src(d.top(a)) == v.src(d.left(a)) && h.tgt(d.top(a)) == v.src(d.right(a)) &&
                            h.src(d.bottom(a)) == v.tgt(d.left(a)) &&
                            h.tgt(d.bottom(a)) == v.tgt(d.right(a)),
                        [&] { return B(a); });
  }

  Check& hdom = rep.law("horizontal composition defined on composable pairs");
  Check& vdom = rep.law("vertical composition defined on composable pairs");
  Check& hedge = rep.law("horizontal composition edge laws");
  Check& vedge = rep.law("vertical composition edge laws");
  for (std::size_t i = 0; i < m; ++i) {
    BoxId a = box(i);
    for (BoxId b : d.boxes_with_left(d.right(a))) {
      auto c = d.try_hcompose(a, b);
      if (!hdom.expect_lazy(c.has_value(), [&] { return B(a) + " | " + B(b); })) continue;
      bool ok = d.left(*c) == d.left(a) && d.right(*c) == d.right(b);
      ok = ok && h.composable(d.top(a), d.top(b)) && d.top(*c) == h.compose(d.top(a), d.top(b));
      ok = ok && h.composable(d.bottom(a), d.bottom(b)) &&
           d.bottom(*c) == h.compose(d.bottom(a), d.bottom(b));
      hedge.expect_lazy(ok, [&] { return B(a) + " | " + B(b) + " = " + B(*c); });
    }
    for (BoxId b : d.boxes_with_top(d.bottom(a))) {
      auto c = d.try_vcompose(a, b);
      if (!vdom.expect_lazy(c.has_value(), [&] { return B(a) + " / " + B(b); })) continue;
      bool ok = d.top(*c) == d.top(a) && d.bottom(*c) == d.bottom(b);
      ok = ok && v.composable(d.left(a), d.left(b)) && d.left(*c) == v.compose(d.left(a), d.left(b));
      ok = ok && v.composable(d.right(a), d.right(b)) &&
           d.right(*c) == v.compose(d.right(a), d.right(b));
      vedge.expect_lazy(ok, [&] { return B(a) + " / " + B(b) + " = " + B(*c); });
    }
  }

  Check& hid_edges = rep.law("horizontal identity boxes have sides id|g|g|id");
  for (std::size_t i = 0; i < v.arrow_count(); ++i) {
    ArrowId g = make_id<ArrowId>(i);
    BoxId e = d.hid(g);
    hid_edges.expect_lazy(d.left(e) == g && d.right(e) == g &&
                              d.top(e) == h.identity(v.src(g)) && d.bottom(e) == h.identity(v.tgt(g)),
                          [&] { return "hid(" + ar(g) + ") = " + B(e); });
  }
  Check& vid_edges = rep.law("vertical identity boxes have sides x|id|id|x");
  for (std::size_t i = 0; i < h.arrow_count(); ++i) {
    ArrowId x = make_id<ArrowId>(i);
    BoxId e = d.vid(x);
    vid_edges.expect_lazy(d.top(e) == x && d.bottom(e) == x && d.left(e) == v.identity(h.src(x)) &&
                              d.right(e) == v.identity(h.tgt(x)),
                          [&] { return "vid(" + ar(x) + ") = " + B(e); });
  }

  Check& theta = rep.law("hid(id P) = vid(id P)");
  for (std::size_t p = 0; p < d.base_size(); ++p) {
    ObjectId o = make_id<ObjectId>(p);
    theta.expect_lazy(d.hid(v.identity(o)) == d.vid(h.identity(o)),
                      [&] { return "object " + std::to_string(p); });
  }

  if (!rep.ok()) return rep;

  // Both box groupoids. Domains are complete at this point.
  Check& hunit = rep.law("horizontal identity law");
  Check& vunit = rep.law("vertical identity law");
  Check& hinv = rep.law("horizontal inverse law");
  Check& vinv = rep.law("vertical inverse law");
  for (std::size_t i = 0; i < m; ++i) {
    BoxId a = box(i);
    hunit.expect_lazy(d.try_hcompose(d.hid(d.left(a)), a) == a &&
                          d.try_hcompose(a, d.hid(d.right(a))) == a,
                      [&] { return B(a); });
    vunit.expect_lazy(d.try_vcompose(d.vid(d.top(a)), a) == a &&
                          d.try_vcompose(a, d.vid(d.bottom(a))) == a,
                      [&] { return B(a); });
    BoxId ai = d.hinv(a);
    hinv.expect_lazy(d.try_hcompose(a, ai) == d.hid(d.left(a)) &&
                         d.try_hcompose(ai, a) == d.hid(d.right(a)),
                     [&] { return B(a) + " with hinv " + B(ai); });
    BoxId av = d.vinv(a);
    vinv.expect_lazy(d.try_vcompose(a, av) == d.vid(d.top(a)) &&
                         d.try_vcompose(av, a) == d.vid(d.bottom(a)),
                     [&] { return B(a) + " with vinv " + B(av); });
  }

  Check& hassoc = rep.law("horizontal associativity");
  Check& vassoc = rep.law("vertical associativity");
  for (std::size_t i = 0; i < m; ++i) {
    BoxId a = box(i);
    for (BoxId b : d.boxes_with_left(d.right(a))) {
      BoxId ab = d.hcompose(a, b);
      for (BoxId c : d.boxes_with_left(d.right(b)))
        hassoc.expect_lazy(d.hcompose(ab, c) == d.hcompose(a, d.hcompose(b, c)),
                           [&] { return "(" + B(a) + "," + B(b) + "," + B(c) + ")"; });
    }
    for (BoxId b : d.boxes_with_top(d.bottom(a))) {
      BoxId ab = d.vcompose(a, b);
      for (BoxId c : d.boxes_with_top(d.bottom(b)))
        vassoc.expect_lazy(d.vcompose(ab, c) == d.vcompose(a, d.vcompose(b, c)),
                           [&] { return "(" + B(a) + "," + B(b) + "," + B(c) + ")"; });
    }
  }

  Check& hid_fun = rep.law("hid(g g') = hid(g) over hid(g')");
  for (std::size_t i = 0; i < v.arrow_count(); ++i) {
    ArrowId g = make_id<ArrowId>(i);
    for (ArrowId g2 : v.arrows_from(v.tgt(g)))
      hid_fun.expect_lazy(d.vcompose(d.hid(g), d.hid(g2)) == d.hid(v.compose(g, g2)),
                          [&] { return ar(g) + "," + ar(g2); });
  }
  Check& vid_fun = rep.law("vid(x x') = vid(x) vid(x')");
  for (std::size_t i = 0; i < h.arrow_count(); ++i) {
    ArrowId x = make_id<ArrowId>(i);
    for (ArrowId x2 : h.arrows_from(h.tgt(x)))
      vid_fun.expect_lazy(d.hcompose(d.vid(x), d.vid(x2)) == d.vid(h.compose(x, x2)),
                          [&] { return ar(x) + "," + ar(x2); });
  }

  Check& inter = rep.law("interchange law", "interchange law");
  std::size_t squares = 0;
  bool capped = false;
  for (std::size_t i = 0; i < m && !capped; ++i) {
    BoxId k = box(i);
    for (BoxId l : d.boxes_with_left(d.right(k))) {
      for (BoxId mm : d.boxes_with_top(d.bottom(k))) {
        for (BoxId n : d.boxes_with_left(d.right(mm))) {
          if (d.top(n) != d.bottom(l)) continue;
          if (++squares > options.interchange_cap) {
            capped = true;
            break;
          }
          BoxId rows = d.vcompose(d.hcompose(k, l), d.hcompose(mm, n));
          BoxId cols = d.hcompose(d.vcompose(k, mm), d.vcompose(l, n));
          inter.expect_lazy(rows == cols, [&] {
            return "[" + B(k) + " " + B(l) + "; " + B(mm) + " " + B(n) + "]";
          });
        }
        if (capped) break;
      }
      if (capped) break;
    }
  }
  if (capped)
    rep.warn("interchange checked on the first " + std::to_string(options.interchange_cap) +
             " squares only");
  return rep;
}

bool is_quadruple(const FiniteGroupoid& v, const FiniteGroupoid& h, const BoxFrame& f) {
  return h.src(f.top) == v.src(f.left) && h.tgt(f.top) == v.src(f.right) &&
         h.src(f.bottom) == v.tgt(f.left) && h.tgt(f.bottom) == v.tgt(f.right);
}

DoubleGroupoid slim_double_groupoid(const FiniteGroupoid& v, const FiniteGroupoid& h,
                                    std::vector<BoxFrame> frames) {
  if (v.object_count() != h.object_count()) throw BaseMismatch("edge groupoids have different bases");
  std::sort(frames.begin(), frames.end());
  frames.erase(std::unique(frames.begin(), frames.end()), frames.end());
  std::map<BoxFrame, std::uint32_t> index;
  for (std::size_t i = 0; i < frames.size(); ++i) {
    if (!is_quadruple(v, h, frames[i]))
      throw FormatError("frames", frame_str(frames[i]) + " does not match at its corners");
    index.emplace(frames[i], static_cast<std::uint32_t>(i));
  }
  auto lookup = [&](const BoxFrame& f) -> BoxId {
    auto it = index.find(f);
    if (it == index.end()) throw FormatError("frames", "not closed: missing " + frame_str(f));
    return box_id(it->second);
  };

  DoubleGroupoidTables t;
  t.base = v.object_count();
  t.horizontal = h.tables();
  t.vertical = v.tables();
  t.boxes = frames.size();
  std::vector<std::vector<std::uint32_t>> by_left(v.arrow_count()), by_top(h.arrow_count());
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const auto& f = frames[i];
    t.top.push_back(f.top);
    t.bottom.push_back(f.bottom);
    t.left.push_back(f.left);
    t.right.push_back(f.right);
    by_left[idx(f.left)].push_back(static_cast<std::uint32_t>(i));
    by_top[idx(f.top)].push_back(static_cast<std::uint32_t>(i));
  }
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const auto& a = frames[i];
    for (std::uint32_t j : by_left[idx(a.right)]) {
      const auto& b = frames[j];
      BoxFrame c{h.compose(a.top, b.top), a.left, b.right, h.compose(a.bottom, b.bottom)};
      t.hcompose.push_back({static_cast<std::uint32_t>(i), j, static_cast<std::uint32_t>(idx(lookup(c)))});
    }
    for (std::uint32_t j : by_top[idx(a.bottom)]) {
      const auto& b = frames[j];
      BoxFrame c{a.top, v.compose(a.left, b.left), v.compose(a.right, b.right), b.bottom};
      t.vcompose.push_back({static_cast<std::uint32_t>(i), j, static_cast<std::uint32_t>(idx(lookup(c)))});
    }
    t.hinv.push_back(lookup({h.inverse(a.top), a.right, a.left, h.inverse(a.bottom)}));
    t.vinv.push_back(lookup({a.bottom, v.inverse(a.left), v.inverse(a.right), a.top}));
  }
  for (std::size_t i = 0; i < v.arrow_count(); ++i) {
    ArrowId g = make_id<ArrowId>(i);
    t.hid.push_back(lookup({h.identity(v.src(g)), g, g, h.identity(v.tgt(g))}));
  }
  for (std::size_t i = 0; i < h.arrow_count(); ++i) {
    ArrowId x = make_id<ArrowId>(i);
    t.vid.push_back(lookup({x, v.identity(h.src(x)), v.identity(h.tgt(x)), x}));
  }
  return DoubleGroupoid(std::move(t));
}

DoubleGroupoid coarse(const FiniteGroupoid& v, const FiniteGroupoid& h) {
  if (v.object_count() != h.object_count()) throw BaseMismatch("edge groupoids have different bases");
  std::vector<BoxFrame> frames;
  for (std::size_t xi = 0; xi < h.arrow_count(); ++xi) {
    ArrowId x = make_id<ArrowId>(xi);
    for (ArrowId f : v.arrows_from(h.src(x)))
      for (ArrowId g : v.arrows_from(h.tgt(x)))
        for (ArrowId y : h.hom(v.tgt(f), v.tgt(g))) frames.push_back({x, f, g, y});
  }
  return slim_double_groupoid(v, h, std::move(frames));
}

FrameIndex::FrameIndex(const DoubleGroupoid& d) {
  for (std::size_t i = 0; i < d.box_count(); ++i) map_[d.frame(box_id(i))].push_back(box_id(i));
}

std::span<const BoxId> FrameIndex::boxes(const BoxFrame& f) const {
  auto it = map_.find(f);
  if (it == map_.end()) return {};
  return it->second;
}

std::optional<BoxId> FrameIndex::unique(const BoxFrame& f) const {
  auto b = boxes(f);
  if (b.size() != 1) return std::nullopt;
  return b.front();
}

DoubleGroupoid frame(const DoubleGroupoid& d) {
  std::vector<BoxFrame> frames;
  for (std::size_t i = 0; i < d.box_count(); ++i) frames.push_back(d.frame(box_id(i)));
  DoubleGroupoid f = slim_double_groupoid(d.vertical(), d.horizontal(), std::move(frames));
  // The induced compositions must agree with every preimage pair.
  const auto proj = frame_projection(d, f);
  for (std::size_t i = 0; i < d.box_count(); ++i) {
    BoxId a = box_id(i);
    for (BoxId b : d.boxes_with_left(d.right(a)))
      if (proj[idx(d.hcompose(a, b))] != f.hcompose(proj[idx(a)], proj[idx(b)]))
        throw InconsistentQuotient("frame map does not preserve " + describe(d, a) + " | " + describe(d, b));
    for (BoxId b : d.boxes_with_top(d.bottom(a)))
      if (proj[idx(d.vcompose(a, b))] != f.vcompose(proj[idx(a)], proj[idx(b)]))
        throw InconsistentQuotient("frame map does not preserve " + describe(d, a) + " / " + describe(d, b));
  }
  return f;
}

std::vector<BoxId> frame_projection(const DoubleGroupoid& d, const DoubleGroupoid& f) {
  FrameIndex index(f);
  std::vector<BoxId> out;
  out.reserve(d.box_count());
  for (std::size_t i = 0; i < d.box_count(); ++i) {
    auto b = index.unique(d.frame(box_id(i)));
    if (!b) throw NotMatching("box " + describe(d, box_id(i)) + " has no unique frame in target");
    out.push_back(*b);
  }
  return out;
}

bool is_slim(const DoubleGroupoid& d) {
  std::set<BoxFrame> seen;
  for (std::size_t i = 0; i < d.box_count(); ++i)
    if (!seen.insert(d.frame(box_id(i))).second) return false;
  return true;
}

namespace {

// Number of boxes for each (top, right) pair, over every matching pair.
template <class Pred>
bool all_ur_counts(const DoubleGroupoid& d, Pred&& pred) {
  const auto& h = d.horizontal();
  const auto& v = d.vertical();
  std::map<std::pair<ArrowId, ArrowId>, std::size_t> count;
  for (std::size_t i = 0; i < d.box_count(); ++i) ++count[{d.top(box_id(i)), d.right(box_id(i))}];
  for (std::size_t xi = 0; xi < h.arrow_count(); ++xi) {
    ArrowId x = make_id<ArrowId>(xi);
    for (ArrowId g : v.arrows_from(h.tgt(x))) {
      auto it = count.find({x, g});
      if (!pred(it == count.end() ? 0 : it->second)) return false;
    }
  }
  return true;
}

}  // namespace

bool has_filling(const DoubleGroupoid& d) {
  return all_ur_counts(d, [](std::size_t n) { return n >= 1; });
}

bool is_vacant(const DoubleGroupoid& d) {
  return all_ur_counts(d, [](std::size_t n) { return n == 1; });
}

Transitivity transitivity(const DoubleGroupoid& d) {
  const auto& h = d.horizontal();
  const auto& v = d.vertical();
  std::set<std::tuple<ArrowId, ArrowId, ArrowId>> trb, ltr;
  for (std::size_t i = 0; i < d.box_count(); ++i) {
    BoxId a = box_id(i);
    trb.insert({d.top(a), d.right(a), d.bottom(a)});
    ltr.insert({d.left(a), d.top(a), d.right(a)});
  }
  Transitivity out{true, true};
  for (std::size_t xi = 0; xi < h.arrow_count(); ++xi) {
    ArrowId x = make_id<ArrowId>(xi);
    for (ArrowId g : v.arrows_from(h.tgt(x))) {
      for (ArrowId y : h.arrows_into(v.tgt(g)))
        if (!trb.count({x, g, y})) out.horizontal = false;
      for (ArrowId f : v.arrows_from(h.src(x)))
        if (!ltr.count({f, x, g})) out.vertical = false;
    }
  }
  return out;
}

}  // namespace dgk
