#include "dgk/corners.hpp"

#include <map>
#include <utility>

#include "dgk/core_kernel.hpp"

namespace dgk {

const char* corner_name(Corner c) {
  switch (c) {
    case Corner::UpperRight: return "upper-right";
    case Corner::UpperLeft: return "upper-left";
    case Corner::LowerLeft: return "lower-left";
    case Corner::LowerRight: return "lower-right";
  }
  return "?";
}

std::vector<BoxId> ur_set(const DoubleGroupoid& d, ArrowId x, ArrowId g) {
  if (d.horizontal().tgt(x) != d.vertical().src(g))
    throw NotMatching("top #" + std::to_string(idx(x)) + " does not meet right #" + std::to_string(idx(g)));
  std::vector<BoxId> out;
  for (BoxId b : d.boxes_with_top(x))
    if (d.right(b) == g) out.push_back(b);
  return out;
}

namespace {

std::pair<ArrowId, ArrowId> sides(const DoubleGroupoid& d, Corner c, BoxId b) {
  switch (c) {
    case Corner::UpperRight: return {d.top(b), d.right(b)};
    case Corner::UpperLeft: return {d.top(b), d.left(b)};
    case Corner::LowerLeft: return {d.left(b), d.bottom(b)};
    case Corner::LowerRight: return {d.bottom(b), d.right(b)};
  }
  return {};
}

// The vertex diagonally across from the corner.
ObjectId opposite(const DoubleGroupoid& d, Corner c, BoxId b) {
  switch (c) {
    case Corner::UpperRight: return d.bottom_left(b);
    case Corner::UpperLeft: return d.bottom_right(b);
    case Corner::LowerLeft: return d.top_right(b);
    case Corner::LowerRight: return d.top_left(b);
  }
  return {};
}

}  // namespace

CornerReport corners(const DoubleGroupoid& d) {
  CornerReport out;
  for (Corner c : kAllCorners) {
    std::map<std::pair<ArrowId, ArrowId>, std::size_t> count;
    for (std::size_t i = 0; i < d.box_count(); ++i) ++count[sides(d, c, box_id(i))];
    auto& col = out.per_box[static_cast<std::size_t>(c)];
    for (std::size_t i = 0; i < d.box_count(); ++i) col.push_back(count[sides(d, c, box_id(i))]);
  }
  for (std::size_t p = 0; p < d.base_size(); ++p)
    out.theta.push_back(out.at(Corner::UpperRight, d.theta(make_id<ObjectId>(p))));
  return out;
}

Report corner_facts(const DoubleGroupoid& d) {
  Report rep("corner functions");
  const CornerReport cr = corners(d);
  const CoreGroupoid e = core(d);
  auto B = [&](BoxId a) { return describe(d, a); };
  auto n = [](std::size_t v) { return std::to_string(v); };

  Check& formula = rep.law("corner count = |core component| * |core vertex group| at the opposite vertex",
                           "corner count formula");
  for (std::size_t i = 0; i < d.box_count(); ++i) {
    BoxId b = box_id(i);
    for (Corner c : kAllCorners) {
      ObjectId q = opposite(d, c, b);
      const std::size_t expected = component_of(e.groupoid, q).size() * e.groupoid.vertex_group(q).size();
      formula.expect_lazy(cr.at(c, b) == expected, [&] {
        return std::string(corner_name(c)) + " of " + B(b) + ": " + n(cr.at(c, b)) + " != " + n(expected);
      });
    }
  }

  Check& common = rep.law("the four corner counts agree at identity boxes", "corner count formula");
  for (std::size_t p = 0; p < d.base_size(); ++p) {
    BoxId t = d.theta(make_id<ObjectId>(p));
    bool ok = true;
    for (Corner c : kAllCorners) ok = ok && cr.at(c, t) == cr.theta[p];
    common.expect(ok, "object " + n(p));
  }

  Check& fa = rep.law("theta is constant on core components", "corner facts");
  for (const auto& block : components(e.groupoid))
    for (ObjectId q : block)
      fa.expect(cr.theta[idx(q)] == cr.theta[idx(block.front())],
                "objects " + n(idx(block.front())) + "," + n(idx(q)));

  Check& fb = rep.law("adjacent boxes: corner counts match across shared vertices", "corner facts");
  Check& fc = rep.law("composites inherit corner counts", "corner facts");
  using C = Corner;
  for (std::size_t i = 0; i < d.box_count(); ++i) {
    BoxId l = box_id(i);
    for (BoxId m : d.boxes_with_left(d.right(l))) {
      fb.expect_lazy(cr.at(C::UpperLeft, l) == cr.at(C::UpperRight, m) &&
                         cr.at(C::LowerLeft, l) == cr.at(C::LowerRight, m),
                     [&] { return B(l) + " | " + B(m); });
      BoxId lm = d.hcompose(l, m);
      fc.expect_lazy(cr.at(C::UpperRight, lm) == cr.at(C::UpperRight, l) &&
                         cr.at(C::LowerLeft, lm) == cr.at(C::LowerLeft, m),
                     [&] { return B(l) + " | " + B(m); });
    }
    for (BoxId nb : d.boxes_with_top(d.bottom(l))) {
      fb.expect_lazy(cr.at(C::UpperLeft, l) == cr.at(C::LowerLeft, nb) &&
                         cr.at(C::UpperRight, l) == cr.at(C::LowerRight, nb),
                     [&] { return B(l) + " over " + B(nb); });
      BoxId ln = d.vcompose(l, nb);
      fc.expect_lazy(cr.at(C::UpperRight, ln) == cr.at(C::UpperRight, nb) &&
                         cr.at(C::LowerLeft, ln) == cr.at(C::LowerLeft, l),
                     [&] { return B(l) + " over " + B(nb); });
    }
  }

  Check& fd = rep.law("vacant iff the core is trivial", "corner facts");
  const bool vacant = is_vacant(d);
  const bool trivial = e.groupoid.arrow_count() == d.base_size();
  fd.expect(vacant == trivial, std::string("vacant=") + (vacant ? "true" : "false") +
                                   " trivial core=" + (trivial ? "true" : "false"));
  return rep;
}

}  // namespace dgk
