#include "dgk/core_kernel.hpp"

#include <algorithm>

#include "dgk/corners.hpp"

namespace dgk {

namespace {

std::string B(const DoubleGroupoid& d, BoxId a) { return describe(d, a); }

bool all_identity(const DoubleGroupoid& d, BoxId a) {
  const auto& h = d.horizontal();
  const auto& v = d.vertical();
  return h.is_identity(d.top(a)) && h.is_identity(d.bottom(a)) && v.is_identity(d.left(a)) &&
         v.is_identity(d.right(a));
}

}  // namespace

bool is_core_box(const DoubleGroupoid& d, BoxId e) {
  return d.horizontal().is_identity(d.top(e)) && d.vertical().is_identity(d.right(e));
}

BoxId core_act(const DoubleGroupoid& d, BoxId e, BoxId a) {
  if (d.bottom_right(e) != d.bottom_left(a))
    throw NotComposable("core box " + B(d, e) + " cannot act on " + B(d, a));
  return d.square(d.hid(d.left(a)), a, e, d.vid(d.bottom(a)));
}

BoxId core_compose(const DoubleGroupoid& d, BoxId e, BoxId m) { return core_act(d, e, m); }

BoxId core_inverse(const DoubleGroupoid& d, BoxId e) {
  return d.vinv(d.hcompose(e, d.vid(d.horizontal().inverse(d.bottom(e)))));
}

CoreGroupoid core(const DoubleGroupoid& d) {
  CoreGroupoid out;
  out.arrow_of_box.assign(d.box_count(), std::nullopt);
  for (std::size_t i = 0; i < d.box_count(); ++i) {
    BoxId b = box_id(i);
    if (!is_core_box(d, b)) continue;
    out.arrow_of_box[i] = make_id<ArrowId>(out.boxes.size());
    out.boxes.push_back(b);
  }
  auto arrow = [&](BoxId b, const char* what) {
    if (!out.arrow_of_box[idx(b)])
      throw SolveFailed(std::string("core not closed under ") + what + ": " + B(d, b));
    return *out.arrow_of_box[idx(b)];
  };

  GroupoidTables t;
  t.objects = d.base_size();
  std::vector<std::vector<std::uint32_t>> from(d.base_size());
  for (std::size_t k = 0; k < out.boxes.size(); ++k) {
    t.src.push_back(d.bottom_left(out.boxes[k]));
    t.tgt.push_back(d.bottom_right(out.boxes[k]));
    from[idx(t.src.back())].push_back(static_cast<std::uint32_t>(k));
  }
  for (std::size_t k = 0; k < out.boxes.size(); ++k) {
    BoxId e = out.boxes[k];
    for (std::uint32_t j : from[idx(d.bottom_right(e))]) {
      BoxId em = core_compose(d, e, out.boxes[j]);
      t.compose.push_back({static_cast<std::uint32_t>(k), j, static_cast<std::uint32_t>(idx(arrow(em, "composition")))});
    }
    t.inverse.push_back(arrow(core_inverse(d, e), "inverse"));
  }
  for (std::size_t p = 0; p < d.base_size(); ++p)
    t.identity.push_back(arrow(d.theta(make_id<ObjectId>(p)), "identities"));
  out.groupoid = FiniteGroupoid(std::move(t));
  return out;
}

BundleAction core_action(const DoubleGroupoid& d, const CoreGroupoid& e) {
  std::vector<ObjectId> gamma;
  for (std::size_t i = 0; i < d.box_count(); ++i) gamma.push_back(d.bottom_left(box_id(i)));
  FiberBundle space(d.base_size(), std::move(gamma));
  return tabulate_action(e.groupoid, space, [&](ArrowId g, ElementId a) {
    return make_id<ElementId>(idx(core_act(d, e.boxes[idx(g)], make_id<BoxId>(idx(a)))));
  });
}

Report orbit_is_ur(const DoubleGroupoid& d) {
  Report rep("core action orbits");
  const CoreGroupoid e = core(d);
  const BundleAction act = core_action(d, e);
  rep.merge(validate_action(act), "core action: ");
  if (!rep.ok()) return rep;
  Check& orbits = rep.law("orbit of B = boxes with the top and right of B", "core orbits");
  Check& iso = rep.law("isotropy of every box is trivial", "core orbits");
  for (std::size_t i = 0; i < d.box_count(); ++i) {
    BoxId b = box_id(i);
    std::vector<BoxId> orb;
    for (ElementId x : orbit(act, make_id<ElementId>(i))) orb.push_back(make_id<BoxId>(idx(x)));
    orbits.expect_lazy(orb == ur_set(d, d.top(b), d.right(b)), [&] { return B(d, b); });
    iso.expect_lazy(isotropy(act, make_id<ElementId>(i)).size() == 1, [&] { return B(d, b); });
  }
  return rep;
}

KernelBundle kernel(const DoubleGroupoid& d) {
  KernelBundle out;
  out.element_of_box.assign(d.box_count(), std::nullopt);
  for (std::size_t i = 0; i < d.box_count(); ++i) {
    BoxId b = box_id(i);
    if (!all_identity(d, b)) continue;
    out.element_of_box[i] = make_id<ElementId>(out.boxes.size());
    out.boxes.push_back(b);
  }
  BundleTables t;
  t.base = d.base_size();
  std::vector<std::vector<std::uint32_t>> fiber(d.base_size());
  for (std::size_t k = 0; k < out.boxes.size(); ++k) {
    t.fiber_of.push_back(d.bottom_left(out.boxes[k]));
    fiber[idx(t.fiber_of.back())].push_back(static_cast<std::uint32_t>(k));
  }
  auto element = [&](BoxId b) {
    if (!out.element_of_box[idx(b)])
      throw NotAbelian("kernel not closed: " + B(d, b));
    return static_cast<std::uint32_t>(idx(*out.element_of_box[idx(b)]));
  };
  for (std::size_t k = 0; k < out.boxes.size(); ++k) {
    BoxId a = out.boxes[k];
    for (std::uint32_t j : fiber[idx(d.bottom_left(a))]) {
      BoxId b = out.boxes[j];
      BoxId ab = d.hcompose(a, b);
      if (ab != d.vcompose(a, b))
        throw NotAbelian("compositions differ on " + B(d, a) + "," + B(d, b));
      if (ab != d.hcompose(b, a))
        throw NotAbelian("not commutative on " + B(d, a) + "," + B(d, b));
      t.op.push_back({static_cast<std::uint32_t>(k), j, element(ab)});
    }
    t.negate.push_back(make_id<ElementId>(element(d.hinv(a))));
  }
  for (std::size_t p = 0; p < d.base_size(); ++p)
    t.neutral.push_back(make_id<ElementId>(element(d.theta(make_id<ObjectId>(p)))));
  out.bundle = AbelianGroupBundle(std::move(t));
  return out;
}

Report kernel_report(const DoubleGroupoid& d, const KernelBundle& k) {
  Report rep("kernel bundle");
  rep.merge(validate_bundle(k.bundle), "kernel: ");
  Check& both = rep.law("horizontal and vertical composition coincide on fibers", "kernel bundle");
  Check& with_core = rep.law("fiber sum agrees with core composition", "kernel bundle");
  for (BoxId a : k.boxes)
    for (ElementId y : k.bundle.fiber(d.bottom_left(a))) {
      BoxId b = k.boxes[idx(y)];
      auto sum = k.bundle.try_add(k.element(a), y);
      both.expect_lazy(sum && k.boxes[idx(*sum)] == d.hcompose(a, b) && d.hcompose(a, b) == d.vcompose(a, b),
                       [&] { return B(d, a) + "," + B(d, b); });
      with_core.expect_lazy(sum && k.boxes[idx(*sum)] == core_compose(d, a, b),
                            [&] { return B(d, a) + "," + B(d, b); });
    }
  return rep;
}

namespace {

template <class Conjugate>
BundleAction conjugation_action(const FiniteGroupoid& actor, const KernelBundle& k, Conjugate&& conj) {
  return tabulate_action(actor, k.bundle.fibers(), [&](ArrowId g, ElementId x) {
    BoxId r = conj(g, k.boxes[idx(x)]);
    if (!k.contains(r)) throw SolveFailed("conjugate of a kernel box leaves the kernel");
    return k.element(r);
  });
}

}  // namespace

BundleAction v_action(const DoubleGroupoid& d, const KernelBundle& k) {
  const auto& v = d.vertical();
  return conjugation_action(v, k, [&](ArrowId g, BoxId b) {
    return d.vcompose(d.vcompose(d.hid(g), b), d.hid(v.inverse(g)));
  });
}

BundleAction h_action(const DoubleGroupoid& d, const KernelBundle& k) {
  const auto& h = d.horizontal();
  return conjugation_action(h, k, [&](ArrowId x, BoxId b) {
    return d.hcompose(d.hcompose(d.vid(x), b), d.vid(h.inverse(x)));
  });
}

Report frame_core_sequence(const DoubleGroupoid& d) {
  if (!has_filling(d)) throw NoFilling("the frame/core sequence is checked only under filling");
  Report rep("core exact sequence");
  const DoubleGroupoid f = frame(d);
  const auto proj = frame_projection(d, f);
  const CoreGroupoid e = core(d);
  const CoreGroupoid fe = core(f);
  const KernelBundle k = kernel(d);
  const char* anchor = "core exact sequence";

  Check& into = rep.law("frame map sends the core into the core of the frame", anchor);
  Check& hom = rep.law("frame map is a groupoid morphism on the core", anchor);
  Check& onto = rep.law("frame map is onto the core of the frame", anchor);
  Check& ker = rep.law("kernel of the frame map on the core is the kernel bundle", anchor);
  Check& count = rep.law("|E(P)| = |K(P)| * |core of frame (P)|", anchor);

  std::vector<bool> hit(fe.boxes.size(), false);
  for (BoxId a : e.boxes) {
    BoxId pa = proj[idx(a)];
    if (!into.expect_lazy(fe.contains(pa), [&] { return B(d, a); })) continue;
    hit[idx(fe.arrow(pa))] = true;
    const bool trivial = pa == f.theta(d.bottom_left(a));
    ker.expect_lazy(trivial == k.contains(a), [&] { return B(d, a); });
    for (ArrowId m : e.groupoid.arrows_from(d.bottom_right(a))) {
      BoxId mb = e.boxes[idx(m)];
      hom.expect_lazy(proj[idx(core_compose(d, a, mb))] == core_compose(f, pa, proj[idx(mb)]),
                      [&] { return B(d, a) + "," + B(d, mb); });
    }
  }
  for (std::size_t i = 0; i < fe.boxes.size(); ++i)
    onto.expect_lazy(hit[i], [&] { return "frame core box " + B(f, fe.boxes[i]); });
  for (std::size_t p = 0; p < d.base_size(); ++p) {
    ObjectId o = make_id<ObjectId>(p);
    const std::size_t ne = e.groupoid.vertex_group(o).size();
    const std::size_t nk = k.bundle.fiber(o).size();
    const std::size_t nf = fe.groupoid.vertex_group(o).size();
    count.expect(ne == nk * nf, "object " + std::to_string(p) + ": " + std::to_string(ne) +
                                    " != " + std::to_string(nk) + "*" + std::to_string(nf));
  }
  return rep;
}

}  // namespace dgk
