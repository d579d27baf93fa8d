#include "dgk/extension.hpp"

#include <algorithm>
#include <set>

namespace dgk {

namespace {

std::string el(ElementId x) { return "e" + std::to_string(idx(x)); }

// Position of each element inside its fiber.
std::vector<std::size_t> fiber_positions(const AbelianGroupBundle& k) {
  std::vector<std::size_t> pos(k.element_count());
  for (std::size_t p = 0; p < k.base_size(); ++p) {
    auto fiber = k.fiber(make_id<ObjectId>(p));
    for (std::size_t i = 0; i < fiber.size(); ++i) pos[idx(fiber[i])] = i;
  }
  return pos;
}

// E with E acting on b equal to c, read off as (b^v over c) vid(b(b)^-1).
ElementId solve(const DoubleGroupoid& d, const KernelBundle& k, BoxId b, BoxId c) {
  if (d.top(b) != d.top(c) || d.right(b) != d.right(c))
    throw SolveFailed(describe(d, b) + " and " + describe(d, c) + " lie in different orbits");
  BoxId e = d.hcompose(d.vcompose(d.vinv(b), c), d.vid(d.horizontal().inverse(d.bottom(b))));
  if (!k.contains(e)) throw SolveFailed("solution " + describe(d, e) + " is not a kernel box");
  if (core_act(d, e, b) != c) throw SolveFailed("solution " + describe(d, e) + " does not act as required");
  return k.element(e);
}

}  // namespace

Section choose_section(const DoubleGroupoid& d, const DoubleGroupoid& f) {
  const auto proj = frame_projection(d, f);
  Section s;
  s.mu.assign(f.box_count(), BoxId{});
  std::vector<bool> seen(f.box_count(), false);
  for (std::size_t i = 0; i < d.box_count(); ++i) {
    const std::size_t t = idx(proj[i]);
    if (!seen[t]) s.mu[t] = box_id(i);
    seen[t] = true;
  }
  for (std::size_t i = 0; i < d.vertical().arrow_count(); ++i) {
    ArrowId g = make_id<ArrowId>(i);
    s.mu[idx(f.hid(g))] = d.hid(g);
  }
  for (std::size_t i = 0; i < d.horizontal().arrow_count(); ++i) {
    ArrowId x = make_id<ArrowId>(i);
    s.mu[idx(f.vid(x))] = d.vid(x);
  }
  return s;
}

CocyclePair extract_cocycles(const DoubleGroupoid& d, const DoubleGroupoid& f, const Section& mu,
                             const KernelBundle& k) {
  CocyclePair out;
  for (std::size_t i = 0; i < f.box_count(); ++i) {
    BoxId a = box_id(i);
    for (BoxId b : f.boxes_with_left(f.right(a)))
      out.tau[{a, b}] = solve(d, k, mu(f.hcompose(a, b)), d.hcompose(mu(a), mu(b)));
    for (BoxId b : f.boxes_with_top(f.bottom(a)))
      out.sigma[{a, b}] = solve(d, k, mu(f.vcompose(a, b)), d.vcompose(mu(a), mu(b)));
  }
  return out;
}

Report validate_cocycle_equations(const ExtensionData& e) {
  Report rep("extension equations");
  const auto& k = e.bundle;
  const auto& f = e.frame;
  const auto& h = f.horizontal();
  const auto& v = f.vertical();
  auto F = [&](BoxId a) { return describe(f, a); };

  rep.merge(validate_bundle(k), "bundle: ");
  rep.merge(validate_double(f), "frame: ");
  Check& shape = rep.law("bundle, frame and actions share base and edge groupoids");
  shape.expect(k.base_size() == f.base_size(), "bundle and frame bases differ");
  shape.expect(e.vact.actor() == v, "vertical action is not by the frame's vertical groupoid");
  shape.expect(e.hact.actor() == h, "horizontal action is not by the frame's horizontal groupoid");
  shape.expect(e.vact.space() == k.fibers() && e.hact.space() == k.fibers(),
               "actions do not act on the bundle");
  if (!rep.ok()) return rep;
  rep.merge(validate_action_by_automorphisms(e.vact, k), "vertical action: ");
  rep.merge(validate_action_by_automorphisms(e.hact, k), "horizontal action: ");
  if (!rep.ok()) return rep;

  auto table_check = [&](const CocycleTable& table, bool horizontal, const std::string& name) {
    Check& complete = rep.law(name + " defined exactly on composable frame pairs");
    Check& base = rep.law(name + " base condition");
    Check& unit = rep.law(name + " vanishes on identity arguments");
    std::size_t expected = 0;
    for (std::size_t i = 0; i < f.box_count(); ++i) {
      BoxId a = box_id(i);
      auto partners = horizontal ? f.boxes_with_left(f.right(a)) : f.boxes_with_top(f.bottom(a));
      for (BoxId b : partners) {
        ++expected;
        auto it = table.find({a, b});
        if (!complete.expect_lazy(it != table.end() && idx(it->second) < k.element_count(),
                                  [&] { return F(a) + "," + F(b); }))
          continue;
        const ObjectId want = horizontal ? f.bottom_left(a) : f.bottom_left(b);
        base.expect_lazy(k.project(it->second) == want, [&] { return F(a) + "," + F(b); });
        const bool id_arg = horizontal ? (a == f.hid(f.left(a)) || b == f.hid(f.right(b)))
                                       : (a == f.vid(f.top(a)) || b == f.vid(f.bottom(b)));
        if (id_arg)
          unit.expect_lazy(k.is_neutral(it->second), [&] { return F(a) + "," + F(b) + " -> " + el(it->second); });
      }
    }
    complete.expect(table.size() == expected, "table has entries on non-composable pairs");
  };
  table_check(e.cocycles.tau, true, "tau");
  table_check(e.cocycles.sigma, false, "sigma");
  if (!rep.ok()) return rep;

  auto tau = [&](BoxId a, BoxId b) { return e.cocycles.tau.at({a, b}); };
  auto sigma = [&](BoxId a, BoxId b) { return e.cocycles.sigma.at({a, b}); };
  auto add = [&](ElementId a, ElementId b) { return k.add(a, b); };
  auto vact = [&](ArrowId g, ElementId x) { return e.vact.act(g, x); };
  auto hact = [&](ArrowId x, ElementId y) { return e.hact.act(x, y); };

  Check& tc = rep.law("tau cocycle identity on F|G|H", "extension equations");
  Check& sc = rep.law("sigma cocycle identity on F over G over H", "extension equations");
  for (std::size_t i = 0; i < f.box_count(); ++i) {
    BoxId a = box_id(i);
    for (BoxId b : f.boxes_with_left(f.right(a))) {
      BoxId ab = f.hcompose(a, b);
      for (BoxId c : f.boxes_with_left(f.right(b))) {
        ElementId lhs = add(tau(a, b), tau(ab, c));
        ElementId rhs = add(tau(a, f.hcompose(b, c)), hact(f.bottom(a), tau(b, c)));
        tc.expect_lazy(lhs == rhs, [&] { return F(a) + " | " + F(b) + " | " + F(c); });
      }
    }
    for (BoxId b : f.boxes_with_top(f.bottom(a))) {
      BoxId ab = f.vcompose(a, b);
      for (BoxId c : f.boxes_with_top(f.bottom(b))) {
        ElementId lhs = add(sigma(b, c), sigma(a, f.vcompose(b, c)));
        ElementId rhs = add(vact(v.inverse(f.left(c)), sigma(a, b)), sigma(ab, c));
        sc.expect_lazy(lhs == rhs, [&] { return F(a) + " / " + F(b) + " / " + F(c); });
      }
    }
  }

  Check& ac = rep.law("the two routes of the edge actions around each frame box agree",
                      "extension equations");
  for (std::size_t i = 0; i < f.box_count(); ++i) {
    BoxId a = box_id(i);
    for (ElementId l : k.fiber(f.top_right(a))) {
      ElementId lhs = vact(v.inverse(f.left(a)), hact(f.top(a), l));
      ElementId rhs = hact(f.bottom(a), vact(v.inverse(f.right(a)), l));
      ac.expect_lazy(lhs == rhs, [&] { return F(a) + " on " + el(l); });
    }
  }

  Check& st = rep.law("sigma and tau agree on every 2x2 square of frame boxes", "extension equations");
  for (std::size_t i = 0; i < f.box_count(); ++i) {
    BoxId a = box_id(i);
    for (BoxId b : f.boxes_with_left(f.right(a)))
      for (BoxId c : f.boxes_with_top(f.bottom(a)))
        for (BoxId dd : f.boxes_with_left(f.right(c))) {
          if (f.top(dd) != f.bottom(b)) continue;
          ElementId lhs = add(add(vact(v.inverse(f.left(c)), tau(a, b)), tau(c, dd)),
                              sigma(f.hcompose(a, b), f.hcompose(c, dd)));
          ElementId rhs = add(add(hact(f.bottom(c), sigma(b, dd)), sigma(a, c)),
                              tau(f.vcompose(a, c), f.vcompose(b, dd)));
          st.expect_lazy(lhs == rhs, [&] {
            return "[" + F(a) + " " + F(b) + "; " + F(c) + " " + F(dd) + "]";
          });
        }
  }
  return rep;
}

std::vector<ExtensionBox> extension_boxes(const ExtensionData& e) {
  std::vector<ExtensionBox> out;
  for (std::size_t i = 0; i < e.frame.box_count(); ++i) {
    BoxId f = box_id(i);
    for (ElementId k : e.bundle.fiber(e.frame.bottom_left(f))) out.push_back({k, f});
  }
  return out;
}

DoubleGroupoid build_extension(const ExtensionData& e) {
  if (Report r = validate_cocycle_equations(e); !r.ok())
    throw CocycleInvalid("extension data fails its equations:\n" + r.to_text());
  const auto& k = e.bundle;
  const auto& f = e.frame;
  const auto& h = f.horizontal();
  const auto& v = f.vertical();
  const auto boxes = extension_boxes(e);
  const auto pos = fiber_positions(k);
  std::vector<std::uint32_t> offset(f.box_count() + 1, 0);
  for (std::size_t i = 0; i < f.box_count(); ++i)
    offset[i + 1] = offset[i] + static_cast<std::uint32_t>(k.fiber(f.bottom_left(box_id(i))).size());
  auto index = [&](ElementId x, BoxId fb) {
    if (k.project(x) != f.bottom_left(fb)) throw CocycleInvalid("element lands in the wrong fiber");
    return offset[idx(fb)] + static_cast<std::uint32_t>(pos[idx(x)]);
  };
  auto tau = [&](BoxId a, BoxId b) { return e.cocycles.tau.at({a, b}); };
  auto sigma = [&](BoxId a, BoxId b) { return e.cocycles.sigma.at({a, b}); };

  DoubleGroupoidTables t;
  t.base = f.base_size();
  t.horizontal = h.tables();
  t.vertical = v.tables();
  t.boxes = boxes.size();
  for (const auto& [x, fb] : boxes) {
    t.top.push_back(f.top(fb));
    t.bottom.push_back(f.bottom(fb));
    t.left.push_back(f.left(fb));
    t.right.push_back(f.right(fb));
  }
  for (std::uint32_t i = 0; i < boxes.size(); ++i) {
    const auto [x, fa] = boxes[i];
    // (K,F)(L,G) = (K + b(F).L + tau(F,G), FG)
    for (BoxId fb : f.boxes_with_left(f.right(fa))) {
      const BoxId fab = f.hcompose(fa, fb);
      for (ElementId y : k.fiber(f.bottom_left(fb))) {
        ElementId z = k.add(k.add(x, e.hact.act(f.bottom(fa), y)), tau(fa, fb));
        t.hcompose.push_back({i, index(y, fb), index(z, fab)});
      }
    }
    // (K,F) over (L,G) = (l(G)^-1.K + L + sigma(F,G), F over G)
    for (BoxId fb : f.boxes_with_top(f.bottom(fa))) {
      const BoxId fab = f.vcompose(fa, fb);
      for (ElementId y : k.fiber(f.bottom_left(fb))) {
        ElementId z = k.add(k.add(e.vact.act(v.inverse(f.left(fb)), x), y), sigma(fa, fb));
        t.vcompose.push_back({i, index(y, fb), index(z, fab)});
      }
    }
    // (K,F)^h = (b(F)^-1.(-K - tau(F,F^h)), F^h)
    const BoxId fh = f.hinv(fa);
    ElementId zh = e.hact.act(h.inverse(f.bottom(fa)), k.add(k.negate(x), k.negate(tau(fa, fh))));
    t.hinv.push_back(box_id(index(zh, fh)));
    // (K,F)^v = (-(l(F).K) - sigma(F,F^v), F^v)
    const BoxId fv = f.vinv(fa);
    ElementId zv = k.add(k.negate(e.vact.act(f.left(fa), x)), k.negate(sigma(fa, fv)));
    t.vinv.push_back(box_id(index(zv, fv)));
  }
  for (std::size_t i = 0; i < v.arrow_count(); ++i) {
    ArrowId g = make_id<ArrowId>(i);
    t.hid.push_back(box_id(index(k.neutral(v.tgt(g)), f.hid(g))));
  }
  for (std::size_t i = 0; i < h.arrow_count(); ++i) {
    ArrowId x = make_id<ArrowId>(i);
    t.vid.push_back(box_id(index(k.neutral(h.src(x)), f.vid(x))));
  }
  return DoubleGroupoid(std::move(t));
}

ExtensionData decompose(const DoubleGroupoid& d) {
  KernelBundle k = kernel(d);
  DoubleGroupoid f = frame(d);
  Section mu = choose_section(d, f);
  CocyclePair c = extract_cocycles(d, f, mu, k);
  BundleAction va = v_action(d, k);
  BundleAction ha = h_action(d, k);
  return {std::move(k.bundle), std::move(f), std::move(va), std::move(ha), std::move(c)};
}

std::vector<BoxId> extension_witness(const DoubleGroupoid& d) {
  const KernelBundle k = kernel(d);
  const ExtensionData e = decompose(d);
  const Section mu = choose_section(d, e.frame);
  std::vector<BoxId> out;
  for (const auto& [x, fb] : extension_boxes(e)) out.push_back(core_act(d, k.boxes[idx(x)], mu(fb)));
  return out;
}

Report psi_check(const DoubleGroupoid& d, const Section& mu) {
  Report rep("kernel times frame bijection");
  const KernelBundle k = kernel(d);
  const DoubleGroupoid f = frame(d);
  const auto proj = frame_projection(d, f);
  Check& sec = rep.law("mu is a section of the frame map", "kernel times frame");
  for (std::size_t i = 0; i < f.box_count(); ++i)
    sec.expect_lazy(mu.mu.size() == f.box_count() && proj[idx(mu(box_id(i)))] == box_id(i),
                    [&] { return "frame box " + describe(f, box_id(i)); });
  if (!rep.ok()) return rep;

  Check& fib = rep.law("K acting on mu(F) lies over F", "kernel times frame");
  Check& inj = rep.law("(K, F) -> K acting on mu(F) is injective", "kernel times frame");
  Check& card = rep.law("|B| = sum over frame boxes F of |K(bl F)|", "kernel times frame");
  std::set<BoxId> image;
  std::size_t total = 0;
  for (std::size_t i = 0; i < f.box_count(); ++i) {
    BoxId fb = box_id(i);
    for (ElementId x : k.bundle.fiber(f.bottom_left(fb))) {
      ++total;
      BoxId b = core_act(d, k.boxes[idx(x)], mu(fb));
      fib.expect_lazy(proj[idx(b)] == fb, [&] { return describe(d, b); });
      inj.expect_lazy(image.insert(b).second, [&] { return describe(d, b) + " hit twice"; });
    }
  }
  card.expect(total == d.box_count(),
              std::to_string(d.box_count()) + " != " + std::to_string(total));
  card.note = std::to_string(d.box_count()) + " = " + std::to_string(total);
  return rep;
}

CocyclePair coboundary(const DoubleGroupoid& f, const AbelianGroupBundle& k, const BundleAction& vact,
                       const BundleAction& hact, const std::vector<ElementId>& c) {
  CocyclePair out;
  const auto& v = f.vertical();
  for (std::size_t i = 0; i < f.box_count(); ++i) {
    BoxId a = box_id(i);
    for (BoxId b : f.boxes_with_left(f.right(a)))
      out.tau[{a, b}] = k.add(k.add(c[idx(a)], hact.act(f.bottom(a), c[idx(b)])),
                              k.negate(c[idx(f.hcompose(a, b))]));
    for (BoxId b : f.boxes_with_top(f.bottom(a)))
      out.sigma[{a, b}] = k.add(k.add(vact.act(v.inverse(f.left(b)), c[idx(a)]), c[idx(b)]),
                                k.negate(c[idx(f.vcompose(a, b))]));
  }
  return out;
}

CocyclePair trivial_cocycles(const DoubleGroupoid& f, const AbelianGroupBundle& k) {
  CocyclePair out;
  for (std::size_t i = 0; i < f.box_count(); ++i) {
    BoxId a = box_id(i);
    for (BoxId b : f.boxes_with_left(f.right(a))) out.tau[{a, b}] = k.neutral(f.bottom_left(a));
    for (BoxId b : f.boxes_with_top(f.bottom(a))) out.sigma[{a, b}] = k.neutral(f.bottom_left(b));
  }
  return out;
}

}  // namespace dgk
