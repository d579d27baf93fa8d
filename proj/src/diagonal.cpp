#include "dgk/diagonal.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include "dgk/core_kernel.hpp"
#include "dgk/corners.hpp"
#include "dgk/iso.hpp"

namespace dgk {

namespace {

std::string ar(ArrowId a) { return "#" + std::to_string(idx(a)); }

GroupoidMorphism identity_map(const FiniteGroupoid& g) {
  GroupoidMorphism m;
  for (std::size_t a = 0; a < g.arrow_count(); ++a) m.arrow_map.push_back(make_id<ArrowId>(a));
  return m;
}

}  // namespace

Report validate_diagram(const Diagram& dg) {
  Report rep("diagram");
  rep.merge(validate_groupoid(dg.d), "D: ");
  rep.merge(validate_groupoid(dg.h), "H: ");
  rep.merge(validate_groupoid(dg.v), "V: ");
  Check& base = rep.law("common base");
  base.expect(dg.d.object_count() == dg.h.object_count() && dg.d.object_count() == dg.v.object_count(),
              "bases differ");
  if (!rep.ok()) return rep;
  rep.merge(validate_morphism(dg.h, dg.d, dg.i), "i: ");
  rep.merge(validate_morphism(dg.v, dg.d, dg.j), "j: ");
  return rep;
}

bool is_factorization(const Diagram& dg) {
  std::vector<bool> hit(dg.d.arrow_count(), false);
  for (std::size_t gi = 0; gi < dg.v.arrow_count(); ++gi) {
    ArrowId g = make_id<ArrowId>(gi);
    for (ArrowId x : dg.h.arrows_from(dg.v.tgt(g))) hit[idx(dg.d.compose(dg.j(g), dg.i(x)))] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

Diagram pair_diagram(std::size_t n) {
  FiniteGroupoid p = pair_groupoid(n);
  return {p, p, p, identity_map(p), identity_map(p)};
}

Diagram s3_diagram() {
  using Perm = std::array<int, 3>;
  std::vector<Perm> perms;
  Perm p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const Perm& q) {
    return make_id<ArrowId>(static_cast<std::size_t>(std::find(perms.begin(), perms.end(), q) - perms.begin()));
  };
  // a then b
  auto mul = [&](const Perm& a, const Perm& b) { return Perm{b[a[0]], b[a[1]], b[a[2]]}; };
  std::vector<std::pair<ObjectId, ObjectId>> ends(perms.size(), {ObjectId{}, ObjectId{}});
  FiniteGroupoid s3 = make_groupoid(1, ends, [&](ArrowId a, ArrowId b) {
    return index(mul(perms[idx(a)], perms[idx(b)]));
  });
  const Perm rot{1, 2, 0}, swap{1, 0, 2};
  GroupoidMorphism j, i;
  Perm power{0, 1, 2};
  for (int k = 0; k < 3; ++k) {
    j.arrow_map.push_back(index(power));
    power = mul(power, rot);
  }
  i.arrow_map = {index(Perm{0, 1, 2}), index(swap)};
  return {s3, cyclic_group(2), cyclic_group(3), i, j};
}

DoubleGroupoid square_of_diagram(const Diagram& dg) {
  const auto& h = dg.h;
  const auto& v = dg.v;
  std::vector<BoxFrame> frames;
  for (std::size_t xi = 0; xi < h.arrow_count(); ++xi) {
    ArrowId x = make_id<ArrowId>(xi);
    for (ArrowId f : v.arrows_from(h.src(x)))
      for (ArrowId g : v.arrows_from(h.tgt(x))) {
        const ArrowId top_right = dg.d.compose(dg.i(x), dg.j(g));
        for (ArrowId y : h.hom(v.tgt(f), v.tgt(g)))
          if (dg.d.compose(dg.j(f), dg.i(y)) == top_right) frames.push_back({x, f, g, y});
      }
  }
  return slim_double_groupoid(v, h, std::move(frames));
}

Report core_of_square_check(const Diagram& dg) {
  Report rep("core of a square");
  const DoubleGroupoid s = square_of_diagram(dg);
  const CoreGroupoid e = core(s);
  const char* anchor = "core of a square";
  std::set<std::pair<ArrowId, ArrowId>> target;
  for (std::size_t gi = 0; gi < dg.v.arrow_count(); ++gi) {
    ArrowId g = make_id<ArrowId>(gi);
    for (ArrowId x : dg.h.arrows_from(dg.v.tgt(g)))
      if (dg.j(g) == dg.i(dg.h.inverse(x))) target.insert({g, x});
  }
  Check& into = rep.law("E -> (l(E), b(E)) lands in {(g, x) : j(g) = i(x^-1)}", anchor);
  Check& bij = rep.law("E -> (l(E), b(E)) is a bijection", anchor);
  Check& hom = rep.law("E -> (l(E), b(E)) preserves products", anchor);
  std::set<std::pair<ArrowId, ArrowId>> image;
  for (BoxId a : e.boxes) {
    std::pair<ArrowId, ArrowId> p{s.left(a), s.bottom(a)};
    into.expect_lazy(target.count(p) != 0, [&] { return describe(s, a); });
    bij.expect_lazy(image.insert(p).second, [&] { return describe(s, a) + " collides"; });
    for (ArrowId mi : e.groupoid.arrows_from(s.bottom_right(a))) {
      BoxId m = e.boxes[idx(mi)];
      BoxId em = core_compose(s, a, m);
      hom.expect_lazy(s.left(em) == dg.v.compose(s.left(m), s.left(a)) &&
                          s.bottom(em) == dg.h.compose(s.bottom(a), s.bottom(m)),
                      [&] { return describe(s, a) + "," + describe(s, m); });
    }
  }
  bij.expect(image == target, std::to_string(image.size()) + " images for " + std::to_string(target.size()) + " pairs");
  rep.law("core size").note = std::to_string(e.boxes.size()) + " = " + std::to_string(target.size());
  return rep;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // The smaller index stays the root.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

// Builds the pair model. Inconsistent products are recorded in `wd` when it
// is given, and thrown otherwise.
DiagonalModel build_model(const DoubleGroupoid& d, Check* wd) {
  if (!is_slim(d)) throw NotSlim("the diagonal groupoid needs a slim double groupoid");
  if (!has_filling(d)) throw NoFilling("the diagonal groupoid needs the filling condition");
  const auto& h = d.horizontal();
  const auto& v = d.vertical();
  DiagonalModel out;
  std::map<std::pair<ArrowId, ArrowId>, std::size_t> pair_index;
  for (std::size_t gi = 0; gi < v.arrow_count(); ++gi) {
    ArrowId g = make_id<ArrowId>(gi);
    for (ArrowId x : h.arrows_from(v.tgt(g))) {
      pair_index[{g, x}] = out.pairs.size();
      out.pairs.push_back({g, x});
    }
  }
  std::vector<BoxId> core_boxes;
  for (std::size_t i = 0; i < d.box_count(); ++i)
    if (is_core_box(d, box_id(i))) core_boxes.push_back(box_id(i));

  // (g, x) ~ (g l(E)^-1, b(E)^-1 x) for each core box E at bl(E) = tgt(g).
  UnionFind uf(out.pairs.size());
  for (std::size_t k = 0; k < out.pairs.size(); ++k) {
    const auto [g, x] = out.pairs[k];
    for (BoxId e : core_boxes) {
      if (d.bottom_left(e) != v.tgt(g)) continue;
      ArrowId g2 = v.compose(g, v.inverse(d.left(e)));
      ArrowId x2 = h.compose(h.inverse(d.bottom(e)), x);
      uf.unite(k, pair_index.at({g2, x2}));
    }
  }
  std::vector<std::size_t> class_of_root(out.pairs.size(), 0);
  std::vector<std::size_t> rep_of_class;
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t k = 0; k < out.pairs.size(); ++k) {
    if (uf.find(k) == k) {
      class_of_root[k] = rep_of_class.size();
      rep_of_class.push_back(k);
      members.emplace_back();
    }
    const std::size_t c = class_of_root[uf.find(k)];
    out.class_of_pair.push_back(make_id<ArrowId>(c));
    members[c].push_back(k);
  }
  const std::size_t n = rep_of_class.size();

  GroupoidTables t;
  t.objects = d.base_size();
  std::vector<std::vector<std::size_t>> classes_from(d.base_size());
  for (std::size_t c = 0; c < n; ++c) {
    const auto [g, x] = out.pairs[rep_of_class[c]];
    t.src.push_back(v.src(g));
    t.tgt.push_back(h.tgt(x));
    classes_from[idx(v.src(g))].push_back(c);
  }
  auto class_of = [&](ArrowId g, ArrowId x) { return out.class_of_pair[pair_index.at({g, x})]; };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b : classes_from[idx(t.tgt[a])]) {
      std::optional<ArrowId> result;
      for (std::size_t ka : members[a])
        for (std::size_t kb : members[b]) {
          const auto [g1, x1] = out.pairs[ka];
          const auto [g2, x2] = out.pairs[kb];
          for (BoxId f : ur_set(d, x1, g2)) {
            ArrowId c = class_of(v.compose(g1, d.left(f)), h.compose(d.bottom(f), x2));
            ++out.product_checks;
            if (!result) result = c;
            const bool ok = *result == c;
            auto what = [&] {
              return "classes " + std::to_string(a) + "," + std::to_string(b) + " via (" + ar(g1) + "," +
                     ar(x1) + ")(" + ar(g2) + "," + ar(x2) + ") and " + describe(d, f);
            };
            if (wd) {
              wd->expect_lazy(ok, what);
            } else if (!ok) {
              throw InconsistentQuotient("class product depends on choices: " + what());
            }
          }
        }
      t.compose.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                           static_cast<std::uint32_t>(idx(*result))});
    }
  }
  for (std::size_t p = 0; p < d.base_size(); ++p) {
    ObjectId o = make_id<ObjectId>(p);
    t.identity.push_back(class_of(v.identity(o), h.identity(o)));
  }
  PartialTable<ArrowId, ArrowId, ArrowId> prod;
  for (const auto& [a, b, c] : t.compose) prod.set(make_id<ArrowId>(a), make_id<ArrowId>(b), make_id<ArrowId>(c));
  for (std::size_t a = 0; a < n; ++a) {
    std::optional<ArrowId> inv;
    for (std::size_t b : classes_from[idx(t.tgt[a])])
      if (t.tgt[b] == t.src[a] && prod.find(make_id<ArrowId>(a), make_id<ArrowId>(b)) == t.identity[idx(t.src[a])])
        inv = make_id<ArrowId>(b);
    if (!inv) throw InconsistentQuotient("class " + std::to_string(a) + " has no inverse");
    t.inverse.push_back(*inv);
  }

  out.diagram.d = FiniteGroupoid(std::move(t));
  out.diagram.h = h;
  out.diagram.v = v;
  for (std::size_t xi = 0; xi < h.arrow_count(); ++xi) {
    ArrowId x = make_id<ArrowId>(xi);
    out.diagram.i.arrow_map.push_back(class_of(v.identity(h.src(x)), x));
  }
  for (std::size_t gi = 0; gi < v.arrow_count(); ++gi) {
    ArrowId g = make_id<ArrowId>(gi);
    out.diagram.j.arrow_map.push_back(class_of(g, h.identity(v.tgt(g))));
  }
  return out;
}

}  // namespace

DiagonalModel diagonal_model(const DoubleGroupoid& d) { return build_model(d, nullptr); }

Diagram diagonal(const DoubleGroupoid& d) { return diagonal_model(d).diagram; }

Report diagonal_report(const DoubleGroupoid& d) {
  Report rep("diagonal groupoid");
  Check& wd = rep.law("class product independent of representatives and filling boxes", "diagonal groupoid");
  const DiagonalModel m = build_model(d, &wd);
  if (!rep.ok()) return rep;
  const Diagram& dg = m.diagram;
  rep.merge(validate_diagram(dg), "diagonal: ");
  if (!rep.ok()) return rep;
  Check& fact = rep.law("every arrow is j(g) i(x)", "diagonal groupoid");
  fact.expect(is_factorization(dg), "not a factorization");
  Check& rel = rep.law("i(t) j(r) = j(l) i(b) for every box", "diagonal groupoid");
  for (std::size_t k = 0; k < d.box_count(); ++k) {
    BoxId a = box_id(k);
    rel.expect_lazy(dg.d.compose(dg.i(d.top(a)), dg.j(d.right(a))) == dg.d.compose(dg.j(d.left(a)), dg.i(d.bottom(a))),
                    [&] { return describe(d, a); });
  }
  rep.law("size").note = std::to_string(dg.d.arrow_count()) + " arrows from " + std::to_string(m.pairs.size()) +
                         " pairs; " + std::to_string(m.product_checks) + " product evaluations";
  return rep;
}

ArrowId evaluate(const Diagram& dg, const ReducedWord& w) {
  ArrowId out = dg.d.identity(w.base);
  for (const Letter& u : w.letters) out = dg.d.compose(out, u.side == Side::H ? dg.i(u.arrow) : dg.j(u.arrow));
  return out;
}

Report roundtrip_slim(const DoubleGroupoid& d) {
  Report rep("slim round trip");
  const Diagram dg = diagonal(d);
  const DoubleGroupoid s = square_of_diagram(dg);
  Check& sizes = rep.law("square of the diagonal has the boxes of D", "slim round trip");
  sizes.expect(s.box_count() == d.box_count(),
               std::to_string(s.box_count()) + " boxes against " + std::to_string(d.box_count()));
  if (!rep.ok()) return rep;
  FrameIndex index(s);
  DoubleIso m{identity_map(d.horizontal()), identity_map(d.vertical()), {}};
  for (std::size_t k = 0; k < d.box_count(); ++k) {
    auto b = index.unique(d.frame(box_id(k)));
    if (!sizes.expect_lazy(b.has_value(), [&] { return describe(d, box_id(k)) + " missing from the square"; }))
      return rep;
    m.boxes.push_back(*b);
  }
  rep.merge(check_double_iso(d, s, m), "frame map: ");
  return rep;
}

std::optional<GroupoidMorphism> diagram_iso(const Diagram& from, const Diagram& to) {
  if (from.d.arrow_count() != to.d.arrow_count() || !(from.h == to.h) || !(from.v == to.v)) return std::nullopt;
  std::vector<std::optional<ArrowId>> f(from.d.arrow_count());
  for (std::size_t gi = 0; gi < from.v.arrow_count(); ++gi) {
    ArrowId g = make_id<ArrowId>(gi);
    for (ArrowId x : from.h.arrows_from(from.v.tgt(g))) {
      ArrowId z = from.d.compose(from.j(g), from.i(x));
      ArrowId w = to.d.compose(to.j(g), to.i(x));
      if (f[idx(z)] && *f[idx(z)] != w) return std::nullopt;
      f[idx(z)] = w;
    }
  }
  GroupoidMorphism m;
  for (const auto& a : f) {
    if (!a) return std::nullopt;
    m.arrow_map.push_back(*a);
  }
  if (!validate_morphism(from.d, to.d, m).ok() || !is_injective(m)) return std::nullopt;
  return m;
}

Report roundtrip_diagram(const Diagram& dg) {
  if (!is_factorization(dg)) throw NotFactorization("the diagram is not a factorization");
  Report rep("diagram round trip");
  const Diagram back = diagonal(square_of_diagram(dg));
  Check& iso = rep.law("diagonal of the square is isomorphic to the diagram", "diagram round trip");
  auto f = diagram_iso(back, dg);
  iso.expect(f.has_value(), "no isomorphism f with f i' = i and f j' = j");
  if (!f) return rep;
  Check& tri = rep.law("f i' = i and f j' = j", "diagram round trip");
  for (std::size_t x = 0; x < dg.h.arrow_count(); ++x)
    tri.expect_lazy((*f)(back.i(make_id<ArrowId>(x))) == dg.i(make_id<ArrowId>(x)), [&] { return "H #" + std::to_string(x); });
  for (std::size_t g = 0; g < dg.v.arrow_count(); ++g)
    tri.expect_lazy((*f)(back.j(make_id<ArrowId>(g))) == dg.j(make_id<ArrowId>(g)), [&] { return "V #" + std::to_string(g); });
  return rep;
}

FusionVerdict is_fusion(const DoubleGroupoid& d) {
  if (!has_filling(d)) throw NoFilling("fusion is defined under the filling condition");
  FusionVerdict out;
  out.detail = Report("fusion");
  out.v_connected = is_connected(d.vertical());
  const CoreGroupoid e = core(d);
  std::set<ArrowId> bottoms;
  out.bottom_injective_on_core = true;
  for (BoxId a : e.boxes) out.bottom_injective_on_core &= bottoms.insert(d.bottom(a)).second;
  out.fusion = out.v_connected && out.bottom_injective_on_core;

  const char* anchor = "fusion";
  const bool slim = is_slim(d);
  out.detail.law("fusion implies slim", anchor).expect(!out.fusion || slim, "fusion but not slim");
  if (slim) {
    const Diagram dg = diagonal(d);
    const bool j_inj = is_injective(dg.j);
    out.detail.law("fusion iff V connected and j injective", anchor)
        .expect(out.fusion == (out.v_connected && j_inj),
                std::string("fusion=") + (out.fusion ? "1" : "0") + " connected=" + (out.v_connected ? "1" : "0") +
                    " j injective=" + (j_inj ? "1" : "0"));
    if (out.fusion)
      out.detail.law("fusion implies a connected diagonal", anchor).expect(is_connected(dg.d), "diagonal not connected");
  }
  Check& verdict = out.detail.law("verdict");
  verdict.note = std::string(out.fusion ? "fusion" : "not fusion") + " (V connected: " +
                 (out.v_connected ? "yes" : "no") + ", bottom injective on core: " +
                 (out.bottom_injective_on_core ? "yes" : "no") + ")";
  return out;
}

Report vacancy_bridge(const DoubleGroupoid& d) {
  Report rep("vacancy and unique factorization");
  const DiagonalModel m = diagonal_model(d);
  std::vector<std::size_t> per_class(m.diagram.d.arrow_count(), 0);
  for (ArrowId c : m.class_of_pair) ++per_class[idx(c)];
  const bool unique = std::all_of(per_class.begin(), per_class.end(), [](std::size_t n) { return n == 1; });
  const bool i_inj = is_injective(m.diagram.i);
  const bool j_inj = is_injective(m.diagram.j);
  const bool vacant = is_vacant(d);
  rep.law("vacant iff i, j injective and decompositions unique", "vacancy")
      .expect(vacant == (i_inj && j_inj && unique),
              std::string("vacant=") + (vacant ? "1" : "0") + " i=" + (i_inj ? "1" : "0") + " j=" + (j_inj ? "1" : "0") +
                  " unique=" + (unique ? "1" : "0"));
  return rep;
}

OracleVerdict j_closure_oracle(const DoubleGroupoid& d, const ReducedWord& w, std::size_t max_factors) {
  if (!is_slim(d)) throw NotSlim("the oracle needs a slim double groupoid");
  if (!has_filling(d)) throw NoFilling("the oracle needs the filling condition");
  const FreeProduct fp(d.horizontal(), d.vertical());
  const ObjectId base = w.base;
  const ReducedWord one = fp.point(base);
  if (w == one) return OracleVerdict::Member;
  if (fp.target(w) != base) return OracleVerdict::BoundExceeded;

  std::set<ReducedWord> gens;
  auto add_conjugates = [&](const ReducedWord& r) {
    if (r.base == base && r != one) gens.insert(r);
    for (Side s : {Side::H, Side::V})
      for (ArrowId u : fp.groupoid(s).arrows_into(r.base)) {
        if (fp.groupoid(s).src(u) != base || fp.groupoid(s).is_identity(u)) continue;
        ReducedWord c = fp.concat(fp.concat(fp.letter({s, u}), r), fp.letter(fp.inverse(Letter{s, u})));
        if (c != one) gens.insert(c);
      }
  };
  for (std::size_t k = 0; k < d.box_count(); ++k) {
    const ReducedWord bw = box_word(fp, d, box_id(k));
    add_conjugates(bw);
    add_conjugates(fp.inverse(bw));
  }

  std::set<ReducedWord> seen{one};
  std::vector<ReducedWord> frontier{one};
  for (std::size_t level = 1; level <= max_factors; ++level) {
    std::vector<ReducedWord> next;
    for (const auto& f : frontier)
      for (const auto& g : gens) {
        ReducedWord c = fp.concat(f, g);
        if (c == w) return OracleVerdict::Member;
        if (seen.insert(c).second) next.push_back(std::move(c));
      }
    frontier = std::move(next);
  }
  return OracleVerdict::BoundExceeded;
}

}  // namespace dgk
