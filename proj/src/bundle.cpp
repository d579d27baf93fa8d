#include "dgk/bundle.hpp"

#include <algorithm>
#include <set>

namespace dgk {

namespace {

std::string el(ElementId x) { return "e" + std::to_string(idx(x)); }
std::string ar(ArrowId a) { return "#" + std::to_string(idx(a)); }

}  // namespace

FiberBundle::FiberBundle(std::size_t base, std::vector<ObjectId> projection)
    : base_(base), projection_(std::move(projection)), fibers_(base) {
  for (std::size_t x = 0; x < projection_.size(); ++x) {
    if (idx(projection_[x]) >= base_)
      throw FormatError("fiber[" + std::to_string(x) + "]", "object out of range");
    fibers_[idx(projection_[x])].push_back(make_id<ElementId>(x));
  }
}

AbelianGroupBundle::AbelianGroupBundle(BundleTables t) : fibers_(t.base, t.fiber_of) {
  const std::size_t n = t.fiber_of.size();
  if (t.neutral.size() != t.base) throw FormatError("neutral", "expected one entry per object");
  if (t.negate.size() != n) throw FormatError("negate", "expected one entry per element");
  for (std::size_t p = 0; p < t.base; ++p)
    if (idx(t.neutral[p]) >= n) throw FormatError("neutral", "element out of range");
  for (std::size_t x = 0; x < n; ++x)
    if (idx(t.negate[x]) >= n) throw FormatError("negate", "element out of range");
  for (std::size_t k = 0; k < t.op.size(); ++k) {
    const auto [a, b, c] = t.op[k];
    const std::string ctx = "op[" + std::to_string(k) + "]";
    if (a >= n || b >= n || c >= n) throw FormatError(ctx, "element out of range");
    if (t.fiber_of[a] != t.fiber_of[b]) throw FormatError(ctx, "operands lie in different fibers");
    if (op_.contains(make_id<ElementId>(a), make_id<ElementId>(b)))
      throw FormatError(ctx, "duplicate entry");
    op_.set(make_id<ElementId>(a), make_id<ElementId>(b), make_id<ElementId>(c));
  }
  neutral_ = std::move(t.neutral);
  negate_ = std::move(t.negate);
}

ElementId AbelianGroupBundle::add(ElementId a, ElementId b) const {
  if (project(a) != project(b))
    throw NotComposable("elements " + el(a) + " and " + el(b) + " lie in different fibers");
  auto r = op_.find(a, b);
  if (!r) throw IncompleteTable("no entry for " + el(a) + " + " + el(b));
  return *r;
}

BundleTables AbelianGroupBundle::tables() const {
  BundleTables t;
  t.base = fibers_.base_size();
  t.fiber_of = fibers_.projection();
  t.op = op_.sorted_entries();
  t.neutral = neutral_;
  t.negate = negate_;
  return t;
}

bool AbelianGroupBundle::operator==(const AbelianGroupBundle& o) const {
  return fibers_ == o.fibers_ && op_ == o.op_ && neutral_ == o.neutral_ && negate_ == o.negate_;
}

AbelianGroupBundle constant_cyclic_bundle(std::size_t base, std::size_t n) {
  BundleTables t;
  t.base = base;
  for (std::size_t p = 0; p < base; ++p) {
    t.neutral.push_back(make_id<ElementId>(p * n));
    for (std::size_t a = 0; a < n; ++a) {
      t.fiber_of.push_back(make_id<ObjectId>(p));
      t.negate.push_back(make_id<ElementId>(p * n + (n - a) % n));
      for (std::size_t b = 0; b < n; ++b)
        t.op.push_back({static_cast<std::uint32_t>(p * n + a), static_cast<std::uint32_t>(p * n + b),
                        static_cast<std::uint32_t>(p * n + (a + b) % n)});
    }
  }
  return AbelianGroupBundle(std::move(t));
}

AbelianGroupBundle trivial_bundle(std::size_t base) { return constant_cyclic_bundle(base, 1); }

Report validate_bundle(const AbelianGroupBundle& k) {
  Report rep("abelian group bundle axioms");
  Check& closed = rep.law("operation defined and closed in each fiber");
  Check& neutral = rep.law("neutral element");
  Check& negate = rep.law("negation");
  Check& comm = rep.law("commutativity");
  Check& assoc = rep.law("associativity");
  for (std::size_t p = 0; p < k.base_size(); ++p) {
    ObjectId o = make_id<ObjectId>(p);
    auto fiber = k.fiber(o);
    ElementId zero = k.neutral(o);
    neutral.expect(k.project(zero) == o, "neutral at " + std::to_string(p) + " lies outside its fiber");
    for (ElementId a : fiber)
      for (ElementId b : fiber) {
        auto c = k.try_add(a, b);
        closed.expect_lazy(c && k.project(*c) == o, [&] { return el(a) + "+" + el(b); });
      }
    if (!closed.passed) continue;
    for (ElementId a : fiber) {
      neutral.expect_lazy(k.add(zero, a) == a && k.add(a, zero) == a, [&] { return el(a); });
      ElementId m = k.negate(a);
      negate.expect_lazy(k.project(m) == o && k.try_add(a, m) == zero,
                         [&] { return el(a) + " has no valid negation"; });
      for (ElementId b : fiber) {
        comm.expect_lazy(k.add(a, b) == k.add(b, a), [&] { return el(a) + "," + el(b); });
        for (ElementId c : fiber)
          assoc.expect_lazy(k.add(k.add(a, b), c) == k.add(a, k.add(b, c)),
                            [&] { return "(" + el(a) + "," + el(b) + "," + el(c) + ")"; });
      }
    }
  }
  return rep;
}

BundleAction::BundleAction(FiniteGroupoid actor, FiberBundle space,
                           const std::vector<ActEntry>& entries)
    : actor_(std::move(actor)), space_(std::move(space)) {
  if (actor_.object_count() != space_.base_size())
    throw BaseMismatch("actor and space have different bases");
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto& e = entries[k];
    const std::string ctx = "action[" + std::to_string(k) + "]";
    if (idx(e.arrow) >= actor_.arrow_count()) throw FormatError(ctx, "arrow out of range");
    if (idx(e.element) >= space_.element_count() || idx(e.result) >= space_.element_count())
      throw FormatError(ctx, "element out of range");
    if (!acts(e.arrow, e.element)) throw FormatError(ctx, "arrow target differs from fiber");
    if (table_.contains(e.arrow, e.element)) throw FormatError(ctx, "duplicate entry");
    table_.set(e.arrow, e.element, e.result);
  }
}

ElementId BundleAction::act(ArrowId g, ElementId x) const {
  if (!acts(g, x)) throw NotComposable("arrow " + ar(g) + " cannot act on " + el(x));
  auto r = table_.find(g, x);
  if (!r) throw IncompleteTable("no action entry for " + ar(g) + " |> " + el(x));
  return *r;
}

std::vector<ActEntry> BundleAction::entries() const {
  std::vector<ActEntry> out;
  for (const auto& [g, x, y] : table_.sorted_entries())
    out.push_back({make_id<ArrowId>(g), make_id<ElementId>(x), make_id<ElementId>(y)});
  return out;
}

BundleAction aligned_action(const FiniteGroupoid& actor, const AbelianGroupBundle& k) {
  return tabulate_action(actor, k.fibers(), [&](ArrowId g, ElementId x) {
    auto from = k.fiber(actor.tgt(g));
    auto to = k.fiber(actor.src(g));
    if (from.size() != to.size()) throw FormatError("action", "fiber sizes differ along " + ar(g));
    auto pos = std::find(from.begin(), from.end(), x) - from.begin();
    return to[static_cast<std::size_t>(pos)];
  });
}

Report validate_action(const BundleAction& a) {
  Report rep("groupoid action axioms");
  const auto& g = a.actor();
  const auto& e = a.space();
  Check& defined = rep.law("action defined on every acting pair");
  Check& lands = rep.law("p(g|>x) = src(g)");
  Check& unit = rep.law("identity acts trivially");
  Check& comp = rep.law("g|>(h|>x) = (gh)|>x");
  for (std::size_t i = 0; i < g.arrow_count(); ++i) {
    ArrowId x = make_id<ArrowId>(i);
    for (ElementId v : e.fiber(g.tgt(x))) {
      auto r = a.try_act(x, v);
      if (!defined.expect_lazy(r.has_value(), [&] { return ar(x) + "|>" + el(v); })) continue;
      lands.expect_lazy(e.project(*r) == g.src(x), [&] { return ar(x) + "|>" + el(v); });
    }
  }
  if (!defined.passed) return rep;
  for (std::size_t v = 0; v < e.element_count(); ++v) {
    ElementId x = make_id<ElementId>(v);
    unit.expect_lazy(a.act(g.identity(e.project(x)), x) == x, [&] { return el(x); });
  }
  if (!lands.passed) return rep;
  for (std::size_t i = 0; i < g.arrow_count(); ++i) {
    ArrowId x = make_id<ArrowId>(i);
    for (ArrowId y : g.arrows_from(g.tgt(x)))
      for (ElementId v : e.fiber(g.tgt(y)))
        comp.expect_lazy(a.act(x, a.act(y, v)) == a.act(g.compose(x, y), v),
                         [&] { return ar(x) + "," + ar(y) + "," + el(v); });
  }
  return rep;
}

Report validate_action_by_automorphisms(const BundleAction& a, const AbelianGroupBundle& k) {
  Report rep = validate_action(a);
  Check& iso = rep.law("arrows act by fiber isomorphisms");
  if (!rep.ok()) return rep;
  const auto& g = a.actor();
  for (std::size_t i = 0; i < g.arrow_count(); ++i) {
    ArrowId x = make_id<ArrowId>(i);
    auto fiber = k.fiber(g.tgt(x));
    std::set<ElementId> image;
    for (ElementId u : fiber) {
      image.insert(a.act(x, u));
      for (ElementId v : fiber)
        iso.expect_lazy(a.act(x, k.add(u, v)) == k.add(a.act(x, u), a.act(x, v)),
                        [&] { return ar(x) + " on " + el(u) + "+" + el(v); });
    }
    iso.expect_lazy(image.size() == fiber.size() && image.size() == k.fiber(g.src(x)).size(),
                    [&] { return ar(x) + " is not bijective"; });
  }
  return rep;
}

std::vector<ElementId> orbit(const BundleAction& a, ElementId x) {
  std::set<ElementId> out;
  for (ArrowId g : a.actor().arrows_into(a.space().project(x))) out.insert(a.act(g, x));
  return {out.begin(), out.end()};
}

Subgroup isotropy(const BundleAction& a, ElementId x) {
  const ObjectId p = a.space().project(x);
  Subgroup out;
  for (ArrowId g : a.actor().vertex_group(p))
    if (a.act(g, x) == x) out.push_back(g);
  std::sort(out.begin(), out.end());
  if (auto v = subgroup_violation(a.actor(), p, out)) throw NotASubgroup(*v);
  return out;
}

Report orbit_count_identity(const BundleAction& a, ElementId x) {
  Report rep("orbit counting");
  const ObjectId p = a.space().project(x);
  const std::size_t orbit_size = orbit(a, x).size();
  const std::size_t stab = isotropy(a, x).size();
  const std::size_t comp = component_of(a.actor(), p).size();
  const std::size_t group = a.actor().vertex_group(p).size();
  Check& c = rep.law("|orbit| * |isotropy| = |component| * |vertex group|",
                     "orbit-stabilizer for groupoid actions");
  c.expect(orbit_size * stab == comp * group,
           el(x) + ": " + std::to_string(orbit_size) + "*" + std::to_string(stab) +
               " != " + std::to_string(comp) + "*" + std::to_string(group));
  c.note = std::to_string(orbit_size) + " = " + std::to_string(comp) + "*" +
           std::to_string(group) + "/" + std::to_string(stab);
  return rep;
}

}  // namespace dgk
