#include "dgk/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dgk {

namespace {

std::string arrow_str(ArrowId a) { return "#" + std::to_string(idx(a)); }

}  // namespace

FiniteGroupoid::FiniteGroupoid(GroupoidTables t) : objects_(t.objects) {
  const std::size_t n = t.src.size();
  if (t.tgt.size() != n) throw FormatError("arrows", "src and tgt lengths differ");
  for (std::size_t a = 0; a < n; ++a) {
    if (idx(t.src[a]) >= objects_ || idx(t.tgt[a]) >= objects_)
      throw FormatError("arrows[" + std::to_string(a) + "]", "endpoint out of range");
  }
  if (t.identity.size() != objects_)
    throw FormatError("identity", "expected one entry per object");
  for (std::size_t p = 0; p < objects_; ++p)
    if (idx(t.identity[p]) >= n)
      throw FormatError("identity[" + std::to_string(p) + "]", "arrow out of range");
  if (t.inverse.size() != n) throw FormatError("inverse", "expected one entry per arrow");
  for (std::size_t a = 0; a < n; ++a)
    if (idx(t.inverse[a]) >= n)
      throw FormatError("inverse[" + std::to_string(a) + "]", "arrow out of range");

  src_ = std::move(t.src);
  tgt_ = std::move(t.tgt);
  identity_ = std::move(t.identity);
  inverse_ = std::move(t.inverse);

  for (std::size_t k = 0; k < t.compose.size(); ++k) {
    const auto [a, b, c] = t.compose[k];
    const std::string ctx = "compose[" + std::to_string(k) + "]";
    if (a >= n || b >= n || c >= n) throw FormatError(ctx, "arrow out of range");
    if (tgt_[a] != src_[b])
      throw FormatError(ctx, "arrows " + std::to_string(a) + " and " + std::to_string(b) +
                                 " are not composable");
    if (table_.contains(make_id<ArrowId>(a), make_id<ArrowId>(b)))
      throw FormatError(ctx, "duplicate entry");
    table_.set(make_id<ArrowId>(a), make_id<ArrowId>(b), make_id<ArrowId>(c));
  }

  from_.assign(objects_, {});
  into_.assign(objects_, {});
  for (std::size_t a = 0; a < n; ++a) {
    from_[idx(src_[a])].push_back(make_id<ArrowId>(a));
    into_[idx(tgt_[a])].push_back(make_id<ArrowId>(a));
  }
}

ArrowId FiniteGroupoid::compose(ArrowId g, ArrowId h) const {
  if (!composable(g, h))
    throw NotComposable("arrows " + arrow_str(g) + " and " + arrow_str(h) +
                        " are not composable");
  auto r = table_.find(g, h);
  if (!r) throw IncompleteTable("no entry for " + arrow_str(g) + " * " + arrow_str(h));
  return *r;
}

std::vector<ArrowId> FiniteGroupoid::hom(ObjectId p, ObjectId q) const {
  std::vector<ArrowId> out;
  for (ArrowId a : from_[idx(p)])
    if (tgt(a) == q) out.push_back(a);
  return out;
}

GroupoidTables FiniteGroupoid::tables() const {
  GroupoidTables t;
  t.objects = objects_;
  t.src = src_;
  t.tgt = tgt_;
  t.identity = identity_;
  t.inverse = inverse_;
  t.compose = table_.sorted_entries();
  return t;
}

bool FiniteGroupoid::operator==(const FiniteGroupoid& other) const {
  return objects_ == other.objects_ && src_ == other.src_ && tgt_ == other.tgt_ &&
         identity_ == other.identity_ && inverse_ == other.inverse_ &&
         table_ == other.table_;
}

FiniteGroupoid make_groupoid(std::size_t objects,
                             const std::vector<std::pair<ObjectId, ObjectId>>& endpoints,
                             const std::function<ArrowId(ArrowId, ArrowId)>& compose) {
  GroupoidTables t;
  t.objects = objects;
  const std::size_t n = endpoints.size();
  for (const auto& [s, e] : endpoints) {
    t.src.push_back(s);
    t.tgt.push_back(e);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (t.tgt[a] == t.src[b]) {
        ArrowId c = compose(make_id<ArrowId>(a), make_id<ArrowId>(b));
        t.compose.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                             static_cast<std::uint32_t>(idx(c))});
      }
  auto lookup = [&](std::size_t a, std::size_t b) {
    return idx(compose(make_id<ArrowId>(a), make_id<ArrowId>(b)));
  };
  t.identity.assign(objects, ArrowId{0});
  std::vector<bool> found(objects, false);
  for (std::size_t a = 0; a < n; ++a)
    if (t.src[a] == t.tgt[a] && lookup(a, a) == a) {
      t.identity[idx(t.src[a])] = make_id<ArrowId>(a);
      found[idx(t.src[a])] = true;
    }
  for (std::size_t p = 0; p < objects; ++p)
    if (!found[p]) throw FormatError("identity", "no identity at object " + std::to_string(p));
  t.inverse.assign(n, ArrowId{0});
  for (std::size_t a = 0; a < n; ++a) {
    bool ok = false;
    for (std::size_t b = 0; b < n && !ok; ++b)
      if (t.tgt[a] == t.src[b] && t.src[a] == t.tgt[b] &&
          make_id<ArrowId>(lookup(a, b)) == t.identity[idx(t.src[a])]) {
        t.inverse[a] = make_id<ArrowId>(b);
        ok = true;
      }
    if (!ok) throw FormatError("inverse", "arrow " + std::to_string(a) + " has no inverse");
  }
  return FiniteGroupoid(std::move(t));
}

FiniteGroupoid pair_groupoid(std::size_t n) {
  std::vector<std::pair<ObjectId, ObjectId>> ends;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) ends.emplace_back(make_id<ObjectId>(p), make_id<ObjectId>(q));
  return make_groupoid(n, ends, [n](ArrowId a, ArrowId b) {
    return make_id<ArrowId>((idx(a) / n) * n + idx(b) % n);
  });
}

FiniteGroupoid discrete_groupoid(std::size_t n) {
  std::vector<std::pair<ObjectId, ObjectId>> ends;
  for (std::size_t p = 0; p < n; ++p) ends.emplace_back(make_id<ObjectId>(p), make_id<ObjectId>(p));
  return make_groupoid(n, ends, [](ArrowId a, ArrowId) { return a; });
}

FiniteGroupoid cyclic_group(std::size_t n) {
  std::vector<std::pair<ObjectId, ObjectId>> ends(n, {ObjectId{0}, ObjectId{0}});
  return make_groupoid(1, ends, [n](ArrowId a, ArrowId b) {
    return make_id<ArrowId>((idx(a) + idx(b)) % n);
  });
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const std::size_t na = a.arrow_count();
  const std::size_t oa = a.object_count();
  std::vector<std::pair<ObjectId, ObjectId>> ends;
  for (std::size_t x = 0; x < na; ++x)
    ends.emplace_back(a.src(make_id<ArrowId>(x)), a.tgt(make_id<ArrowId>(x)));
  for (std::size_t x = 0; x < b.arrow_count(); ++x)
    ends.emplace_back(make_id<ObjectId>(oa + idx(b.src(make_id<ArrowId>(x)))),
                      make_id<ObjectId>(oa + idx(b.tgt(make_id<ArrowId>(x)))));
  return make_groupoid(oa + b.object_count(), ends, [&](ArrowId x, ArrowId y) {
    if (idx(x) < na) return a.compose(x, y);
    return make_id<ArrowId>(
        na + idx(b.compose(make_id<ArrowId>(idx(x) - na), make_id<ArrowId>(idx(y) - na))));
  });
}

std::vector<std::vector<ObjectId>> components(const FiniteGroupoid& g) {
  const std::size_t n = g.object_count();
  std::vector<std::size_t> label(n, n);
  std::vector<std::vector<ObjectId>> out;
  for (std::size_t p = 0; p < n; ++p) {
    if (label[p] != n) continue;
    const std::size_t id = out.size();
    out.emplace_back();
    std::vector<std::size_t> stack{p};
    label[p] = id;
    while (!stack.empty()) {
      std::size_t q = stack.back();
      stack.pop_back();
      out[id].push_back(make_id<ObjectId>(q));
      for (ArrowId a : g.arrows_from(make_id<ObjectId>(q))) {
        std::size_t r = idx(g.tgt(a));
        if (label[r] == n) {
          label[r] = id;
          stack.push_back(r);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

std::vector<ObjectId> component_of(const FiniteGroupoid& g, ObjectId q) {
  for (auto& block : components(g))
    if (std::binary_search(block.begin(), block.end(), q)) return block;
  return {};
}

bool is_connected(const FiniteGroupoid& g) { return components(g).size() <= 1; }

std::optional<std::string> subgroup_violation(const FiniteGroupoid& g, ObjectId q,
                                              const Subgroup& k) {
  for (ArrowId a : k) {
    if (idx(a) >= g.arrow_count()) return "arrow out of range";
    if (g.src(a) != q || g.tgt(a) != q) return "arrow " + arrow_str(a) + " is not a loop at q";
  }
  auto has = [&](ArrowId a) { return std::find(k.begin(), k.end(), a) != k.end(); };
  if (!has(g.identity(q))) return "identity missing";
  for (ArrowId a : k) {
    if (!has(g.inverse(a))) return "not closed under inverse at " + arrow_str(a);
    for (ArrowId b : k)
      if (!has(g.compose(a, b)))
        return "not closed under composition at " + arrow_str(a) + "," + arrow_str(b);
  }
  return std::nullopt;
}

std::size_t coset_count(const FiniteGroupoid& g, ObjectId q, const Subgroup& k) {
  if (auto v = subgroup_violation(g, q, k)) throw NotASubgroup(*v);
  auto into = g.arrows_into(q);
  std::vector<ArrowId> arrows(into.begin(), into.end());
  const std::size_t n = arrows.size();
  // Union-find over arrows into q; g ~ h iff g^-1 h lies in K.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      if (g.src(arrows[x]) != g.src(arrows[y])) continue;
      ArrowId quotient = g.compose(g.inverse(arrows[x]), arrows[y]);
      if (std::binary_search(k.begin(), k.end(), quotient)) parent[find(x)] = find(y);
    }
  std::size_t classes = 0;
  for (std::size_t x = 0; x < n; ++x)
    if (find(x) == x) ++classes;
  const std::size_t expected = component_of(g, q).size() * g.vertex_group(q).size() / k.size();
  if (classes != expected)
    throw SolveFailed("coset count " + std::to_string(classes) + " differs from " +
                      std::to_string(expected));
  return classes;
}

Report validate_groupoid(const FiniteGroupoid& g) {
  Report rep("groupoid axioms");
  const std::size_t n = g.arrow_count();
  auto arrow = [](std::size_t a) { return make_id<ArrowId>(a); };

  Check& domain = rep.law("composition defined on composable pairs");
  for (std::size_t a = 0; a < n; ++a)
    for (ArrowId b : g.arrows_from(g.tgt(arrow(a)))) {
      domain.expect_lazy(g.try_compose(arrow(a), b).has_value(), [&] {
        return "missing " + arrow_str(arrow(a)) + "*" + arrow_str(b);
      });
    }

  Check& ends = rep.law("composition endpoints");
  for (std::size_t a = 0; a < n; ++a)
    for (ArrowId b : g.arrows_from(g.tgt(arrow(a)))) {
      auto c = g.try_compose(arrow(a), b);
      if (!c) continue;
      ends.expect_lazy(g.src(*c) == g.src(arrow(a)) && g.tgt(*c) == g.tgt(b), [&] {
        return arrow_str(arrow(a)) + "*" + arrow_str(b) + "=" + arrow_str(*c);
      });
    }

  Check& ident = rep.law("identities");
  for (std::size_t p = 0; p < g.object_count(); ++p) {
    ArrowId e = g.identity(make_id<ObjectId>(p));
    ident.expect_lazy(g.src(e) == make_id<ObjectId>(p) && g.tgt(e) == make_id<ObjectId>(p),
                      [&] { return "identity at " + std::to_string(p) + " is not a loop"; });
  }
  for (std::size_t a = 0; a < n; ++a) {
    auto l = g.try_compose(g.identity(g.src(arrow(a))), arrow(a));
    auto r = g.try_compose(arrow(a), g.identity(g.tgt(arrow(a))));
    ident.expect_lazy(l == arrow(a) && r == arrow(a),
                      [&] { return "identity not neutral for " + arrow_str(arrow(a)); });
  }

  Check& inv = rep.law("inverses");
  for (std::size_t a = 0; a < n; ++a) {
    ArrowId b = g.inverse(arrow(a));
    auto l = g.try_compose(b, arrow(a));
    auto r = g.try_compose(arrow(a), b);
    inv.expect_lazy(l == g.identity(g.tgt(arrow(a))) && r == g.identity(g.src(arrow(a))),
                    [&] { return "inverse law fails at " + arrow_str(arrow(a)); });
  }

  Check& assoc = rep.law("associativity");
  for (std::size_t a = 0; a < n; ++a)
    for (ArrowId b : g.arrows_from(g.tgt(arrow(a)))) {
      auto ab = g.try_compose(arrow(a), b);
      for (ArrowId c : g.arrows_from(g.tgt(b))) {
        auto bc = g.try_compose(b, c);
        std::optional<ArrowId> left, right;
        if (ab && g.composable(*ab, c)) left = g.try_compose(*ab, c);
        if (bc && g.composable(arrow(a), *bc)) right = g.try_compose(arrow(a), *bc);
        assoc.expect_lazy(left && right && *left == *right, [&] {
          return "(" + arrow_str(arrow(a)) + "," + arrow_str(b) + "," + arrow_str(c) + ")";
        });
      }
    }
  return rep;
}

Report validate_morphism(const FiniteGroupoid& dom, const FiniteGroupoid& cod,
                         const GroupoidMorphism& m) {
  Report rep("groupoid morphism");
  Check& shape = rep.law("arrow map shape");
  shape.expect(dom.object_count() == cod.object_count(), "bases differ");
  shape.expect(m.arrow_map.size() == dom.arrow_count(), "arrow map has wrong length");
  if (!shape.passed) return rep;
  for (ArrowId a : m.arrow_map) shape.expect(idx(a) < cod.arrow_count(), "image out of range");
  if (!shape.passed) return rep;

  Check& ends = rep.law("identity on objects");
  Check& ids = rep.law("preserves identities");
  Check& comp = rep.law("preserves composition");
  for (std::size_t a = 0; a < dom.arrow_count(); ++a) {
    ArrowId x = make_id<ArrowId>(a);
    ends.expect_lazy(cod.src(m(x)) == dom.src(x) && cod.tgt(m(x)) == dom.tgt(x),
                     [&] { return "arrow " + arrow_str(x); });
  }
  for (std::size_t p = 0; p < dom.object_count(); ++p) {
    ObjectId o = make_id<ObjectId>(p);
    ids.expect_lazy(m(dom.identity(o)) == cod.identity(o),
                    [&] { return "object " + std::to_string(p); });
  }
  if (!ends.passed) return rep;
  for (std::size_t a = 0; a < dom.arrow_count(); ++a)
    for (ArrowId b : dom.arrows_from(dom.tgt(make_id<ArrowId>(a)))) {
      ArrowId x = make_id<ArrowId>(a);
      comp.expect_lazy(m(dom.compose(x, b)) == cod.compose(m(x), m(b)),
                       [&] { return arrow_str(x) + "*" + arrow_str(b); });
    }
  return rep;
}

bool is_injective(const GroupoidMorphism& m) {
  std::vector<ArrowId> sorted = m.arrow_map;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::string describe(const FiniteGroupoid& g, ArrowId a) {
  std::ostringstream out;
  out << "#" << idx(a) << "(" << idx(g.src(a)) << "->" << idx(g.tgt(a)) << ")";
  return out.str();
}

}  // namespace dgk
