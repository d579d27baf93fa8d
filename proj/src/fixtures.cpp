#include "dgk/fixtures.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

namespace dgk {

DoubleGroupoid fixture_a2() {
  DoubleGroupoidTables t;
  t.base = 1;
  t.horizontal = discrete_groupoid(1).tables();
  t.vertical = discrete_groupoid(1).tables();
  t.boxes = 2;
  const ArrowId id = make_id<ArrowId>(0);
  t.top = t.bottom = t.left = t.right = {id, id};
  for (std::uint32_t a = 0; a < 2; ++a)
    for (std::uint32_t b = 0; b < 2; ++b) {
      t.hcompose.push_back({a, b, a ^ b});
      t.vcompose.push_back({a, b, a ^ b});
    }
  t.hid = {box_id(0)};
  t.vid = {box_id(0)};
  t.hinv = {box_id(0), box_id(1)};
  t.vinv = {box_id(0), box_id(1)};
  return DoubleGroupoid(std::move(t));
}

DoubleGroupoid fixture_cpair(std::size_t n) { return coarse(pair_groupoid(n), pair_groupoid(n)); }

DoubleGroupoid fixture_s3f() { return square_of_diagram(s3_diagram()); }

BundleAction sign_action(const FiniteGroupoid& actor, const AbelianGroupBundle& k) {
  return tabulate_action(actor, k.fibers(), [&](ArrowId g, ElementId x) {
    const ElementId y = actor.is_identity(g) ? x : k.negate(x);
    auto from = k.fiber(actor.tgt(g));
    auto to = k.fiber(actor.src(g));
    if (from.size() != to.size()) throw FormatError("action", "fiber sizes differ along an arrow");
    return to[static_cast<std::size_t>(std::find(from.begin(), from.end(), y) - from.begin())];
  });
}

ExtensionData ext1_data() {
  DoubleGroupoid f = fixture_cpair(2);
  AbelianGroupBundle k = constant_cyclic_bundle(2, 2);
  BundleAction va = aligned_action(f.vertical(), k);
  BundleAction ha = aligned_action(f.horizontal(), k);
  CocyclePair c = trivial_cocycles(f, k);
  return {std::move(k), std::move(f), std::move(va), std::move(ha), std::move(c)};
}

DoubleGroupoid fixture_ext1() { return build_extension(ext1_data()); }

ExtensionData ext3_data() {
  DoubleGroupoid f = fixture_cpair(2);
  AbelianGroupBundle k = constant_cyclic_bundle(2, 3);
  BundleAction va = sign_action(f.vertical(), k);
  BundleAction ha = sign_action(f.horizontal(), k);
  std::vector<ElementId> c;
  for (std::size_t i = 0; i < f.box_count(); ++i) {
    BoxId a = box_id(i);
    auto fiber = k.fiber(f.bottom_left(a));
    const bool identity = a == f.hid(f.left(a)) || a == f.vid(f.top(a));
    c.push_back(identity ? k.neutral(f.bottom_left(a)) : fiber[i % fiber.size()]);
  }
  CocyclePair cc = coboundary(f, k, va, ha, c);
  return {std::move(k), std::move(f), std::move(va), std::move(ha), std::move(cc)};
}

DoubleGroupoid fixture_ext3() { return build_extension(ext3_data()); }

ExtensionData compatibility_counterexample() {
  DoubleGroupoid f = fixture_cpair(2);
  AbelianGroupBundle k = constant_cyclic_bundle(2, 3);
  BundleAction va = sign_action(f.vertical(), k);
  BundleAction ha = aligned_action(f.horizontal(), k);
  CocyclePair c = trivial_cocycles(f, k);
  return {std::move(k), std::move(f), std::move(va), std::move(ha), std::move(c)};
}

std::vector<NamedFixture> standard_fixtures() {
  return {{"A2", fixture_a2()},
          {"CPAIR2", fixture_cpair(2)},
          {"CPAIR3", fixture_cpair(3)},
          {"S3F", fixture_s3f()},
          {"EXT1", fixture_ext1()}};
}

std::vector<NamedDiagram> standard_diagrams() {
  return {{"PAIR2", pair_diagram(2)}, {"PAIR3", pair_diagram(3)}, {"S3", s3_diagram()}};
}

std::string Mutation::describe() const {
  const std::string head = table + "[" + std::to_string(entry) + "]: ";
  if (dropped) return head + "entry removed";
  return head + std::to_string(old_value) + " -> " + std::to_string(new_value);
}

std::vector<Mutation> mutations(const DoubleGroupoid& d, std::size_t count, std::uint64_t seed) {
  const DoubleGroupoidTables base = d.tables();
  const std::uint32_t m = static_cast<std::uint32_t>(d.box_count());
  std::vector<Mutation> out;
  if (m < 2) return out;
  const std::vector<std::string> names{"hcompose", "vcompose", "hid", "vid", "hinv", "vinv"};
  auto size_of = [&](std::size_t t) -> std::size_t {
    switch (t) {
      case 0: return base.hcompose.size();
      case 1: return base.vcompose.size();
      case 2: return base.hid.size();
      case 3: return base.vid.size();
      case 4: return base.hinv.size();
      default: return base.vinv.size();
    }
  };
  std::mt19937_64 rng(seed);
  std::set<std::tuple<std::size_t, std::size_t, std::uint32_t>> used;
  // Bounded so that tiny fixtures with fewer possible mutations still stop.
  for (std::size_t attempt = 0; out.size() < count && attempt < 100 * count; ++attempt) {
    const std::size_t t = std::uniform_int_distribution<std::size_t>(0, names.size() - 1)(rng);
    const std::size_t n = size_of(t);
    if (n == 0) continue;
    const std::size_t e = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    // For composition tables, shift == m deletes the entry instead.
    const std::uint32_t top = t < 2 ? m : m - 1;
    const std::uint32_t shift = std::uniform_int_distribution<std::uint32_t>(1, top)(rng);
    Mutation mu;
    mu.table = names[t];
    mu.entry = e;
    mu.tables = base;
    auto box_slot = [&](std::vector<BoxId>& v) -> BoxId& { return v[e]; };
    std::uint32_t* entry_slot = nullptr;
    BoxId* box = nullptr;
    switch (t) {
      case 0: entry_slot = &mu.tables.hcompose[e][2]; break;
      case 1: entry_slot = &mu.tables.vcompose[e][2]; break;
      case 2: box = &box_slot(mu.tables.hid); break;
      case 3: box = &box_slot(mu.tables.vid); break;
      case 4: box = &box_slot(mu.tables.hinv); break;
      default: box = &box_slot(mu.tables.vinv); break;
    }
    mu.old_value = entry_slot ? *entry_slot : static_cast<std::uint32_t>(idx(*box));
    mu.dropped = shift == m;
    mu.new_value = mu.dropped ? m : (mu.old_value + shift) % m;
    if (!used.insert({t, e, mu.new_value}).second) continue;
    if (mu.dropped) {
      auto& table = t == 0 ? mu.tables.hcompose : mu.tables.vcompose;
      table.erase(table.begin() + static_cast<std::ptrdiff_t>(e));
    } else if (entry_slot) {
      *entry_slot = mu.new_value;
    } else {
      *box = box_id(mu.new_value);
    }
    out.push_back(std::move(mu));
  }
  return out;
}

}  // namespace dgk
