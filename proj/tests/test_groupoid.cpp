#include <doctest.h>

#include "dgk/bundle.hpp"
#include "dgk/groupoid.hpp"

using namespace dgk;

namespace {
ArrowId A(std::size_t i) { return make_id<ArrowId>(i); }
ObjectId P(std::size_t i) { return make_id<ObjectId>(i); }
ElementId X(std::size_t i) { return make_id<ElementId>(i); }
}  // namespace

TEST_CASE("pair groupoid arrows and composition") {
  const FiniteGroupoid g = pair_groupoid(3);
  CHECK(g.arrow_count() == 9);
  CHECK(validate_groupoid(g).ok());
  for (std::size_t p = 0; p < 3; ++p)
    for (std::size_t q = 0; q < 3; ++q) {
      CHECK(g.src(A(p * 3 + q)) == P(p));
      CHECK(g.tgt(A(p * 3 + q)) == P(q));
    }
  CHECK(g.compose(A(1), A(5)) == A(2));  // 0->1 then 1->2
  CHECK(g.inverse(A(1)) == A(3));
  CHECK_THROWS_AS(g.compose(A(1), A(1)), NotComposable);
}

TEST_CASE("cyclic group of order 3 multiplies exponents") {
  const FiniteGroupoid g = cyclic_group(3);
  CHECK(validate_groupoid(g).ok());
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) CHECK(g.compose(A(a), A(b)) == A((a + b) % 3));
  CHECK(g.compose(A(1), A(1)) == A(2));
}

TEST_CASE("corrupted compose entry is caught with a witness") {
  GroupoidTables t = pair_groupoid(2).tables();
  for (auto& e : t.compose)
    if (e[0] == 1 && e[1] == 2) e[2] = 1;  // (0->1)(1->0) should be id_0 = 0
  const Report r = validate_groupoid(FiniteGroupoid(t));
  CHECK_FALSE(r.ok());
  bool witnessed = false;
  for (const Check& c : r.checks()) witnessed = witnessed || (!c.passed && !c.witness.empty());
  CHECK(witnessed);
}

TEST_CASE("compose triple with mismatched endpoints is a format error") {
  GroupoidTables t = pair_groupoid(2).tables();
  t.compose.push_back({1, 1, 1});
  CHECK_THROWS_AS(FiniteGroupoid{t}, FormatError);
}

TEST_CASE("out of range indices are format errors") {
  GroupoidTables t = pair_groupoid(2).tables();
  t.inverse[0] = A(7);
  CHECK_THROWS_AS(FiniteGroupoid{t}, FormatError);
}

TEST_CASE("components of a disjoint union") {
  const FiniteGroupoid g = disjoint_union(pair_groupoid(2), cyclic_group(3));
  CHECK(validate_groupoid(g).ok());
  CHECK(g.object_count() == 3);
  CHECK(components(g).size() == 2);
  CHECK_FALSE(is_connected(g));
  CHECK(component_of(g, P(1)) == std::vector<ObjectId>{P(0), P(1)});
}

TEST_CASE("coset count agrees with enumeration") {
  const FiniteGroupoid g = pair_groupoid(3);
  // Trivial subgroup: every arrow into q is its own class.
  CHECK(coset_count(g, P(2), {g.identity(P(2))}) == g.arrows_into(P(2)).size());
  const FiniteGroupoid c = cyclic_group(6);
  CHECK(coset_count(c, P(0), {A(0), A(2), A(4)}) == 2);
  CHECK(subgroup_violation(c, P(0), {A(0), A(1)}).has_value());
  CHECK_THROWS_AS(coset_count(c, P(0), {A(0), A(1)}), NotASubgroup);
}

TEST_CASE("constant cyclic bundle adds modulo n") {
  const AbelianGroupBundle k = constant_cyclic_bundle(2, 3);
  CHECK(validate_bundle(k).ok());
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t a = 0; a < 3; ++a) {
      CHECK(k.negate(X(p * 3 + a)) == X(p * 3 + (3 - a) % 3));
      for (std::size_t b = 0; b < 3; ++b) CHECK(k.add(X(p * 3 + a), X(p * 3 + b)) == X(p * 3 + (a + b) % 3));
    }
  CHECK_THROWS_AS(k.add(X(0), X(3)), NotComposable);
}

TEST_CASE("aligned action of a pair groupoid on a constant bundle") {
  const FiniteGroupoid g = pair_groupoid(2);
  const AbelianGroupBundle k = constant_cyclic_bundle(2, 2);
  const BundleAction a = aligned_action(g, k);
  CHECK(validate_action(a).ok());
  CHECK(validate_action_by_automorphisms(a, k).ok());
  // 0->1 acts on the fiber over 1 and lands over 0, keeping the position.
  CHECK(a.act(A(1), X(3)) == X(1));
  CHECK_THROWS_AS(a.act(A(1), X(0)), NotComposable);
  for (std::size_t x = 0; x < k.element_count(); ++x) {
    CHECK(orbit(a, X(x)).size() == 2);
    CHECK(orbit_count_identity(a, X(x)).ok());
  }
}
