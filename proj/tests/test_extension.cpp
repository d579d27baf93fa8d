#include <doctest.h>

#include "brute.hpp"
#include "dgk/extension.hpp"
#include "dgk/fixtures.hpp"
#include "dgk/iso.hpp"

using namespace dgk;

namespace {

bool failed(const Report& r, const std::string& name) {
  const Check* c = r.find(name);
  return c && !c->passed;
}

GroupoidMorphism identity_map(const FiniteGroupoid& g) {
  GroupoidMorphism m;
  for (std::size_t a = 0; a < g.arrow_count(); ++a) m.arrow_map.push_back(make_id<ArrowId>(a));
  return m;
}

}  // namespace

TEST_CASE("hand-built extension data satisfies the four equations") {
  CHECK(validate_cocycle_equations(ext1_data()).ok());
  CHECK(validate_cocycle_equations(ext3_data()).ok());
}

TEST_CASE("built extensions are double groupoids") {
  const DoubleGroupoid d = fixture_ext3();
  CHECK(validate_double(d).ok());
  CHECK(d.box_count() == 16 * 3);
  CHECK_FALSE(is_slim(d));
}

TEST_CASE("mismatched edge actions fail compatibility") {
  const ExtensionData e = compatibility_counterexample();
  const Report r = validate_cocycle_equations(e);
  CHECK(failed(r, "the two routes of the edge actions around each frame box agree"));
  CHECK_THROWS_AS(build_extension(e), CocycleInvalid);
}

TEST_CASE("a tampered cocycle value is rejected") {
  ExtensionData e = ext3_data();
  // Change tau on a pair of non-identity frame boxes.
  for (auto& [key, value] : e.cocycles.tau) {
    const auto [f, g] = key;
    if (f == e.frame.vid(e.frame.top(f)) || g == e.frame.vid(e.frame.top(g))) continue;
    if (f == e.frame.hid(e.frame.left(f)) || g == e.frame.hid(e.frame.left(g))) continue;
    const auto fiber = e.bundle.fiber(e.bundle.project(value));
    value = value == fiber[0] ? fiber[1] : fiber[0];
    break;
  }
  CHECK_FALSE(validate_cocycle_equations(e).ok());
}

TEST_CASE("a missing cocycle entry is an error, not a zero") {
  ExtensionData e = ext1_data();
  e.cocycles.sigma.erase(e.cocycles.sigma.begin());
  CHECK_FALSE(validate_cocycle_equations(e).ok());
}

TEST_CASE("zero function has zero coboundary") {
  const ExtensionData e = ext3_data();
  std::vector<ElementId> zero;
  for (BoxId f : brute::boxes(e.frame)) zero.push_back(e.bundle.neutral(e.frame.bottom_left(f)));
  CHECK(coboundary(e.frame, e.bundle, e.vact, e.hact, zero) == trivial_cocycles(e.frame, e.bundle));
}

TEST_CASE("section sends identity frames to identity boxes") {
  for (const auto& [name, d] : standard_fixtures()) {
    CAPTURE(name);
    const DoubleGroupoid f = frame(d);
    const Section mu = choose_section(d, f);
    const auto proj = frame_projection(d, f);
    for (BoxId b : brute::boxes(f)) CHECK(proj[idx(mu(b))] == b);
    for (ArrowId g : brute::arrows(f.vertical())) CHECK(mu(f.hid(g)) == d.hid(g));
    for (ArrowId x : brute::arrows(f.horizontal())) CHECK(mu(f.vid(x)) == d.vid(x));
    CHECK(psi_check(d, mu).ok());
  }
}

TEST_CASE("decompose then rebuild gives back the input") {
  std::vector<NamedFixture> all = standard_fixtures();
  all.push_back({"EXT3", fixture_ext3()});
  for (const auto& [name, d] : all) {
    CAPTURE(name);
    const ExtensionData e = decompose(d);
    CHECK(validate_cocycle_equations(e).ok());
    const DoubleGroupoid rebuilt = build_extension(e);
    const DoubleIso psi{identity_map(d.horizontal()), identity_map(d.vertical()), extension_witness(d)};
    CHECK(check_double_iso(rebuilt, d, psi).ok());
  }
}

TEST_CASE("rebuilding hand-built data reproduces it exactly") {
  // The section picks identity boxes and the lowest fiber position, so the
  // extracted cocycles of a built extension are the ones it was built from.
  const ExtensionData e = ext3_data();
  const ExtensionData back = decompose(build_extension(e));
  CHECK(back.cocycles == e.cocycles);
  CHECK(back.bundle == e.bundle);
}

TEST_CASE("iso search finds an isomorphism and rejects non-isomorphic pairs") {
  const DoubleGroupoid d = fixture_ext1();
  CHECK(double_iso(build_extension(decompose(d)), d).has_value());
  CHECK_FALSE(double_iso(fixture_cpair(2), fixture_ext1()).has_value());
  CHECK(groupoid_isos(pair_groupoid(2), pair_groupoid(2)).size() == 1);
  CHECK(groupoid_isos(cyclic_group(3), cyclic_group(3)).size() == 2);
}
