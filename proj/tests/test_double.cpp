#include <doctest.h>

#include "brute.hpp"
#include "dgk/fixtures.hpp"

using namespace dgk;

TEST_CASE("coarse double groupoid has every quadruple") {
  for (std::size_t n : {1, 2, 3}) {
    const DoubleGroupoid d = fixture_cpair(n);
    CHECK(d.box_count() == brute::quadruples(pair_groupoid(n), pair_groupoid(n)));
    CHECK(d.box_count() == n * n * n * n);
  }
  CHECK_THROWS_AS(coarse(pair_groupoid(2), pair_groupoid(3)), BaseMismatch);
}

TEST_CASE("coarse inverses swap and invert sides") {
  const DoubleGroupoid d = fixture_cpair(2);
  const FiniteGroupoid& h = d.horizontal();
  const FiniteGroupoid& v = d.vertical();
  for (BoxId a : brute::boxes(d)) {
    const BoxFrame f = d.frame(a);
    CHECK(d.frame(d.hinv(a)) == BoxFrame{h.inverse(f.top), f.right, f.left, h.inverse(f.bottom)});
    CHECK(d.frame(d.vinv(a)) == BoxFrame{f.bottom, v.inverse(f.left), v.inverse(f.right), f.top});
  }
}

TEST_CASE("identity boxes have the expected sides") {
  const DoubleGroupoid d = fixture_cpair(3);
  for (ArrowId g : brute::arrows(d.vertical())) {
    const BoxId b = d.hid(g);
    CHECK(d.left(b) == g);
    CHECK(d.right(b) == g);
    CHECK(d.horizontal().is_identity(d.top(b)));
  }
  for (ArrowId x : brute::arrows(d.horizontal())) {
    const BoxId b = d.vid(x);
    CHECK(d.top(b) == x);
    CHECK(d.bottom(b) == x);
    CHECK(d.vertical().is_identity(d.left(b)));
  }
}

TEST_CASE("standard fixtures satisfy every axiom") {
  for (const auto& [name, d] : standard_fixtures()) {
    CAPTURE(name);
    const Report r = validate_double(d);
    CHECK(r.ok());
    CHECK(r.warnings().empty());
  }
}

TEST_CASE("fixture sizes") {
  CHECK(fixture_a2().box_count() == 2);
  CHECK(fixture_s3f().box_count() == 6);
  CHECK(fixture_ext1().box_count() == 32);
  CHECK(fixture_ext3().box_count() == 48);
}

TEST_CASE("slim, filling and vacant agree with enumeration") {
  for (const auto& [name, d] : standard_fixtures()) {
    CAPTURE(name);
    const auto [lo, hi] = brute::filling_range(d);
    CHECK(is_slim(d) == brute::slim(d));
    CHECK(has_filling(d) == (lo >= 1));
    CHECK(is_vacant(d) == (lo == 1 && hi == 1));
  }
  CHECK_FALSE(is_slim(fixture_a2()));
  CHECK(is_slim(fixture_s3f()));
  CHECK(is_vacant(fixture_s3f()));
  CHECK_FALSE(is_vacant(fixture_cpair(2)));
}

TEST_CASE("frame of an extension is its coarse base") {
  const DoubleGroupoid f = frame(fixture_ext1());
  CHECK(is_slim(f));
  CHECK(f.box_count() == 16);
  CHECK(validate_double(f).ok());
  const DoubleGroupoid a = frame(fixture_a2());
  CHECK(a.box_count() == 1);
}

TEST_CASE("composition outside the domain throws") {
  const DoubleGroupoid d = fixture_cpair(2);
  for (BoxId a : brute::boxes(d))
    for (BoxId b : brute::boxes(d)) {
      if (!d.h_composable(a, b)) CHECK_THROWS_AS(d.hcompose(a, b), NotComposable);
      if (!d.v_composable(a, b)) CHECK_THROWS_AS(d.vcompose(a, b), NotComposable);
    }
}

TEST_CASE("every seeded mutation fails some law") {
  for (const auto& [name, d] : standard_fixtures()) {
    CAPTURE(name);
    const auto ms = mutations(d, 20, 7);
    CHECK(ms.size() == 20);
    for (const Mutation& m : ms) {
      CAPTURE(m.describe());
      bool caught = false;
      try {
        caught = !validate_double(DoubleGroupoid(m.tables)).ok();
      } catch (const Error&) {
        caught = true;
      }
      CHECK(caught);
    }
  }
}

TEST_CASE("mutations are reproducible from the seed") {
  const auto a = mutations(fixture_cpair(2), 5, 99);
  const auto b = mutations(fixture_cpair(2), 5, 99);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].describe() == b[i].describe());
}

TEST_CASE("interchange cap stops with a warning") {
  ValidateOptions o;
  o.interchange_cap = 3;
  const Report r = validate_double(fixture_cpair(2), o);
  CHECK(r.ok());
  CHECK_FALSE(r.warnings().empty());
}

TEST_CASE("slim construction rejects frame sets that are not closed") {
  const FiniteGroupoid p = pair_groupoid(2);
  std::vector<BoxFrame> frames;
  const DoubleGroupoid c = fixture_cpair(2);
  for (BoxId a : brute::boxes(c))
    if (c.horizontal().is_identity(c.top(a))) frames.push_back(c.frame(a));
  CHECK_THROWS_AS(slim_double_groupoid(p, p, frames), FormatError);
}

TEST_CASE("transitivity of the coarse double groupoid") {
  const Transitivity t = transitivity(fixture_cpair(2));
  CHECK(t.horizontal);
  CHECK(t.vertical);
}
