#include <doctest.h>

#include <random>

#include "dgk/fixtures.hpp"
#include "dgk/free_product.hpp"

using namespace dgk;

namespace {

FreeProduct s3_words() {
  const DoubleGroupoid d = fixture_s3f();
  return FreeProduct(d.horizontal(), d.vertical());
}

FreeProduct pair_words(std::size_t n) { return FreeProduct(pair_groupoid(n), pair_groupoid(n)); }

ReducedWord word(const FreeProduct& fp, const std::string& text) { return fp.reduce(parse_path(text)); }

}  // namespace

TEST_CASE("same-side letters merge") {
  const FreeProduct fp = s3_words();
  CHECK(to_string(word(fp, "V:1 V:1")) == "V:2");
  CHECK(to_string(word(fp, "V:1 H:1 H:1 V:1")) == "V:2");
  CHECK(to_string(word(fp, "V:1 V:2")) == "[0]");
  CHECK(to_string(word(fp, "H:0")) == "[0]");
  CHECK(to_string(word(fp, "V:0 H:1 V:0")) == "H:1");
}

TEST_CASE("a word times its inverse is a point") {
  const FreeProduct fp = pair_words(3);
  for (const ReducedWord& w : all_reduced_words(fp, 3)) {
    const ReducedWord e = fp.concat(w, fp.inverse(w));
    CHECK(e.length() == 0);
    CHECK(e.base == w.base);
  }
}

TEST_CASE("reduced words enumerate every alternating sequence") {
  // S3F: H has one non-identity arrow, V has two; one object.
  const FreeProduct fp = s3_words();
  CHECK(all_reduced_words(fp, 1).size() == 3);
  CHECK(all_reduced_words(fp, 2).size() == 3 + 4);
  for (const ReducedWord& w : all_reduced_words(fp, 4)) CHECK(fp.is_reduced(w));
}

TEST_CASE("path parsing") {
  const Path p = parse_path("V:3 H:1  V:2");
  REQUIRE(p.size() == 3);
  CHECK(p[0].side == Side::V);
  CHECK(idx(p[1].arrow) == 1);
  CHECK_THROWS_AS(parse_path("X:1"), FormatError);
  CHECK_THROWS_AS(parse_path("V:"), FormatError);
  CHECK_THROWS_AS(parse_path("V:a"), FormatError);
  CHECK_THROWS_AS(parse_path("V3"), FormatError);
}

TEST_CASE("chaining is checked") {
  const FreeProduct fp = pair_words(2);
  CHECK_THROWS_AS(fp.check_chained(parse_path("H:1 H:1")), NotChained);
  CHECK_THROWS_AS(fp.check_chained({}), NotChained);
  CHECK_THROWS_AS(fp.check_chained(parse_path("H:9")), FormatError);
  CHECK_NOTHROW(fp.check_chained(parse_path("H:1 V:2")));
  CHECK_THROWS_AS(fp.concat(word(fp, "H:1"), word(fp, "H:1")), NotChained);
}

TEST_CASE("random schedules reach the stack normal form") {
  const FreeProduct fp = pair_words(3);
  std::mt19937_64 rng(11);
  for (int n = 0; n < 300; ++n) {
    Path p;
    ObjectId at = make_id<ObjectId>(rng() % 3);
    const std::size_t len = 1 + rng() % 9;
    for (std::size_t i = 0; i < len; ++i) {
      const ObjectId to = make_id<ObjectId>(rng() % 3);
      p.push_back({rng() % 2 ? Side::H : Side::V, make_id<ArrowId>(idx(at) * 3 + idx(to))});
      at = to;
    }
    const ReducedWord expected = fp.reduce(p);
    CHECK(fp.is_reduced(expected));
    for (int k = 0; k < 5; ++k) CHECK(fp.reduce_randomly(p, rng) == expected);
  }
}

TEST_CASE("length cases (i) and (ii)") {
  const FreeProduct fp = pair_words(3);
  const ReducedWord p = word(fp, "H:1 V:5");  // 0->1->2
  CHECK(boundary(fp, p, word(fp, "H:6")) == Boundary::DifferentSides);
  CHECK(fp.concat(p, word(fp, "H:6")).length() == 3);
  CHECK(boundary(fp, p, word(fp, "V:6 H:1")) == Boundary::SameSideNotInverse);
  CHECK(fp.concat(p, word(fp, "V:6 H:1")).length() == 3);
  CHECK(stated_length(fp, p, word(fp, "V:6 H:1")) == 3u);
}

TEST_CASE("length case (iii) with a missing neighbour") {
  const FreeProduct fp = pair_words(3);
  const ReducedWord p = word(fp, "H:1 V:5");
  const ReducedWord q = word(fp, "V:7");  // 2->1, inverse of V:5
  CHECK(boundary(fp, p, q) == Boundary::InverseThenNotInverse);
  CHECK(fp.concat(p, q).length() == 1);
  CHECK(stated_length(fp, p, q) == 1u);
}

TEST_CASE("length case (iii) overstates when both neighbours merge") {
  // (r s)(s r) = r r: the s letters cancel and the r letters merge.
  const FreeProduct fp = s3_words();
  const ReducedWord p = word(fp, "V:1 H:1");
  const ReducedWord q = word(fp, "H:1 V:1");
  CHECK(boundary(fp, p, q) == Boundary::InverseThenNotInverse);
  CHECK(fp.concat(p, q).length() == 1);
  CHECK(stated_length(fp, p, q) == 2u);
  CHECK(forced_length(fp, p, q) == 1u);
}

TEST_CASE("further cancellation lies outside the three cases") {
  const FreeProduct fp = s3_words();
  const ReducedWord p = word(fp, "V:1 H:1");
  CHECK(boundary(fp, p, fp.inverse(p)) == Boundary::InverseThenInverse);
  CHECK_FALSE(stated_length(fp, p, fp.inverse(p)).has_value());
}

TEST_CASE("corrected lengths match on every short configuration") {
  for (const FreeProduct& fp : {s3_words(), pair_words(2), pair_words(3)}) {
    const auto words = all_reduced_words(fp, 3);
    for (const auto& p : words)
      for (const auto& q : words) {
        if (fp.target(p) != fp.source(q)) continue;
        const auto forced = forced_length(fp, p, q);
        if (forced) CHECK(fp.concat(p, q).length() == *forced);
      }
  }
}

TEST_CASE("box words are loops at the top-left corner") {
  const DoubleGroupoid d = fixture_cpair(2);
  const FreeProduct fp(d.horizontal(), d.vertical());
  for (std::size_t a = 0; a < d.box_count(); ++a) {
    const ReducedWord w = box_word(fp, d, box_id(a));
    CHECK(w.base == d.top_left(box_id(a)));
    CHECK(fp.target(w) == w.base);
  }
}
