#include <doctest.h>

#include "brute.hpp"
#include "dgk/core_kernel.hpp"
#include "dgk/diagonal.hpp"
#include "dgk/fixtures.hpp"

using namespace dgk;

namespace {
ArrowId A(std::size_t i) { return make_id<ArrowId>(i); }
}  // namespace

TEST_CASE("standard diagrams are factorizations") {
  for (const auto& [name, dg] : standard_diagrams()) {
    CAPTURE(name);
    CHECK(validate_diagram(dg).ok());
    CHECK(is_factorization(dg));
  }
  const Diagram s3 = s3_diagram();
  CHECK(s3.d.arrow_count() == 6);
  CHECK(is_injective(s3.i));
  CHECK(is_injective(s3.j));
}

TEST_CASE("a diagram missing arrows is not a factorization") {
  Diagram dg = s3_diagram();
  dg.i.arrow_map = {dg.d.identity(make_id<ObjectId>(0)), dg.d.identity(make_id<ObjectId>(0))};
  CHECK_FALSE(is_factorization(dg));
}

TEST_CASE("square of a diagram keeps exactly the commuting frames") {
  const Diagram dg = s3_diagram();
  const DoubleGroupoid sq = square_of_diagram(dg);
  std::size_t expected = 0;
  for (ArrowId t : brute::arrows(dg.h))
    for (ArrowId b : brute::arrows(dg.h))
      for (ArrowId l : brute::arrows(dg.v))
        for (ArrowId r : brute::arrows(dg.v))
          expected += dg.d.compose(dg.i(t), dg.j(r)) == dg.d.compose(dg.j(l), dg.i(b));
  CHECK(sq.box_count() == expected);
  CHECK(validate_double(sq).ok());
  CHECK(core_of_square_check(dg).ok());
}

TEST_CASE("square of the pair diagram is coarse") {
  const DoubleGroupoid sq = square_of_diagram(pair_diagram(2));
  CHECK(sq.box_count() == 16);
  CHECK(sq == fixture_cpair(2));
}

TEST_CASE("diagonal sizes") {
  CHECK(diagonal(fixture_cpair(2)).d.arrow_count() == 4);
  CHECK(diagonal(fixture_cpair(3)).d.arrow_count() == 9);
  const Diagram s3 = diagonal(fixture_s3f());
  CHECK(s3.d.arrow_count() == 6);
  CHECK(validate_groupoid(s3.d).ok());
}

TEST_CASE("box relations hold in the diagonal") {
  for (const char* name : {"CPAIR2", "CPAIR3", "S3F"}) {
    CAPTURE(name);
    DoubleGroupoid d;
    for (const auto& f : standard_fixtures())
      if (f.name == name) d = f.d;
    const Diagram dg = diagonal(d);
    const FreeProduct fp(d.horizontal(), d.vertical());
    for (BoxId a : brute::boxes(d)) {
      const ArrowId v = evaluate(dg, box_word(fp, d, a));
      CHECK(dg.d.is_identity(v));
    }
    CHECK(diagonal_report(d).ok());
  }
}

TEST_CASE("diagonal needs slim and filling") {
  CHECK_THROWS_AS(diagonal(fixture_a2()), NotSlim);
  CHECK_THROWS_AS(j_closure_oracle(fixture_ext1(), {}, 1), NotSlim);
}

TEST_CASE("round trips") {
  CHECK(roundtrip_slim(fixture_s3f()).ok());
  CHECK(roundtrip_slim(fixture_cpair(2)).ok());
  for (const auto& [name, dg] : standard_diagrams()) {
    CAPTURE(name);
    CHECK(roundtrip_diagram(dg).ok());
    const auto f = diagram_iso(dg, dg);
    REQUIRE(f.has_value());
    for (std::size_t a = 0; a < dg.d.arrow_count(); ++a) CHECK((*f)(A(a)) == A(a));
  }
}

TEST_CASE("fusion verdicts") {
  CHECK(is_fusion(fixture_s3f()).fusion);
  CHECK(is_fusion(fixture_cpair(2)).fusion);
  CHECK(is_fusion(fixture_cpair(3)).fusion);
  const FusionVerdict a2 = is_fusion(fixture_a2());
  CHECK_FALSE(a2.fusion);
  CHECK(a2.v_connected);
  CHECK_FALSE(a2.bottom_injective_on_core);
  CHECK_FALSE(is_fusion(fixture_ext1()).fusion);
}

TEST_CASE("vacancy and unique decompositions") {
  CHECK(vacancy_bridge(fixture_s3f()).ok());
  CHECK(vacancy_bridge(fixture_cpair(2)).ok());
}

TEST_CASE("oracle finds box relations and their conjugates") {
  const DoubleGroupoid d = fixture_s3f();
  const FreeProduct fp(d.horizontal(), d.vertical());
  for (BoxId a : brute::boxes(d)) {
    const ReducedWord w = box_word(fp, d, a);
    CHECK(j_closure_oracle(d, w, 1) == OracleVerdict::Member);
    const ReducedWord c = fp.concat(fp.concat(fp.letter({Side::H, A(1)}), w), fp.letter({Side::H, A(1)}));
    CHECK(j_closure_oracle(d, c, 1) == OracleVerdict::Member);
  }
}

TEST_CASE("oracle does not claim non-trivial loops") {
  const DoubleGroupoid d = fixture_s3f();
  const FreeProduct fp(d.horizontal(), d.vertical());
  const Diagram dg = diagonal(d);
  for (const ReducedWord& w : all_reduced_words(fp, 2)) {
    const bool trivial = dg.d.is_identity(evaluate(dg, w));
    CHECK((j_closure_oracle(d, w, 3) == OracleVerdict::Member) == trivial);
  }
}
