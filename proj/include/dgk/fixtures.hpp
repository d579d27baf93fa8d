#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dgk/diagonal.hpp"
#include "dgk/double_groupoid.hpp"
#include "dgk/extension.hpp"

namespace dgk {

/// One object, identity edges only, boxes {Theta = 0, kappa = 1} forming Z/2
/// under both compositions.
DoubleGroupoid fixture_a2();
/// coarse(PAIR(n), PAIR(n)).
DoubleGroupoid fixture_cpair(std::size_t n);
/// Square of the S3 = C3 C2 diagram: six boxes, vacant.
DoubleGroupoid fixture_s3f();

/// Constant Z/2 bundle over the frame CPAIR2, trivial actions and cocycles.
ExtensionData ext1_data();
DoubleGroupoid fixture_ext1();
/// Constant Z/3 bundle over CPAIR2; non-identity arrows act by negation;
/// cocycles are the coboundary of a fixed function on frame boxes.
ExtensionData ext3_data();
DoubleGroupoid fixture_ext3();
/// Z/3 over CPAIR2 with non-identity vertical arrows acting by negation and
/// horizontal arrows acting trivially. The two action routes around a box
/// disagree, so the data fails its equations.
ExtensionData compatibility_counterexample();

/// Non-identity arrows act by negation, identities trivially. Requires the
/// bundle to have equal fiber sizes along every arrow.
BundleAction sign_action(const FiniteGroupoid& actor, const AbelianGroupBundle& k);

struct NamedFixture {
  std::string name;
  DoubleGroupoid d;
};
/// A2, CPAIR2, CPAIR3, S3F, EXT1, in that order.
std::vector<NamedFixture> standard_fixtures();

struct NamedDiagram {
  std::string name;
  Diagram d;
};
/// PAIR2, PAIR3, S3.
std::vector<NamedDiagram> standard_diagrams();

/// One changed value in one of hcompose, vcompose, hid, vid, hinv, vinv, or
/// one composition entry removed.
struct Mutation {
  std::string table;
  std::size_t entry = 0;
  std::uint32_t old_value = 0;
  std::uint32_t new_value = 0;
  bool dropped = false;
  DoubleGroupoidTables tables;

  std::string describe() const;
};
/// `count` distinct single-entry mutations chosen from a seeded generator.
std::vector<Mutation> mutations(const DoubleGroupoid& d, std::size_t count, std::uint64_t seed);

}  // namespace dgk
