#pragma once

#include <optional>
#include <vector>

#include "dgk/double_groupoid.hpp"

namespace dgk {

/// An isomorphism of double groupoids over the same base, identity on objects.
struct DoubleIso {
  GroupoidMorphism horizontal;
  GroupoidMorphism vertical;
  std::vector<BoxId> boxes;
};

/// Checks that `m` is bijective on arrows and boxes and commutes with the
/// four edge maps, both compositions, identities and inverses.
Report check_double_iso(const DoubleGroupoid& a, const DoubleGroupoid& b, const DoubleIso& m);

/// All isomorphisms a -> b that are the identity on objects, in
/// lexicographic order of arrow images. Stops after `limit` results.
std::vector<GroupoidMorphism> groupoid_isos(const FiniteGroupoid& a, const FiniteGroupoid& b,
                                            std::size_t limit = static_cast<std::size_t>(-1));

/// Searches for a box bijection over the given edge isomorphisms.
std::optional<std::vector<BoxId>> box_bijection(const DoubleGroupoid& a, const DoubleGroupoid& b,
                                                const GroupoidMorphism& h, const GroupoidMorphism& v);

/// Exhaustive search: edge isomorphisms first, then a box bijection for each
/// pair. std::nullopt means none exists.
std::optional<DoubleIso> double_iso(const DoubleGroupoid& a, const DoubleGroupoid& b);

}  // namespace dgk
