#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dgk/groupoid.hpp"

namespace dgk {

/// A map p: E -> P from a finite element set onto the base, with the fibers
/// precomputed. Fiber members are kept in ascending element order.
class FiberBundle {
 public:
  FiberBundle() = default;
  FiberBundle(std::size_t base, std::vector<ObjectId> projection);

  std::size_t base_size() const noexcept { return base_; }
  std::size_t element_count() const noexcept { return projection_.size(); }
  ObjectId project(ElementId x) const { return projection_[idx(x)]; }
  std::span<const ElementId> fiber(ObjectId p) const { return fibers_[idx(p)]; }
  const std::vector<ObjectId>& projection() const noexcept { return projection_; }

  bool operator==(const FiberBundle& o) const { return base_ == o.base_ && projection_ == o.projection_; }

 private:
  std::size_t base_ = 0;
  std::vector<ObjectId> projection_;
  std::vector<std::vector<ElementId>> fibers_;
};

/// Raw tables of an abelian group bundle.
struct BundleTables {
  std::size_t base = 0;
  std::vector<ObjectId> fiber_of;                    // per element
  std::vector<std::array<std::uint32_t, 3>> op;      // (a, b, a+b), same fiber
  std::vector<ElementId> neutral;                    // per object
  std::vector<ElementId> negate;                     // per element

  bool operator==(const BundleTables&) const = default;
};

/// A family of finite abelian groups indexed by the base. The operation is
/// written additively in code; construction checks shape only.
class AbelianGroupBundle {
 public:
  AbelianGroupBundle() = default;
  explicit AbelianGroupBundle(BundleTables tables);

  const FiberBundle& fibers() const noexcept { return fibers_; }
  std::size_t base_size() const noexcept { return fibers_.base_size(); }
  std::size_t element_count() const noexcept { return fibers_.element_count(); }
  ObjectId project(ElementId x) const { return fibers_.project(x); }
  std::span<const ElementId> fiber(ObjectId p) const { return fibers_.fiber(p); }

  ElementId neutral(ObjectId p) const { return neutral_[idx(p)]; }
  ElementId negate(ElementId x) const { return negate_[idx(x)]; }
  /// Throws NotComposable when a and b lie in different fibers.
  ElementId add(ElementId a, ElementId b) const;
  std::optional<ElementId> try_add(ElementId a, ElementId b) const { return op_.find(a, b); }
  bool is_neutral(ElementId x) const { return neutral(project(x)) == x; }

  BundleTables tables() const;
  bool operator==(const AbelianGroupBundle& o) const;

 private:
  FiberBundle fibers_;
  PartialTable<ElementId, ElementId, ElementId> op_;
  std::vector<ElementId> neutral_, negate_;
};

/// Z/n in every fiber; element k of the fiber over P has index P * n + k.
AbelianGroupBundle constant_cyclic_bundle(std::size_t base, std::size_t n);
AbelianGroupBundle trivial_bundle(std::size_t base);

Report validate_bundle(const AbelianGroupBundle& k);

/// One defined value g |> x = y of a left action.
struct ActEntry {
  ArrowId arrow;
  ElementId element;
  ElementId result;
};

/// Left action of a groupoid on a fiber bundle. g acts on x when
/// tgt(g) == p(x), and lands in the fiber over src(g).
class BundleAction {
 public:
  BundleAction() = default;
  BundleAction(FiniteGroupoid actor, FiberBundle space, const std::vector<ActEntry>& entries);

  const FiniteGroupoid& actor() const noexcept { return actor_; }
  const FiberBundle& space() const noexcept { return space_; }

  bool acts(ArrowId g, ElementId x) const { return actor_.tgt(g) == space_.project(x); }
  /// Throws NotComposable when tgt(g) != p(x).
  ElementId act(ArrowId g, ElementId x) const;
  std::optional<ElementId> try_act(ArrowId g, ElementId x) const { return table_.find(g, x); }

  /// Entries sorted by (arrow, element).
  std::vector<ActEntry> entries() const;

 private:
  FiniteGroupoid actor_;
  FiberBundle space_;
  PartialTable<ArrowId, ElementId, ElementId> table_;
};

/// Builds an action from a rule, tabulating it on every acting pair.
template <class Rule>
BundleAction tabulate_action(const FiniteGroupoid& actor, const FiberBundle& space, Rule&& rule) {
  std::vector<ActEntry> entries;
  for (std::size_t a = 0; a < actor.arrow_count(); ++a) {
    ArrowId g = make_id<ArrowId>(a);
    for (ElementId x : space.fiber(actor.tgt(g))) entries.push_back({g, x, rule(g, x)});
  }
  return BundleAction(actor, space, entries);
}

/// Each arrow sends the i-th element of its target fiber to the i-th element
/// of its source fiber. For a constant bundle this is the trivial action.
/// Throws FormatError when fiber sizes differ along an arrow.
BundleAction aligned_action(const FiniteGroupoid& actor, const AbelianGroupBundle& k);

Report validate_action(const BundleAction& a);
/// Additionally checks that every arrow acts as a group isomorphism of fibers.
Report validate_action_by_automorphisms(const BundleAction& a, const AbelianGroupBundle& k);

std::vector<ElementId> orbit(const BundleAction& a, ElementId x);
/// Isotropy arrows at p(x), sorted. Throws NotASubgroup if the result is not
/// closed (possible only for an invalid action).
Subgroup isotropy(const BundleAction& a, ElementId x);

/// Checks |O_x| = |component(p(x))| * |G(p(x))| / |G^x| exactly.
Report orbit_count_identity(const BundleAction& a, ElementId x);

}  // namespace dgk
