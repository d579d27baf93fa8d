#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dgk/errors.hpp"
#include "dgk/ids.hpp"
#include "dgk/report.hpp"

namespace dgk {

/// Raw tables of a finite groupoid exactly as stored on disk. Nothing here is
/// guaranteed to satisfy the groupoid axioms; see validate_groupoid().
struct GroupoidTables {
  std::size_t objects = 0;
  std::vector<ObjectId> src;
  std::vector<ObjectId> tgt;
  /// Defined entries (g, h, gh), composed left to right: tgt(g) == src(h).
  std::vector<std::array<std::uint32_t, 3>> compose;
  std::vector<ArrowId> identity;  // per object
  std::vector<ArrowId> inverse;   // per arrow

  bool operator==(const GroupoidTables&) const = default;
};

/// A finite groupoid over the base {0, ..., objects-1}.
///
/// Composition is written left to right: compose(g, h) is "g then h" and is
/// defined when tgt(g) == src(h). Construction only checks the table shape
/// (sizes, index ranges, composability of every listed entry); the axioms
/// are checked by validate_groupoid().
class FiniteGroupoid {
 public:
  FiniteGroupoid() = default;
  explicit FiniteGroupoid(GroupoidTables tables);

  std::size_t object_count() const noexcept { return objects_; }
  std::size_t arrow_count() const noexcept { return src_.size(); }

  ObjectId src(ArrowId g) const { return src_[idx(g)]; }
  ObjectId tgt(ArrowId g) const { return tgt_[idx(g)]; }
  ArrowId identity(ObjectId p) const { return identity_[idx(p)]; }
  ArrowId inverse(ArrowId g) const { return inverse_[idx(g)]; }
  bool is_identity(ArrowId g) const { return identity_[idx(src(g))] == g; }

  bool composable(ArrowId g, ArrowId h) const { return tgt(g) == src(h); }
  /// Throws NotComposable on mismatched endpoints and IncompleteTable when the
  /// table lacks an entry it should have.
  ArrowId compose(ArrowId g, ArrowId h) const;
  std::optional<ArrowId> try_compose(ArrowId g, ArrowId h) const {
    return table_.find(g, h);
  }

  std::span<const ArrowId> arrows_from(ObjectId p) const { return from_[idx(p)]; }
  std::span<const ArrowId> arrows_into(ObjectId q) const { return into_[idx(q)]; }
  std::vector<ArrowId> hom(ObjectId p, ObjectId q) const;
  std::vector<ArrowId> vertex_group(ObjectId q) const { return hom(q, q); }

  /// Canonical raw form: compose entries sorted ascending.
  GroupoidTables tables() const;

  bool operator==(const FiniteGroupoid& other) const;

 private:
  std::size_t objects_ = 0;
  std::vector<ObjectId> src_, tgt_;
  std::vector<ArrowId> identity_, inverse_;
  PartialTable<ArrowId, ArrowId, ArrowId> table_;
  std::vector<std::vector<ArrowId>> from_, into_;
};

/// Builds a groupoid from endpoints and a composition rule. Identities and
/// inverses are found by search, so `compose` must describe a groupoid.
FiniteGroupoid make_groupoid(
    std::size_t objects, const std::vector<std::pair<ObjectId, ObjectId>>& endpoints,
    const std::function<ArrowId(ArrowId, ArrowId)>& compose);

/// The pair (coarse) groupoid: one arrow P -> Q for every ordered pair.
/// Arrow P -> Q has index P * n + Q.
FiniteGroupoid pair_groupoid(std::size_t n);
/// Identities only.
FiniteGroupoid discrete_groupoid(std::size_t n);
/// One-object cyclic group of order n; arrow k is the k-th power of a generator.
FiniteGroupoid cyclic_group(std::size_t n);
/// Disjoint union; arrows of `b` are shifted past those of `a`, objects likewise.
FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);

/// Connected components of the base, each sorted, ordered by least element.
std::vector<std::vector<ObjectId>> components(const FiniteGroupoid& g);
std::vector<ObjectId> component_of(const FiniteGroupoid& g, ObjectId q);
bool is_connected(const FiniteGroupoid& g);

/// Subgroups of a vertex group are sorted arrow lists.
using Subgroup = std::vector<ArrowId>;

/// Checks that `k` is a subgroup of G(q); returns the failed law otherwise.
std::optional<std::string> subgroup_violation(const FiniteGroupoid& g, ObjectId q,
                                              const Subgroup& k);

/// Number of classes of arrows into `q` under g ~ h iff g^-1 h in K.
/// Counted by enumeration; throws NotASubgroup, and SolveFailed if the count
/// disagrees with |component(q)| * |G(q)| / |K|.
std::size_t coset_count(const FiniteGroupoid& g, ObjectId q, const Subgroup& k);

/// Exhaustive check of every groupoid axiom; one Check per law.
Report validate_groupoid(const FiniteGroupoid& g);

/// A morphism of groupoids over the same base, identity on objects.
struct GroupoidMorphism {
  std::vector<ArrowId> arrow_map;
  ArrowId operator()(ArrowId g) const { return arrow_map[idx(g)]; }
  bool operator==(const GroupoidMorphism&) const = default;
};

Report validate_morphism(const FiniteGroupoid& domain, const FiniteGroupoid& codomain,
                         const GroupoidMorphism& m);
bool is_injective(const GroupoidMorphism& m);

std::string describe(const FiniteGroupoid& g, ArrowId a);

}  // namespace dgk
