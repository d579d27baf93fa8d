#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dgk/groupoid.hpp"

namespace dgk {

/// The four sides of a box. Horizontal arrows run left to right
/// (src = left end, tgt = right end); vertical arrows run top to bottom
/// (src = top end, tgt = bottom end). Ordered lexicographically by
/// (top, left, right, bottom).
struct BoxFrame {
  ArrowId top{};
  ArrowId left{};
  ArrowId right{};
  ArrowId bottom{};

  auto operator<=>(const BoxFrame&) const = default;
};

/// Raw tables of a double groupoid, as stored on disk.
struct DoubleGroupoidTables {
  std::size_t base = 0;
  GroupoidTables horizontal;
  GroupoidTables vertical;
  std::size_t boxes = 0;
  std::vector<ArrowId> top, bottom;  // arrows of the horizontal groupoid
  std::vector<ArrowId> left, right;  // arrows of the vertical groupoid
  std::vector<std::array<std::uint32_t, 3>> hcompose;  // (A, B, AB) with right(A) == left(B)
  std::vector<std::array<std::uint32_t, 3>> vcompose;  // (A, B, A over B) with bottom(A) == top(B)
  std::vector<BoxId> hid;   // per vertical arrow g: the box with left = right = g
  std::vector<BoxId> vid;   // per horizontal arrow x: the box with top = bottom = x
  std::vector<BoxId> hinv;  // per box
  std::vector<BoxId> vinv;  // per box

  bool operator==(const DoubleGroupoidTables&) const = default;
};

/// A finite double groupoid with boxes as primitive elements.
///
/// Boxes are abstract ids carrying four edge maps, so several boxes may share
/// the same frame. Corner objects are derived from the edges. Construction
/// checks table shape only; the axioms are checked by validate_double().
class DoubleGroupoid {
 public:
  DoubleGroupoid() = default;
  explicit DoubleGroupoid(DoubleGroupoidTables tables);

  std::size_t base_size() const noexcept { return base_; }
  std::size_t box_count() const noexcept { return top_.size(); }
  const FiniteGroupoid& horizontal() const noexcept { return h_; }
  const FiniteGroupoid& vertical() const noexcept { return v_; }

  ArrowId top(BoxId a) const { return top_[idx(a)]; }
  ArrowId bottom(BoxId a) const { return bottom_[idx(a)]; }
  ArrowId left(BoxId a) const { return left_[idx(a)]; }
  ArrowId right(BoxId a) const { return right_[idx(a)]; }
  BoxFrame frame(BoxId a) const { return {top(a), left(a), right(a), bottom(a)}; }

  ObjectId top_left(BoxId a) const { return h_.src(top(a)); }
  ObjectId top_right(BoxId a) const { return h_.tgt(top(a)); }
  ObjectId bottom_left(BoxId a) const { return h_.src(bottom(a)); }
  ObjectId bottom_right(BoxId a) const { return h_.tgt(bottom(a)); }

  BoxId hid(ArrowId vertical_arrow) const { return hid_[idx(vertical_arrow)]; }
  BoxId vid(ArrowId horizontal_arrow) const { return vid_[idx(horizontal_arrow)]; }
  BoxId hinv(BoxId a) const { return hinv_[idx(a)]; }
  BoxId vinv(BoxId a) const { return vinv_[idx(a)]; }
  /// The box whose four sides are identities at p, taken as hid(id_V(p)).
  BoxId theta(ObjectId p) const { return hid(v_.identity(p)); }

  bool h_composable(BoxId a, BoxId b) const { return right(a) == left(b); }
  bool v_composable(BoxId a, BoxId b) const { return bottom(a) == top(b); }
  /// AB, with A on the left. Throws NotComposable / IncompleteTable.
  BoxId hcompose(BoxId a, BoxId b) const;
  /// A over B. Throws NotComposable / IncompleteTable.
  BoxId vcompose(BoxId a, BoxId b) const;
  std::optional<BoxId> try_hcompose(BoxId a, BoxId b) const { return hc_.find(a, b); }
  std::optional<BoxId> try_vcompose(BoxId a, BoxId b) const { return vc_.find(a, b); }
  /// The 2x2 composite [k l; m n], computed rows first.
  BoxId square(BoxId k, BoxId l, BoxId m, BoxId n) const {
    return vcompose(hcompose(k, l), hcompose(m, n));
  }

  std::span<const BoxId> boxes_with_left(ArrowId g) const { return by_left_[idx(g)]; }
  std::span<const BoxId> boxes_with_top(ArrowId x) const { return by_top_[idx(x)]; }

  DoubleGroupoidTables tables() const;
  bool operator==(const DoubleGroupoid& other) const { return tables() == other.tables(); }

 private:
  std::size_t base_ = 0;
  FiniteGroupoid h_, v_;
  std::vector<ArrowId> top_, bottom_, left_, right_;
  PartialTable<BoxId, BoxId, BoxId> hc_, vc_;
  std::vector<BoxId> hid_, vid_, hinv_, vinv_;
  std::vector<std::vector<BoxId>> by_left_, by_top_;
};

inline BoxId box_id(std::size_t i) { return make_id<BoxId>(i); }

/// Options for validate_double. Interchange is checked on every 2x2 square
/// up to `interchange_cap`; past the cap the check stops with a warning.
struct ValidateOptions {
  std::size_t interchange_cap = 1'000'000;
};

/// Exhaustive check of the double groupoid axioms: both edge groupoids,
/// corner coherence, composition domains and edge laws, the horizontal and
/// vertical box groupoids, identity boxes, Theta coincidence, functoriality
/// of the identity embeddings, and the interchange law.
Report validate_double(const DoubleGroupoid& d, const ValidateOptions& options = {});

/// Frames whose sides match at the four corners.
bool is_quadruple(const FiniteGroupoid& v, const FiniteGroupoid& h, const BoxFrame& f);

/// Builds the slim double groupoid whose boxes are `frames` (deduplicated and
/// sorted) with componentwise compositions. Throws FormatError if the frame
/// set is not closed under the compositions, inverses and identities.
DoubleGroupoid slim_double_groupoid(const FiniteGroupoid& v, const FiniteGroupoid& h,
                                    std::vector<BoxFrame> frames);

/// All quadruples; throws BaseMismatch when the bases differ.
DoubleGroupoid coarse(const FiniteGroupoid& v, const FiniteGroupoid& h);

/// The image of the frame map, with compositions cross-checked against every
/// composable pair of preimages (InconsistentQuotient on mismatch).
DoubleGroupoid frame(const DoubleGroupoid& d);

/// Looks up boxes by their frame.
class FrameIndex {
 public:
  explicit FrameIndex(const DoubleGroupoid& d);
  /// Boxes with this frame, ascending.
  std::span<const BoxId> boxes(const BoxFrame& f) const;
  std::optional<BoxId> unique(const BoxFrame& f) const;
  const std::map<BoxFrame, std::vector<BoxId>>& all() const noexcept { return map_; }

 private:
  std::map<BoxFrame, std::vector<BoxId>> map_;
};

/// Box of `f` (a slim double groupoid) with the same frame as box `a` of d.
std::vector<BoxId> frame_projection(const DoubleGroupoid& d, const DoubleGroupoid& f);

bool is_slim(const DoubleGroupoid& d);

/// Every (top, right) configuration has at least one filling.
bool has_filling(const DoubleGroupoid& d);
/// Every (top, right) configuration has exactly one filling.
bool is_vacant(const DoubleGroupoid& d);

struct Transitivity {
  /// Every (top, right, bottom) configuration completes to a box.
  bool horizontal = false;
  /// Every (left, top, right) configuration completes to a box.
  bool vertical = false;
};
Transitivity transitivity(const DoubleGroupoid& d);

std::string describe(const DoubleGroupoid& d, BoxId a);

}  // namespace dgk
