#pragma once

#include <optional>
#include <vector>

#include "dgk/bundle.hpp"
#include "dgk/double_groupoid.hpp"

namespace dgk {

/// Boxes with identity top and right, as a groupoid over the base with
/// source bl(E) and target br(E). Arrow k of `groupoid` is box `boxes[k]`.
struct CoreGroupoid {
  FiniteGroupoid groupoid;
  std::vector<BoxId> boxes;
  std::vector<std::optional<ArrowId>> arrow_of_box;  // per box of D

  ArrowId arrow(BoxId b) const { return *arrow_of_box[idx(b)]; }
  bool contains(BoxId b) const { return arrow_of_box[idx(b)].has_value(); }
};

bool is_core_box(const DoubleGroupoid& d, BoxId e);

/// E then M in the core: the 2x2 composite [hid(l M), M; E, vid(b M)].
/// Requires br(E) = bl(M); throws NotComposable otherwise.
BoxId core_compose(const DoubleGroupoid& d, BoxId e, BoxId m);
/// The core inverse of E: the vertical inverse of E vid(b(E)^-1).
BoxId core_inverse(const DoubleGroupoid& d, BoxId e);

/// Throws SolveFailed if the core is not closed under its operations.
CoreGroupoid core(const DoubleGroupoid& d);

/// E acting on A, the same composite as core_compose with A in place of M.
/// Requires br(E) = bl(A). Lands on a box with the top and right of A.
BoxId core_act(const DoubleGroupoid& d, BoxId e, BoxId a);

/// core_act as an action over the bottom-left vertex map; element k is box k.
BundleAction core_action(const DoubleGroupoid& d, const CoreGroupoid& e);

/// For every box B: the core orbit of B is the set of boxes with the top and
/// right of B, and the isotropy of B is trivial.
Report orbit_is_ur(const DoubleGroupoid& d);

/// Boxes with four identity sides, fibered over their common vertex.
/// Element k of `bundle` is box `boxes[k]`.
struct KernelBundle {
  AbelianGroupBundle bundle;
  std::vector<BoxId> boxes;
  std::vector<std::optional<ElementId>> element_of_box;  // per box of D

  ElementId element(BoxId b) const { return *element_of_box[idx(b)]; }
  bool contains(BoxId b) const { return element_of_box[idx(b)].has_value(); }
};

/// Throws NotAbelian when the two compositions disagree on a fiber or are
/// not commutative (only possible for an invalid D).
KernelBundle kernel(const DoubleGroupoid& d);

/// Checks the fiber group laws and that the fiber sum agrees with
/// horizontal, vertical and core composition.
Report kernel_report(const DoubleGroupoid& d, const KernelBundle& k);

/// Vertical arrows act by g.K = hid(g) over K over hid(g^-1).
BundleAction v_action(const DoubleGroupoid& d, const KernelBundle& k);
/// Horizontal arrows act by x.K = vid(x) K vid(x^-1).
BundleAction h_action(const DoubleGroupoid& d, const KernelBundle& k);

/// The frame map restricted to the core lands onto the core of the frame,
/// with kernel the kernel bundle, and |E(P)| = |K(P)| |core of frame (P)|.
/// Throws NoFilling when D lacks the filling condition.
Report frame_core_sequence(const DoubleGroupoid& d);

}  // namespace dgk
