#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dgk/bundle.hpp"
#include "dgk/core_kernel.hpp"
#include "dgk/double_groupoid.hpp"

namespace dgk {

/// A choice of preimage under the frame map: mu[F] is a box of D over the
/// frame box F.
struct Section {
  std::vector<BoxId> mu;
  BoxId operator()(BoxId f) const { return mu[idx(f)]; }
};

/// Least preimage of each frame box, except that the identity frames hid(g)
/// and vid(x) go to the identity boxes of D.
Section choose_section(const DoubleGroupoid& d, const DoubleGroupoid& f);

/// Cocycle values keyed by composable pairs of frame boxes. A missing key is
/// an error, never an implicit zero.
using CocycleTable = std::map<std::pair<BoxId, BoxId>, ElementId>;

struct CocyclePair {
  CocycleTable tau;    // (F, G) with F | G
  CocycleTable sigma;  // (F, G) with F over G

  bool operator==(const CocyclePair&) const = default;
};

/// Kernel bundle, frame, edge actions on the bundle, and cocycles.
struct ExtensionData {
  AbelianGroupBundle bundle;
  DoubleGroupoid frame;
  BundleAction vact;
  BundleAction hact;
  CocyclePair cocycles;
};

/// Solves mu(F)mu(G) = tau(F,G) acting on mu(FG), and the vertical analogue,
/// for every composable pair. Throws SolveFailed if a solution is missing or
/// not a kernel box.
CocyclePair extract_cocycles(const DoubleGroupoid& d, const DoubleGroupoid& f, const Section& mu,
                             const KernelBundle& k);

/// Checks the data shape (bundle, frame, actions by automorphisms, complete
/// cocycle tables, base and normalization conditions) and then the four
/// equations: both cocycle identities, compatibility of the two actions, and
/// the mixed identity on every 2x2 square of frame boxes.
Report validate_cocycle_equations(const ExtensionData& e);

/// Box (k, F) of the built double groupoid.
struct ExtensionBox {
  ElementId k;
  BoxId f;
};
/// Box order used by build_extension: by frame box, then by fiber position.
std::vector<ExtensionBox> extension_boxes(const ExtensionData& e);

/// Pairs (K, F) with p(K) = bl(F), twisted by the actions and cocycles.
/// Throws CocycleInvalid unless validate_cocycle_equations passes.
DoubleGroupoid build_extension(const ExtensionData& e);

/// Kernel, frame, both edge actions, and the cocycles of the canonical section.
ExtensionData decompose(const DoubleGroupoid& d);

/// The map (K, F) -> K acting on mu(F), from the boxes of
/// build_extension(decompose(d)) to the boxes of d.
std::vector<BoxId> extension_witness(const DoubleGroupoid& d);

/// Checks that (K, F) -> K acting on mu(F) is a bijection onto the boxes of D,
/// so that |B| equals the sum over frame boxes F of |K(bl F)|.
Report psi_check(const DoubleGroupoid& d, const Section& mu);

/// Coboundary of a frame function c (zero on identity frames):
/// tau(F,G) = c(F) + b(F).c(G) - c(FG) and
/// sigma(F,G) = l(G)^-1.c(F) + c(G) - c(F over G).
CocyclePair coboundary(const DoubleGroupoid& f, const AbelianGroupBundle& k, const BundleAction& vact,
                       const BundleAction& hact, const std::vector<ElementId>& c);

/// Cocycles that are zero everywhere.
CocyclePair trivial_cocycles(const DoubleGroupoid& f, const AbelianGroupBundle& k);

}  // namespace dgk
