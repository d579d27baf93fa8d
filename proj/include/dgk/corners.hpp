#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "dgk/double_groupoid.hpp"

namespace dgk {

/// The four corner functions. Each counts the boxes that complete a fixed
/// pair of adjacent sides meeting at the named corner.
enum class Corner : std::uint8_t {
  UpperRight,  // top and right
  UpperLeft,   // top and left
  LowerLeft,   // left and bottom
  LowerRight,  // bottom and right
};

inline constexpr std::array<Corner, 4> kAllCorners = {Corner::UpperRight, Corner::UpperLeft,
                                                      Corner::LowerLeft, Corner::LowerRight};
const char* corner_name(Corner c);

/// Boxes with top x and right g, ascending. Throws NotMatching unless the
/// target of x is the source of g.
std::vector<BoxId> ur_set(const DoubleGroupoid& d, ArrowId x, ArrowId g);

/// Corner function values, counted directly from the box set.
struct CornerReport {
  /// per_box[c][B]: number of boxes sharing B's two sides at corner c.
  std::array<std::vector<std::size_t>, 4> per_box;
  /// theta[Q]: the upper-right count of the identity box at Q.
  std::vector<std::size_t> theta;

  std::size_t at(Corner c, BoxId b) const {
    return per_box[static_cast<std::size_t>(c)][idx(b)];
  }
};

CornerReport corners(const DoubleGroupoid& d);

/// Checks the corner identities on every box: the count at a corner equals
/// |component of Q in the core| * |core vertex group at Q| for the opposite
/// vertex Q, the four counts agree at identity boxes, theta is constant on
/// core components, the adjacency identities for L|M and L over N, the
/// composite identities, and vacancy versus triviality of the core.
Report corner_facts(const DoubleGroupoid& d);

}  // namespace dgk
