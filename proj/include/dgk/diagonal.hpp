#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dgk/double_groupoid.hpp"
#include "dgk/free_product.hpp"

namespace dgk {

/// A groupoid d over the base with maps i: h -> d and j: v -> d, both the
/// identity on objects.
struct Diagram {
  FiniteGroupoid d;
  FiniteGroupoid h;
  FiniteGroupoid v;
  GroupoidMorphism i;
  GroupoidMorphism j;
};

Report validate_diagram(const Diagram& dg);
/// Every arrow of d is j(g) i(x) for some composable g, x.
bool is_factorization(const Diagram& dg);

/// The pair groupoid on n objects with i and j the identity.
Diagram pair_diagram(std::size_t n);
/// The symmetric group on three letters with j the rotations and i the
/// subgroup generated by one transposition.
Diagram s3_diagram();

/// Frames (x; h, g; y) with i(x) j(g) = j(h) i(y), as a slim double groupoid.
DoubleGroupoid square_of_diagram(const Diagram& dg);

/// The core of the square is isomorphic, via E -> (l(E), b(E)), to the pairs
/// (g, x) with j(g) = i(x^-1), multiplied as (g, x)(g', x') = (g' g, x x').
Report core_of_square_check(const Diagram& dg);

/// The diagonal groupoid in the pair model: composable pairs (g, x) modulo
/// the relation generated by core boxes, multiplied through filling boxes.
struct DiagonalModel {
  Diagram diagram;
  std::vector<std::pair<ArrowId, ArrowId>> pairs;  // (g, x), ascending
  std::vector<ArrowId> class_of_pair;              // arrow of diagram.d
  /// Products checked for independence of representatives and fillings.
  std::size_t product_checks = 0;
};

/// Throws NotSlim, NoFilling, and InconsistentQuotient if a class product
/// depends on the chosen representatives or filling box.
DiagonalModel diagonal_model(const DoubleGroupoid& d);
Diagram diagonal(const DoubleGroupoid& d);

/// Exhaustive well-definedness report: every pair of representatives with
/// every filling box gives the same class; the box relations hold; the
/// result is a valid factorization.
Report diagonal_report(const DoubleGroupoid& d);

/// The value of a word of the free product in d, via i and j.
ArrowId evaluate(const Diagram& dg, const ReducedWord& w);

/// square(diagonal(D)) against D with the identity on edges and frames.
Report roundtrip_slim(const DoubleGroupoid& d);
/// diagonal(square(d)) against d through the unique f with f i' = i and
/// f j' = j. Throws NotFactorization.
Report roundtrip_diagram(const Diagram& dg);
/// The map f above, when it exists and is an isomorphism.
std::optional<GroupoidMorphism> diagram_iso(const Diagram& from, const Diagram& to);

struct FusionVerdict {
  bool fusion = false;
  bool v_connected = false;
  bool bottom_injective_on_core = false;
  Report detail;
};
/// Throws NoFilling.
FusionVerdict is_fusion(const DoubleGroupoid& d);

/// For slim D with filling: vacant iff i and j are injective and every arrow
/// of the diagonal has exactly one (j, i) decomposition.
Report vacancy_bridge(const DoubleGroupoid& d);

enum class OracleVerdict : std::uint8_t { Member, BoundExceeded };

/// Breadth-first search over products of at most `max_factors` generators
/// u [A]^(+-1) u^-1 based at the word's base point, where u is empty or one
/// letter. Member means the word lies in the normal closure of the box
/// words; BoundExceeded is inconclusive. Throws NotSlim, NoFilling.
OracleVerdict j_closure_oracle(const DoubleGroupoid& d, const ReducedWord& w, std::size_t max_factors);

}  // namespace dgk
