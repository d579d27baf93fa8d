#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dgk/double_groupoid.hpp"

namespace dgk {

enum class Side : std::uint8_t { H, V };

struct Letter {
  Side side = Side::H;
  ArrowId arrow{};

  auto operator<=>(const Letter&) const = default;
};

using Path = std::vector<Letter>;

/// A reduced word: either the point [base] (no letters) or a nonempty
/// alternating sequence of non-identity letters starting at `base`.
struct ReducedWord {
  ObjectId base{};
  std::vector<Letter> letters;

  std::size_t length() const noexcept { return letters.size(); }
  auto operator<=>(const ReducedWord&) const = default;
};

/// The free product of two groupoids over a common base, with words in
/// reduced form. Letters compose left to right like the groupoids.
class FreeProduct {
 public:
  /// Throws BaseMismatch if the bases differ.
  FreeProduct(FiniteGroupoid h, FiniteGroupoid v);

  const FiniteGroupoid& groupoid(Side s) const { return s == Side::H ? h_ : v_; }
  ObjectId src(Letter u) const { return groupoid(u.side).src(u.arrow); }
  ObjectId tgt(Letter u) const { return groupoid(u.side).tgt(u.arrow); }
  bool is_identity(Letter u) const { return groupoid(u.side).is_identity(u.arrow); }
  Letter inverse(Letter u) const { return {u.side, groupoid(u.side).inverse(u.arrow)}; }

  /// Throws FormatError for an out-of-range letter, NotChained for an empty
  /// path or a break in the endpoints.
  void check_chained(const Path& p) const;
  bool is_reduced(const ReducedWord& w) const;

  ReducedWord point(ObjectId p) const { return {p, {}}; }
  ReducedWord letter(Letter u) const { return reduce({u}); }
  /// Normal form of a nonempty chained path, computed with a stack.
  ReducedWord reduce(const Path& p) const;

  /// One applicable reduction: drop an identity letter (paths of length > 1),
  /// collapse a lone identity letter to a point, or merge positions pos and
  /// pos + 1 when they come from the same groupoid.
  struct Redex {
    enum class Kind : std::uint8_t { Drop, Collapse, Merge } kind;
    std::size_t pos;
  };
  std::vector<Redex> redexes(const Path& p) const;
  /// Applies redexes chosen uniformly at random until none is left.
  ReducedWord reduce_randomly(const Path& p, std::mt19937_64& rng) const;

  ObjectId source(const ReducedWord& w) const { return w.base; }
  ObjectId target(const ReducedWord& w) const { return w.letters.empty() ? w.base : tgt(w.letters.back()); }
  /// Throws NotChained unless target(a) == source(b).
  ReducedWord concat(const ReducedWord& a, const ReducedWord& b) const;
  ReducedWord inverse(const ReducedWord& w) const;

 private:
  FiniteGroupoid h_, v_;
};

/// The loop t(A) r(A) b(A)^-1 l(A)^-1 at the top-left corner of A, reduced.
ReducedWord box_word(const FreeProduct& fp, const DoubleGroupoid& d, BoxId a);

/// "V:3 H:1" style rendering; a point renders as "[P]".
std::string to_string(const ReducedWord& w);
/// Parses "V:3 H:1 V:2". Throws FormatError on a malformed token.
Path parse_path(const std::string& text);

/// How the last letter of p meets the first letter of q.
enum class Boundary : std::uint8_t {
  DifferentSides,         // case (i)
  SameSideNotInverse,     // case (ii)
  InverseThenNotInverse,  // case (iii): next pair absent or not inverse
  InverseThenInverse,     // further cancellation, outside the three cases
};
/// Both words must be nonempty and chained.
Boundary boundary(const FreeProduct& fp, const ReducedWord& p, const ReducedWord& q);
/// The length the three-case rule states for pq: N+M, N+M-1, N+M-2, or
/// nothing for InverseThenInverse.
std::optional<std::size_t> stated_length(const FreeProduct& fp, const ReducedWord& p, const ReducedWord& q);
/// The length actually forced by the boundary: as stated, except that in
/// case (iii) with both neighbours present the neighbours merge, giving
/// N+M-3.
std::optional<std::size_t> forced_length(const FreeProduct& fp, const ReducedWord& p, const ReducedWord& q);

/// Every reduced word of length 1..max_len, in lexicographic order.
std::vector<ReducedWord> all_reduced_words(const FreeProduct& fp, std::size_t max_len);

}  // namespace dgk
