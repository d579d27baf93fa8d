#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <type_traits>
#include <unordered_map>
#include <vector>

namespace dgk {

// Dense indices. Each kind of element gets its own enum so that an arrow of
// the horizontal groupoid cannot be passed where a box is expected.
enum class ObjectId : std::uint32_t {};
enum class ArrowId : std::uint32_t {};
enum class BoxId : std::uint32_t {};
enum class ElementId : std::uint32_t {};

template <class Id>
  requires std::is_enum_v<Id>
constexpr std::size_t idx(Id id) noexcept {
  return static_cast<std::size_t>(id);
}

template <class Id>
  requires std::is_enum_v<Id>
constexpr Id make_id(std::size_t i) noexcept {
  return static_cast<Id>(static_cast<std::uint32_t>(i));
}

// A partial binary operation on dense indices, stored as an explicit table of
// defined entries. Iteration through sorted_entries() is ascending in (a, b).
template <class Left, class Right, class Result>
class PartialTable {
 public:
  using Entry = std::array<std::uint32_t, 3>;

  std::optional<Result> find(Left a, Right b) const {
    auto it = map_.find(key(a, b));
    if (it == map_.end()) return std::nullopt;
    return static_cast<Result>(it->second);
  }
  bool contains(Left a, Right b) const { return map_.count(key(a, b)) != 0; }
  void set(Left a, Right b, Result c) {
    map_[key(a, b)] = static_cast<std::uint32_t>(c);
  }
  std::size_t size() const noexcept { return map_.size(); }

  std::vector<Entry> sorted_entries() const {
    std::vector<Entry> out;
    out.reserve(map_.size());
    for (const auto& [k, v] : map_)
      out.push_back({static_cast<std::uint32_t>(k >> 32),
                     static_cast<std::uint32_t>(k & 0xffffffffu), v});
    std::sort(out.begin(), out.end());
    return out;
  }

  bool operator==(const PartialTable& other) const { return map_ == other.map_; }

 private:
  static std::uint64_t key(Left a, Right b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  }
  std::unordered_map<std::uint64_t, std::uint32_t> map_;
};

}  // namespace dgk
