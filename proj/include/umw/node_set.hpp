#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace umw {

using NodeId = int;

/// Maximum number of nodes a NetworkGraph may hold (one machine word of bits).
inline constexpr int kMaxNodes = 64;

/// A set of node ids in [0, 64), stored as a bitmask.
class NodeSet {
 public:
  constexpr NodeSet() = default;
  constexpr explicit NodeSet(std::uint64_t bits) : bits_(bits) {}
  NodeSet(std::initializer_list<NodeId> ids) {
    for (NodeId id : ids) insert(id);
  }

  static NodeSet from_ids(const std::vector<NodeId>& ids) {
    NodeSet s;
    for (NodeId id : ids) s.insert(id);
    return s;
  }
  /// {0, 1, ..., n-1}
  static constexpr NodeSet all(int n) {
    return NodeSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(NodeId id) const { return (bits_ >> id) & 1U; }
  constexpr void insert(NodeId id) { bits_ |= std::uint64_t{1} << id; }
  constexpr void erase(NodeId id) { bits_ &= ~(std::uint64_t{1} << id); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr NodeId lowest() const { return std::countr_zero(bits_); }
  constexpr bool is_subset_of(NodeSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(NodeSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr NodeSet operator|(NodeSet o) const { return NodeSet(bits_ | o.bits_); }
  constexpr NodeSet operator&(NodeSet o) const { return NodeSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr NodeSet operator-(NodeSet o) const { return NodeSet(bits_ & ~o.bits_); }
  constexpr NodeSet& operator|=(NodeSet o) { bits_ |= o.bits_; return *this; }
  constexpr NodeSet& operator&=(NodeSet o) { bits_ &= o.bits_; return *this; }
  constexpr NodeSet& operator-=(NodeSet o) { bits_ &= ~o.bits_; return *this; }
  constexpr bool operator==(const NodeSet&) const = default;

  std::vector<NodeId> members() const {
    std::vector<NodeId> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<NodeId>(std::countr_zero(b)));
  }

  /// "{0,3,4}"
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for_each([&](NodeId id) {
      if (!first) s += ',';
      s += std::to_string(id);
      first = false;
    });
    return s + "}";
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the ascending member lists ({0,5} < {1}, {0} < {0,1}).
inline bool lex_less(NodeSet a, NodeSet b) {
  std::uint64_t x = a.bits(), y = b.bits();
  while (x != 0 && y != 0) {
    int i = std::countr_zero(x), j = std::countr_zero(y);
    if (i != j) return i < j;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

}  // namespace umw
