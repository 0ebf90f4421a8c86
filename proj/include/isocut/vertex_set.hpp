#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace isocut {

/// Subset of the vertex ids [0, universe) with bit-set semantics.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::uint64_t universe);
  VertexSet(std::uint64_t universe, std::initializer_list<std::uint64_t> members);

  static VertexSet from_members(std::uint64_t universe,
                                std::span<const std::uint64_t> members);
  static VertexSet prefix(std::uint64_t universe, std::uint64_t count);
  static VertexSet from_mask(std::uint64_t universe, std::uint64_t mask);

  std::uint64_t universe() const { return universe_; }
  std::uint64_t size() const;
  bool empty() const { return size() == 0; }

  bool contains(std::uint64_t v) const {
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }
  void insert(std::uint64_t v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(std::uint64_t v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  VertexSet complement() const;
  std::vector<std::uint64_t> members() const;

  /// Low 64 bits; only meaningful when universe() <= 64.
  std::uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }
  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Lexicographic order of the ascending member lists.
  friend bool lex_less(const VertexSet& a, const VertexSet& b);

private:
  std::uint64_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Lexicographic comparison of the ascending member lists of two masks.
inline bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  if (diff == 0) {
    return false;
  }
  const std::uint64_t low = diff & (~diff + 1);
  if (a & low) {
    // a holds the first differing element; b is smaller only if it ended.
    return (b & ~((low << 1) - 1)) != 0;
  }
  return (a & ~((low << 1) - 1)) == 0;
}

} // namespace isocut
