#include "isocut/vertex_set.hpp"

#include <algorithm>

#include "isocut/error.hpp"

namespace isocut {

namespace {

std::size_t word_count(std::uint64_t universe) {
  return static_cast<std::size_t>((universe + 63) / 64);
}

} // namespace

VertexSet::VertexSet(std::uint64_t universe)
    : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::uint64_t universe, std::initializer_list<std::uint64_t> members)
    : VertexSet(universe) {
  for (const auto v : members) {
    if (v >= universe) {
      throw DomainError("vertex " + std::to_string(v) + " outside universe");
    }
    insert(v);
  }
}

VertexSet VertexSet::from_members(std::uint64_t universe,
                                  std::span<const std::uint64_t> members) {
  VertexSet set(universe);
  for (const auto v : members) {
    if (v >= universe) {
      throw DomainError("vertex " + std::to_string(v) + " outside universe");
    }
    set.insert(v);
  }
  return set;
}

VertexSet VertexSet::prefix(std::uint64_t universe, std::uint64_t count) {
  if (count > universe) {
    throw DomainError("prefix longer than universe");
  }
  VertexSet set(universe);
  const std::size_t full = static_cast<std::size_t>(count / 64);
  for (std::size_t w = 0; w < full; ++w) {
    set.words_[w] = ~std::uint64_t{0};
  }
  if (count % 64 != 0) {
    set.words_[full] = (std::uint64_t{1} << (count % 64)) - 1;
  }
  return set;
}

VertexSet VertexSet::from_mask(std::uint64_t universe, std::uint64_t mask) {
  if (universe > 64 || (universe < 64 && (mask >> universe) != 0)) {
    throw DomainError("mask does not fit the universe");
  }
  VertexSet set(universe);
  if (!set.words_.empty()) {
    set.words_[0] = mask;
  }
  return set;
}

std::uint64_t VertexSet::size() const {
  std::uint64_t total = 0;
  for (const auto w : words_) {
    total += static_cast<std::uint64_t>(std::popcount(w));
  }
  return total;
}

VertexSet VertexSet::complement() const {
  VertexSet out(universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    out.words_[w] = ~words_[w];
  }
  if (universe_ % 64 != 0 && !out.words_.empty()) {
    out.words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }
  return out;
}

std::vector<std::uint64_t> VertexSet::members() const {
  std::vector<std::uint64_t> out;
  out.reserve(size());
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::uint64_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

} // namespace isocut
