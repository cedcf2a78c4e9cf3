#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>

namespace tcg {

using Vertex = std::size_t;

/// Maximum number of vertices any Graph may hold.
inline constexpr std::size_t kMaxVertices = 128;

/// Fixed-width bit set over vertex indices [0, kMaxVertices).
///
/// All operations are branch-free word ops on two 64-bit words; nothing
/// here allocates. The set carries no vertex count, so complementing is
/// always done against an explicit universe (see `VertexSet::first_n`).
class VertexSet {
 public:
  constexpr VertexSet() = default;

  constexpr VertexSet(std::initializer_list<Vertex> vertices) {
    for (Vertex v : vertices) set(v);
  }

  /// The set {0, 1, ..., n-1}.
  static constexpr VertexSet first_n(std::size_t n) {
    VertexSet s;
    if (n >= 64) {
      s.words_[0] = ~std::uint64_t{0};
      s.words_[1] = n >= 128 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n - 64)) - 1;
    } else {
      s.words_[0] = (std::uint64_t{1} << n) - 1;
    }
    return s;
  }

  static constexpr VertexSet singleton(Vertex v) {
    VertexSet s;
    s.set(v);
    return s;
  }

  constexpr void set(Vertex v) { words_[v >> 6] |= bit(v); }
  constexpr void reset(Vertex v) { words_[v >> 6] &= ~bit(v); }
  [[nodiscard]] constexpr bool test(Vertex v) const { return (words_[v >> 6] & bit(v)) != 0; }
  [[nodiscard]] constexpr bool contains(Vertex v) const { return test(v); }

  [[nodiscard]] constexpr std::size_t count() const {
    return static_cast<std::size_t>(std::popcount(words_[0]) + std::popcount(words_[1]));
  }
  [[nodiscard]] constexpr bool empty() const { return (words_[0] | words_[1]) == 0; }
  [[nodiscard]] constexpr bool intersects(const VertexSet& o) const {
    return ((words_[0] & o.words_[0]) | (words_[1] & o.words_[1])) != 0;
  }
  [[nodiscard]] constexpr bool is_subset_of(const VertexSet& o) const {
    return ((words_[0] & ~o.words_[0]) | (words_[1] & ~o.words_[1])) == 0;
  }

  /// Smallest member; kMaxVertices when empty.
  [[nodiscard]] constexpr Vertex first() const {
    if (words_[0] != 0) return static_cast<Vertex>(std::countr_zero(words_[0]));
    if (words_[1] != 0) return 64 + static_cast<Vertex>(std::countr_zero(words_[1]));
    return kMaxVertices;
  }

  /// Largest member plus one; 0 when empty.
  [[nodiscard]] constexpr std::size_t bound() const {
    if (words_[1] != 0) return 128 - static_cast<std::size_t>(std::countl_zero(words_[1]));
    if (words_[0] != 0) return 64 - static_cast<std::size_t>(std::countl_zero(words_[0]));
    return 0;
  }

  constexpr VertexSet& operator|=(const VertexSet& o) {
    words_[0] |= o.words_[0];
    words_[1] |= o.words_[1];
    return *this;
  }
  constexpr VertexSet& operator&=(const VertexSet& o) {
    words_[0] &= o.words_[0];
    words_[1] &= o.words_[1];
    return *this;
  }
  constexpr VertexSet& operator-=(const VertexSet& o) {
    words_[0] &= ~o.words_[0];
    words_[1] &= ~o.words_[1];
    return *this;
  }
  friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend constexpr VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;
  friend constexpr auto operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto c = a.words_[1] <=> b.words_[1]; c != 0) return c;
    return a.words_[0] <=> b.words_[0];
  }

  [[nodiscard]] constexpr std::uint64_t word(std::size_t i) const { return words_[i]; }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr iterator(std::uint64_t lo, std::uint64_t hi) : lo_(lo), hi_(hi) {}
    constexpr Vertex operator*() const {
      return lo_ != 0 ? static_cast<Vertex>(std::countr_zero(lo_)) : 64 + static_cast<Vertex>(std::countr_zero(hi_));
    }
    constexpr iterator& operator++() {
      if (lo_ != 0) {
        lo_ &= lo_ - 1;
      } else {
        hi_ &= hi_ - 1;
      }
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend constexpr bool operator==(const iterator&, const iterator&) = default;

   private:
    std::uint64_t lo_ = 0;
    std::uint64_t hi_ = 0;
  };

  [[nodiscard]] constexpr iterator begin() const { return iterator(words_[0], words_[1]); }
  [[nodiscard]] constexpr iterator end() const { return iterator(); }

 private:
  static constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v & 63); }

  std::array<std::uint64_t, 2> words_{};
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept {
    std::uint64_t h = s.word(0) * 0x9E3779B97F4A7C15ULL;
    h ^= (s.word(1) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2));
    return static_cast<std::size_t>(h);
  }
};

}  // namespace tcg
