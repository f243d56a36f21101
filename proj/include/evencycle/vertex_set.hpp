#pragma once

/**
 * Fixed-width bit set over vertex indices. The width is chosen at build time
 * through EVENCYCLE_MAX_VERTICES (default 128, i.e. two words per row), so the
 * set operations used in the search kernels compile to a handful of word ops.
 */

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#ifndef EVENCYCLE_MAX_VERTICES
#define EVENCYCLE_MAX_VERTICES 128
#endif

namespace evencycle {

using Vertex = int;

inline constexpr int kMaxVertices = EVENCYCLE_MAX_VERTICES;
inline constexpr int kWords = (kMaxVertices + 63) / 64;

static_assert(kMaxVertices > 0, "vertex cap must be positive");

class VertexSet {
public:
  constexpr VertexSet() = default;

  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs)
      set(v);
  }

  /// All vertices in [0, n).
  static VertexSet prefix(int n) {
    VertexSet s;
    for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
      s.words_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return s;
  }

  /// All vertices in (v, n).
  static VertexSet above(Vertex v, int n) {
    VertexSet s = prefix(n);
    s.andnot(prefix(v + 1));
    return s;
  }

  void set(Vertex v) { words_[v >> 6] |= bit(v); }
  void reset(Vertex v) { words_[v >> 6] &= ~bit(v); }
  bool test(Vertex v) const { return (words_[v >> 6] & bit(v)) != 0; }

  int count() const {
    int c = 0;
    for (auto w : words_)
      c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w)
        return true;
    return false;
  }
  bool none() const { return !any(); }

  bool intersects(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & o.words_[i])
        return true;
    return false;
  }

  bool subset_of(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & ~o.words_[i])
        return false;
    return true;
  }

  /// Smallest member, or -1 when empty.
  Vertex first() const { return next(0); }

  /// Smallest member >= from, or -1.
  Vertex next(Vertex from) const {
    if (from >= kWords * 64)
      return -1;
    int w = from >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (word)
        return (w << 6) + std::countr_zero(word);
      if (++w >= kWords)
        return -1;
      word = words_[w];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (int w = 0; w < kWords; ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        f(static_cast<Vertex>((w << 6) + std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i)
      words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i)
      words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& andnot(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i)
      words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a.andnot(b); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
  static constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v & 63); }

  std::array<std::uint64_t, kWords> words_{};
};

} // namespace evencycle
