#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <vector>

namespace snarklab {

// Fixed-length bit vector keyed by edge index. The universal currency for
// subgraphs, hitting sets and colour classes. All binary operations require
// both operands to share one host edge count.
class EdgeSet {
public:
  EdgeSet() = default;

  explicit EdgeSet(std::size_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  static EdgeSet full(std::size_t size) {
    EdgeSet s(size);
    for (std::size_t i = 0; i < size; ++i) s.set(i);
    return s;
  }

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    assert(i < size_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i) {
    assert(i < size_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void reset(std::size_t i) {
    assert(i < size_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool any() const { return !empty(); }

  EdgeSet operator|(const EdgeSet& o) const {
    EdgeSet r = *this;
    r |= o;
    return r;
  }

  EdgeSet operator&(const EdgeSet& o) const {
    EdgeSet r = *this;
    r &= o;
    return r;
  }

  // set difference
  EdgeSet operator-(const EdgeSet& o) const {
    EdgeSet r = *this;
    r -= o;
    return r;
  }

  EdgeSet& operator|=(const EdgeSet& o) {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  EdgeSet& operator&=(const EdgeSet& o) {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  EdgeSet& operator-=(const EdgeSet& o) {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  EdgeSet without(std::size_t i) const {
    EdgeSet r = *this;
    r.reset(i);
    return r;
  }

  bool subset_of(const EdgeSet& o) const {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const EdgeSet& o) const {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool operator==(const EdgeSet& o) const {
    return size_ == o.size_ && words_ == o.words_;
  }

  bool operator!=(const EdgeSet& o) const { return !(*this == o); }

  // Canonical order: lexicographic on the ascending sequence of set indices,
  // a strict prefix ordering first ({1} < {1,2} < {1,3} < {2}).
  bool operator<(const EdgeSet& o) const {
    assert(size_ == o.size_);
    std::size_t a = first(), b = o.first();
    while (a < size_ && b < size_) {
      if (a != b) return a < b;
      a = next(a);
      b = o.next(b);
    }
    return a == size_ && b < size_;
  }

  // First set index, or size() when empty.
  std::size_t first() const { return next_from(0); }

  // First set index strictly after i, or size().
  std::size_t next(std::size_t i) const { return next_from(i + 1); }

  std::vector<std::uint32_t> indices() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for (std::size_t i = first(); i < size_; i = next(i))
      out.push_back(static_cast<std::uint32_t>(i));
    return out;
  }

  static EdgeSet from_indices(std::size_t size,
                              const std::vector<std::uint32_t>& idx) {
    EdgeSet s(size);
    for (auto i : idx) s.set(i);
    return s;
  }

  std::size_t hash() const {
    std::size_t h = size_;
    for (auto w : words_)
      h = h * 0x9e3779b97f4a7c15ull + std::hash<std::uint64_t>{}(w);
    return h;
  }

private:
  std::size_t next_from(std::size_t i) const {
    if (i >= size_) return size_;
    std::size_t wi = i >> 6;
    std::uint64_t w = words_[wi] >> (i & 63);
    if (w) return i + std::countr_zero(w);
    for (++wi; wi < words_.size(); ++wi)
      if (words_[wi]) return (wi << 6) + std::countr_zero(words_[wi]);
    return size_;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct EdgeSetHash {
  std::size_t operator()(const EdgeSet& s) const { return s.hash(); }
};

}  // namespace snarklab
