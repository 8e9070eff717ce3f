#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace ringline {

// Fixed-size (at construction) bit set over indices [0, size).
// Bits beyond size() in the last word are always zero.
class Bitset {
public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + word_bits - 1) / word_bits, 0) {}

  static Bitset full(std::size_t size) {
    Bitset b(size);
    for (auto& w : b.words_) w = ~word_type{0};
    b.trim();
    return b;
  }

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept {
    assert(i < size_);
    return (words_[i / word_bits] >> (i % word_bits)) & 1U;
  }
  void set(std::size_t i) noexcept {
    assert(i < size_);
    words_[i / word_bits] |= word_type{1} << (i % word_bits);
  }
  void reset(std::size_t i) noexcept {
    assert(i < size_);
    words_[i / word_bits] &= ~(word_type{1} << (i % word_bits));
  }
  void set(std::size_t i, bool value) noexcept { value ? set(i) : reset(i); }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool any() const noexcept {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const noexcept { return !any(); }

  // Index of the lowest set bit, or size() when empty.
  std::size_t first() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return k * word_bits + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return size_;
  }

  bool is_subset_of(const Bitset& other) const noexcept {
    assert(size_ == other.size_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  // |this & other| without materializing the intersection.
  std::size_t intersection_count(const Bitset& other) const noexcept {
    assert(size_ == other.size_);
    std::size_t n = 0;
    for (std::size_t k = 0; k < words_.size(); ++k)
      n += static_cast<std::size_t>(std::popcount(words_[k] & other.words_[k]));
    return n;
  }

  Bitset& operator&=(const Bitset& o) noexcept {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) noexcept {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  // this &= ~o
  Bitset& subtract(const Bitset& o) noexcept {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  Bitset complement() const {
    Bitset b(*this);
    for (auto& w : b.words_) w = ~w;
    b.trim();
    return b;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;
  // Total order so bit sets can key ordered containers.
  friend bool operator<(const Bitset& a, const Bitset& b) noexcept {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    return a.words_ < b.words_;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      word_type w = words_[k];
      while (w) {
        f(k * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const noexcept {
    std::size_t h = size_;
    for (auto w : words_) h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

private:
  void trim() noexcept {
    if (size_ % word_bits != 0 && !words_.empty())
      words_.back() &= (word_type{1} << (size_ % word_bits)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const noexcept { return b.hash(); }
};

}  // namespace ringline
