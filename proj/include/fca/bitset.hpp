#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace fca {

/// Fixed-size dynamic bit vector backed by 64-bit words. Bits beyond `size`
/// in the last word are kept zero; every operation preserves that invariant.
class Bitset {
 public:
  Bitset() = default;

  explicit Bitset(std::size_t size, bool fill = false)
      : size_(size), words_(word_count(size), fill ? ~std::uint64_t{0} : 0) {
    if (fill) mask_tail();
  }

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    assert(i < size_);
    return (words_[i >> 6] >> (i & 63)) & 1;
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
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool none() const {
    for (std::uint64_t w : words_)
      if (w != 0) return false;
    return true;
  }

  bool any() const { return !none(); }

  void intersect_with(const Bitset& other) {
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  }

  /// this = a & b, reusing existing storage (no allocation once sized).
  void assign_intersection(const Bitset& a, const Bitset& b) {
    assert(a.size_ == b.size_);
    size_ = a.size_;
    words_.resize(a.words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = a.words_[i] & b.words_[i];
  }

  void unite_with(const Bitset& other) {
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  }

  bool is_subset_of(const Bitset& other) const {
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  bool intersects(const Bitset& other) const {
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

  /// Ascending index order of set bits.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        fn((w << 6) + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  /// Shortlex order on the ascending index sequences: smaller cardinality
  /// first, ties broken lexicographically. For equal cardinalities the
  /// lexicographically smaller sequence is the one containing the lowest
  /// index at which the two sets differ.
  bool shortlex_less(const Bitset& other) const {
    assert(size_ == other.size_);
    const std::size_t ca = count();
    const std::size_t cb = other.count();
    if (ca != cb) return ca < cb;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const std::uint64_t diff = words_[i] ^ other.words_[i];
      if (diff) {
        const std::uint64_t low = diff & (~diff + 1);
        return (words_[i] & low) != 0;
      }
    }
    return false;
  }

  std::span<const std::uint64_t> words() const { return words_; }

  std::size_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint64_t w : words_) {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h ^ size_);
  }

 private:
  static std::size_t word_count(std::size_t size) { return (size + 63) / 64; }

  void mask_tail() {
    const std::size_t rem = size_ & 63;
    if (rem != 0 && !words_.empty()) words_.back() &= (~std::uint64_t{0}) >> (64 - rem);
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ObjectTag;
struct AttributeTag;

/// Bit vector over the object (or attribute) indices of one context.
/// The tag keeps object sets and attribute sets distinct at compile time;
/// operations require both operands to share the same dimension.
template <typename Tag>
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t dimension, bool fill = false) : bits_(dimension, fill) {}

  static IndexSet empty(std::size_t dimension) { return IndexSet(dimension, false); }
  static IndexSet full(std::size_t dimension) { return IndexSet(dimension, true); }

  std::size_t dimension() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool test(std::size_t i) const { return bits_.test(i); }
  void set(std::size_t i) { bits_.set(i); }
  void reset(std::size_t i) { bits_.reset(i); }
  bool none() const { return bits_.none(); }
  bool any() const { return bits_.any(); }

  void intersect_with(const IndexSet& o) { bits_.intersect_with(o.bits_); }
  void assign_intersection(const IndexSet& a, const IndexSet& b) {
    bits_.assign_intersection(a.bits_, b.bits_);
  }
  void unite_with(const IndexSet& o) { bits_.unite_with(o.bits_); }
  bool is_subset_of(const IndexSet& o) const { return bits_.is_subset_of(o.bits_); }
  bool intersects(const IndexSet& o) const { return bits_.intersects(o.bits_); }
  bool shortlex_less(const IndexSet& o) const { return bits_.shortlex_less(o.bits_); }

  friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.bits_ == b.bits_; }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    bits_.for_each(std::forward<Fn>(fn));
  }

  std::vector<std::size_t> indices() const { return bits_.indices(); }
  std::size_t hash() const { return bits_.hash(); }

 private:
  Bitset bits_;
};

using ObjectSet = IndexSet<ObjectTag>;
using AttributeSet = IndexSet<AttributeTag>;

template <typename Tag>
struct IndexSetHash {
  std::size_t operator()(const IndexSet<Tag>& s) const { return s.hash(); }
};

}  // namespace fca
