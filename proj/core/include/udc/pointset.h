#ifndef UDC_POINTSET_H_
#define UDC_POINTSET_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace udc {

// Fixed-capacity bitset over point indices.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(int capacity)
      : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

  int capacity() const { return capacity_; }
  void Set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void Reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool Test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  int Count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool Any() const {
    for (uint64_t w : words_) {
      if (w) return true;
    }
    return false;
  }
  bool Intersects(const PointSet& o) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }
  bool SubsetOf(const PointSet& o) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }
  int CountAnd(const PointSet& o) const {
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i) {
      c += std::popcount(words_[i] & o.words_[i]);
    }
    return c;
  }

  PointSet& operator|=(const PointSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  PointSet& operator&=(const PointSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // Set difference.
  PointSet& operator-=(const PointSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }
  friend bool operator==(const PointSet& a, const PointSet& b) = default;

  std::vector<int> Elements() const {
    std::vector<int> out;
    for (size_t w = 0; w < words_.size(); ++w) {
      uint64_t bits = words_[w];
      while (bits) {
        out.push_back(static_cast<int>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }
  // Lowest set index, or -1.
  int First() const {
    for (size_t w = 0; w < words_.size(); ++w) {
      if (words_[w]) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
    }
    return -1;
  }
  size_t Hash() const {
    uint64_t h = 14695981039346656037ULL;
    for (uint64_t w : words_) h = (h ^ w) * 1099511628211ULL;
    return static_cast<size_t>(h);
  }

 private:
  int capacity_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace udc

#endif  // UDC_POINTSET_H_
