#ifndef ISQ_BITSET_HPP_
#define ISQ_BITSET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace isq {

// Fixed-size dynamic bitset used for element subsets of a semigroup.
// Sized to |S| up front; no sparse representation.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(std::size_t i) {
    words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) {
      c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
  }

  bool any() const {
    for (auto w : words_) {
      if (w) return true;
    }
    return false;
  }
  bool none() const { return !any(); }

  bool is_subset_of(const Bitset& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & ~other.words_[k]) return false;
    }
    return true;
  }

  Bitset& operator|=(const Bitset& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      words_[k] |= other.words_[k];
    }
    return *this;
  }
  Bitset& operator&=(const Bitset& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      words_[k] &= other.words_[k];
    }
    return *this;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  // Deterministic total order (by size, then words); used for canonical
  // sorting and set-based deduplication.
  friend bool operator<(const Bitset& a, const Bitset& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.words_ < b.words_;
  }

  // Calls f(i) for every set bit in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        unsigned b = static_cast<unsigned>(std::countr_zero(w));
        f(k * 64 + b);
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
    return out;
  }

  static Bitset from_indices(std::size_t n, const std::vector<int>& idx) {
    Bitset b(n);
    for (int i : idx) {
      b.set(static_cast<std::size_t>(i));
    }
    return b;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace isq

#endif  // ISQ_BITSET_HPP_
