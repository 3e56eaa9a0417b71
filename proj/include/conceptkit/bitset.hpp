#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "conceptkit/errors.hpp"

namespace conceptkit {

/// Fixed-width dynamic bitset backed by 64-bit words.
///
/// Unused bits of the last word are kept zero, so word-wise equality and
/// lexicographic comparison are well defined.
class Bitset {
public:
  Bitset() = default;

  explicit Bitset(std::size_t n, bool fill = false)
      : size_(n), words_((n + 63) / 64, fill ? ~std::uint64_t{0} : 0) {
    trim();
  }

  static Bitset full(std::size_t n) { return Bitset(n, true); }

  static Bitset single(std::size_t n, std::size_t i) {
    Bitset b(n);
    b.set(i);
    return b;
  }

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i, bool value = true) {
    if (value)
      words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    else
      words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  bool none() const { return !any(); }

  bool is_subset_of(const Bitset& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  bool intersects(const Bitset& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & other.words_[k]) return true;
    return false;
  }

  Bitset& operator&=(const Bitset& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }

  Bitset& operator|=(const Bitset& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }

  /// Set difference: this & ~other.
  Bitset& operator-=(const Bitset& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  /// Complement within the declared width.
  Bitset complemented() const {
    Bitset r(size_);
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = ~words_[k];
    r.trim();
    return r;
  }

  bool operator==(const Bitset& other) const = default;

  /// Lexicographic order on the membership string b0 b1 ... b(n-1), with
  /// 0 < 1 at the first differing index.
  friend bool lex_less(const Bitset& a, const Bitset& b) {
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
      std::uint64_t diff = a.words_[k] ^ b.words_[k];
      if (diff) {
        std::uint64_t lowest = diff & (~diff + 1);
        return (b.words_[k] & lowest) != 0;  // b has the 1 at the first difference
      }
    }
    return false;
  }

  /// Invoke f(i) for each set bit, ascending.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        unsigned bit = static_cast<unsigned>(std::countr_zero(w));
        f(k * 64 + bit);
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

private:
  void trim() {
    if (size_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace conceptkit
