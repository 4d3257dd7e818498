#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace skillmc::detail {

// Growable bit set used for both world sets and skill sets. Missing high
// words read as zero, so sets of different widths compare correctly.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t nbits) : words_((nbits + 63) / 64, 0) {}

  static Bits full(std::size_t nbits) {
    Bits b(nbits);
    for (std::size_t i = 0; i < nbits; ++i) b.set(i);
    return b;
  }

  bool test(std::size_t i) const {
    std::size_t w = i / 64;
    return w < words_.size() && ((words_[w] >> (i % 64)) & 1U);
  }

  void set(std::size_t i) {
    std::size_t w = i / 64;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (i % 64);
  }

  void reset(std::size_t i) {
    std::size_t w = i / 64;
    if (w < words_.size()) words_[w] &= ~(std::uint64_t{1} << (i % 64));
  }

  bool none() const {
    return std::all_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w == 0; });
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t other = i < o.words_.size() ? o.words_[i] : 0;
      if (words_[i] & ~other) return false;
    }
    return true;
  }

  Bits& operator|=(const Bits& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
    }
    return *this;
  }

  // this \ o
  Bits& operator-=(const Bits& o) {
    std::size_t n = std::min(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < n; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator-(Bits a, const Bits& b) { return a -= b; }

  friend bool operator==(const Bits& a, const Bits& b) {
    std::size_t n = std::max(a.words_.size(), b.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t x = i < a.words_.size() ? a.words_[i] : 0;
      std::uint64_t y = i < b.words_.size() ? b.words_[i] : 0;
      if (x != y) return false;
    }
    return true;
  }

  // Calls fn(i) for each set bit in increasing order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        fn(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

  // Appends the words without trailing zeros, so equal sets of different
  // widths produce the same key.
  void append_key(std::vector<std::uint64_t>& key) const {
    std::size_t n = words_.size();
    while (n > 0 && words_[n - 1] == 0) --n;
    key.push_back(n);
    key.insert(key.end(), words_.begin(), words_.begin() + static_cast<std::ptrdiff_t>(n));
  }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace skillmc::detail
