#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace kleene {

/// Fixed-width dynamic bitset over element indices 0..size()-1.
///
/// Subsets of a poset carrier are always stored this way; every L/U
/// computation reduces to word-parallel AND over these.
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t n, bool filled = false)
      : n_(n), words_((n + kWordBits - 1) / kWordBits, filled ? ~Word{0} : Word{0}) {
    trim();
  }

  static Bitset full(std::size_t n) { return Bitset(n, true); }
  static Bitset single(std::size_t n, std::size_t i) {
    Bitset b(n);
    b.set(i);
    return b;
  }

  std::size_t size() const noexcept { return n_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void assign(std::size_t i, bool v) noexcept { v ? set(i) : reset(i); }

  void fill() noexcept {
    for (auto& w : words_) w = ~Word{0};
    trim();
  }
  void clear() noexcept {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const noexcept {
    for (Word w : words_)
      if (w) return false;
    return true;
  }
  bool any() const noexcept { return !none(); }
  bool all() const noexcept { return count() == n_; }

  bool is_subset_of(const Bitset& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool is_proper_subset_of(const Bitset& o) const noexcept {
    return is_subset_of(o) && *this != o;
  }
  bool intersects(const Bitset& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  Bitset& operator&=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& subtract(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  Bitset complement() const {
    Bitset r = *this;
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

  // Lexicographic on (size, words from high to low); used only for
  // deterministic ordering of families of subsets.
  friend bool operator<(const Bitset& a, const Bitset& b) noexcept {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (std::size_t i = a.words_.size(); i-- > 0;)
      if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    return false;
  }

  /// Index of the first set bit at or after `from`, or size() if none.
  std::size_t next(std::size_t from) const noexcept {
    if (from >= n_) return n_;
    std::size_t wi = from / kWordBits;
    Word w = words_[wi] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi >= words_.size()) return n_;
      w = words_[wi];
    }
  }
  std::size_t first() const noexcept { return next(0); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        f(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
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
    std::size_t h = n_ * 0x9e3779b97f4a7c15ULL;
    for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  const std::vector<Word>& words() const noexcept { return words_; }

 private:
  void trim() noexcept {
    if (n_ % kWordBits && !words_.empty()) words_.back() &= (Word{1} << (n_ % kWordBits)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<Word> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const noexcept { return b.hash(); }
};

}  // namespace kleene
