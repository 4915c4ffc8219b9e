#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace privword {

using Symbol = std::uint8_t;

/// Largest alphabet that still prints as 'a'..'z'.
inline constexpr unsigned kMaxAlphabet = 26;

/// Finite word over the alphabet {0, ..., q-1}. Symbol 0 prints as 'a'.
class Word {
 public:
  Word() = default;

  /// Throws InvalidArgument if q is outside [2, 26] or a symbol is >= q.
  Word(std::vector<Symbol> symbols, unsigned q);

  /// Parses "aabaa" style text; characters beyond the alphabet are rejected.
  static Word parse(std::string_view text, unsigned q);

  /// Word of the given length whose base-q digits (most significant first) are `index`.
  static Word from_index(std::uint64_t index, std::size_t length, unsigned q);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  unsigned alphabet_size() const { return q_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const { return symbols_; }

  Word prefix(std::size_t length) const;
  Word suffix(std::size_t length) const;
  Word factor(std::size_t pos, std::size_t length) const;
  Word concat(const Word& tail) const;

  /// Applies `perm` (a permutation of 0..q-1) to every symbol.
  Word permuted(std::span<const Symbol> perm) const;

  std::string str() const;

  /// Base-q value with the first symbol most significant. Lexicographic order
  /// among words of equal length matches numeric order of the index.
  std::uint64_t index() const;

  /// Canonical byte encoding of (q, symbols); used as a memo key.
  std::string key() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    if (auto c = a.q_ <=> b.q_; c != 0) return c;
    return a.symbols_ <=> b.symbols_;
  }

 private:
  std::vector<Symbol> symbols_;
  unsigned q_ = 2;
};

/// q^n if it does not exceed `cap`, otherwise cap + 1.
std::uint64_t saturating_pow(unsigned q, std::size_t n, std::uint64_t cap);

}  // namespace privword
