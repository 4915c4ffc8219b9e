#include "privword/word.hpp"

#include <algorithm>

#include "privword/errors.hpp"

namespace privword {

namespace {

void check_alphabet(unsigned q) {
  if (q < 2 || q > kMaxAlphabet) {
    throw InvalidArgument("alphabet size must lie in [2, 26], got " + std::to_string(q));
  }
}

}  // namespace

Word::Word(std::vector<Symbol> symbols, unsigned q) : symbols_(std::move(symbols)), q_(q) {
  check_alphabet(q);
  for (Symbol s : symbols_) {
    if (s >= q) {
      throw InvalidArgument("symbol index " + std::to_string(s) + " outside alphabet of size " +
                            std::to_string(q));
    }
  }
}

Word Word::parse(std::string_view text, unsigned q) {
  check_alphabet(q);
  std::vector<Symbol> symbols;
  symbols.reserve(text.size());
  for (char c : text) {
    if (c < 'a' || static_cast<unsigned>(c - 'a') >= q) {
      throw InvalidArgument("character '" + std::string(1, c) + "' is not in the alphabet a.." +
                            std::string(1, static_cast<char>('a' + q - 1)));
    }
    symbols.push_back(static_cast<Symbol>(c - 'a'));
  }
  Word w;
  w.symbols_ = std::move(symbols);
  w.q_ = q;
  return w;
}

Word Word::from_index(std::uint64_t index, std::size_t length, unsigned q) {
  check_alphabet(q);
  Word w;
  w.q_ = q;
  w.symbols_.resize(length);
  for (std::size_t i = length; i-- > 0;) {
    w.symbols_[i] = static_cast<Symbol>(index % q);
    index /= q;
  }
  return w;
}

Word Word::prefix(std::size_t length) const { return factor(0, length); }

Word Word::suffix(std::size_t length) const { return factor(size() - length, length); }

Word Word::factor(std::size_t pos, std::size_t length) const {
  Word w;
  w.q_ = q_;
  w.symbols_.assign(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                    symbols_.begin() + static_cast<std::ptrdiff_t>(pos + length));
  return w;
}

Word Word::concat(const Word& tail) const {
  if (tail.q_ != q_) throw InvalidArgument("cannot concatenate words over different alphabets");
  Word w = *this;
  w.symbols_.insert(w.symbols_.end(), tail.symbols_.begin(), tail.symbols_.end());
  return w;
}

Word Word::permuted(std::span<const Symbol> perm) const {
  if (perm.size() != q_) throw InvalidArgument("permutation size must equal the alphabet size");
  Word w = *this;
  for (Symbol& s : w.symbols_) s = perm[s];
  return w;
}

std::string Word::str() const {
  std::string out(symbols_.size(), 'a');
  std::transform(symbols_.begin(), symbols_.end(), out.begin(),
                 [](Symbol s) { return static_cast<char>('a' + s); });
  return out;
}

std::uint64_t Word::index() const {
  std::uint64_t v = 0;
  for (Symbol s : symbols_) v = v * q_ + s;
  return v;
}

std::string Word::key() const {
  std::string k;
  k.reserve(symbols_.size() + 1);
  k.push_back(static_cast<char>(q_));
  k.append(symbols_.begin(), symbols_.end());
  return k;
}

std::uint64_t saturating_pow(unsigned q, std::size_t n, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (v > cap / q) return cap + 1;
    v *= q;
  }
  return v > cap ? cap + 1 : v;
}

}  // namespace privword
