#include "privword/privileged_table.hpp"

#include <array>
#include <limits>

#include "privword/errors.hpp"

namespace privword {

namespace {

constexpr std::size_t kMaxKernelLength = 64;

}  // namespace

PrivilegedTable::PrivilegedTable(unsigned q, std::size_t max_length) : q_(q) {
  if (q < 2 || q > kMaxAlphabet) throw InvalidArgument("alphabet size must lie in [2, 26]");
  if (max_length + 1 >= kMaxKernelLength) throw InvalidArgument("word length too large for the table kernel");
  constexpr std::uint64_t cap = std::uint64_t{1} << 62;
  powers_.push_back(1);
  for (std::size_t k = 1; k <= max_length + 1; ++k) {
    if (powers_.back() > cap / q) throw InvalidArgument("q^n does not fit the table index");
    powers_.push_back(powers_.back() * q);
  }

  levels_.resize(max_length);
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::uint64_t count = powers_[len];
    const std::uint64_t blocks = (count + 63) / 64;
    auto& level = levels_[len - 1];
    level.assign(blocks, 0);
    if (len == 1) {
      for (std::uint64_t i = 0; i < count; ++i) level[0] |= std::uint64_t{1} << i;
      continue;
    }
    // Each iteration owns one 64-bit block, so writes never overlap.
#pragma omp parallel for schedule(static)
    for (std::int64_t blk = 0; blk < static_cast<std::int64_t>(blocks); ++blk) {
      std::uint64_t bits = 0;
      const std::uint64_t first = static_cast<std::uint64_t>(blk) * 64;
      const std::uint64_t last = std::min(first + 64, count);
      for (std::uint64_t idx = first; idx < last; ++idx) {
        if (classify(len, idx)) bits |= std::uint64_t{1} << (idx - first);
      }
      level[static_cast<std::size_t>(blk)] = bits;
    }
  }
}

bool PrivilegedTable::classify(std::size_t length, std::uint64_t index) const {
  if (length == 1) return true;
  std::array<Symbol, kMaxKernelLength> w{};
  std::uint64_t v = index;
  for (std::size_t i = length; i-- > 0;) {
    w[i] = static_cast<Symbol>(v % q_);
    v /= q_;
  }

  std::array<std::size_t, kMaxKernelLength> z{};
  z[0] = length;
  std::size_t l = 0, r = 0;
  for (std::size_t i = 1; i < length; ++i) {
    std::size_t zi = i < r ? std::min(r - i, z[i - l]) : 0;
    while (i + zi < length && w[zi] == w[i + zi]) ++zi;
    z[i] = zi;
    if (i + zi > r) {
      l = i;
      r = i + zi;
    }
  }

  // Borders longest first. A border of length b occurs exactly twice iff no
  // interior position 0 < i < length - b has z[i] >= b.
  for (std::size_t b = length - 1; b >= 1; --b) {
    if (z[length - b] != b) continue;
    bool twice = true;
    for (std::size_t i = 1; i < length - b; ++i) {
      if (z[i] >= b) {
        twice = false;
        break;
      }
    }
    if (twice && test(b, index / powers_[length - b])) return true;
  }
  return false;
}

}  // namespace privword
