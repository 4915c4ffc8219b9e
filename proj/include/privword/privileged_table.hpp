#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "privword/word.hpp"

namespace privword {

/// Dense bit table of privileged verdicts for every word of length 1..max_length
/// over a fixed alphabet, indexed by Word::index(). Levels are filled bottom-up
/// with OpenMP; level L only reads levels < L.
class PrivilegedTable {
 public:
  /// Builds levels 1..max_length. Requires q^max_length < 2^63.
  PrivilegedTable(unsigned q, std::size_t max_length);

  unsigned alphabet_size() const { return q_; }
  std::size_t max_length() const { return levels_.size(); }

  bool test(std::size_t length, std::uint64_t index) const {
    const auto& level = levels_[length - 1];
    return (level[index >> 6] >> (index & 63)) & 1u;
  }

  /// Classifies one word of length `length` (given by index) using the levels
  /// below it. Valid for length <= max_length() + 1.
  bool classify(std::size_t length, std::uint64_t index) const;

  /// Number of words of length L, q^L.
  std::uint64_t level_size(std::size_t length) const { return powers_[length]; }

 private:
  unsigned q_;
  std::vector<std::uint64_t> powers_;             // q^0 .. q^(max_length + 1)
  std::vector<std::vector<std::uint64_t>> levels_;  // bit-packed, one vector per length
};

}  // namespace privword
