#pragma once

#include <cstddef>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "privword/bigint.hpp"
#include "privword/word.hpp"

namespace privword {

// ---------------------------------------------------------------------------
// Borders and occurrences

/// KMP failure function: fail[i] is the length of the longest proper border of
/// the prefix of length i + 1.
std::vector<std::size_t> failure_function(std::span<const Symbol> w);

/// Z-array: z[i] is the length of the longest common prefix of w and w[i..].
/// z[0] is set to |w|.
std::vector<std::size_t> z_array(std::span<const Symbol> w);

/// Lengths of the proper borders of w, ascending. Throws on the empty word.
std::vector<std::size_t> border_lengths(const Word& w);

/// Number of (possibly overlapping) occurrences of `pattern` in `text`.
std::size_t count_occurrences(const Word& pattern, const Word& text);

// ---------------------------------------------------------------------------
// Privileged words

/// Thread-safe cache of privileged verdicts keyed by Word::key().
class PrivilegedMemo {
 public:
  std::optional<bool> find(const std::string& key) const;
  void insert(const std::string& key, bool value);
  std::size_t size() const;
  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, bool> table_;
};

/// Process-wide memo used by the one-argument overloads.
PrivilegedMemo& default_privileged_memo();

/// A word is privileged if it is a single letter, or has a privileged border
/// occurring exactly twice in it. Throws on the empty word.
bool is_privileged(const Word& w, PrivilegedMemo& memo);
bool is_privileged(const Word& w);

/// For a privileged word, the chain w, b1, b2, ..., single letter in which each
/// element is the longest privileged border occurring exactly twice in its
/// predecessor. nullopt when w is not privileged.
std::optional<std::vector<Word>> privileged_witness(const Word& w, PrivilegedMemo& memo);
std::optional<std::vector<Word>> privileged_witness(const Word& w);

// ---------------------------------------------------------------------------
// Autocorrelation and correlation polynomial

/// Bit t is set iff the suffix of P of length p - t equals its prefix of that length.
class Autocorrelation {
 public:
  explicit Autocorrelation(std::vector<bool> bits);

  std::size_t length() const { return bits_.size(); }
  bool operator[](std::size_t shift) const { return bits_[shift]; }
  const std::vector<bool>& bits() const { return bits_; }
  std::string str() const;

  friend bool operator==(const Autocorrelation&, const Autocorrelation&) = default;

 private:
  std::vector<bool> bits_;
};

Autocorrelation autocorrelation(const Word& pattern);

/// f(z) = sum over set shifts t of z^(p-1-t).
class CorrelationPolynomial {
 public:
  explicit CorrelationPolynomial(const Autocorrelation& q);

  std::size_t degree() const { return coeffs_.size() - 1; }
  /// Coefficient of z^k.
  int coefficient(std::size_t k) const { return coeffs_[k]; }

  double eval(double z) const;
  long double eval(long double z) const;
  double derivative(double z) const;
  long double derivative(long double z) const;

  BigInt eval_exact(unsigned z) const;
  BigInt derivative_exact(unsigned z) const;

  /// e.g. "z^2 + 1"
  std::string str() const;

 private:
  std::vector<int> coeffs_;  // ascending powers
};

CorrelationPolynomial correlation_polynomial(const Autocorrelation& q);

}  // namespace privword
