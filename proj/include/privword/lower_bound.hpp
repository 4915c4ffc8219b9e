#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "privword/bigint.hpp"
#include "privword/enumeration.hpp"
#include "privword/synccode.hpp"

namespace privword {

/// The split n = N + p with p = choose_p(N), or nullopt when n has none.
/// When several p qualify the smallest is returned.
std::optional<std::pair<std::size_t, std::size_t>> decompose_length(std::size_t n, unsigned q);

/// One row of the lower-bound harness: sum of G_P(N) over privileged P of
/// length p, compared against q^n / (n (log_q n)^2).
struct BoundReport {
  std::size_t n = 0;
  unsigned q = 2;
  std::size_t p = 0;
  std::size_t N = 0;
  std::size_t prefixes = 0;  // privileged words of length p
  BigInt lower_sum;
  std::optional<BigInt> exact_B;
  double ln_lower_sum = 0.0;
  /// lower_sum * n * (log_q n)^2 / q^n
  double ln_ratio = 0.0;
  double ratio = 0.0;
  /// min over P of G_P(N) n^2 / q^n
  double min_lemma5_ratio = 0.0;
};

/// Throws InvalidArgument naming the nearest decomposable length when n has
/// no decomposition. exact_B is attached when q^n fits the enumeration budget.
BoundReport lower_bound_sum(std::size_t n, unsigned q, const EnumerationConfig& config = {});

/// G_P(N) n^2 / q^n with n = N + p; requires |P| = choose_p(N).
double lemma5_ratio(const Word& pattern, std::size_t N);

/// The same quantity for an already computed G_P(N).
double lemma5_ratio_from_count(const BigInt& count, std::size_t p, std::size_t N, unsigned q);

namespace reference {

/// Serial sum over reference::list_privileged(p, q); no parallelism.
BigInt lower_sum(std::size_t n, unsigned q);

}  // namespace reference

}  // namespace privword
