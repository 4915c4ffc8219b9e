#include "privword/lower_bound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "privword/asymptotics.hpp"
#include "privword/errors.hpp"

namespace privword {

std::optional<std::pair<std::size_t, std::size_t>> decompose_length(std::size_t n, unsigned q) {
  for (std::size_t p = 1; p < n; ++p) {
    const std::size_t N = n - p;
    if (prefix_length_for(N, q) == p) return std::pair{p, N};
  }
  return std::nullopt;
}

namespace {

std::pair<std::size_t, std::size_t> require_decomposition(std::size_t n, unsigned q) {
  if (auto d = decompose_length(n, q)) return *d;
  std::string nearest;
  for (std::size_t delta = 1; delta <= n + 64 && nearest.empty(); ++delta) {
    if (delta < n && decompose_length(n - delta, q)) nearest = std::to_string(n - delta);
    if (decompose_length(n + delta, q)) {
      nearest += (nearest.empty() ? "" : " or ") + std::to_string(n + delta);
    }
  }
  throw InvalidArgument("n = " + std::to_string(n) + " has no split n = N + p with p = choose_p(N) at q = " +
                        std::to_string(q) + "; nearest valid n: " + nearest);
}

double ln_ratio_of(double ln_sum, std::size_t n, unsigned q) {
  const double lq = std::log(static_cast<double>(q));
  const double ln_n = std::log(static_cast<double>(n));
  return ln_sum + ln_n + 2.0 * std::log(ln_n / lq) - static_cast<double>(n) * lq;
}

}  // namespace

BoundReport lower_bound_sum(std::size_t n, unsigned q, const EnumerationConfig& config) {
  const auto [p, N] = require_decomposition(n, q);
  const auto prefixes = list_privileged(p, q, config);

  std::vector<BigInt> terms(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(prefixes.size()); ++i) {
    terms[static_cast<std::size_t>(i)] = exact_gp(prefixes[static_cast<std::size_t>(i)], N).count;
  }

  BoundReport r;
  r.n = n;
  r.q = q;
  r.p = p;
  r.N = N;
  r.prefixes = prefixes.size();
  for (const auto& t : terms) r.lower_sum += t;
  r.ln_lower_sum = log_bigint(r.lower_sum);
  r.ln_ratio = ln_ratio_of(r.ln_lower_sum, n, q);
  r.ratio = std::exp(r.ln_ratio);
  const auto smallest = std::min_element(terms.begin(), terms.end());
  r.min_lemma5_ratio = lemma5_ratio_from_count(*smallest, p, N, q);

  if (saturating_pow(q, n, config.budget) <= config.budget) {
    r.exact_B = count_privileged(n, q, config).count;
  }
  return r;
}

double lemma5_ratio_from_count(const BigInt& count, std::size_t p, std::size_t N, unsigned q) {
  const std::size_t n = N + p;
  const double ln = log_bigint(count) + 2.0 * std::log(static_cast<double>(n)) -
                    static_cast<double>(n) * std::log(static_cast<double>(q));
  return std::exp(ln);
}

double lemma5_ratio(const Word& pattern, std::size_t N) {
  const unsigned q = pattern.alphabet_size();
  const std::size_t p = choose_p(N, q);
  if (pattern.size() != p) {
    throw InvalidArgument("pattern length " + std::to_string(pattern.size()) + " differs from choose_p(" +
                          std::to_string(N) + ") = " + std::to_string(p));
  }
  return lemma5_ratio_from_count(exact_gp(pattern, N).count, p, N, q);
}

namespace reference {

BigInt lower_sum(std::size_t n, unsigned q) {
  const auto [p, N] = require_decomposition(n, q);
  BigInt sum;
  for (const auto& P : reference::list_privileged(p, q)) sum += exact_gp(P, N).count;
  return sum;
}

}  // namespace reference

}  // namespace privword
