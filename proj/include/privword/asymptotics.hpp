#pragma once

#include <cstddef>
#include <optional>

#include "privword/words.hpp"

namespace privword {

/// Lower end of the bracket searched for the dominant root.
inline constexpr double kDominantRootFloor = 1.7;

struct RootResult {
  double rho = 0.0;
  /// q - rho, computed before rounding rho so it keeps its relative precision.
  double gap = 0.0;
  /// |1 + (rho - q) f(rho)|
  double residual = 0.0;
  int iterations = 0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

/// The real zero of g(z) = 1 + (z - q) f(z) in [1.7, q). Bisection on the sign
/// change g(1.7) < 0 < g(q) = 1, then safeguarded Newton. Throws NoDominantRoot
/// when g(1.7) >= 0 (the pattern is too short for the root to clear 1.7) or the
/// residual misses 1e-12 * max(1, f(q)).
RootResult dominant_root(const CorrelationPolynomial& f, unsigned q);

/// ln R_Q where R_Q rho = (q - rho)^2 rho^(p-1) / (1 - (q - rho)^2 f'(rho)).
/// Throws DegenerateRQ when the denominator is <= 1e-9.
double ln_r_q_constant(const CorrelationPolynomial& f, unsigned q, const RootResult& root);
double r_q_constant(const CorrelationPolynomial& f, unsigned q, const RootResult& root);

struct AsymptoticEstimate {
  double rho = 0.0;
  double ln_rho = 0.0;
  double ln_RQ = 0.0;
  /// ln R_Q + N ln rho
  double ln_estimate = 0.0;
  /// R_Q rho^N when it is a finite double.
  std::optional<double> estimate;
};

/// R_Q rho^N in log form; N = 0 gives R_Q itself.
AsymptoticEstimate gp_asymptotic(const Word& pattern, std::size_t N);

/// ln q - 1/(q f(q)) - f'(q)/(q f(q)^3) - 1/(2 q^2 f(q)^2)
double ln_rho_expansion(const CorrelationPolynomial& f, unsigned q);

/// (p-2) ln q - 2 ln f(q) + 3 f'(q)/f(q)^2 - (p-2)/(q f(q))
double ln_rq_expansion(const CorrelationPolynomial& f, unsigned q);

// ---------------------------------------------------------------------------
// Prefix length selection

/// The unique p >= 0 with (ln q / (q-1)) q^p <= N < (ln q / (q-1)) q^(p+1),
/// decided by 50-digit comparison of q^p ln q against N (q - 1).
std::size_t prefix_length_for(std::uint64_t N, unsigned q);

/// prefix_length_for(), rejecting N too small to give p >= 1.
std::size_t choose_p(std::uint64_t N, unsigned q);

struct FloorFormula {
  /// log_q N + log_q(q-1) - log_q(ln q), in double precision
  double argument = 0.0;
  long p = 0;
  /// argument within 1e-9 of an integer; the interval answer is authoritative there
  bool near_boundary = false;
};

FloorFormula floor_formula_p(std::uint64_t N, unsigned q);

}  // namespace privword
