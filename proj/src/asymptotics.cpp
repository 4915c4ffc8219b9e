#include "privword/asymptotics.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <array>
#include <cmath>
#include <limits>

#include "privword/errors.hpp"

namespace privword {

namespace {

long double g_value(const CorrelationPolynomial& f, unsigned q, long double z) {
  return 1.0L + (z - static_cast<long double>(q)) * f.eval(z);
}

long double g_derivative(const CorrelationPolynomial& f, unsigned q, long double z) {
  return f.eval(z) + (z - static_cast<long double>(q)) * f.derivative(z);
}

}  // namespace

RootResult dominant_root(const CorrelationPolynomial& f, unsigned q) {
  const std::size_t p = f.degree() + 1;
  if (p < 2) throw InvalidArgument("dominant root needs a pattern of length at least 2");
  if (q < 2) throw InvalidArgument("alphabet size must be at least 2");

  long double lo = kDominantRootFloor;
  long double hi = q;
  if (g_value(f, q, lo) >= 0.0L) {
    throw NoDominantRoot("1 + (z - q) f(z) has no sign change on [1.7, " + std::to_string(q) +
                         "); pattern length " + std::to_string(p) + " is too small");
  }

  RootResult out;
  out.bracket_lo = static_cast<double>(lo);
  out.bracket_hi = static_cast<double>(hi);

  // Invariant: g(lo) < 0 < g(hi).
  int iterations = 0;
  for (; iterations < 40; ++iterations) {
    const long double mid = 0.5L * (lo + hi);
    (g_value(f, q, mid) < 0.0L ? lo : hi) = mid;
  }
  long double z = 0.5L * (lo + hi);
  for (int k = 0; k < 100; ++k, ++iterations) {
    const long double gz = g_value(f, q, z);
    if (gz == 0.0L) break;
    (gz < 0.0L ? lo : hi) = z;
    const long double d = g_derivative(f, q, z);
    long double next = z - gz / d;
    if (!(next > lo && next < hi)) next = 0.5L * (lo + hi);
    const long double step = std::fabs(next - z);
    z = next;
    if (step <= 4.0L * std::numeric_limits<long double>::epsilon() * z) break;
  }

  const long double residual = std::fabs(g_value(f, q, z));
  const long double tolerance = 1e-12L * std::max(1.0L, f.eval(static_cast<long double>(q)));
  if (!(residual <= tolerance)) {
    throw NoDominantRoot("root refinement did not reach the residual tolerance");
  }
  out.rho = static_cast<double>(z);
  out.gap = static_cast<double>(static_cast<long double>(q) - z);
  out.residual = static_cast<double>(residual);
  out.iterations = iterations;
  return out;
}

double ln_r_q_constant(const CorrelationPolynomial& f, unsigned /*q*/, const RootResult& root) {
  const std::size_t p = f.degree() + 1;
  const long double rho = root.rho;
  const long double gap = root.gap;
  const long double denominator = 1.0L - gap * gap * f.derivative(rho);
  if (!(denominator > 1e-9L)) {
    throw DegenerateRQ("R_Q denominator 1 - (q - rho)^2 f'(rho) = " +
                       std::to_string(static_cast<double>(denominator)) + " is not bounded away from 0");
  }
  return static_cast<double>(2.0L * std::log(gap) + static_cast<long double>(p - 2) * std::log(rho) -
                             std::log(denominator));
}

double r_q_constant(const CorrelationPolynomial& f, unsigned q, const RootResult& root) {
  return std::exp(ln_r_q_constant(f, q, root));
}

AsymptoticEstimate gp_asymptotic(const Word& pattern, std::size_t N) {
  const auto f = correlation_polynomial(autocorrelation(pattern));
  const unsigned q = pattern.alphabet_size();
  const RootResult root = dominant_root(f, q);
  AsymptoticEstimate est;
  est.rho = root.rho;
  est.ln_rho = std::log(root.rho);
  est.ln_RQ = ln_r_q_constant(f, q, root);
  est.ln_estimate = est.ln_RQ + static_cast<double>(N) * est.ln_rho;
  const double v = std::exp(est.ln_estimate);
  if (std::isfinite(v) && v > 0.0) est.estimate = v;
  return est;
}

double ln_rho_expansion(const CorrelationPolynomial& f, unsigned q) {
  const long double Q = q;
  const long double F = f.eval(Q);
  const long double dF = f.derivative(Q);
  return static_cast<double>(std::log(Q) - 1.0L / (Q * F) - dF / (Q * F * F * F) -
                             1.0L / (2.0L * Q * Q * F * F));
}

double ln_rq_expansion(const CorrelationPolynomial& f, unsigned q) {
  const long double Q = q;
  const long double pm2 = static_cast<long double>(f.degree()) - 1.0L;  // p - 2
  const long double F = f.eval(Q);
  const long double dF = f.derivative(Q);
  return static_cast<double>(pm2 * std::log(Q) - 2.0L * std::log(F) + 3.0L * dF / (F * F) -
                             pm2 / (Q * F));
}

// ---------------------------------------------------------------------------

std::size_t prefix_length_for(std::uint64_t N, unsigned q) {
  using Float = boost::multiprecision::cpp_bin_float_50;
  if (N < 1) throw InvalidArgument("N must be at least 1");
  if (q < 2) throw InvalidArgument("alphabet size must be at least 2");
  static const std::array<Float, kMaxAlphabet + 1> logs = [] {
    std::array<Float, kMaxAlphabet + 1> t{};
    for (unsigned k = 2; k <= kMaxAlphabet; ++k) t[k] = boost::multiprecision::log(Float(k));
    return t;
  }();
  const Float ln_q = q <= kMaxAlphabet ? logs[q] : Float(boost::multiprecision::log(Float(q)));
  const Float rhs = Float(N) * Float(q - 1);
  // ln q / (q-1) < 1 <= N, so p = 0 always satisfies the lower inequality.
  std::size_t p = 0;
  Float power = q;  // q^(p+1)
  while (power * ln_q <= rhs) {
    ++p;
    power *= q;
  }
  return p;
}

std::size_t choose_p(std::uint64_t N, unsigned q) {
  const std::size_t p = prefix_length_for(N, q);
  if (p < 1) {
    throw InvalidArgument("N = " + std::to_string(N) + " is too small for a prefix length p >= 1 at q = " +
                          std::to_string(q));
  }
  return p;
}

FloorFormula floor_formula_p(std::uint64_t N, unsigned q) {
  const double lq = std::log(static_cast<double>(q));
  FloorFormula out;
  out.argument = std::log(static_cast<double>(N)) / lq + std::log(static_cast<double>(q - 1)) / lq -
                 std::log(lq) / lq;
  out.p = static_cast<long>(std::floor(out.argument));
  out.near_boundary = std::fabs(out.argument - std::round(out.argument)) < 1e-9;
  return out;
}

}  // namespace privword
