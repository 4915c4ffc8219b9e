// privword: command-line front end for the privileged-word toolkit.
//
// Exit codes: 0 success, 2 usage error, 3 budget refusal, 4 numeric
// degeneracy (no dominant root / degenerate R_Q), 1 anything else.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "privword/asymptotics.hpp"
#include "privword/count_cache.hpp"
#include "privword/enumeration.hpp"
#include "privword/errors.hpp"
#include "privword/lower_bound.hpp"
#include "privword/synccode.hpp"
#include "privword/table.hpp"
#include "privword/words.hpp"

namespace {

using namespace privword;

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kBudget = 3, kNumeric = 4 };

struct RunConfig {
  unsigned q = 2;
  std::string format;  // empty: subcommand default
  std::string out_path;
  unsigned shards = 1;
  std::uint64_t budget = kDefaultBudget;
  std::string cache_path;

  EnumerationConfig enumeration() const { return {.shards = shards, .budget = budget}; }
};

// What a subcommand produces: a table, plus an optional plain rendering.
struct Output {
  Table table;
  std::optional<std::string> plain;  // nullopt: plain falls back to CSV
  OutputFormat default_format = OutputFormat::plain;
};

void emit(const Output& o, const RunConfig& cfg, std::ostream& out) {
  const OutputFormat fmt = cfg.format.empty() ? o.default_format : parse_output_format(cfg.format);
  if (fmt == OutputFormat::json) {
    o.table.write_json(out);
  } else if (fmt == OutputFormat::plain && o.plain) {
    out << *o.plain;
  } else {
    o.table.write_csv(out);
  }
}

// ---------------------------------------------------------------------------

Output cmd_check(const RunConfig& cfg, const std::string& text) {
  const Word w = Word::parse(text, cfg.q);
  Output o{Table({"word", "q", "privileged", "witness", "reason"}), std::nullopt};
  std::string verdict, witness, reason;
  if (w.empty()) throw InvalidArgument("the empty word has no privileged status");
  if (w.size() == 1) {
    verdict = "privileged (single letter)";
    witness = w.str();
    reason = "single letter";
  } else if (auto chain = privileged_witness(w)) {
    for (const auto& b : *chain) witness += (witness.empty() ? "" : " <- ") + b.str();
    verdict = "privileged: ";
    for (std::size_t i = 0; i < chain->size(); ++i) verdict += (i ? " ← " : "") + (*chain)[i].str();
    reason = "privileged border occurs exactly twice";
  } else if (border_lengths(w).empty()) {
    verdict = "not privileged (no border)";
    reason = "no border";
  } else {
    verdict = "not privileged (no privileged border occurs exactly twice)";
    reason = "no privileged border occurs exactly twice";
  }
  const bool ok = verdict.starts_with("privileged");
  o.table.add_row({Cell::text(w.str()), Cell::integer(cfg.q), Cell::text(ok ? "true" : "false"),
                   Cell::text(witness), Cell::text(reason)});
  o.plain = verdict + "\n";
  return o;
}

Output cmd_count(const RunConfig& cfg, std::size_t n) {
  std::optional<CountRecord> rec;
  std::optional<CountCache> cache;
  if (!cfg.cache_path.empty()) {
    cache.emplace(cfg.cache_path);
    rec = cache->load(n, cfg.q);
    for (const auto& w : cache->warnings()) std::cerr << "warning: " << w << '\n';
  }
  if (!rec) {
    rec = count_privileged(n, cfg.q, cfg.enumeration());
    if (cache) cache->store(*rec);
  }
  // wall_time stays in the cache file only, so stdout is reproducible.
  Output o{Table({"n", "q", "count", "method"}), to_decimal(rec->count) + "\n"};
  o.table.add_row({Cell::integer(static_cast<std::int64_t>(n)), Cell::integer(cfg.q), Cell::big(rec->count),
                   Cell::text(std::string(to_string(rec->method)))});
  return o;
}

Output cmd_list(const RunConfig& cfg, std::size_t n) {
  Output o{Table({"n", "q", "word"}), std::string()};
  for (const auto& w : list_privileged(n, cfg.q, cfg.enumeration())) {
    o.table.add_row({Cell::integer(static_cast<std::int64_t>(n)), Cell::integer(cfg.q), Cell::text(w.str())});
    *o.plain += w.str() + "\n";
  }
  return o;
}

Output cmd_autocorr(const RunConfig& cfg, const std::vector<std::string>& patterns) {
  Output o{Table({"P", "q", "p", "Q", "f", "f_q", "fprime_q"}), std::string()};
  for (const auto& text : patterns) {
    const Word P = Word::parse(text, cfg.q);
    const auto Q = autocorrelation(P);
    const auto f = correlation_polynomial(Q);
    const BigInt fq = f.eval_exact(cfg.q);
    const BigInt dfq = f.derivative_exact(cfg.q);
    o.table.add_row({Cell::text(P.str()), Cell::integer(cfg.q), Cell::integer(static_cast<std::int64_t>(P.size())),
                     Cell::text(Q.str()), Cell::text(f.str()), Cell::big(fq), Cell::big(dfq)});
    *o.plain += P.str() + ": Q = " + Q.str() + ", f(z) = " + f.str() + ", f(" + std::to_string(cfg.q) +
                ") = " + to_decimal(fq) + ", f'(" + std::to_string(cfg.q) + ") = " + to_decimal(dfq) + "\n";
  }
  return o;
}

Output cmd_gp(const RunConfig& cfg, const std::string& text, std::size_t N_from, std::size_t N_to,
              const std::string& mode) {
  const Word P = Word::parse(text, cfg.q);
  if (N_to < N_from) N_to = N_from;
  const bool sweep = N_to > N_from;

  if (mode == "asymptotic") {
    Output o{Table({"P", "N", "q", "method", "rho", "ln_rho", "ln_RQ", "ln_estimate", "estimate"}), std::string()};
    for (std::size_t N = N_from; N <= N_to; ++N) {
      const auto est = gp_asymptotic(P, N);
      o.table.add_row({Cell::text(P.str()), Cell::integer(static_cast<std::int64_t>(N)), Cell::integer(cfg.q),
                       Cell::text("asymptotic"), Cell::real(est.rho), Cell::real(est.ln_rho), Cell::real(est.ln_RQ),
                       Cell::real(est.ln_estimate), est.estimate ? Cell::real(*est.estimate) : Cell::null()});
      const std::string v = est.estimate ? format_real(*est.estimate) : "exp(" + format_real(est.ln_estimate) + ")";
      *o.plain += (sweep ? std::to_string(N) + " " : "") + v + "\n";
    }
    return o;
  }

  if (mode != "exact" && mode != "brute") throw InvalidArgument("--mode must be exact, brute or asymptotic");
  if (N_from == 0) throw InvalidArgument("G_P(N) is undefined for N = 0");
  Output o{Table({"P", "N", "q", "count", "method"}), std::string()};
  std::vector<BigInt> series;
  if (mode == "exact") series = exact_gp_series(P, N_to);
  for (std::size_t N = N_from; N <= N_to; ++N) {
    const GpRecord rec =
        mode == "exact" ? GpRecord{P, N, series[N - 1], GpMethod::automaton_dp} : brute_force_gp(P, N, cfg.budget);
    o.table.add_row({Cell::text(P.str()), Cell::integer(static_cast<std::int64_t>(N)), Cell::integer(cfg.q),
                     Cell::big(rec.count), Cell::text(std::string(to_string(rec.method)))});
    *o.plain += (sweep ? std::to_string(N) + " " : "") + to_decimal(rec.count) + "\n";
  }
  return o;
}

Output cmd_rho(const RunConfig& cfg, const std::vector<std::string>& patterns) {
  Output o{Table({"P", "q", "p", "rho", "gap", "residual", "iterations", "bracket_lo", "bracket_hi", "ln_RQ", "RQ"}),
           std::string()};
  for (const auto& text : patterns) {
    const Word P = Word::parse(text, cfg.q);
    const auto f = correlation_polynomial(autocorrelation(P));
    const RootResult root = dominant_root(f, cfg.q);
    const double ln_rq = ln_r_q_constant(f, cfg.q, root);
    o.table.add_row({Cell::text(P.str()), Cell::integer(cfg.q), Cell::integer(static_cast<std::int64_t>(P.size())),
                     Cell::real(root.rho), Cell::real(root.gap), Cell::real(root.residual),
                     Cell::integer(root.iterations), Cell::real(root.bracket_lo), Cell::real(root.bracket_hi),
                     Cell::real(ln_rq), Cell::real(std::exp(ln_rq))});
    *o.plain += (patterns.size() > 1 ? P.str() + " " : "") + format_real(root.rho) + "\n";
  }
  return o;
}

Output cmd_expansions(const RunConfig& cfg, std::vector<std::string> patterns, std::size_t family_from,
                      std::size_t family_to) {
  // The family a^(p-1) b.
  for (std::size_t p = family_from; family_from > 0 && p <= family_to; ++p) {
    patterns.push_back(std::string(p - 1, 'a') + "b");
  }
  if (patterns.empty()) throw InvalidArgument("give -P or --family-p-from/--family-p-to");
  Output o{Table({"P", "q", "p", "f_q", "fprime_q", "ln_rho", "ln_rho_expansion", "ln_rho_residual", "ln_RQ",
                  "ln_RQ_expansion", "ln_RQ_residual"}),
           std::nullopt, OutputFormat::csv};
  for (const auto& text : patterns) {
    const Word P = Word::parse(text, cfg.q);
    const auto f = correlation_polynomial(autocorrelation(P));
    const RootResult root = dominant_root(f, cfg.q);
    const double ln_rho = std::log(root.rho);
    const double ln_rq = ln_r_q_constant(f, cfg.q, root);
    const double e_rho = ln_rho_expansion(f, cfg.q);
    const double e_rq = ln_rq_expansion(f, cfg.q);
    o.table.add_row({Cell::text(P.str()), Cell::integer(cfg.q), Cell::integer(static_cast<std::int64_t>(P.size())),
                     Cell::big(f.eval_exact(cfg.q)), Cell::big(f.derivative_exact(cfg.q)), Cell::real(ln_rho),
                     Cell::real(e_rho), Cell::real(std::fabs(ln_rho - e_rho)), Cell::real(ln_rq), Cell::real(e_rq),
                     Cell::real(std::fabs(ln_rq - e_rq))});
  }
  return o;
}

Output cmd_choose_p(const RunConfig& cfg, std::uint64_t N_from, std::uint64_t N_to) {
  if (N_to < N_from) N_to = N_from;
  Output o{Table({"N", "q", "p", "floor_p", "floor_argument", "near_boundary", "interval_lo", "interval_hi"}),
           std::string()};
  const double c = std::log(static_cast<double>(cfg.q)) / (cfg.q - 1);
  for (std::uint64_t N = N_from; N <= N_to; ++N) {
    const std::size_t p = choose_p(N, cfg.q);
    const FloorFormula ff = floor_formula_p(N, cfg.q);
    o.table.add_row({Cell::integer(static_cast<std::int64_t>(N)), Cell::integer(cfg.q),
                     Cell::integer(static_cast<std::int64_t>(p)), Cell::integer(ff.p), Cell::real(ff.argument),
                     Cell::text(ff.near_boundary ? "true" : "false"),
                     Cell::real(c * std::pow(static_cast<double>(cfg.q), static_cast<double>(p))),
                     Cell::real(c * std::pow(static_cast<double>(cfg.q), static_cast<double>(p + 1)))});
    *o.plain += (N_to > N_from ? std::to_string(N) + " " : "") + std::to_string(p) + "\n";
  }
  return o;
}

Output cmd_bound(const RunConfig& cfg, std::size_t n_from, std::size_t n_to) {
  if (n_to < n_from) n_to = n_from;
  Output o{Table({"n", "q", "p", "N", "prefixes", "lower_sum", "exact_B", "ln_lower_sum", "ratio", "ln_ratio",
                  "min_lemma5_ratio", "running_min_ratio", "running_min_lemma5_ratio"}),
           std::nullopt, OutputFormat::csv};
  double min_ratio = INFINITY, min_lemma5 = INFINITY;
  std::size_t rows = 0;
  for (std::size_t n = n_from; n <= n_to; ++n) {
    if (!decompose_length(n, cfg.q)) {
      if (n_from == n_to) lower_bound_sum(n, cfg.q, cfg.enumeration());  // throws with the nearest n
      continue;
    }
    const BoundReport r = lower_bound_sum(n, cfg.q, cfg.enumeration());
    min_ratio = std::min(min_ratio, r.ratio);
    min_lemma5 = std::min(min_lemma5, r.min_lemma5_ratio);
    o.table.add_row({Cell::integer(static_cast<std::int64_t>(r.n)), Cell::integer(r.q),
                     Cell::integer(static_cast<std::int64_t>(r.p)), Cell::integer(static_cast<std::int64_t>(r.N)),
                     Cell::integer(static_cast<std::int64_t>(r.prefixes)), Cell::big(r.lower_sum),
                     r.exact_B ? Cell::big(*r.exact_B) : Cell::null(), Cell::real(r.ln_lower_sum),
                     Cell::real(r.ratio), Cell::real(r.ln_ratio), Cell::real(r.min_lemma5_ratio),
                     Cell::real(min_ratio), Cell::real(min_lemma5)});
    ++rows;
  }
  if (rows == 0) throw InvalidArgument("no decomposable n in the requested range");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Privileged words, prefix-synchronized code counts and their asymptotics"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("-q,--alphabet", cfg.q, "Alphabet size (letters a, b, ...)")->check(CLI::Range(2u, kMaxAlphabet));
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"plain", "csv", "json"}));
  app.add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
  app.add_option("--shards", cfg.shards, "Parallel shards for exhaustive enumeration")->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.budget, "Maximum words an exhaustive search may visit")
      ->check(CLI::PositiveNumber);
  app.add_option("--cache-path", cfg.cache_path, "Count cache file");

  std::string word;
  auto* check = app.add_subcommand("check", "Privileged verdict with its witness chain");
  check->add_option("word", word)->required();

  std::size_t n = 0;
  auto* count = app.add_subcommand("count", "B(n, q), the number of privileged words of length n");
  count->add_option("-n", n)->required();
  auto* list = app.add_subcommand("list", "Privileged words of length n in lexicographic order");
  list->add_option("-n", n)->required();

  std::vector<std::string> patterns;
  auto* autocorr = app.add_subcommand("autocorr", "Autocorrelation and correlation polynomial");
  autocorr->add_option("-P,--pattern", patterns)->required();

  std::string pattern, mode = "exact";
  std::size_t N = 0, N_to = 0;
  auto* gp = app.add_subcommand("gp", "G_P(N): exact, brute force or asymptotic");
  gp->add_option("-P,--pattern", pattern)->required();
  gp->add_option("-N", N)->required();
  gp->add_option("--N-to", N_to, "Sweep N up to this value");
  gp->add_option("--mode", mode)->check(CLI::IsMember({"exact", "brute", "asymptotic"}));

  auto* rho = app.add_subcommand("rho", "Dominant root of 1 + (z - q) f(z)");
  rho->add_option("-P,--pattern", patterns)->required();

  std::size_t family_from = 0, family_to = 0;
  auto* expansions = app.add_subcommand("expansions", "ln rho and ln R_Q against their expansions");
  expansions->add_option("-P,--pattern", patterns);
  expansions->add_option("--family-p-from", family_from, "Add a^(p-1)b for p in [from, to]");
  expansions->add_option("--family-p-to", family_to);

  std::uint64_t big_N = 0, big_N_to = 0;
  auto* choose = app.add_subcommand("choose-p", "Prefix length p for a given N");
  choose->add_option("-N", big_N)->required();
  choose->add_option("--N-to", big_N_to, "Sweep N up to this value");

  std::size_t n_from = 0, n_to = 0;
  auto* bound = app.add_subcommand("bound", "Lower-bound sums over privileged prefixes");
  bound->add_option("--n-from", n_from)->required();
  bound->add_option("--n-to", n_to);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    Output out = [&]() -> Output {
      if (*check) return cmd_check(cfg, word);
      if (*count) return cmd_count(cfg, n);
      if (*list) return cmd_list(cfg, n);
      if (*autocorr) return cmd_autocorr(cfg, patterns);
      if (*gp) return cmd_gp(cfg, pattern, N, N_to, mode);
      if (*rho) return cmd_rho(cfg, patterns);
      if (*expansions) return cmd_expansions(cfg, patterns, family_from, family_to);
      if (*choose) return cmd_choose_p(cfg, big_N, big_N_to);
      return cmd_bound(cfg, n_from, n_to);
    }();
    if (cfg.out_path.empty()) {
      emit(out, cfg, std::cout);
    } else {
      std::ofstream file(cfg.out_path);
      if (!file) throw Error("cannot open " + cfg.out_path + " for writing");
      emit(out, cfg, file);
    }
    return kOk;
  } catch (const BudgetExceeded& e) {
    std::cerr << "privword: " << e.what() << " (raise --budget to override)\n";
    return kBudget;
  } catch (const NoDominantRoot& e) {
    std::cerr << "privword: " << e.what() << '\n';
    return kNumeric;
  } catch (const DegenerateRQ& e) {
    std::cerr << "privword: " << e.what() << '\n';
    return kNumeric;
  } catch (const InvalidArgument& e) {
    std::cerr << "privword: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "privword: " << e.what() << '\n';
    return kFailure;
  }
}
