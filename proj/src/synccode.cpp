#include "privword/synccode.hpp"

#include <algorithm>

#include "privword/errors.hpp"
#include "privword/words.hpp"

namespace privword {

std::string_view to_string(GpMethod m) {
  switch (m) {
    case GpMethod::automaton_dp:
      return "automaton_dp";
    case GpMethod::brute_force:
      return "brute_force";
  }
  return "unknown";
}

PatternAutomaton::PatternAutomaton(const Word& pattern) : pattern_(pattern) {
  if (pattern.empty()) throw InvalidArgument("pattern must be non-empty");
  const std::size_t p = pattern.size();
  const unsigned q = pattern.alphabet_size();

  const auto border = failure_function(pattern.symbols());
  fail_.assign(p + 1, 0);
  for (std::size_t s = 1; s <= p; ++s) fail_[s] = border[s - 1];

  delta_.assign((p + 1) * q, 0);
  for (std::size_t s = 0; s <= p; ++s) {
    for (unsigned a = 0; a < q; ++a) {
      std::size_t& d = delta_[s * q + a];
      if (s < p && pattern[s] == a) {
        d = s + 1;
      } else if (s == 0) {
        d = 0;
      } else {
        d = delta_[fail_[s] * q + a];  // fail_[s] < s, row already filled
      }
    }
  }
}

std::vector<BigInt> exact_gp_series(const Word& pattern, std::size_t max_N) {
  const PatternAutomaton automaton(pattern);
  const std::size_t p = pattern.size();
  const unsigned q = pattern.alphabet_size();

  // Start with P already read (state p). After each further symbol the mass
  // that lands in state p is G_P(step); it is then removed, since later
  // completions must not contain that occurrence.
  std::vector<BigInt> cur(p + 1), nxt(p + 1);
  cur[p] = 1;
  std::vector<BigInt> series;
  series.reserve(max_N);
  for (std::size_t step = 1; step <= max_N; ++step) {
    for (auto& v : nxt) v = 0;
    for (std::size_t s = 0; s <= p; ++s) {
      if (cur[s] == 0) continue;
      for (unsigned a = 0; a < q; ++a) nxt[automaton.next(s, static_cast<Symbol>(a))] += cur[s];
    }
    series.push_back(nxt[p]);
    nxt[p] = 0;
    std::swap(cur, nxt);
  }
  return series;
}

GpRecord exact_gp(const Word& pattern, std::size_t N) {
  if (N == 0) throw InvalidArgument("G_P(N) is undefined for N = 0");
  auto series = exact_gp_series(pattern, N);
  return {pattern, N, std::move(series.back()), GpMethod::automaton_dp};
}

GpRecord brute_force_gp(const Word& pattern, std::size_t N, std::uint64_t budget) {
  if (pattern.empty()) throw InvalidArgument("pattern must be non-empty");
  if (N == 0) throw InvalidArgument("G_P(N) is undefined for N = 0");
  const unsigned q = pattern.alphabet_size();
  const std::uint64_t total = saturating_pow(q, N, budget);
  if (total > budget) {
    throw BudgetExceeded("brute-force G_P(N) over " + std::to_string(q) + "^" + std::to_string(N) +
                             " completions",
                         saturating_pow(q, N, UINT64_MAX - 1), budget);
  }
  const std::size_t p = pattern.size();
  const auto P = pattern.symbols();

  std::uint64_t count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count)
  for (std::int64_t u = 0; u < static_cast<std::int64_t>(total); ++u) {
    std::vector<Symbol> w(P.begin(), P.end());
    w.resize(N + p);
    std::uint64_t v = static_cast<std::uint64_t>(u);
    for (std::size_t i = N + p; i-- > p;) {
      w[i] = static_cast<Symbol>(v % q);
      v /= q;
    }
    bool ok = true;
    for (std::size_t k = 1; k <= N && ok; ++k) {
      const bool match = std::equal(P.begin(), P.end(), w.begin() + static_cast<std::ptrdiff_t>(k));
      ok = (k == N) == match;
    }
    if (ok) ++count;
  }
  return {pattern, N, BigInt(count), GpMethod::brute_force};
}

namespace {

void collect(const PatternAutomaton& automaton, std::size_t state, std::size_t remaining,
             std::vector<Symbol>& buf, std::vector<Word>& out) {
  const unsigned q = automaton.alphabet_size();
  const std::size_t p = automaton.accepting_state();
  for (unsigned a = 0; a < q; ++a) {
    const std::size_t s = automaton.next(state, static_cast<Symbol>(a));
    buf.push_back(static_cast<Symbol>(a));
    if (remaining == 1) {
      if (s == p) out.emplace_back(buf, q);
    } else if (s != p) {
      collect(automaton, s, remaining - 1, buf, out);
    }
    buf.pop_back();
  }
}

}  // namespace

std::vector<Word> list_codewords(const Word& pattern, std::size_t N, std::uint64_t budget) {
  if (N == 0) throw InvalidArgument("G_P(N) is undefined for N = 0");
  const unsigned q = pattern.alphabet_size();
  if (saturating_pow(q, N, budget) > budget) {
    throw BudgetExceeded("codeword listing over " + std::to_string(q) + "^" + std::to_string(N) +
                             " completions",
                         saturating_pow(q, N, UINT64_MAX - 1), budget);
  }
  const PatternAutomaton automaton(pattern);
  std::vector<Symbol> buf(pattern.symbols().begin(), pattern.symbols().end());
  std::vector<Word> out;
  collect(automaton, automaton.accepting_state(), N, buf, out);
  return out;
}

}  // namespace privword
