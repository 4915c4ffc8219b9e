#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "privword/bigint.hpp"
#include "privword/enumeration.hpp"
#include "privword/word.hpp"

namespace privword {

/// Single-pattern matching automaton. State s is the length of the longest
/// suffix of the input read so far that is a prefix of P; state p means an
/// occurrence of P just ended. Transitions out of p follow the failure link,
/// so overlapping occurrences are seen.
class PatternAutomaton {
 public:
  explicit PatternAutomaton(const Word& pattern);

  const Word& pattern() const { return pattern_; }
  std::size_t accepting_state() const { return pattern_.size(); }
  unsigned alphabet_size() const { return pattern_.alphabet_size(); }

  std::size_t next(std::size_t state, Symbol a) const { return delta_[state * alphabet_size() + a]; }

  /// Failure link of state s >= 1: the longest proper border of P[0, s).
  std::size_t failure(std::size_t state) const { return fail_[state]; }

 private:
  Word pattern_;
  std::vector<std::size_t> fail_;
  std::vector<std::size_t> delta_;  // (p + 1) x q, row-major
};

enum class GpMethod { automaton_dp, brute_force };

std::string_view to_string(GpMethod m);

/// G_P(N): words a_1..a_{N+p} with P at positions 1 and N + 1 and nowhere in between.
struct GpRecord {
  Word pattern;
  std::size_t N = 0;
  BigInt count;
  GpMethod method = GpMethod::automaton_dp;
};

/// G_P(1), ..., G_P(max_N) from a single pass of the automaton DP.
std::vector<BigInt> exact_gp_series(const Word& pattern, std::size_t max_N);

/// Throws InvalidArgument for N == 0 or an empty pattern.
GpRecord exact_gp(const Word& pattern, std::size_t N);

/// Enumerates all q^N completions u and checks the occurrences of P in P u by
/// direct comparison. Throws BudgetExceeded when q^N > budget.
GpRecord brute_force_gp(const Word& pattern, std::size_t N, std::uint64_t budget = kDefaultBudget);

/// The words counted by exact_gp, in lexicographic order.
std::vector<Word> list_codewords(const Word& pattern, std::size_t N,
                                 std::uint64_t budget = kDefaultBudget);

}  // namespace privword
