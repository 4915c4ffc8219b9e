#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "privword/bigint.hpp"
#include "privword/word.hpp"

namespace privword {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 30;

struct EnumerationConfig {
  unsigned shards = 1;
  /// Maximum number of words an exhaustive search may visit (q^n).
  std::uint64_t budget = kDefaultBudget;
};

enum class CountMethod { exhaustive };

std::string_view to_string(CountMethod m);

/// B(n, q): the number of privileged words of length n over q letters.
struct CountRecord {
  std::size_t n = 0;
  unsigned q = 2;
  BigInt count;
  CountMethod method = CountMethod::exhaustive;
  double wall_time = 0.0;  // seconds
};

/// Throws BudgetExceeded when q^n > budget, InvalidArgument when n == 0 or shards == 0.
void check_enumeration_budget(std::size_t n, unsigned q, const EnumerationConfig& config);

/// Exact count by exhaustive search. The search space is cut into q^k subtrees
/// by the first k = ceil(log_q shards) symbols; subtree j belongs to shard
/// j mod shards and shards run in parallel. The result does not depend on the
/// shard count.
CountRecord count_privileged(std::size_t n, unsigned q, const EnumerationConfig& config = {});

/// Privileged words of length n in lexicographic order.
std::vector<Word> list_privileged(std::size_t n, unsigned q, const EnumerationConfig& config = {});

/// Serial implementation built directly on is_privileged(); kept as the
/// reference the parallel kernel is tested and benchmarked against.
namespace reference {

std::uint64_t count_privileged(std::size_t n, unsigned q, std::uint64_t budget = kDefaultBudget);
std::vector<Word> list_privileged(std::size_t n, unsigned q, std::uint64_t budget = kDefaultBudget);

}  // namespace reference

}  // namespace privword
