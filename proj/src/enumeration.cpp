#include "privword/enumeration.hpp"

#include <chrono>

#include "privword/errors.hpp"
#include "privword/privileged_table.hpp"

namespace privword {

std::string_view to_string(CountMethod m) {
  switch (m) {
    case CountMethod::exhaustive:
      return "exhaustive";
  }
  return "unknown";
}

void check_enumeration_budget(std::size_t n, unsigned q, const EnumerationConfig& config) {
  if (n == 0) throw InvalidArgument("word length must be at least 1");
  if (config.shards == 0) throw InvalidArgument("shard count must be at least 1");
  if (config.budget == 0) throw InvalidArgument("budget must be at least 1");
  const std::uint64_t required = saturating_pow(q, n, config.budget);
  if (required > config.budget) {
    // Report the true requirement when it fits in 64 bits.
    const std::uint64_t exact = saturating_pow(q, n, UINT64_MAX - 1);
    throw BudgetExceeded("exhaustive search over " + std::to_string(q) + "^" + std::to_string(n) +
                             " words",
                         exact, config.budget);
  }
}

namespace {

struct Partition {
  std::uint64_t subtrees;      // q^k
  std::uint64_t subtree_size;  // q^(n-k)
};

Partition partition(std::size_t n, unsigned q, unsigned shards) {
  std::size_t k = 0;
  std::uint64_t subtrees = 1;
  while (subtrees < shards && k < n) {
    subtrees *= q;
    ++k;
  }
  return {subtrees, saturating_pow(q, n - k, UINT64_MAX - 1)};
}

// Runs `visit(shard, first, last)` over every subtree, shards in parallel.
template <typename Visit>
void for_each_shard(const Partition& part, unsigned shards, Visit&& visit) {
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(shards); ++s) {
    for (std::uint64_t j = static_cast<std::uint64_t>(s); j < part.subtrees; j += shards) {
      visit(static_cast<std::size_t>(s), j * part.subtree_size, (j + 1) * part.subtree_size);
    }
  }
}

}  // namespace

CountRecord count_privileged(std::size_t n, unsigned q, const EnumerationConfig& config) {
  check_enumeration_budget(n, q, config);
  const auto start = std::chrono::steady_clock::now();

  const PrivilegedTable table(q, n - 1);
  const Partition part = partition(n, q, config.shards);
  std::vector<std::uint64_t> per_shard(config.shards, 0);
  for_each_shard(part, config.shards, [&](std::size_t shard, std::uint64_t first, std::uint64_t last) {
    std::uint64_t c = 0;
    for (std::uint64_t idx = first; idx < last; ++idx) c += table.classify(n, idx) ? 1 : 0;
    per_shard[shard] += c;
  });

  CountRecord rec;
  rec.n = n;
  rec.q = q;
  for (std::uint64_t c : per_shard) rec.count += c;
  rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::vector<Word> list_privileged(std::size_t n, unsigned q, const EnumerationConfig& config) {
  check_enumeration_budget(n, q, config);
  const PrivilegedTable table(q, n - 1);
  const Partition part = partition(n, q, config.shards);

  // One hit list per subtree; concatenating them in subtree order keeps the
  // output sorted.
  std::vector<std::vector<std::uint64_t>> hits(part.subtrees);
  for_each_shard(part, config.shards, [&](std::size_t, std::uint64_t first, std::uint64_t last) {
    auto& out = hits[first / part.subtree_size];
    for (std::uint64_t idx = first; idx < last; ++idx) {
      if (table.classify(n, idx)) out.push_back(idx);
    }
  });

  std::vector<Word> words;
  for (const auto& subtree : hits) {
    for (std::uint64_t idx : subtree) words.push_back(Word::from_index(idx, n, q));
  }
  return words;
}

}  // namespace privword
