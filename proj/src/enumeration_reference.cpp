#include "privword/enumeration.hpp"
#include "privword/words.hpp"

namespace privword::reference {

std::uint64_t count_privileged(std::size_t n, unsigned q, std::uint64_t budget) {
  check_enumeration_budget(n, q, {.shards = 1, .budget = budget});
  PrivilegedMemo memo;
  const std::uint64_t total = saturating_pow(q, n, budget);
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (is_privileged(Word::from_index(idx, n, q), memo)) ++count;
  }
  return count;
}

std::vector<Word> list_privileged(std::size_t n, unsigned q, std::uint64_t budget) {
  check_enumeration_budget(n, q, {.shards = 1, .budget = budget});
  PrivilegedMemo memo;
  const std::uint64_t total = saturating_pow(q, n, budget);
  std::vector<Word> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Word w = Word::from_index(idx, n, q);
    if (is_privileged(w, memo)) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace privword::reference
