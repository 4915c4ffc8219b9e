#include "privword/count_cache.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "privword/errors.hpp"

namespace privword {

namespace {

constexpr const char* kHeader = "# n,q,count,method,wall_time";

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

template <typename T>
bool parse_number(const std::string& s, T& out) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::optional<CountRecord> parse_record(const std::string& line, std::string& why) {
  const auto f = split(line, ',');
  if (f.size() != 5) {
    why = "expected 5 fields";
    return std::nullopt;
  }
  CountRecord rec;
  if (!parse_number(f[0], rec.n) || rec.n == 0) {
    why = "bad n";
    return std::nullopt;
  }
  if (!parse_number(f[1], rec.q) || rec.q < 2 || rec.q > kMaxAlphabet) {
    why = "bad q";
    return std::nullopt;
  }
  if (f[2].empty() || f[2].find_first_not_of("0123456789") != std::string::npos) {
    why = "count is not a decimal integer";
    return std::nullopt;
  }
  rec.count = BigInt(f[2]);
  if (f[3] != to_string(CountMethod::exhaustive)) {
    why = "unknown method tag '" + f[3] + "'";
    return std::nullopt;
  }
  rec.method = CountMethod::exhaustive;
  try {
    std::size_t used = 0;
    rec.wall_time = std::stod(f[4], &used);
    if (used != f[4].size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    why = "bad wall_time";
    return std::nullopt;
  }
  // Every single-letter power is privileged, and no count exceeds q^n.
  if (rec.count < rec.q || rec.count > big_pow(rec.q, rec.n)) {
    why = "count outside [q, q^n]";
    return std::nullopt;
  }
  return rec;
}

std::string format_record(const CountRecord& r) {
  char wall[64];
  std::snprintf(wall, sizeof wall, "%.6f", r.wall_time);
  return std::to_string(r.n) + "," + std::to_string(r.q) + "," + to_decimal(r.count) + "," +
         std::string(to_string(r.method)) + "," + wall;
}

}  // namespace

CountCache::CountCache(std::filesystem::path path) : path_(std::move(path)) {}

std::vector<CountRecord> CountCache::read_all() {
  std::vector<CountRecord> out;
  std::ifstream in(path_);
  if (!in) return out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::string why;
    if (auto rec = parse_record(line, why)) {
      out.push_back(std::move(*rec));
    } else {
      warnings_.push_back(path_.string() + ":" + std::to_string(lineno) +
                          ": ignoring corrupt cache entry (" + why + ")");
    }
  }
  return out;
}

std::optional<CountRecord> CountCache::load(std::size_t n, unsigned q) {
  warnings_.clear();
  for (auto& rec : read_all()) {
    if (rec.n == n && rec.q == q) return rec;
  }
  return std::nullopt;
}

void CountCache::store(const CountRecord& record) {
  warnings_.clear();
  for (const auto& rec : read_all()) {
    if (rec.n != record.n || rec.q != record.q) continue;
    if (rec.count == record.count) return;
    throw CacheError("cache already holds B(" + std::to_string(rec.n) + "," + std::to_string(rec.q) +
                     ") = " + to_decimal(rec.count) + ", refusing to overwrite with " +
                     to_decimal(record.count));
  }
  const bool fresh = !std::filesystem::exists(path_) || std::filesystem::file_size(path_) == 0;
  std::ofstream out(path_, std::ios::app);
  if (!out) throw CacheError("cannot open cache file " + path_.string() + " for writing");
  if (fresh) out << kHeader << '\n';
  out << format_record(record) << '\n';
  if (!out) throw CacheError("failed writing cache file " + path_.string());
}

}  // namespace privword
