#include "privword/words.hpp"

#include <algorithm>
#include <mutex>

#include "privword/errors.hpp"

namespace privword {

std::vector<std::size_t> failure_function(std::span<const Symbol> w) {
  std::vector<std::size_t> fail(w.size(), 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    while (k > 0 && w[i] != w[k]) k = fail[k - 1];
    if (w[i] == w[k]) ++k;
    fail[i] = k;
  }
  return fail;
}

std::vector<std::size_t> z_array(std::span<const Symbol> w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> z(n, 0);
  if (n == 0) return z;
  z[0] = n;
  std::size_t l = 0, r = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (i < r) z[i] = std::min(r - i, z[i - l]);
    while (i + z[i] < n && w[z[i]] == w[i + z[i]]) ++z[i];
    if (i + z[i] > r) {
      l = i;
      r = i + z[i];
    }
  }
  return z;
}

std::vector<std::size_t> border_lengths(const Word& w) {
  if (w.empty()) throw InvalidArgument("the empty word has no borders");
  const auto fail = failure_function(w.symbols());
  std::vector<std::size_t> out;
  for (std::size_t b = fail.back(); b > 0; b = fail[b - 1]) out.push_back(b);
  std::reverse(out.begin(), out.end());
  return out;
}

std::size_t count_occurrences(const Word& pattern, const Word& text) {
  if (pattern.empty()) throw InvalidArgument("cannot count occurrences of the empty pattern");
  if (pattern.alphabet_size() != text.alphabet_size()) {
    throw InvalidArgument("pattern and text use different alphabet sizes");
  }
  const auto p = pattern.symbols();
  const auto fail = failure_function(p);
  std::size_t count = 0, k = 0;
  for (Symbol c : text.symbols()) {
    while (k > 0 && (k == p.size() || c != p[k])) k = fail[k - 1];
    if (c == p[k]) ++k;
    if (k == p.size()) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------

std::optional<bool> PrivilegedMemo::find(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void PrivilegedMemo::insert(const std::string& key, bool value) {
  std::unique_lock lock(mutex_);
  table_.emplace(key, value);
}

std::size_t PrivilegedMemo::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void PrivilegedMemo::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
}

PrivilegedMemo& default_privileged_memo() {
  static PrivilegedMemo memo;
  return memo;
}

namespace {

// Longest border of w that occurs exactly twice and is privileged, or 0.
std::size_t privileged_border(const Word& w, PrivilegedMemo& memo) {
  const std::size_t n = w.size();
  const auto z = z_array(w.symbols());
  for (std::size_t b = n - 1; b >= 1; --b) {
    if (z[n - b] != b) continue;
    // The prefix of length b occurs at 0 and n - b; any other i with z[i] >= b
    // is a third occurrence.
    bool twice = true;
    for (std::size_t i = 1; i < n - b; ++i) {
      if (z[i] >= b) {
        twice = false;
        break;
      }
    }
    if (twice && is_privileged(w.prefix(b), memo)) return b;
  }
  return 0;
}

}  // namespace

bool is_privileged(const Word& w, PrivilegedMemo& memo) {
  if (w.empty()) throw InvalidArgument("privileged test is undefined for the empty word");
  if (w.size() == 1) return true;
  const std::string key = w.key();
  if (auto hit = memo.find(key)) return *hit;
  const bool result = privileged_border(w, memo) > 0;
  memo.insert(key, result);
  return result;
}

bool is_privileged(const Word& w) { return is_privileged(w, default_privileged_memo()); }

std::optional<std::vector<Word>> privileged_witness(const Word& w, PrivilegedMemo& memo) {
  if (w.empty()) throw InvalidArgument("privileged test is undefined for the empty word");
  std::vector<Word> chain{w};
  while (chain.back().size() > 1) {
    const std::size_t b = privileged_border(chain.back(), memo);
    if (b == 0) return std::nullopt;
    chain.push_back(chain.back().prefix(b));
  }
  return chain;
}

std::optional<std::vector<Word>> privileged_witness(const Word& w) {
  return privileged_witness(w, default_privileged_memo());
}

// ---------------------------------------------------------------------------

Autocorrelation::Autocorrelation(std::vector<bool> bits) : bits_(std::move(bits)) {
  if (bits_.empty() || !bits_[0]) {
    throw InvalidArgument("autocorrelation must be non-empty with bit 0 set");
  }
}

std::string Autocorrelation::str() const {
  std::string s;
  for (bool b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

Autocorrelation autocorrelation(const Word& pattern) {
  if (pattern.empty()) throw InvalidArgument("autocorrelation of the empty word");
  const std::size_t p = pattern.size();
  const auto z = z_array(pattern.symbols());
  std::vector<bool> bits(p);
  for (std::size_t t = 0; t < p; ++t) bits[t] = z[t] == p - t;
  return Autocorrelation(std::move(bits));
}

CorrelationPolynomial::CorrelationPolynomial(const Autocorrelation& q) : coeffs_(q.length(), 0) {
  const std::size_t p = q.length();
  for (std::size_t t = 0; t < p; ++t) coeffs_[p - 1 - t] = q[t] ? 1 : 0;
}

namespace {

template <typename T>
T horner(const std::vector<int>& c, T z) {
  T acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + static_cast<T>(c[k]);
  return acc;
}

template <typename T>
T horner_derivative(const std::vector<int>& c, T z) {
  T acc = 0;
  for (std::size_t k = c.size(); k-- > 1;) acc = acc * z + static_cast<T>(c[k]) * static_cast<T>(k);
  return acc;
}

}  // namespace

double CorrelationPolynomial::eval(double z) const { return horner(coeffs_, z); }
long double CorrelationPolynomial::eval(long double z) const { return horner(coeffs_, z); }
double CorrelationPolynomial::derivative(double z) const { return horner_derivative(coeffs_, z); }
long double CorrelationPolynomial::derivative(long double z) const {
  return horner_derivative(coeffs_, z);
}

BigInt CorrelationPolynomial::eval_exact(unsigned z) const {
  return horner(coeffs_, BigInt(z));
}

BigInt CorrelationPolynomial::derivative_exact(unsigned z) const {
  return horner_derivative(coeffs_, BigInt(z));
}

std::string CorrelationPolynomial::str() const {
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += "1";
    } else {
      out += k == 1 ? "z" : "z^" + std::to_string(k);
    }
  }
  return out;
}

CorrelationPolynomial correlation_polynomial(const Autocorrelation& q) {
  return CorrelationPolynomial(q);
}

}  // namespace privword
