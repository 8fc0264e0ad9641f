#include "extcat/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace extcat {

namespace {

int count_inversions(const std::vector<int>& e) {
  int inv = 0;
  for (std::size_t a = 0; a < e.size(); ++a)
    for (std::size_t b = a + 1; b < e.size(); ++b)
      if (e[a] > e[b]) ++inv;
  return inv;
}

std::string trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

RankMismatch::RankMismatch(int lhs, int rhs)
    : std::invalid_argument("rank mismatch: S_" + std::to_string(lhs) + " vs S_" +
                            std::to_string(rhs)) {}

GuardExceeded::GuardExceeded(std::string_view what, int n, int limit)
    : std::domain_error(std::string(what) + ": rank " + std::to_string(n) +
                        " exceeds the limit " + std::to_string(limit)) {}

Permutation::Permutation(std::vector<int> one_line) : entries_(std::move(one_line)) {
  const int n = rank();
  if (n < 1) throw std::invalid_argument("permutation must have rank >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : entries_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n) + ": " +
                                  to_string());
    seen[static_cast<std::size_t>(v)] = true;
  }
  length_ = count_inversions(entries_);
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::longest(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) e[static_cast<std::size_t>(p)] = n - p;
  return Permutation(std::move(e));
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i > n - 1)
    throw std::invalid_argument("simple reflection s_" + std::to_string(i) +
                                " out of range for S_" + std::to_string(n));
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  std::swap(e[static_cast<std::size_t>(i - 1)], e[static_cast<std::size_t>(i)]);
  return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
  auto entries = parse_int_list(text);
  if (entries.empty()) throw std::invalid_argument("empty permutation");
  return Permutation(std::move(entries));
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string body = trim(text);
  if (body.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    auto comma = body.find(',', start);
    auto piece = trim(std::string_view(body).substr(
        start, comma == std::string::npos ? std::string::npos : comma - start));
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size())
      throw std::invalid_argument("malformed integer list '" + std::string(text) + "'");
    out.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t p = 0; p < entries_.size(); ++p) {
    if (p) out += ',';
    out += std::to_string(entries_[p]);
  }
  return out;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (auto c = a.rank() <=> b.rank(); c != 0) return c;
  if (auto c = a.length_ <=> b.length_; c != 0) return c;
  return a.entries_ <=> b.entries_;
}

void require_same_rank(const Permutation& a, const Permutation& b) {
  if (a.rank() != b.rank()) throw RankMismatch(a.rank(), b.rank());
}

Permutation compose(const Permutation& u, const Permutation& v) {
  require_same_rank(u, v);
  std::vector<int> e(static_cast<std::size_t>(u.rank()));
  for (int p = 1; p <= u.rank(); ++p) e[static_cast<std::size_t>(p - 1)] = u(v(p));
  return Permutation(std::move(e));
}

Permutation inverse(const Permutation& w) {
  std::vector<int> e(static_cast<std::size_t>(w.rank()));
  for (int p = 1; p <= w.rank(); ++p) e[static_cast<std::size_t>(w(p) - 1)] = p;
  return Permutation(std::move(e));
}

Permutation longest_element(int n) { return Permutation::longest(n); }

int length(const Permutation& w) { return w.length(); }

int content(const Permutation& w) {
  // s_i is in the support iff w does not stabilise {1..i}.
  int c = 0;
  int prefix_max = 0;
  for (int i = 1; i < w.rank(); ++i) {
    prefix_max = std::max(prefix_max, w(i));
    if (prefix_max != i) ++c;
  }
  return c;
}

bool has_right_descent(const Permutation& w, int i) { return w(i) > w(i + 1); }

bool has_left_descent(const Permutation& w, int i) {
  // Value i+1 sits to the left of value i.
  for (int p = 1; p <= w.rank(); ++p) {
    if (w(p) == i + 1) return true;
    if (w(p) == i) return false;
  }
  return false;
}

std::vector<SimpleReflection> right_descents(const Permutation& w) {
  std::vector<SimpleReflection> out;
  for (int i = 1; i < w.rank(); ++i)
    if (has_right_descent(w, i)) out.push_back({i});
  return out;
}

std::vector<SimpleReflection> left_descents(const Permutation& w) {
  return right_descents(inverse(w));
}

std::vector<SimpleReflection> reduced_word(const Permutation& w) {
  std::vector<int> e(w.one_line().begin(), w.one_line().end());
  std::vector<SimpleReflection> reversed;
  for (;;) {
    std::size_t p = 0;
    while (p + 1 < e.size() && e[p] < e[p + 1]) ++p;
    if (p + 1 >= e.size()) break;
    std::swap(e[p], e[p + 1]);
    reversed.push_back({static_cast<int>(p) + 1});
  }
  return {reversed.rbegin(), reversed.rend()};
}

Permutation word_product(int n, std::span<const SimpleReflection> word) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  for (auto s : word) {
    if (s.index < 1 || s.index >= n) throw std::invalid_argument("letter out of range");
    std::swap(e[static_cast<std::size_t>(s.index - 1)], e[static_cast<std::size_t>(s.index)]);
  }
  return Permutation(std::move(e));
}

bool bruhat_leq(const Permutation& x, const Permutation& y) {
  require_same_rank(x, y);
  if (x.length() > y.length()) return false;
  const int n = x.rank();
  // count[b] = |{p <= a : w(p) >= b}| for the current prefix a.
  std::vector<int> cx(static_cast<std::size_t>(n) + 2, 0), cy(cx);
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= x(a); ++b) ++cx[static_cast<std::size_t>(b)];
    for (int b = 1; b <= y(a); ++b) ++cy[static_cast<std::size_t>(b)];
    for (int b = 1; b <= n; ++b)
      if (cx[static_cast<std::size_t>(b)] > cy[static_cast<std::size_t>(b)]) return false;
  }
  return true;
}

const std::vector<Permutation>& all_permutations(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  if (n > kEnumerationMaxRank) throw GuardExceeded("enumeration of S_n", n, kEnumerationMaxRank);
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const std::vector<Permutation>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    std::vector<Permutation> all;
    do {
      all.emplace_back(e);
    } while (std::next_permutation(e.begin(), e.end()));
    std::sort(all.begin(), all.end());
    slot = std::make_unique<const std::vector<Permutation>>(std::move(all));
  }
  return *slot;
}

std::string to_string(std::span<const SimpleReflection> word) {
  std::ostringstream out;
  out << '[';
  for (std::size_t k = 0; k < word.size(); ++k) out << (k ? "," : "") << 's' << word[k].index;
  out << ']';
  return out.str();
}

}  // namespace extcat

std::size_t std::hash<extcat::Permutation>::operator()(const extcat::Permutation& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : w.one_line()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}
