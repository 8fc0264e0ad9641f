// Subword-property Bruhat test, kept apart from the rank-matrix criterion so
// the two can be checked against each other.

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "extcat/permutation.hpp"

namespace extcat {

namespace {

// Lehmer-code index of a one-line word, in [0, n!).
std::size_t lehmer_index(const std::vector<int>& e) {
  std::size_t index = 0;
  const std::size_t n = e.size();
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t smaller = 0;
    for (std::size_t b = a + 1; b < n; ++b)
      if (e[b] < e[a]) ++smaller;
    index = index * (n - a) + smaller;
  }
  return index;
}

int inversions(const std::vector<int>& e) {
  int inv = 0;
  for (std::size_t a = 0; a < e.size(); ++a)
    for (std::size_t b = a + 1; b < e.size(); ++b)
      if (e[a] > e[b]) ++inv;
  return inv;
}

// Marks every product of a reduced subword of `word`.
std::vector<bool> subword_products(int n, const std::vector<SimpleReflection>& word) {
  std::size_t factorial = 1;
  for (int k = 2; k <= n; ++k) factorial *= static_cast<std::size_t>(k);
  std::vector<bool> reached(factorial, false);

  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 1);
  std::vector<std::vector<int>> frontier{id};
  reached[lehmer_index(id)] = true;

  for (auto letter : word) {
    std::vector<std::vector<int>> grown;
    const auto p = static_cast<std::size_t>(letter.index - 1);
    for (const auto& u : frontier) {
      // Appending s keeps the subword reduced iff it raises the length.
      if (u[p] > u[p + 1]) continue;
      auto v = u;
      std::swap(v[p], v[p + 1]);
      auto idx = lehmer_index(v);
      if (!reached[idx]) {
        reached[idx] = true;
        grown.push_back(std::move(v));
      }
    }
    frontier.insert(frontier.end(), grown.begin(), grown.end());
  }
  return reached;
}

}  // namespace

bool bruhat_leq_oracle(const Permutation& x, const Permutation& y) {
  require_same_rank(x, y);
  const int n = y.rank();
  if (n > kOracleMaxRank) throw GuardExceeded("bruhat_leq_oracle", n, kOracleMaxRank);

  static std::mutex mutex;
  static std::map<Permutation, std::shared_ptr<const std::vector<bool>>> memo;

  std::shared_ptr<const std::vector<bool>> below;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(y); it != memo.end()) below = it->second;
  }
  if (!below) {
    // Build a reduced word of y without reduced_word(): bubble sort from the
    // right, recording adjacent swaps.
    std::vector<int> e(y.one_line().begin(), y.one_line().end());
    std::vector<SimpleReflection> word;
    for (std::size_t pass = 0; pass < e.size(); ++pass)
      for (std::size_t p = e.size() - 1; p > 0; --p)
        if (e[p - 1] > e[p]) {
          std::swap(e[p - 1], e[p]);
          word.push_back({static_cast<int>(p)});
        }
    // Sorting y by right swaps gives y * s_a1 * ... * s_ak = e, so
    // y = s_ak * ... * s_a1.
    std::vector<SimpleReflection> y_word(word.rbegin(), word.rend());
    if (static_cast<int>(y_word.size()) != inversions({y.one_line().begin(), y.one_line().end()}))
      throw std::logic_error("bruhat_leq_oracle: non-reduced word");
    below = std::make_shared<const std::vector<bool>>(subword_products(n, y_word));
    std::lock_guard lock(mutex);
    memo.emplace(y, below);
  }
  return (*below)[lehmer_index({x.one_line().begin(), x.one_line().end()})];
}

}  // namespace extcat
