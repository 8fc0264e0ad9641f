#include "extcat/bruhat_base.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace extcat {

namespace {

struct BaseData {
  std::vector<Permutation> elements;
  std::map<std::pair<int, int>, std::vector<Permutation>> chains;
  std::unordered_map<Permutation, BigrassCoord> coords;
};

const BaseData& base_data(int n) {
  if (n < 2) throw std::invalid_argument("the base of S_n needs n >= 2");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const BaseData>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    auto data = std::make_unique<BaseData>();
    for (const auto& w : all_permutations(n))
      if (is_bigrassmannian(w)) data->elements.push_back(w);
    for (const auto& b : data->elements) {
      auto key = std::pair{left_descents(b).front().index, right_descents(b).front().index};
      data->chains[key].push_back(b);
    }
    // Elements arrive in global order, i.e. by length; along a chain this is
    // the Bruhat order.
    for (auto& [key, members] : data->chains)
      for (std::size_t k = 0; k < members.size(); ++k)
        data->coords.emplace(members[k], BigrassCoord{key.first, key.second, static_cast<int>(k)});
    slot = std::move(data);
  }
  return *slot;
}

}  // namespace

int chain_size(int n, int i, int j) { return std::min({i, j, n - i, n - j}); }

bool is_bigrassmannian(const Permutation& w) {
  return right_descents(w).size() == 1 && left_descents(w).size() == 1;
}

const std::vector<Permutation>& bigrassmannians(int n) { return base_data(n).elements; }

BigrassCoord coord_of(const Permutation& b) {
  if (b.rank() < 2 || !is_bigrassmannian(b))
    throw std::invalid_argument("not bigrassmannian: " + b.to_string());
  return base_data(b.rank()).coords.at(b);
}

const std::vector<Permutation>& chain(int n, int i, int j) {
  if (i < 1 || i >= n || j < 1 || j >= n)
    throw std::invalid_argument("descent index out of range for S_" + std::to_string(n));
  static const std::vector<Permutation> empty;
  const auto& chains = base_data(n).chains;
  auto it = chains.find({i, j});
  return it == chains.end() ? empty : it->second;
}

Permutation element_of(const BigrassCoord& c, int n) {
  const auto& members = chain(n, c.i, c.j);
  if (c.k < 0 || c.k >= static_cast<int>(members.size()))
    throw std::out_of_range("chain position k=" + std::to_string(c.k) + " out of range for (" +
                            std::to_string(c.i) + "," + std::to_string(c.j) + ") in S_" +
                            std::to_string(n));
  return members[static_cast<std::size_t>(c.k)];
}

std::vector<Permutation> bm(const Permutation& w) {
  if (w.rank() < 2) return {};
  std::vector<Permutation> below;
  for (const auto& b : bigrassmannians(w.rank()))
    if (bruhat_leq(b, w)) below.push_back(b);
  std::vector<Permutation> maximal;
  for (const auto& b : below) {
    bool dominated = std::any_of(below.begin(), below.end(), [&](const Permutation& c) {
      return c.length() > b.length() && bruhat_leq(b, c);
    });
    if (!dominated) maximal.push_back(b);
  }
  return maximal;
}

std::vector<Permutation> bm_st(const Permutation& w, SimpleReflection s, SimpleReflection t) {
  std::vector<Permutation> out;
  for (const auto& z : bm(w))
    if (has_left_descent(z, s.index) && has_right_descent(z, t.index)) out.push_back(z);
  return out;
}

std::optional<Permutation> join(std::span<const Permutation> elements, int n) {
  if (n > kJoinMaxRank) throw GuardExceeded("join", n, kJoinMaxRank);
  for (const auto& e : elements)
    if (e.rank() != n) throw RankMismatch(e.rank(), n);

  std::vector<Permutation> upper;
  for (const auto& z : all_permutations(n))
    if (std::all_of(elements.begin(), elements.end(),
                    [&](const Permutation& e) { return bruhat_leq(e, z); }))
      upper.push_back(z);

  std::optional<Permutation> minimal;
  for (const auto& z : upper) {
    bool has_smaller = std::any_of(upper.begin(), upper.end(), [&](const Permutation& u) {
      return u.length() < z.length() && bruhat_leq(u, z);
    });
    if (has_smaller) continue;
    if (minimal) return std::nullopt;
    minimal = z;
  }
  return minimal;
}

std::vector<Permutation> join_irreducibles(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  if (n > kJoinIrreducibleMaxRank) throw GuardExceeded("join_irreducibles", n, kJoinIrreducibleMaxRank);
  // If w is the join of some U strictly below w, every upper bound of the
  // whole strict down-set D bounds U too and hence lies above w, so w is
  // then also the join of D. It suffices to test U = D.
  std::vector<Permutation> out;
  const auto& all = all_permutations(n);
  for (const auto& w : all) {
    std::vector<Permutation> strictly_below;
    for (const auto& z : all)
      if (z != w && bruhat_leq(z, w)) strictly_below.push_back(z);
    auto j = join(strictly_below, n);
    if (!j || *j != w) out.push_back(w);
  }
  return out;
}

}  // namespace extcat
