#include "extcat/parabolic.hpp"

#include <algorithm>
#include <set>

namespace extcat {

ParabolicSubset::ParabolicSubset(int n, std::vector<int> simples) : n_(n), simples_(std::move(simples)) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  std::sort(simples_.begin(), simples_.end());
  simples_.erase(std::unique(simples_.begin(), simples_.end()), simples_.end());
  for (int i : simples_)
    if (i < 1 || i >= n)
      throw std::invalid_argument("simple reflection index " + std::to_string(i) +
                                  " out of range for S_" + std::to_string(n));
}

ParabolicSubset ParabolicSubset::parse(int n, std::string_view text) {
  return {n, parse_int_list(text)};
}

bool ParabolicSubset::contains(int i) const {
  return std::binary_search(simples_.begin(), simples_.end(), i);
}

std::string ParabolicSubset::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < simples_.size(); ++k) out += (k ? "," : "") + std::to_string(simples_[k]);
  return out;
}

std::vector<ParabolicSubset> all_parabolics(int n) {
  std::vector<ParabolicSubset> out;
  const int generators = n - 1;
  for (unsigned mask = 0; mask < (1u << generators); ++mask) {
    std::vector<int> simples;
    for (int i = 1; i <= generators; ++i)
      if (mask & (1u << (i - 1))) simples.push_back(i);
    out.emplace_back(n, std::move(simples));
  }
  return out;
}

std::vector<Permutation> subgroup_elements(const ParabolicSubset& J) {
  const int n = J.n();
  if (n > kParabolicMaxRank) throw GuardExceeded("subgroup_elements", n, kParabolicMaxRank);
  std::set<Permutation> seen{Permutation::identity(n)};
  std::vector<Permutation> todo{Permutation::identity(n)};
  while (!todo.empty()) {
    auto w = todo.back();
    todo.pop_back();
    for (int i : J.simples()) {
      auto v = w * Permutation::simple(n, i);
      if (seen.insert(v).second) todo.push_back(v);
    }
  }
  return {seen.begin(), seen.end()};
}

Permutation longest_in_parabolic(const ParabolicSubset& J) {
  const int n = J.n();
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int p = 1; p <= n;) {
    // Maximal run p..q of positions joined by generators s_p..s_{q-1}.
    int q = p;
    while (q < n && J.contains(q)) ++q;
    for (int k = p; k <= q; ++k) e[static_cast<std::size_t>(k - 1)] = p + q - k;
    p = q + 1;
  }
  return Permutation(std::move(e));
}

std::vector<Permutation> x_long(const ParabolicSubset& J) {
  std::vector<Permutation> out;
  for (const auto& w : all_permutations(J.n()))
    if (std::all_of(J.simples().begin(), J.simples().end(),
                    [&](int i) { return has_left_descent(w, i); }))
      out.push_back(w);
  return out;
}

std::vector<Permutation> x_short(const ParabolicSubset& J) {
  std::vector<Permutation> out;
  for (const auto& w : all_permutations(J.n()))
    if (std::none_of(J.simples().begin(), J.simples().end(),
                     [&](int i) { return has_left_descent(w, i); }))
      out.push_back(w);
  return out;
}

namespace {

Permutation coset_extreme(const Permutation& w, const ParabolicSubset& J, CosetSide side, bool up) {
  if (w.rank() != J.n()) throw RankMismatch(w.rank(), J.n());
  auto current = w;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i : J.simples()) {
      bool descent = side == CosetSide::left ? has_left_descent(current, i)
                                             : has_right_descent(current, i);
      if (descent != up) {
        auto s = Permutation::simple(J.n(), i);
        current = side == CosetSide::left ? s * current : current * s;
        moved = true;
      }
    }
  }
  return current;
}

}  // namespace

Permutation coset_long_rep(const Permutation& w, const ParabolicSubset& J, CosetSide side) {
  return coset_extreme(w, J, side, true);
}

Permutation coset_short_rep(const Permutation& w, const ParabolicSubset& J, CosetSide side) {
  return coset_extreme(w, J, side, false);
}

std::optional<ParabolicSubset> is_special(const Permutation& y, const ParabolicSubset& P) {
  if (y.rank() != P.n()) throw RankMismatch(y.rank(), P.n());
  const auto y_inv = inverse(y);
  std::vector<Permutation> conjugate;
  for (const auto& u : subgroup_elements(P)) conjugate.push_back(y_inv * u * y);
  std::sort(conjugate.begin(), conjugate.end());

  std::vector<int> simples;
  for (int i = 1; i < P.n(); ++i)
    if (std::binary_search(conjugate.begin(), conjugate.end(), Permutation::simple(P.n(), i)))
      simples.push_back(i);
  ParabolicSubset candidate(P.n(), std::move(simples));
  if (subgroup_elements(candidate) != conjugate) return std::nullopt;
  return candidate;
}

}  // namespace extcat
