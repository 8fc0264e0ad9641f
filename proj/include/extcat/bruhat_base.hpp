#pragma once

#include <optional>
#include <span>
#include <vector>

#include "extcat/permutation.hpp"

namespace extcat {

/// Coordinates (i, j, k) of a bigrassmannian permutation: s_i is its unique
/// left descent, s_j its unique right descent, and k its position in the
/// Bruhat chain iB_j counted from 0.
struct BigrassCoord {
  int i = 0;
  int j = 0;
  int k = 0;

  friend auto operator<=>(const BigrassCoord&, const BigrassCoord&) = default;
};

/// Size of the chain iB_j in S_n: min{i, j, n-i, n-j}.
int chain_size(int n, int i, int j);

bool is_bigrassmannian(const Permutation& w);

/// The base B of S_n (bigrassmannian = join-irreducible elements) in the
/// global order. Memoised per n; requires n >= 2.
const std::vector<Permutation>& bigrassmannians(int n);

BigrassCoord coord_of(const Permutation& b);
Permutation element_of(const BigrassCoord& c, int n);

/// The chain iB_j sorted upwards in Bruhat order.
const std::vector<Permutation>& chain(int n, int i, int j);

/// Bruhat-maximal bigrassmannians below w, in the global order.
std::vector<Permutation> bm(const Permutation& w);

/// Members of bm(w) with left descent s and right descent t.
std::vector<Permutation> bm_st(const Permutation& w, SimpleReflection s, SimpleReflection t);

inline constexpr int kJoinMaxRank = 7;
inline constexpr int kJoinIrreducibleMaxRank = 5;

/// Least upper bound in the Bruhat order of S_n, found by scanning all
/// common upper bounds. Empty when the minimal upper bounds are not unique.
std::optional<Permutation> join(std::span<const Permutation> elements, int n);

/// Join-irreducible elements of S_n computed straight from the definition.
std::vector<Permutation> join_irreducibles(int n);

}  // namespace extcat
