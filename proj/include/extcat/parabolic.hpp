#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extcat/permutation.hpp"

namespace extcat {

/// A set of simple reflections of S_n, defining the standard parabolic
/// subgroup W_J (or, for a singular block, the dot-stabiliser).
class ParabolicSubset {
 public:
  ParabolicSubset(int n, std::vector<int> simples);

  /// "1,3" -> {s1, s3}; the empty string is the trivial parabolic.
  static ParabolicSubset parse(int n, std::string_view text);
  static ParabolicSubset empty(int n) { return {n, {}}; }

  int n() const { return n_; }
  const std::vector<int>& simples() const { return simples_; }
  int rank() const { return static_cast<int>(simples_.size()); }
  bool contains(int i) const;
  bool is_empty() const { return simples_.empty(); }
  std::string to_string() const;

  friend bool operator==(const ParabolicSubset&, const ParabolicSubset&) = default;

 private:
  int n_;
  std::vector<int> simples_;
};

/// Every subset of {1..n-1}, in binary-counting order.
std::vector<ParabolicSubset> all_parabolics(int n);

inline constexpr int kParabolicMaxRank = 8;

/// W_J by closure under the generators, sorted in the global order.
std::vector<Permutation> subgroup_elements(const ParabolicSubset& J);

/// Longest element of W_J: reverses each maximal run of consecutive indices.
Permutation longest_in_parabolic(const ParabolicSubset& J);

/// Longest representatives of the cosets W_J w (J inside the left descents).
std::vector<Permutation> x_long(const ParabolicSubset& J);
/// Shortest representatives of the cosets W_J w (no left descent in J).
std::vector<Permutation> x_short(const ParabolicSubset& J);

enum class CosetSide {
  left,   // W_J * w
  right,  // w * W_J
};

Permutation coset_long_rep(const Permutation& w, const ParabolicSubset& J, CosetSide side);
Permutation coset_short_rep(const Permutation& w, const ParabolicSubset& J, CosetSide side);

/// If y^{-1} W_P y is again a standard parabolic subgroup W_K, returns K.
std::optional<ParabolicSubset> is_special(const Permutation& y, const ParabolicSubset& P);

}  // namespace extcat
