#pragma once

#include <map>
#include <string>
#include <vector>

#include "extcat/permutation.hpp"

namespace extcat {

/// Integer partition, parts weakly decreasing and positive.
struct Shape {
  std::vector<int> parts;

  static Shape parse(std::string_view text);
  int size() const;
  Shape transpose() const;
  std::string to_string() const;

  friend auto operator<=>(const Shape&, const Shape&) = default;
};

struct StandardTableau {
  std::vector<std::vector<int>> rows;

  Shape shape() const;
  /// Rows and columns increase and the entries are exactly 1..size.
  bool is_standard() const;
  std::string to_string() const;

  friend auto operator<=>(const StandardTableau&, const StandardTableau&) = default;
};

struct TableauPair {
  StandardTableau insertion;  // P
  StandardTableau recording;  // Q
};

/// Row insertion of w(1), ..., w(n).
TableauPair rsk(const Permutation& w);
Shape shape(const Permutation& w);

bool same_left_cell(const Permutation& x, const Permutation& y);
bool same_right_cell(const Permutation& x, const Permutation& y);
bool same_two_sided_cell(const Permutation& x, const Permutation& y);

/// Two-sided cells of S_n keyed by shape.
std::map<Shape, std::vector<Permutation>> two_sided_cells(int n);

/// Two-sided cell of the simple reflections. n >= 3.
const std::vector<Permutation>& small_cell(int n);
/// w0 * small_cell(n), checked against the hook class (2, 1^{n-2}). n >= 3.
const std::vector<Permutation>& penultimate_cell(int n);
bool in_penultimate_cell(const Permutation& w);

/// The element of the penultimate cell whose only left ascent is s and only
/// right ascent is t.
Permutation w_st(SimpleReflection s, SimpleReflection t, int n);

/// Sends a bigrassmannian b with left descent s and right descent t to w_st(s, t).
Permutation phi(const Permutation& b);

}  // namespace extcat
