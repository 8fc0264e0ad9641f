#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace extcat {

/// Raised when two arguments live in symmetric groups of different rank.
class RankMismatch : public std::invalid_argument {
 public:
  RankMismatch(int lhs, int rhs);
};

/// Raised when a brute-force routine is asked to run above its size guard.
class GuardExceeded : public std::domain_error {
 public:
  GuardExceeded(std::string_view what, int n, int limit);
};

/// A simple reflection s_i of S_n, 1 <= i <= n-1.
struct SimpleReflection {
  int index = 0;

  friend auto operator<=>(const SimpleReflection&, const SimpleReflection&) = default;
};

/// Element of S_n in one-line notation.
///
/// Products follow (u*v)(i) = u(v(i)): right multiplication by s_i swaps the
/// entries at positions i and i+1, left multiplication swaps the values i and
/// i+1. Values are immutable and ordered first by Coxeter length and then
/// lexicographically by one-line notation.
class Permutation {
 public:
  /// Validates that `one_line` is a bijection on {1..n}, n >= 1.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  static Permutation longest(int n);
  static Permutation simple(int n, int i);
  static Permutation simple(int n, SimpleReflection s) { return simple(n, s.index); }

  /// Parses "3,1,2". Whitespace around entries is allowed.
  static Permutation parse(std::string_view text);

  int rank() const { return static_cast<int>(entries_.size()); }
  /// Image of position `pos` (1-based).
  int operator()(int pos) const { return entries_[static_cast<std::size_t>(pos - 1)]; }
  std::span<const int> one_line() const { return entries_; }
  int length() const { return length_; }
  bool is_identity() const { return length_ == 0; }

  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.entries_ == b.entries_;
  }
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

 private:
  std::vector<int> entries_;
  int length_ = 0;
};

Permutation compose(const Permutation& u, const Permutation& v);
inline Permutation operator*(const Permutation& u, const Permutation& v) { return compose(u, v); }

Permutation inverse(const Permutation& w);
Permutation longest_element(int n);

int length(const Permutation& w);

/// Number of distinct simple reflections in any reduced word of w.
int content(const Permutation& w);

std::vector<SimpleReflection> right_descents(const Permutation& w);
std::vector<SimpleReflection> left_descents(const Permutation& w);
bool has_right_descent(const Permutation& w, int i);
bool has_left_descent(const Permutation& w, int i);

/// Reduced word obtained by repeatedly stripping the smallest right descent;
/// letters are listed left to right so that their product is w.
std::vector<SimpleReflection> reduced_word(const Permutation& w);
Permutation word_product(int n, std::span<const SimpleReflection> word);

/// Bruhat order through the rank-matrix criterion.
bool bruhat_leq(const Permutation& x, const Permutation& y);

/// Independent Bruhat test: enumerates products of reduced subwords of a
/// fixed reduced word of y. Only for rank <= 7.
bool bruhat_leq_oracle(const Permutation& x, const Permutation& y);

inline constexpr int kOracleMaxRank = 7;

/// All of S_n in the global order (length, then lexicographic).
const std::vector<Permutation>& all_permutations(int n);

inline constexpr int kEnumerationMaxRank = 8;

void require_same_rank(const Permutation& a, const Permutation& b);

std::string to_string(std::span<const SimpleReflection> word);

/// Parses a comma-separated list of integers; the empty string gives {}.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace extcat

template <>
struct std::hash<extcat::Permutation> {
  std::size_t operator()(const extcat::Permutation& w) const noexcept;
};
