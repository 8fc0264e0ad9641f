#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "extcat/parabolic.hpp"
#include "extcat/permutation.hpp"

namespace extcat {

enum class ExtStatus { exact, zero, unknown };

/// How a reported degree i is to be read. Every convention reports i with
/// the answer meaning dim ext^1(L_x, M_y<i>) for the graded lifts described.
enum class Normalization {
  /// Both graded lifts have their top in degree 0.
  top_degree_zero,
  /// Singular block, both lifts top-degree-0 with y replaced by its
  /// shortest coset representative.
  singular_top_degree_zero,
  /// Standard objects of an S-subcategory: the singular-block degree shifted
  /// by l(w0^p). Fitted to a single table entry; treat as low confidence.
  s_standard_shifted,
};

std::string_view to_string(ExtStatus status);
std::string_view to_string(Normalization normalization);
ExtStatus parse_status(std::string_view text);
Normalization parse_normalization(std::string_view text);

struct DegreeReport {
  Normalization normalization = Normalization::top_degree_zero;
  std::vector<int> degrees;

  friend bool operator==(const DegreeReport&, const DegreeReport&) = default;
};

/// Graded first-extension answer. `dim` is absent iff the status is unknown;
/// `degrees` is absent when the graded position is not known.
struct GradedExtAnswer {
  ExtStatus status = ExtStatus::unknown;
  std::optional<int> dim;
  std::optional<std::vector<int>> degrees;
  Normalization normalization = Normalization::top_degree_zero;
  /// A second degree report in another convention, when one exists.
  std::optional<DegreeReport> alternate;

  static GradedExtAnswer zero(Normalization normalization = Normalization::top_degree_zero);
  static GradedExtAnswer unknown(Normalization normalization = Normalization::top_degree_zero);
  static GradedExtAnswer exact(int dim, std::optional<int> degree,
                               Normalization normalization = Normalization::top_degree_zero);

  bool is_nonzero() const { return status == ExtStatus::exact; }

  friend bool operator==(const GradedExtAnswer&, const GradedExtAnswer&) = default;
};

/// A socle constituent L_x of a Verma cokernel at graded position m.
struct SocleEntry {
  Permutation x;
  int m = 0;

  friend bool operator==(const SocleEntry&, const SocleEntry&) = default;
};

/// (n-1)(n-2)/2 + |i-j| + 2k for b with coordinates (i, j, k).
int m_degree(const Permutation& b);

/// Converts a pair of graded shifts ext^1(L<simple_shift>, M<object_shift>)
/// into the degree i of ext^1(L, M<i>).
constexpr int top_zero_degree(int simple_shift, int object_shift) {
  return object_shift - simple_shift;
}

/// Socle of Delta_v / Delta_w: one entry (phi(b), m_degree(b)) for every
/// Bruhat-maximal b in {b in B : b <= w, b not<= v}. Requires v <= w.
std::vector<SocleEntry> socle_coker_verma(const Permutation& v, const Permutation& w);

/// The same socle read as phi(BM(w) \ BM(v)).
std::vector<SocleEntry> socle_coker_verma_set_difference(const Permutation& v, const Permutation& w);

/// Delta_e / Delta_w has simple socle iff w is bigrassmannian. w != e.
bool has_simple_socle_coker(const Permutation& w);

/// dim ext^1(L_x, Delta_y<i>) in category O_0.
GradedExtAnswer ext1_simple_to_verma(const Permutation& x, const Permutation& y);

/// dim ext^1(L(x.lambda), Delta(y.lambda)) in the singular block whose
/// dot-stabiliser is `stab`.
GradedExtAnswer ext1_singular(const Permutation& x, const Permutation& y,
                              const ParabolicSubset& stab);

}  // namespace extcat
