#include "extcat/ext_o.hpp"

#include <algorithm>
#include <cstdlib>

#include "extcat/bruhat_base.hpp"
#include "extcat/cells.hpp"

namespace extcat {

namespace {

void require_cell_rank(int n) {
  if (n < 3) throw std::invalid_argument("extension formulas need n >= 3 (got " + std::to_string(n) + ")");
}

std::vector<SocleEntry> to_entries(const std::vector<Permutation>& bs) {
  std::vector<SocleEntry> out;
  for (const auto& b : bs) out.push_back({phi(b), m_degree(b)});
  std::sort(out.begin(), out.end(), [](const SocleEntry& a, const SocleEntry& b) {
    return a.x != b.x ? a.x < b.x : a.m < b.m;
  });
  return out;
}

// Antidominant row, regular block.
GradedExtAnswer from_antidominant(const Permutation& w0, const Permutation& y) {
  const int d = content(w0 * y);
  if (d == 0) return GradedExtAnswer::zero();
  return GradedExtAnswer::exact(d, w0.length() - y.length() - 2);
}

}  // namespace

std::string_view to_string(ExtStatus status) {
  switch (status) {
    case ExtStatus::exact: return "exact";
    case ExtStatus::zero: return "zero";
    case ExtStatus::unknown: return "unknown";
  }
  return "?";
}

std::string_view to_string(Normalization normalization) {
  switch (normalization) {
    case Normalization::top_degree_zero: return "top-degree-0";
    case Normalization::singular_top_degree_zero: return "singular-top-degree-0";
    case Normalization::s_standard_shifted: return "s-standard-shifted";
  }
  return "?";
}

ExtStatus parse_status(std::string_view text) {
  for (auto s : {ExtStatus::exact, ExtStatus::zero, ExtStatus::unknown})
    if (to_string(s) == text) return s;
  throw std::invalid_argument("unknown status '" + std::string(text) + "'");
}

Normalization parse_normalization(std::string_view text) {
  for (auto n : {Normalization::top_degree_zero, Normalization::singular_top_degree_zero,
                 Normalization::s_standard_shifted})
    if (to_string(n) == text) return n;
  throw std::invalid_argument("unknown normalization '" + std::string(text) + "'");
}

GradedExtAnswer GradedExtAnswer::zero(Normalization normalization) {
  return {ExtStatus::zero, 0, std::vector<int>{}, normalization, std::nullopt};
}

GradedExtAnswer GradedExtAnswer::unknown(Normalization normalization) {
  return {ExtStatus::unknown, std::nullopt, std::nullopt, normalization, std::nullopt};
}

GradedExtAnswer GradedExtAnswer::exact(int dim, std::optional<int> degree, Normalization normalization) {
  if (dim <= 0) return zero(normalization);
  GradedExtAnswer a{ExtStatus::exact, dim, std::nullopt, normalization, std::nullopt};
  if (degree) a.degrees = std::vector<int>{*degree};
  return a;
}

int m_degree(const Permutation& b) {
  const auto c = coord_of(b);
  const int n = b.rank();
  return (n - 1) * (n - 2) / 2 + std::abs(c.i - c.j) + 2 * c.k;
}

std::vector<SocleEntry> socle_coker_verma(const Permutation& v, const Permutation& w) {
  require_same_rank(v, w);
  require_cell_rank(w.rank());
  if (!bruhat_leq(v, w))
    throw std::invalid_argument("socle_coker_verma: " + v.to_string() + " is not below " + w.to_string());
  std::vector<Permutation> region;
  for (const auto& b : bigrassmannians(w.rank()))
    if (bruhat_leq(b, w) && !bruhat_leq(b, v)) region.push_back(b);
  std::vector<Permutation> maximal;
  for (const auto& b : region)
    if (std::none_of(region.begin(), region.end(), [&](const Permutation& c) {
          return c != b && bruhat_leq(b, c);
        }))
      maximal.push_back(b);
  return to_entries(maximal);
}

std::vector<SocleEntry> socle_coker_verma_set_difference(const Permutation& v, const Permutation& w) {
  require_same_rank(v, w);
  require_cell_rank(w.rank());
  if (!bruhat_leq(v, w))
    throw std::invalid_argument("socle_coker_verma: " + v.to_string() + " is not below " + w.to_string());
  const auto below_v = bm(v);
  std::vector<Permutation> diff;
  for (const auto& b : bm(w))
    if (std::find(below_v.begin(), below_v.end(), b) == below_v.end()) diff.push_back(b);
  return to_entries(diff);
}

bool has_simple_socle_coker(const Permutation& w) {
  if (w.is_identity()) throw std::invalid_argument("Delta_e / Delta_e is zero");
  const bool simple = is_bigrassmannian(w);
  const auto socle = socle_coker_verma(Permutation::identity(w.rank()), w);
  if ((socle.size() == 1) != simple)
    throw std::logic_error("socle of Delta_e/Delta_" + w.to_string() +
                           " disagrees with the bigrassmannian test");
  return simple;
}

GradedExtAnswer ext1_simple_to_verma(const Permutation& x, const Permutation& y) {
  require_same_rank(x, y);
  require_cell_rank(x.rank());
  const auto w0 = longest_element(x.rank());
  if (x == w0) return from_antidominant(w0, y);
  if (!in_penultimate_cell(x)) return GradedExtAnswer::zero();

  std::optional<int> degree;
  int dim = 0;
  for (const auto& b : bm(y)) {
    if (phi(b) != x) continue;
    ++dim;
    degree = top_zero_degree(-m_degree(b), -y.length());
  }
  if (dim > 1) throw std::logic_error("phi is not injective on BM(" + y.to_string() + ")");
  return GradedExtAnswer::exact(dim, degree);
}

GradedExtAnswer ext1_singular(const Permutation& x, const Permutation& y, const ParabolicSubset& stab) {
  require_same_rank(x, y);
  require_cell_rank(x.rank());
  if (stab.n() != x.rank()) throw RankMismatch(stab.n(), x.rank());

  const auto w0 = longest_element(x.rank());
  const auto x_top = coset_long_rep(x, stab, CosetSide::right);
  const auto y_low = coset_short_rep(y, stab, CosetSide::right);
  const auto norm = stab.is_empty() ? Normalization::top_degree_zero
                                    : Normalization::singular_top_degree_zero;

  if (x_top == w0) {
    const int d = content(w0 * y_low) - stab.rank();
    if (d < 0) throw std::logic_error("negative dimension in the singular antidominant formula");
    // Only the regular block has a graded antidominant formula.
    std::optional<int> degree;
    if (stab.is_empty()) degree = w0.length() - y_low.length() - 2;
    return GradedExtAnswer::exact(d, degree, norm);
  }
  int dim = 0;
  std::optional<int> degree;
  for (const auto& b : bm(y_low)) {
    if (phi(b) != x_top) continue;
    ++dim;
    degree = top_zero_degree(-m_degree(b), -y_low.length());
  }
  if (dim > 1) throw std::logic_error("phi is not injective on BM(" + y_low.to_string() + ")");
  return GradedExtAnswer::exact(dim, degree, norm);
}

}  // namespace extcat
