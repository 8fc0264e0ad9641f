#include "extcat/ext_s.hpp"

#include <algorithm>

#include "extcat/bruhat_base.hpp"
#include "extcat/cells.hpp"

namespace extcat {

SCategoryContext::SCategoryContext(ParabolicSubset p)
    : p_(std::move(p)),
      w0p_(longest_in_parabolic(p_)),
      w0_(longest_element(p_.n())),
      xlong_(x_long(p_)) {
  if (p_.n() < 3) throw std::invalid_argument("S-subcategory formulas need n >= 3");
}

bool SCategoryContext::in_xlong(const Permutation& w) const {
  return w.rank() == n() && std::binary_search(xlong_.begin(), xlong_.end(), w);
}

namespace {

void require_xlong(const SCategoryContext& ctx, const Permutation& w) {
  if (w.rank() != ctx.n()) throw RankMismatch(w.rank(), ctx.n());
  if (!ctx.in_xlong(w))
    throw std::invalid_argument(w.to_string() + " is not a longest coset representative for parabolic {" +
                                ctx.parabolic().to_string() + "}");
}

}  // namespace

GradedExtAnswer ext1_simple_to_proper_standard(const SCategoryContext& ctx, const Permutation& x,
                                               const Permutation& y) {
  require_xlong(ctx, x);
  require_xlong(ctx, y);
  const auto y_short = ctx.short_rep(y);

  if (x == ctx.w0()) {
    const int d = content(ctx.w0() * y_short);
    return GradedExtAnswer::exact(d, top_zero_degree(-ctx.w0().length() + 2, -y.length()));
  }
  // BM is taken at the short representative w0^p * y, where the socle of
  // the proper standard cokernel is computed.
  int dim = 0;
  std::optional<int> degree;
  for (const auto& b : bm(y_short)) {
    if (phi(b) != x) continue;
    ++dim;
    degree = top_zero_degree(-m_degree(b), -y.length());
  }
  if (dim > 1) throw std::logic_error("phi is not injective on BM(" + y_short.to_string() + ")");
  return GradedExtAnswer::exact(dim, degree);
}

std::vector<SocleEntry> socle_coker_proper_standard(const SCategoryContext& ctx, const Permutation& x,
                                                    const Permutation& y) {
  require_xlong(ctx, x);
  require_xlong(ctx, y);
  if (!bruhat_leq(y, x))
    throw std::invalid_argument("socle_coker_proper_standard: " + x.to_string() + " is not above " +
                                y.to_string());
  auto entries = socle_coker_verma(ctx.short_rep(y), ctx.short_rep(x));
  std::erase_if(entries, [&](const SocleEntry& e) { return !ctx.in_xlong(e.x); });
  return entries;
}

std::optional<GradedExtAnswer> ext1_standard_via_singular(const SCategoryContext& ctx,
                                                          const Permutation& x, const Permutation& y) {
  require_xlong(ctx, x);
  require_xlong(ctx, y);
  const auto stabiliser = is_special(y, ctx.parabolic());
  if (!stabiliser) return std::nullopt;

  const bool regular = ctx.parabolic().is_empty();
  const auto norm = regular ? Normalization::top_degree_zero : Normalization::s_standard_shifted;

  if (coset_short_rep(y, *stabiliser, CosetSide::right) != ctx.short_rep(y))
    throw std::logic_error("W^p y and y W^~p have different shortest elements for y = " + y.to_string());

  // Translation onto the wall kills L_x unless x is longest in x W^~p.
  if (coset_long_rep(x, *stabiliser, CosetSide::right) != x) return GradedExtAnswer::zero(norm);

  auto answer = ext1_singular(x, y, *stabiliser);
  if (regular) return answer;

  answer.normalization = norm;
  if (answer.status == ExtStatus::exact && answer.degrees) {
    DegreeReport singular{Normalization::singular_top_degree_zero, *answer.degrees};
    for (int& d : *answer.degrees) d += ctx.w0p().length();
    answer.alternate = std::move(singular);
  }
  return answer;
}

GradedExtAnswer ext1_simple_to_standard(const SCategoryContext& ctx, const Permutation& x,
                                        const Permutation& y) {
  require_xlong(ctx, x);
  require_xlong(ctx, y);
  const auto norm = ctx.parabolic().is_empty() ? Normalization::top_degree_zero
                                               : Normalization::s_standard_shifted;
  const bool antidominant = x == ctx.w0();
  // Standard_{w0} is cotilting, and the tilting envelope of standard_{w0^p}
  // has only L_{w0} in the socle of its cokernel.
  if (antidominant && y == ctx.w0()) return GradedExtAnswer::zero(norm);
  if (!antidominant && y == ctx.w0p()) return GradedExtAnswer::zero(norm);
  if (!antidominant && !in_penultimate_cell(x)) return GradedExtAnswer::zero(norm);

  if (auto answer = ext1_standard_via_singular(ctx, x, y)) return *answer;
  return GradedExtAnswer::unknown(norm);
}

}  // namespace extcat
