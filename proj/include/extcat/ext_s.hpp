#pragma once

#include <optional>
#include <vector>

#include "extcat/ext_o.hpp"
#include "extcat/parabolic.hpp"

namespace extcat {

/// Index data of the S-subcategory attached to a parabolic p: the longest
/// element w0^p and the longest coset representatives X_long that label its
/// simple, proper standard and standard objects.
class SCategoryContext {
 public:
  explicit SCategoryContext(ParabolicSubset p);

  int n() const { return p_.n(); }
  const ParabolicSubset& parabolic() const { return p_; }
  const Permutation& w0p() const { return w0p_; }
  const Permutation& w0() const { return w0_; }
  const std::vector<Permutation>& xlong() const { return xlong_; }
  bool in_xlong(const Permutation& w) const;
  /// w0^p * w, the shortest representative of the coset of w.
  Permutation short_rep(const Permutation& w) const { return w0p_ * w; }

 private:
  ParabolicSubset p_;
  Permutation w0p_;
  Permutation w0_;
  std::vector<Permutation> xlong_;
};

/// dim ext^1(L^p_x, proper standard_y<i>), top-degree-0 on both sides.
/// x and y must lie in X_long.
GradedExtAnswer ext1_simple_to_proper_standard(const SCategoryContext& ctx, const Permutation& x,
                                               const Permutation& y);

/// Socle of proper standard_y / proper standard_x for x >= y in X_long,
/// transported from the Verma cokernel at the short representatives.
std::vector<SocleEntry> socle_coker_proper_standard(const SCategoryContext& ctx, const Permutation& x,
                                                    const Permutation& y);

/// The singular-block evaluation used for special y; absent when y is not
/// special. No shortcut answers are applied.
std::optional<GradedExtAnswer> ext1_standard_via_singular(const SCategoryContext& ctx,
                                                          const Permutation& x, const Permutation& y);

/// dim ext^1(L^p_x, standard_y<i>). Exact for special y and on the known
/// vanishing loci; unknown otherwise.
GradedExtAnswer ext1_simple_to_standard(const SCategoryContext& ctx, const Permutation& x,
                                        const Permutation& y);

}  // namespace extcat
