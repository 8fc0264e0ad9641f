#include "extcat/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "extcat/bruhat_base.hpp"
#include "extcat/cells.hpp"
#include "extcat/ext_o.hpp"
#include "extcat/ext_s.hpp"
#include "extcat/parabolic.hpp"

namespace extcat {

namespace {

using Result = std::optional<std::string>;

template <typename... Parts>
std::string describe(const Parts&... parts) {
  std::ostringstream out;
  auto put = [&](const auto& p) {
    if constexpr (std::is_same_v<std::decay_t<decltype(p)>, Permutation>)
      out << '[' << p.to_string() << ']';
    else
      out << p;
  };
  (put(parts), ...);
  return out.str();
}

long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

long long hook_count(const Shape& shape) {
  const auto cols = shape.transpose();
  long long hooks = 1;
  for (std::size_t r = 0; r < shape.parts.size(); ++r)
    for (int c = 0; c < shape.parts[r]; ++c)
      hooks *= (shape.parts[r] - c - 1) + (cols.parts[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1) + 1;
  return factorial(shape.size()) / hooks;
}

std::pair<int, int> unique_ascents(const Permutation& x) {
  int s = 0, t = 0;
  for (int i = 1; i < x.rank(); ++i) {
    if (!has_left_descent(x, i)) s = i;
    if (!has_right_descent(x, i)) t = i;
  }
  return {s, t};
}

// ---- symmetric group -------------------------------------------------------

Result check_convention(int n) {
  const auto w0 = longest_element(n);
  for (int i = 1; i < n; ++i)
    if (w0 * Permutation::simple(n, i) * w0 != Permutation::simple(n, n - i))
      return describe("w0 s", i, " w0 != s", n - i);
  return {};
}

Result check_length_subadditive(int n) {
  const auto& all = all_permutations(n);
  for (const auto& u : all)
    for (const auto& v : all)
      if ((u * v).length() > u.length() + v.length()) return describe("u=", u, " v=", v);
  return {};
}

Result check_length_w0(int n) {
  const auto w0 = longest_element(n);
  for (const auto& w : all_permutations(n))
    if ((w0 * w).length() != w0.length() - w.length()) return describe("w=", w);
  return {};
}

Result check_reduced_word(int n) {
  for (const auto& w : all_permutations(n)) {
    auto word = reduced_word(w);
    if (word_product(n, word) != w || static_cast<int>(word.size()) != w.length())
      return describe("w=", w, " word=", to_string(word));
  }
  return {};
}

Result check_content(int n) {
  for (const auto& w : all_permutations(n)) {
    auto word = reduced_word(w);
    std::set<SimpleReflection> letters(word.begin(), word.end());
    const int c = content(w);
    if (c != static_cast<int>(letters.size()) || c > w.length() ||
        ((c == w.length()) != (letters.size() == word.size())))
      return describe("w=", w, " content=", c);
  }
  return {};
}

Result check_left_descents(int n) {
  for (const auto& w : all_permutations(n)) {
    if (left_descents(w) != right_descents(inverse(w))) return describe("w=", w);
    for (int i = 1; i < n; ++i) {
      const auto s = Permutation::simple(n, i);
      if (has_right_descent(w, i) != ((w * s).length() < w.length())) return describe("right descent w=", w);
      if (has_left_descent(w, i) != ((s * w).length() < w.length())) return describe("left descent w=", w);
    }
  }
  return {};
}

Result check_bruhat_oracle(int n) {
  const auto& all = all_permutations(n);
  if (n <= 5) {
    for (const auto& x : all)
      for (const auto& y : all)
        if (bruhat_leq(x, y) != bruhat_leq_oracle(x, y)) return describe("x=", x, " y=", y);
    return {};
  }
  std::mt19937 rng(20240601u + static_cast<unsigned>(n));
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 20000; ++trial) {
    const auto& x = all[pick(rng)];
    const auto& y = all[pick(rng)];
    if (bruhat_leq(x, y) != bruhat_leq_oracle(x, y)) return describe("x=", x, " y=", y);
  }
  return {};
}

Result check_bruhat_partial_order(int n) {
  const auto& all = all_permutations(n);
  for (const auto& x : all)
    for (const auto& y : all) {
      const bool le = bruhat_leq(x, y);
      if (le && x != y && x.length() >= y.length()) return describe("length not strict x=", x, " y=", y);
      if (le && bruhat_leq(y, x) && x != y) return describe("antisymmetry x=", x, " y=", y);
      if (x == y && !le) return describe("reflexivity x=", x);
    }
  if (n <= 4)
    for (const auto& x : all)
      for (const auto& y : all) {
        if (!bruhat_leq(x, y)) continue;
        for (const auto& z : all)
          if (bruhat_leq(y, z) && !bruhat_leq(x, z)) return describe("transitivity ", x, y, z);
      }
  return {};
}

// ---- base ------------------------------------------------------------------

Result check_chain_sizes(int n) {
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      const auto& c = chain(n, i, j);
      if (static_cast<int>(c.size()) != chain_size(n, i, j))
        return describe("|", i, "B", j, "| = ", c.size());
      for (std::size_t k = 0; k + 1 < c.size(); ++k)
        if (!bruhat_leq(c[k], c[k + 1]) || c[k] == c[k + 1]) return describe(i, "B", j, " not a chain at ", c[k]);
    }
  return {};
}

Result check_coordinates(int n) {
  for (const auto& b : bigrassmannians(n)) {
    const auto c = coord_of(b);
    if (element_of(c, n) != b) return describe("b=", b);
    if (c.k < 0 || c.k >= chain_size(n, c.i, c.j)) return describe("k out of range for b=", b);
  }
  return {};
}

Result check_join_irreducibles(int n) {
  if (join_irreducibles(n) != bigrassmannians(n)) return describe("join-irreducibles differ in S_", n);
  return {};
}

Result check_bm_shape(int n) {
  for (const auto& w : all_permutations(n)) {
    const auto maximal = bm(w);
    if (maximal.empty() != w.is_identity()) return describe("BM emptiness w=", w);
    std::set<std::pair<int, int>> seen;
    for (const auto& a : maximal) {
      const auto c = coord_of(a);
      if (!seen.insert({c.i, c.j}).second) return describe("two BM elements in one chain, w=", w);
      for (const auto& b : maximal)
        if (a != b && bruhat_leq(a, b)) return describe("BM not an antichain, w=", w);
    }
  }
  return {};
}

Result check_bm_generates(int n) {
  const auto& base = bigrassmannians(n);
  for (const auto& w : all_permutations(n)) {
    const auto maximal = bm(w);
    for (const auto& b : base) {
      const bool below = std::any_of(maximal.begin(), maximal.end(), [&](const Permutation& m) {
        return bruhat_leq(b, m);
      });
      if (below != bruhat_leq(b, w)) return describe("w=", w, " b=", b);
    }
  }
  return {};
}

Result check_join_of_bm(int n) {
  for (const auto& w : all_permutations(n)) {
    const auto maximal = bm(w);
    auto j = join(maximal, n);
    if (!j || *j != w) return describe("w=", w);
  }
  return {};
}

// ---- cells -----------------------------------------------------------------

Result check_rsk_bijection(int n) {
  std::set<std::pair<StandardTableau, StandardTableau>> pairs;
  std::map<Shape, long long> per_shape;
  for (const auto& w : all_permutations(n)) {
    auto [p, q] = rsk(w);
    if (!p.is_standard() || !q.is_standard() || p.shape() != q.shape()) return describe("w=", w);
    if (!pairs.insert({p, q}).second) return describe("rsk not injective at w=", w);
    ++per_shape[p.shape()];
  }
  long long total = 0;
  for (const auto& [shape, count] : per_shape) {
    const auto f = hook_count(shape);
    if (count != f * f) return describe("shape ", shape.to_string(), " has ", count, " elements");
    total += f * f;
  }
  if (total != factorial(n)) return describe("shape classes miss elements");
  return {};
}

Result check_rsk_inverse(int n) {
  for (const auto& w : all_permutations(n)) {
    auto a = rsk(w);
    auto b = rsk(inverse(w));
    if (a.insertion != b.recording || a.recording != b.insertion) return describe("w=", w);
  }
  return {};
}

Result check_penultimate(int n) {
  const auto& cell = penultimate_cell(n);
  if (static_cast<int>(cell.size()) != (n - 1) * (n - 1)) return describe("size ", cell.size());
  const auto w0 = longest_element(n);
  for (const auto& u : small_cell(n))
    if (!in_penultimate_cell(w0 * u)) return describe("w0*u outside for u=", u);
  for (const auto& x : cell)
    if (shape(x).parts.size() != static_cast<std::size_t>(n - 1) || shape(x).parts[0] != 2)
      return describe("wrong shape x=", x);
  return {};
}

Result check_w_st(int n) {
  std::set<Permutation> image;
  for (int s = 1; s < n; ++s)
    for (int t = 1; t < n; ++t) {
      auto x = w_st({s}, {t}, n);
      if (!in_penultimate_cell(x) || unique_ascents(x) != std::pair{s, t}) return describe("w_st(", s, ",", t, ")");
      image.insert(x);
    }
  for (const auto& x : penultimate_cell(n)) {
    int left = 0, right = 0;
    for (int i = 1; i < n; ++i) {
      left += !has_left_descent(x, i);
      right += !has_right_descent(x, i);
    }
    if (left != 1 || right != 1) return describe("ascents not unique x=", x);
  }
  if (image.size() != penultimate_cell(n).size()) return describe("w_st not surjective");
  return {};
}

Result check_graded_injectivity(int n) {
  std::set<std::pair<Permutation, int>> seen;
  for (const auto& b : bigrassmannians(n))
    if (!seen.insert({phi(b), m_degree(b)}).second) return describe("b=", b);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      const auto& c = chain(n, i, j);
      for (std::size_t k = 0; k + 1 < c.size(); ++k)
        if (m_degree(c[k]) >= m_degree(c[k + 1])) return describe("m not increasing along ", i, "B", j);
    }
  return {};
}

// ---- parabolic -------------------------------------------------------------

Result check_coset_bijection(int n) {
  for (const auto& J : all_parabolics(n)) {
    const auto w0p = longest_in_parabolic(J);
    const auto longs = x_long(J);
    const auto shorts = x_short(J);
    const auto group = subgroup_elements(J);
    if (static_cast<long long>(longs.size()) * static_cast<long long>(group.size()) != factorial(n))
      return describe("coset count J={", J.to_string(), "}");
    std::vector<Permutation> image;
    for (const auto& u : shorts) {
      auto v = w0p * u;
      if (v.length() != w0p.length() + u.length()) return describe("lengths J={", J.to_string(), "} u=", u);
      image.push_back(v);
    }
    std::sort(image.begin(), image.end());
    if (image != longs) return describe("w0p * X_short != X_long for J={", J.to_string(), "}");
    if (group.back() != w0p || std::count_if(group.begin(), group.end(), [&](const Permutation& g) {
                                 return g.length() == w0p.length();
                               }) != 1)
      return describe("longest element of W_J, J={", J.to_string(), "}");
  }
  return {};
}

Result check_factorisation(int n) {
  for (const auto& J : all_parabolics(n)) {
    std::map<Permutation, int> hits;
    const auto shorts = x_short(J);
    for (const auto& u : subgroup_elements(J))
      for (const auto& v : shorts) ++hits[u * v];
    if (static_cast<long long>(hits.size()) != factorial(n)) return describe("J={", J.to_string(), "}");
    for (const auto& [w, count] : hits)
      if (count != 1) return describe("J={", J.to_string(), "} w=", w);
  }
  return {};
}

Result check_special(int n) {
  const auto w0 = longest_element(n);
  for (const auto& P : all_parabolics(n)) {
    const auto size = subgroup_elements(P).size();
    for (const auto& u : subgroup_elements(P))
      if (is_special(u, P) != P) return describe("u=", u, " P={", P.to_string(), "}");
    auto tilde = is_special(w0, P);
    if (!tilde) return describe("w0 not special for P={", P.to_string(), "}");
    for (int i : P.simples())
      if (!tilde->contains(n - i)) return describe("w0 P w0 relabeling, P={", P.to_string(), "}");
    for (const auto& y : all_permutations(n))
      if (auto t = is_special(y, P); t && subgroup_elements(*t).size() != size)
        return describe("size y=", y, " P={", P.to_string(), "}");
  }
  return {};
}

// ---- category O ------------------------------------------------------------

Result check_verma_support(int n) {
  const auto w0 = longest_element(n);
  for (const auto& y : all_permutations(n))
    for (const auto& x : all_permutations(n)) {
      if (x == w0) continue;
      auto a = ext1_simple_to_verma(x, y);
      if (*a.dim > 1) return describe("dim > 1 at x=", x, " y=", y);
      if (*a.dim == 1 && !in_penultimate_cell(x)) return describe("outside J at x=", x, " y=", y);
    }
  return {};
}

Result check_verma_bound(int n) {
  for (const auto& y : all_permutations(n))
    for (const auto& x : penultimate_cell(n)) {
      auto [s, t] = unique_ascents(x);
      const auto bound = bm_st(y, {s}, {t}).size();
      if (bound > 1 || static_cast<std::size_t>(*ext1_simple_to_verma(x, y).dim) != bound)
        return describe("x=", x, " y=", y);
    }
  return {};
}

Result check_antidominant_self(int n) {
  const auto w0 = longest_element(n);
  if (ext1_simple_to_verma(w0, w0).status != ExtStatus::zero) return describe("ext(L_w0, Delta_w0) != 0");
  return {};
}

Result check_socle_bm(int n) {
  const auto e = Permutation::identity(n);
  for (const auto& w : all_permutations(n)) {
    if (w.is_identity()) continue;
    const auto socle = socle_coker_verma(e, w);
    const auto maximal = bm(w);
    if (socle.size() != maximal.size()) return describe("w=", w);
    for (const auto& b : maximal) {
      SocleEntry expected{phi(b), m_degree(b)};
      if (std::find(socle.begin(), socle.end(), expected) == socle.end()) return describe("w=", w);
    }
    if (has_simple_socle_coker(w) != is_bigrassmannian(w)) return describe("simple socle w=", w);
  }
  return {};
}

Result check_socle_readings(int n) {
  for (const auto& w : all_permutations(n))
    for (const auto& v : all_permutations(n))
      if (bruhat_leq(v, w) && socle_coker_verma(v, w) != socle_coker_verma_set_difference(v, w))
        return describe("v=", v, " w=", w);
  return {};
}

Result check_singular_reduction(int n) {
  const auto empty = ParabolicSubset::empty(n);
  for (const auto& x : all_permutations(n))
    for (const auto& y : all_permutations(n))
      if (ext1_singular(x, y, empty) != ext1_simple_to_verma(x, y)) return describe("x=", x, " y=", y);
  return {};
}

// ---- S-subcategories -------------------------------------------------------

Result check_trivial_parabolic(int n) {
  SCategoryContext ctx(ParabolicSubset::empty(n));
  for (const auto& x : all_permutations(n))
    for (const auto& y : all_permutations(n)) {
      const auto o = ext1_simple_to_verma(x, y);
      if (ext1_simple_to_proper_standard(ctx, x, y) != o) return describe("proper standard x=", x, " y=", y);
      if (ext1_simple_to_standard(ctx, x, y) != o) return describe("standard x=", x, " y=", y);
    }
  return {};
}

Result check_proper_standard_socle(int n) {
  for (const auto& p : all_parabolics(n)) {
    SCategoryContext ctx(p);
    for (const auto& y : ctx.xlong()) {
      // soc(proper standard_{w0^p} / proper standard_y), via the Verma socle.
      const auto socle = socle_coker_proper_standard(ctx, y, ctx.w0p());
      const auto unfiltered = socle_coker_verma(Permutation::identity(n), ctx.short_rep(y));
      if (socle.size() != unfiltered.size())
        return describe("socle leaves X_long: p={", p.to_string(), "} y=", y);
      for (const auto& x : ctx.xlong()) {
        if (x == ctx.w0()) continue;
        const auto a = ext1_simple_to_proper_standard(ctx, x, y);
        const auto hit = std::find_if(socle.begin(), socle.end(), [&](const SocleEntry& e) { return e.x == x; });
        const int expected = hit == socle.end() ? 0 : 1;
        if (*a.dim != expected) return describe("p={", p.to_string(), "} x=", x, " y=", y);
        if (expected && (*a.degrees)[0] != top_zero_degree(-hit->m, -y.length()))
          return describe("degree p={", p.to_string(), "} x=", x, " y=", y);
      }
    }
  }
  return {};
}

Result check_proper_standard_antidominant(int n) {
  for (const auto& p : all_parabolics(n)) {
    SCategoryContext ctx(p);
    for (const auto& y : ctx.xlong())
      if (*ext1_simple_to_proper_standard(ctx, ctx.w0(), y).dim !=
          *ext1_simple_to_verma(ctx.w0(), ctx.short_rep(y)).dim)
        return describe("p={", p.to_string(), "} y=", y);
  }
  return {};
}

Result check_standard_dominant_vanishing(int n) {
  for (const auto& p : all_parabolics(n)) {
    SCategoryContext ctx(p);
    for (const auto& x : ctx.xlong()) {
      if (x == ctx.w0()) continue;
      auto via = ext1_standard_via_singular(ctx, x, ctx.w0p());
      if (!via) return describe("w0^p not special, p={", p.to_string(), "}");
      if (via->status != ExtStatus::zero || ext1_simple_to_standard(ctx, x, ctx.w0p()).status != ExtStatus::zero)
        return describe("p={", p.to_string(), "} x=", x);
    }
    auto top = ext1_standard_via_singular(ctx, ctx.w0(), ctx.w0());
    if (!top || top->status != ExtStatus::zero) return describe("(w0, w0) p={", p.to_string(), "}");
  }
  return {};
}

Result check_standard_support(int n) {
  for (const auto& p : all_parabolics(n)) {
    SCategoryContext ctx(p);
    for (const auto& x : ctx.xlong())
      for (const auto& y : ctx.xlong()) {
        auto via = ext1_standard_via_singular(ctx, x, y);
        if (!via || via->status != ExtStatus::exact) continue;
        if (x != ctx.w0() && !in_penultimate_cell(x)) return describe("p={", p.to_string(), "} x=", x, " y=", y);
      }
  }
  return {};
}

Result check_standard_socle(int n) {
  const auto e = Permutation::identity(n);
  for (const auto& p : all_parabolics(n)) {
    SCategoryContext ctx(p);
    for (const auto& y : ctx.xlong()) {
      if (!is_special(y, p)) continue;
      const auto socle = socle_coker_verma(e, ctx.short_rep(y));
      for (const auto& x : ctx.xlong()) {
        if (x == ctx.w0()) continue;
        const int expected = std::any_of(socle.begin(), socle.end(), [&](const SocleEntry& s) { return s.x == x; });
        if (*ext1_standard_via_singular(ctx, x, y)->dim != expected)
          return describe("p={", p.to_string(), "} x=", x, " y=", y);
      }
    }
  }
  return {};
}

}  // namespace

const std::vector<SelftestCheck>& selftest_checks() {
  static const std::vector<SelftestCheck> checks = {
      {"group: w0 s_i w0 = s_{n-i}", 2, 7, check_convention},
      {"group: length is subadditive", 1, 5, check_length_subadditive},
      {"group: l(w0 w) = l(w0) - l(w)", 1, 7, check_length_w0},
      {"group: reduced words multiply back and are reduced", 1, 7, check_reduced_word},
      {"group: content is the support of a reduced word", 1, 7, check_content},
      {"group: left descents are right descents of the inverse", 1, 7, check_left_descents},
      {"bruhat: rank matrix agrees with the subword oracle", 1, 6, check_bruhat_oracle},
      {"bruhat: partial order graded by length", 1, 6, check_bruhat_partial_order},
      {"base: |iBj| = min{i,j,n-i,n-j} and iBj is a chain", 2, 7, check_chain_sizes},
      {"base: coordinates round-trip", 2, 7, check_coordinates},
      {"base: join-irreducibles are the bigrassmannians", 2, 5, check_join_irreducibles},
      {"base: BM(w) is an antichain, one element per chain", 2, 6, check_bm_shape},
      {"base: b <= w iff b lies below BM(w)", 2, 6, check_bm_generates},
      {"base: join(BM(w)) = w", 2, 6, check_join_of_bm},
      {"cells: rsk is a bijection onto tableau pairs", 1, 7, check_rsk_bijection},
      {"cells: rsk(w^-1) swaps the tableaux", 1, 7, check_rsk_inverse},
      {"cells: penultimate cell = w0 * small cell = hook class", 3, 7, check_penultimate},
      {"cells: w_st is an ascent-indexed bijection", 3, 7, check_w_st},
      {"cells: b -> (phi(b), m(b)) is injective, m grows along chains", 3, 7, check_graded_injectivity},
      {"parabolic: X_long = w0^p X_short, coset count", 1, 7, check_coset_bijection},
      {"parabolic: unique factorisation W_J x X_short", 1, 6, check_factorisation},
      {"parabolic: W_J elements and w0 are special", 2, 6, check_special},
      {"verma: ext dims are 0/1 and supported on the penultimate cell", 3, 6, check_verma_support},
      {"verma: ext dim equals |sBMt(y)|", 3, 6, check_verma_bound},
      {"verma: ext(L_w0, Delta_w0) = 0", 3, 7, check_antidominant_self},
      {"socle: Delta_e/Delta_w socle matches BM(w)", 3, 7, check_socle_bm},
      {"socle: both cokernel socle readings agree", 3, 5, check_socle_readings},
      {"singular: empty stabiliser gives the regular formula", 3, 6, check_singular_reduction},
      {"S: trivial parabolic reduces to category O", 3, 6, check_trivial_parabolic},
      {"S: proper standard formula matches the socle route", 3, 6, check_proper_standard_socle},
      {"S: antidominant proper standard matches category O", 3, 6, check_proper_standard_antidominant},
      {"S: standard vanishing at w0^p and (w0, w0)", 3, 6, check_standard_dominant_vanishing},
      {"S: nonzero standard answers need x in J or x = w0", 3, 6, check_standard_support},
      {"S: special standard answers match soc Delta_e/Delta_{w0^p y}", 3, 6, check_standard_socle},
  };
  return checks;
}

int selftest(int max_n, std::ostream& out) {
  if (max_n < kSelftestMinRank || max_n > kSelftestMaxRank)
    throw std::invalid_argument("selftest needs 3 <= max_n <= 7");
  int failed = 0;
  int passed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& check : selftest_checks()) {
    const int hi = std::min(check.max_n, max_n);
    const auto check_start = std::chrono::steady_clock::now();
    std::optional<std::string> failure;
    int failing_n = 0;
    for (int n = check.min_n; n <= hi && !failure; ++n) {
      try {
        failure = check.run(n);
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      if (failure) failing_n = n;
    }
    if (failure) {
      ++failed;
      out << "FAIL " << check.name << " (n=" << failing_n << "): " << *failure << '\n';
    } else {
      ++passed;
      const std::chrono::duration<double> took = std::chrono::steady_clock::now() - check_start;
      out << "PASS " << check.name << " (n=" << check.min_n << ".." << hi << ", " << std::fixed
          << std::setprecision(2) << took.count() << " s)\n";
    }
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  out << passed << " passed, " << failed << " failed in " << std::fixed << std::setprecision(2)
      << elapsed.count() << " s\n";
  return failed == 0 ? 0 : 3;
}

}  // namespace extcat
