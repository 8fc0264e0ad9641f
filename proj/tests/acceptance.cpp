// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "extcat/bruhat_base.hpp"
#include "extcat/cells.hpp"
#include "extcat/ext_o.hpp"
#include "extcat/ext_s.hpp"
#include "extcat/selftest.hpp"
#include "extcat/table.hpp"

using namespace extcat;

namespace {

using Failure = std::optional<std::string>;

Permutation P(const char* text) { return Permutation::parse(text); }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Failure expect_cell(const GradedExtAnswer& a, std::optional<int> dim, std::optional<int> degree,
                    const std::string& where) {
  if (!dim) return a.status == ExtStatus::zero ? Failure{} : Failure{where + " should be zero"};
  if (a.status != ExtStatus::exact || a.dim != dim) return where + " has the wrong dimension";
  if (degree && a.degrees != std::vector<int>{*degree}) return where + " has the wrong degree";
  return {};
}

Failure sl3_proper_standard() {
  const auto table = build_ext_table(3, TableKind::proper_standard, ParabolicSubset(3, {1}));
  const std::map<std::pair<std::string, std::string>, std::pair<int, int>> expected{
      {{"2,1,3", "2,3,1"}, {1, -1}}, {{"2,3,1", "3,2,1"}, {1, -1}}, {{"3,2,1", "2,1,3"}, {2, 0}},
      {{"3,2,1", "2,3,1"}, {2, -1}}, {{"3,2,1", "3,2,1"}, {1, -2}}};
  if (table.cells.size() != 9) return "table is not 3x3";
  for (const auto& cell : table.cells) {
    const auto it = expected.find({cell.x, cell.y});
    const auto where = "(" + cell.x + " | " + cell.y + ")";
    auto f = it == expected.end() ? expect_cell(cell.answer, std::nullopt, std::nullopt, where)
                                  : expect_cell(cell.answer, it->second.first, it->second.second, where);
    if (f) return f;
  }
  if (render_text(table, true) != slurp(EXTCAT_GOLDEN_DIR "/sl3_proper_standard.txt"))
    return "rendered table differs from the golden file";
  return {};
}

Failure sl3_standard() {
  const SCategoryContext ctx(ParabolicSubset(3, {1}));
  const auto s = P("2,1,3"), st = P("2,3,1"), w0 = P("3,2,1");
  if (auto f = expect_cell(ext1_simple_to_standard(ctx, st, w0), 1, 1, "(st, w0)")) return f;
  if (auto f = expect_cell(ext1_simple_to_standard(ctx, w0, s), 1, std::nullopt, "(w0, s)")) return f;
  if (auto f = expect_cell(ext1_simple_to_standard(ctx, w0, w0), std::nullopt, std::nullopt, "(w0, w0)")) return f;
  // Known values (1,1) for both; kept as fixtures the code must not guess.
  const std::vector<std::pair<Permutation, std::pair<int, int>>> fixtures{{s, {1, 1}}, {w0, {1, 1}}};
  for (const auto& [x, value] : fixtures) {
    const auto a = ext1_simple_to_standard(ctx, x, st);
    if (a.status != ExtStatus::unknown) {
      if (a.dim != value.first) return "(" + x.to_string() + ", st) contradicts the known value";
      return "(" + x.to_string() + ", st) should be reported as unknown";
    }
  }
  if (render_text(build_ext_table(3, TableKind::standard, ParabolicSubset(3, {1})), true) !=
      slurp(EXTCAT_GOLDEN_DIR "/sl3_standard.txt"))
    return "rendered table differs from the golden file";
  return {};
}

Failure sl4_facts() {
  const auto x = P("4,2,3,1");
  if (auto f = expect_cell(ext1_simple_to_verma(x, Permutation::simple(4, 2)), 1, 2, "O: (s2 w0, s2)")) return f;
  const std::vector<std::tuple<std::vector<int>, const char*, int>> cases{
      {{}, "1,3,2,4", 2}, {{1}, "2,3,1,4", 1}, {{3}, "1,4,2,3", 1}, {{1, 3}, "2,4,1,3", 0}};
  for (const auto& [simples, y, degree] : cases) {
    const SCategoryContext ctx(ParabolicSubset(4, simples));
    const auto where = "parabolic {" + ctx.parabolic().to_string() + "}";
    if (auto f = expect_cell(ext1_simple_to_proper_standard(ctx, x, P(y)), 1, degree, where)) return f;
  }
  return {};
}

Failure chains() {
  for (int n = 2; n <= 7; ++n)
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        const auto& c = chain(n, i, j);
        const auto expected = std::min({i, j, n - i, n - j});
        if (static_cast<int>(c.size()) != expected)
          return "|" + std::to_string(i) + "B" + std::to_string(j) + "| wrong in S_" + std::to_string(n);
        for (std::size_t k = 0; k + 1 < c.size(); ++k)
          if (!bruhat_leq(c[k], c[k + 1])) return "not a chain in S_" + std::to_string(n);
      }
  const std::vector<Permutation> b43{P("1,2,5,3,4,6,7"), P("1,5,6,2,3,4,7"), P("5,6,7,1,2,3,4")};
  if (chain(7, 4, 3) != b43) return "4B3 in S_7 differs from the expected three permutations";
  return {};
}

Failure base_characterization() {
  for (int n = 2; n <= 5; ++n)
    if (join_irreducibles(n) != bigrassmannians(n)) return "join-irreducibles differ in S_" + std::to_string(n);
  for (const auto& w : all_permutations(4)) {
    const auto top = bm(w);
    if (join(top, 4) != w) return "join(BM(" + w.to_string() + ")) != w";
  }
  return {};
}

Failure cell_structure() {
  for (int n = 3; n <= 7; ++n) {
    const auto tag = " for n=" + std::to_string(n);
    const auto& cell = penultimate_cell(n);
    if (static_cast<int>(cell.size()) != (n - 1) * (n - 1)) return "wrong size" + tag;
    std::vector<Permutation> image;
    const auto w0 = longest_element(n);
    for (const auto& u : small_cell(n)) image.push_back(w0 * u);
    std::sort(image.begin(), image.end());
    if (image != cell) return "penultimate cell != w0 * small cell" + tag;
    Shape hook{{2}};
    hook.parts.insert(hook.parts.end(), static_cast<std::size_t>(n - 2), 1);
    if (two_sided_cells(n).at(hook) != cell) return "penultimate cell != hook class" + tag;
    std::set<Permutation> hit;
    for (int s = 1; s < n; ++s)
      for (int t = 1; t < n; ++t) {
        const auto x = w_st({s}, {t}, n);
        for (int i = 1; i < n; ++i)
          if (has_left_descent(x, i) == (i == s) || has_right_descent(x, i) == (i == t))
            return "w_st has the wrong ascents" + tag;
        hit.insert(x);
      }
    if (hit != std::set<Permutation>(cell.begin(), cell.end())) return "w_st is not a bijection" + tag;
  }
  return {};
}

Failure bruhat_conformance() {
  const auto& s5 = all_permutations(5);
  long pairs = 0;
  for (const auto& x : s5)
    for (const auto& y : s5) {
      ++pairs;
      if (bruhat_leq(x, y) != bruhat_leq_oracle(x, y)) return "S_5 mismatch at " + x.to_string() + " | " + y.to_string();
    }
  if (pairs != 14400) return "S_5 pair count";
  const auto& s6 = all_permutations(6);
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<std::size_t> pick(0, s6.size() - 1);
  for (int trial = 0; trial < 100000; ++trial) {
    const auto& x = s6[pick(rng)];
    const auto& y = s6[pick(rng)];
    if (bruhat_leq(x, y) != bruhat_leq_oracle(x, y)) return "S_6 mismatch at " + x.to_string() + " | " + y.to_string();
  }
  return {};
}

Failure reductions() {
  const auto& s4 = all_permutations(4);
  const SCategoryContext trivial(ParabolicSubset::empty(4));
  for (const auto& x : s4)
    for (const auto& y : s4) {
      const auto o = ext1_simple_to_verma(x, y);
      if (ext1_singular(x, y, ParabolicSubset::empty(4)) != o) return "singular != regular at " + x.to_string();
      if (ext1_simple_to_proper_standard(trivial, x, y) != o) return "proper standard != O at " + x.to_string();
      if (ext1_simple_to_standard(trivial, x, y) != o) return "standard != O at " + x.to_string();
    }
  for (const auto& p : all_parabolics(4)) {
    const SCategoryContext ctx(p);
    for (const auto& x : ctx.xlong()) {
      if (x == ctx.w0()) continue;
      const auto special = ext1_standard_via_singular(ctx, x, ctx.w0p());
      if (!special) return "w0^p is not special for {" + p.to_string() + "}";
      if (special->status != ExtStatus::zero || ext1_simple_to_standard(ctx, x, ctx.w0p()).status != ExtStatus::zero)
        return "no vanishing at y = w0^p for {" + p.to_string() + "}, x = " + x.to_string();
    }
  }
  return {};
}

Failure bound_sharpness() {
  for (int n = 3; n <= 5; ++n)
    for (const auto& y : all_permutations(n))
      for (const auto& x : penultimate_cell(n)) {
        int s = 0, t = 0;
        for (int i = 1; i < n; ++i) {
          if (!has_left_descent(x, i)) s = i;
          if (!has_right_descent(x, i)) t = i;
        }
        const auto count = static_cast<int>(bm_st(y, {s}, {t}).size());
        if (count > 1 || ext1_simple_to_verma(x, y).dim != count)
          return "x = " + x.to_string() + ", y = " + y.to_string();
      }
  return {};
}

Failure graded_injectivity() {
  for (int n = 3; n <= 7; ++n) {
    std::set<std::pair<Permutation, int>> seen;
    for (const auto& b : bigrassmannians(n))
      if (!seen.insert({phi(b), m_degree(b)}).second) return "collision at " + b.to_string();
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        const auto& c = chain(n, i, j);
        for (std::size_t k = 0; k + 1 < c.size(); ++k)
          if (m_degree(c[k]) >= m_degree(c[k + 1])) return "m not increasing in S_" + std::to_string(n);
      }
  }
  return {};
}

Failure selftest_5() {
  std::ostringstream log;
  if (selftest(5, log) != 0) {
    auto text = log.str();
    return text.substr(text.find("FAIL"), text.find('\n', text.find("FAIL")) - text.find("FAIL"));
  }
  return {};
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Failure()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "sl3 proper standard table", 1, sl3_proper_standard},
      {2, "sl3 standard table", 1, sl3_standard},
      {3, "sl4 extensions", 5, sl4_facts},
      {4, "iBj cardinalities and chains up to n=7", 30, chains},
      {5, "base = join-irreducibles", 60, base_characterization},
      {6, "penultimate cell structure up to n=7", 60, cell_structure},
      {7, "Bruhat order against the subword oracle", 60, bruhat_conformance},
      {8, "reduction laws on S_4", 60, reductions},
      {9, "type A bound is sharp up to n=5", 60, bound_sharpness},
      {10, "graded injectivity up to n=7", 60, graded_injectivity},
      {11, "selftest(5)", 60, selftest_5},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Failure failure;
    try {
      failure = c.run();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (!failure && elapsed.count() > c.budget_seconds) failure = "over the time budget";
    failed += failure.has_value();
    std::cout << (failure ? "FAIL" : "PASS") << " criterion " << c.id << ": " << c.name << " (" << std::fixed
              << std::setprecision(3) << elapsed.count() << " s)";
    if (failure) std::cout << " -- " << *failure;
    std::cout << '\n';
  }
  return failed == 0 ? 0 : 1;
}
