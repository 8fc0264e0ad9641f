#include "extcat/cells.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <mutex>
#include <sstream>

#include "extcat/bruhat_base.hpp"

namespace extcat {

Shape Shape::parse(std::string_view text) {
  Shape s{parse_int_list(text)};
  if (s.parts.empty()) throw std::invalid_argument("empty shape");
  for (std::size_t r = 0; r < s.parts.size(); ++r)
    if (s.parts[r] < 1 || (r > 0 && s.parts[r] > s.parts[r - 1]))
      throw std::invalid_argument("not a partition: '" + std::string(text) + "'");
  return s;
}

int Shape::size() const {
  int total = 0;
  for (int p : parts) total += p;
  return total;
}

Shape Shape::transpose() const {
  Shape t;
  if (parts.empty()) return t;
  for (int c = 0; c < parts.front(); ++c) {
    int height = 0;
    for (int p : parts)
      if (p > c) ++height;
    t.parts.push_back(height);
  }
  return t;
}

std::string Shape::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < parts.size(); ++r) out += (r ? "," : "") + std::to_string(parts[r]);
  return out;
}

Shape StandardTableau::shape() const {
  Shape s;
  for (const auto& row : rows) s.parts.push_back(static_cast<int>(row.size()));
  return s;
}

bool StandardTableau::is_standard() const {
  std::vector<int> seen;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) return false;
    if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0 && rows[r][c] <= rows[r][c - 1]) return false;
      if (r > 0 && rows[r][c] <= rows[r - 1][c]) return false;
      seen.push_back(rows[r][c]);
    }
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t v = 0; v < seen.size(); ++v)
    if (seen[v] != static_cast<int>(v) + 1) return false;
  return true;
}

std::string StandardTableau::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << (r ? "/" : "");
    for (std::size_t c = 0; c < rows[r].size(); ++c) out << (c ? "," : "") << rows[r][c];
  }
  return out.str();
}

TableauPair rsk(const Permutation& w) {
  TableauPair out;
  auto& p = out.insertion.rows;
  auto& q = out.recording.rows;
  for (int pos = 1; pos <= w.rank(); ++pos) {
    int value = w(pos);
    std::size_t r = 0;
    for (;; ++r) {
      if (r == p.size()) {
        p.push_back({value});
        q.push_back({pos});
        break;
      }
      auto it = std::upper_bound(p[r].begin(), p[r].end(), value);
      if (it == p[r].end()) {
        p[r].push_back(value);
        q[r].push_back(pos);
        break;
      }
      std::swap(*it, value);
    }
  }
  return out;
}

Shape shape(const Permutation& w) { return rsk(w).insertion.shape(); }

bool same_left_cell(const Permutation& x, const Permutation& y) {
  require_same_rank(x, y);
  return rsk(x).recording == rsk(y).recording;
}

bool same_right_cell(const Permutation& x, const Permutation& y) {
  require_same_rank(x, y);
  return rsk(x).insertion == rsk(y).insertion;
}

bool same_two_sided_cell(const Permutation& x, const Permutation& y) {
  require_same_rank(x, y);
  return shape(x) == shape(y);
}

std::map<Shape, std::vector<Permutation>> two_sided_cells(int n) {
  std::map<Shape, std::vector<Permutation>> cells;
  for (const auto& w : all_permutations(n)) cells[shape(w)].push_back(w);
  return cells;
}

namespace {

struct CellData {
  std::vector<Permutation> small;
  std::vector<Permutation> penultimate;
  // wst[s-1][t-1]
  std::vector<std::vector<Permutation>> wst;
};

const CellData& cell_data(int n) {
  if (n < 3) throw std::invalid_argument("small and penultimate cells need n >= 3");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const CellData>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (slot) return *slot;

  auto data = std::make_unique<CellData>();
  const auto s1_shape = shape(Permutation::simple(n, 1));
  const auto w0 = longest_element(n);
  for (const auto& w : all_permutations(n))
    if (shape(w) == s1_shape) data->small.push_back(w);
  for (const auto& u : data->small) data->penultimate.push_back(w0 * u);
  std::sort(data->penultimate.begin(), data->penultimate.end());

  Shape hook{{2}};
  hook.parts.insert(hook.parts.end(), static_cast<std::size_t>(n - 2), 1);
  std::vector<Permutation> hook_class;
  for (const auto& w : all_permutations(n))
    if (shape(w) == hook) hook_class.push_back(w);
  if (hook_class != data->penultimate)
    throw std::logic_error("w0 * small cell differs from the (2,1^{n-2}) class in S_" +
                           std::to_string(n));

  // Index the penultimate cell by its unique left and right ascents.
  std::vector<std::vector<std::optional<Permutation>>> table(
      static_cast<std::size_t>(n - 1), std::vector<std::optional<Permutation>>(
                                           static_cast<std::size_t>(n - 1)));
  for (const auto& x : data->penultimate) {
    std::vector<int> left_ascents, right_ascents;
    for (int i = 1; i < n; ++i) {
      if (!has_left_descent(x, i)) left_ascents.push_back(i);
      if (!has_right_descent(x, i)) right_ascents.push_back(i);
    }
    if (left_ascents.size() != 1 || right_ascents.size() != 1)
      throw std::logic_error("penultimate cell element " + x.to_string() +
                             " does not have a unique left and right ascent");
    auto& cell = table[static_cast<std::size_t>(left_ascents[0] - 1)]
                      [static_cast<std::size_t>(right_ascents[0] - 1)];
    if (cell) throw std::logic_error("ascent pair is shared by two penultimate-cell elements");
    cell = x;
  }
  data->wst.resize(static_cast<std::size_t>(n - 1));
  for (std::size_t s = 0; s < table.size(); ++s)
    for (std::size_t t = 0; t < table.size(); ++t) {
      if (!table[s][t])
        throw std::logic_error("no penultimate-cell element with ascents (s" +
                               std::to_string(s + 1) + ", s" + std::to_string(t + 1) + ")");
      data->wst[s].push_back(*table[s][t]);
    }
  slot = std::move(data);
  return *slot;
}

}  // namespace

const std::vector<Permutation>& small_cell(int n) { return cell_data(n).small; }

const std::vector<Permutation>& penultimate_cell(int n) { return cell_data(n).penultimate; }

bool in_penultimate_cell(const Permutation& w) {
  if (w.rank() < 3) return false;
  const auto& cell = penultimate_cell(w.rank());
  return std::binary_search(cell.begin(), cell.end(), w);
}

Permutation w_st(SimpleReflection s, SimpleReflection t, int n) {
  const auto& data = cell_data(n);
  if (s.index < 1 || s.index >= n || t.index < 1 || t.index >= n)
    throw std::invalid_argument("simple reflection out of range for S_" + std::to_string(n));
  return data.wst[static_cast<std::size_t>(s.index - 1)][static_cast<std::size_t>(t.index - 1)];
}

Permutation phi(const Permutation& b) {
  const auto c = coord_of(b);
  return w_st({c.i}, {c.j}, b.rank());
}

}  // namespace extcat
