#include "extcat/table.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "extcat/ext_s.hpp"

namespace extcat {

namespace {

std::vector<std::string> labels(const std::vector<Permutation>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.to_string());
  return out;
}

std::vector<Permutation> unique_sorted(std::vector<Permutation> ws) {
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  return ws;
}

std::string csv_quote(const std::string& s) { return '"' + s + '"'; }

std::string join_ints(const std::vector<int>& values, char sep) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) out += (k ? std::string(1, sep) : "") + std::to_string(values[k]);
  return out;
}

}  // namespace

std::string_view to_string(TableKind kind) {
  switch (kind) {
    case TableKind::verma: return "verma";
    case TableKind::singular_verma: return "singular-verma";
    case TableKind::proper_standard: return "proper-standard";
    case TableKind::standard: return "standard";
  }
  return "?";
}

TableKind parse_table_kind(std::string_view text) {
  for (auto k : {TableKind::verma, TableKind::singular_verma, TableKind::proper_standard, TableKind::standard})
    if (to_string(k) == text) return k;
  throw std::invalid_argument("unknown table kind '" + std::string(text) + "'");
}

ExtTable build_ext_table(int n, TableKind kind, const std::optional<ParabolicSubset>& parabolic) {
  if (n > kTableMaxRank) throw GuardExceeded("build_ext_table", n, kTableMaxRank);
  if (parabolic && parabolic->n() != n) throw RankMismatch(parabolic->n(), n);
  ExtTable table;
  table.n = n;
  table.kind = kind;

  std::vector<Permutation> xs, ys;
  std::function<GradedExtAnswer(const Permutation&, const Permutation&)> eval;
  std::optional<SCategoryContext> ctx;
  const auto p = parabolic.value_or(ParabolicSubset::empty(n));

  switch (kind) {
    case TableKind::verma:
      xs = ys = all_permutations(n);
      eval = [](const Permutation& x, const Permutation& y) { return ext1_simple_to_verma(x, y); };
      break;
    case TableKind::singular_verma: {
      table.parabolic = p.simples();
      table.normalization = p.is_empty() ? Normalization::top_degree_zero
                                         : Normalization::singular_top_degree_zero;
      for (const auto& w : all_permutations(n)) {
        xs.push_back(coset_long_rep(w, p, CosetSide::right));
        ys.push_back(coset_short_rep(w, p, CosetSide::right));
      }
      xs = unique_sorted(std::move(xs));
      ys = unique_sorted(std::move(ys));
      eval = [p](const Permutation& x, const Permutation& y) { return ext1_singular(x, y, p); };
      break;
    }
    case TableKind::proper_standard:
    case TableKind::standard:
      if (!parabolic) throw std::invalid_argument(std::string(to_string(kind)) + " table needs a parabolic");
      table.parabolic = p.simples();
      ctx.emplace(p);
      xs = ys = ctx->xlong();
      if (kind == TableKind::proper_standard) {
        eval = [&ctx](const Permutation& x, const Permutation& y) {
          return ext1_simple_to_proper_standard(*ctx, x, y);
        };
      } else {
        table.normalization = p.is_empty() ? Normalization::top_degree_zero
                                           : Normalization::s_standard_shifted;
        eval = [&ctx](const Permutation& x, const Permutation& y) {
          return ext1_simple_to_standard(*ctx, x, y);
        };
      }
      break;
  }

  table.rows = labels(xs);
  table.columns = labels(ys);
  for (const auto& x : xs)
    for (const auto& y : ys) {
      auto answer = eval(x, y);
      if (answer.normalization != table.normalization)
        throw std::logic_error("mixed degree normalizations in one table");
      table.cells.push_back({x.to_string(), y.to_string(), std::move(answer)});
    }
  return table;
}

std::string render_cell(const GradedExtAnswer& answer, bool graded) {
  switch (answer.status) {
    case ExtStatus::zero: return "-";
    case ExtStatus::unknown: return "?";
    case ExtStatus::exact: break;
  }
  const auto d = std::to_string(*answer.dim);
  if (!graded || !answer.degrees) return d;
  return "(" + d + ", " + join_ints(*answer.degrees, ';') + ")";
}

std::string render_text(const ExtTable& table, bool graded) {
  std::ostringstream out;
  out << "# ext1 target=" << to_string(table.kind) << " n=" << table.n;
  if (table.parabolic)
    out << (table.kind == TableKind::singular_verma ? " stabilizer={" : " parabolic={")
        << join_ints(*table.parabolic, ',') << '}';
  if (graded) out << " normalization=" << to_string(table.normalization);
  out << '\n';

  std::vector<std::vector<std::string>> grid;
  grid.push_back({"x\\y"});
  grid[0].insert(grid[0].end(), table.columns.begin(), table.columns.end());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    std::vector<std::string> line{table.rows[r]};
    for (std::size_t c = 0; c < table.columns.size(); ++c) line.push_back(render_cell(table.at(r, c).answer, graded));
    grid.push_back(std::move(line));
  }
  std::vector<std::size_t> width(grid[0].size(), 0);
  for (const auto& line : grid)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());

  auto emit = [&](const std::vector<std::string>& line) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) text += " | ";
      text += line[c] + std::string(width[c] - line[c].size(), ' ');
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << '\n';
  };
  emit(grid[0]);
  std::string rule;
  for (std::size_t c = 0; c < width.size(); ++c) rule += (c ? "-+-" : "") + std::string(width[c], '-');
  out << rule << '\n';
  for (std::size_t r = 1; r < grid.size(); ++r) emit(grid[r]);
  return out.str();
}

std::string render_csv(const ExtTable& table) {
  std::ostringstream out;
  out << "x,y,status,dim,degrees,normalization\n";
  for (const auto& cell : table.cells) {
    const auto& a = cell.answer;
    out << csv_quote(cell.x) << ',' << csv_quote(cell.y) << ',' << to_string(a.status) << ','
        << (a.dim ? std::to_string(*a.dim) : "") << ',' << (a.degrees ? join_ints(*a.degrees, ';') : "")
        << ',' << to_string(a.normalization) << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const ExtTable& table) {
  nlohmann::json j;
  j["n"] = table.n;
  j["kind"] = to_string(table.kind);
  j["parabolic"] = table.parabolic ? nlohmann::json(*table.parabolic) : nlohmann::json(nullptr);
  j["normalization"] = to_string(table.normalization);
  auto cells = nlohmann::json::array();
  for (const auto& cell : table.cells) {
    const auto& a = cell.answer;
    nlohmann::json c;
    c["x"] = cell.x;
    c["y"] = cell.y;
    c["status"] = to_string(a.status);
    c["dim"] = a.dim ? nlohmann::json(*a.dim) : nlohmann::json(nullptr);
    c["degrees"] = a.degrees ? nlohmann::json(*a.degrees) : nlohmann::json(nullptr);
    if (a.alternate)
      c["alternate"] = {{"normalization", to_string(a.alternate->normalization)},
                        {"degrees", a.alternate->degrees}};
    cells.push_back(std::move(c));
  }
  j["cells"] = std::move(cells);
  return j;
}

ExtTable ext_table_from_json(const nlohmann::json& j) {
  ExtTable table;
  table.n = j.at("n").get<int>();
  table.kind = parse_table_kind(j.at("kind").get<std::string>());
  if (!j.at("parabolic").is_null()) table.parabolic = j.at("parabolic").get<std::vector<int>>();
  table.normalization = parse_normalization(j.at("normalization").get<std::string>());
  for (const auto& c : j.at("cells")) {
    TableCell cell;
    cell.x = c.at("x").get<std::string>();
    cell.y = c.at("y").get<std::string>();
    auto& a = cell.answer;
    a.status = parse_status(c.at("status").get<std::string>());
    a.normalization = table.normalization;
    if (!c.at("dim").is_null()) a.dim = c.at("dim").get<int>();
    if (!c.at("degrees").is_null()) a.degrees = c.at("degrees").get<std::vector<int>>();
    if (c.contains("alternate"))
      a.alternate = DegreeReport{parse_normalization(c["alternate"].at("normalization").get<std::string>()),
                                 c["alternate"].at("degrees").get<std::vector<int>>()};
    if (std::find(table.rows.begin(), table.rows.end(), cell.x) == table.rows.end()) table.rows.push_back(cell.x);
    if (std::find(table.columns.begin(), table.columns.end(), cell.y) == table.columns.end())
      table.columns.push_back(cell.y);
    table.cells.push_back(std::move(cell));
  }
  if (table.cells.size() != table.rows.size() * table.columns.size())
    throw std::invalid_argument("ext table JSON is not a full rectangular table");
  return table;
}

}  // namespace extcat
