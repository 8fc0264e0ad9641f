#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "extcat/ext_o.hpp"
#include "extcat/parabolic.hpp"

namespace extcat {

enum class TableKind { verma, singular_verma, proper_standard, standard };

std::string_view to_string(TableKind kind);
TableKind parse_table_kind(std::string_view text);

struct TableCell {
  std::string x;
  std::string y;
  GradedExtAnswer answer;

  friend bool operator==(const TableCell&, const TableCell&) = default;
};

/// A full x-by-y table of first-extension answers. Rows and columns follow
/// the global permutation order; cells are stored row-major.
struct ExtTable {
  int n = 0;
  TableKind kind = TableKind::verma;
  /// Parabolic for S-subcategory tables, dot-stabiliser for singular ones.
  std::optional<std::vector<int>> parabolic;
  Normalization normalization = Normalization::top_degree_zero;
  std::vector<std::string> rows;
  std::vector<std::string> columns;
  std::vector<TableCell> cells;

  const TableCell& at(std::size_t row, std::size_t column) const {
    return cells[row * columns.size() + column];
  }

  friend bool operator==(const ExtTable&, const ExtTable&) = default;
};

inline constexpr int kTableMaxRank = 6;

/// Builds the table for `kind`. Proper-standard and standard tables are
/// indexed by X_long of `parabolic`; singular tables by longest (rows) and
/// shortest (columns) representatives of the cosets w W_stab.
/// Throws GuardExceeded for n > kTableMaxRank.
ExtTable build_ext_table(int n, TableKind kind, const std::optional<ParabolicSubset>& parabolic);

/// "-" for zero, "?" for unknown, "d" or "(d, m)" otherwise.
std::string render_cell(const GradedExtAnswer& answer, bool graded);
std::string render_text(const ExtTable& table, bool graded);
std::string render_csv(const ExtTable& table);

nlohmann::json to_json(const ExtTable& table);
ExtTable ext_table_from_json(const nlohmann::json& j);

}  // namespace extcat
