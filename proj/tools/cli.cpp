#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "extcat/bruhat_base.hpp"
#include "extcat/cells.hpp"
#include "extcat/ext_o.hpp"
#include "extcat/selftest.hpp"
#include "extcat/table.hpp"

namespace extcat::cli {

namespace {

// Thrown for argument combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  std::string target;
  std::optional<std::string> parabolic;
  std::optional<std::string> stabilizer;
  bool graded = false;
  std::string format = "text";
  std::optional<std::string> out_path;
  bool coords = false;
  std::optional<std::string> shape;
  std::string perm;
  std::optional<std::string> from;
  int max_n = 0;
};

Permutation parse_perm(const std::string& text, int n) {
  auto w = Permutation::parse(text);
  if (w.rank() != n) throw RankMismatch(w.rank(), n);
  return w;
}

std::string coord_text(const BigrassCoord& c) {
  return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + "," + std::to_string(c.k) + ")";
}

nlohmann::json coord_json(const Permutation& b) {
  const auto c = coord_of(b);
  return {{"perm", b.to_string()}, {"i", c.i}, {"j", c.j}, {"k", c.k}};
}

std::string render_ext(const Options& o) {
  const auto kind = parse_table_kind(o.target);
  std::optional<ParabolicSubset> subset;
  if (kind == TableKind::singular_verma) {
    if (o.parabolic) throw UsageError("--target singular-verma takes --stabilizer, not --parabolic");
    if (o.stabilizer) subset = ParabolicSubset::parse(o.n, *o.stabilizer);
  } else {
    if (o.stabilizer) throw UsageError("--stabilizer only applies to --target singular-verma");
    if (kind == TableKind::verma && o.parabolic) throw UsageError("--target verma takes no --parabolic");
    if (kind != TableKind::verma && !o.parabolic)
      throw UsageError("--target " + o.target + " requires --parabolic");
    if (o.parabolic) subset = ParabolicSubset::parse(o.n, *o.parabolic);
  }
  const auto table = build_ext_table(o.n, kind, subset);
  if (o.format == "csv") return render_csv(table);
  if (o.format == "json") return to_json(table).dump(2) + "\n";
  return render_text(table, o.graded);
}

std::string render_base(const Options& o) {
  const auto& base = bigrassmannians(o.n);
  if (o.format == "json") {
    auto arr = nlohmann::json::array();
    for (const auto& b : base) arr.push_back(o.coords ? coord_json(b) : nlohmann::json(b.to_string()));
    return arr.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const auto& b : base) {
    out << b.to_string();
    if (o.coords) out << ' ' << coord_text(coord_of(b));
    out << '\n';
  }
  return out.str();
}

std::string render_bm(const Options& o) {
  const auto maximal = bm(parse_perm(o.perm, o.n));
  if (o.format == "json") {
    auto arr = nlohmann::json::array();
    for (const auto& b : maximal) arr.push_back(coord_json(b));
    return arr.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const auto& b : maximal) out << b.to_string() << ' ' << coord_text(coord_of(b)) << '\n';
  return out.str();
}

std::string render_cells(const Options& o) {
  std::optional<Shape> only;
  if (o.shape) only = Shape::parse(*o.shape);
  const auto cells = two_sided_cells(o.n);
  if (only && !cells.contains(*only))
    throw std::invalid_argument("shape " + only->to_string() + " is not a partition of " + std::to_string(o.n));
  // Largest first part first, matching the usual dominance listing.
  nlohmann::json arr = nlohmann::json::array();
  std::ostringstream out;
  for (auto it = cells.rbegin(); it != cells.rend(); ++it) {
    const auto& [shape, members] = *it;
    if (only && shape != *only) continue;
    if (o.format == "json") {
      nlohmann::json names = nlohmann::json::array();
      for (const auto& w : members) names.push_back(w.to_string());
      arr.push_back({{"shape", shape.parts}, {"elements", names}});
      continue;
    }
    out << shape.to_string() << ':';
    for (const auto& w : members) out << " [" << w.to_string() << ']';
    out << '\n';
  }
  return o.format == "json" ? arr.dump(2) + "\n" : out.str();
}

std::string render_phi(const Options& o) {
  const auto b = parse_perm(o.perm, o.n);
  const auto x = phi(b);
  if (o.format == "json")
    return nlohmann::json{{"x", x.to_string()}, {"m", m_degree(b)}}.dump(2) + "\n";
  return x.to_string() + " m=" + std::to_string(m_degree(b)) + "\n";
}

std::string render_socle(const Options& o) {
  const auto w = parse_perm(o.perm, o.n);
  const auto v = o.from ? parse_perm(*o.from, o.n) : Permutation::identity(o.n);
  const auto socle = socle_coker_verma(v, w);
  if (o.format == "json") {
    auto arr = nlohmann::json::array();
    for (const auto& e : socle) arr.push_back({{"x", e.x.to_string()}, {"m", e.m}});
    return arr.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const auto& e : socle) out << e.x.to_string() << " m=" << e.m << '\n';
  return out.str();
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (!o.out_path) {
    out << text;
    return;
  }
  std::ofstream file(*o.out_path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open '" + *o.out_path + "' for writing");
  file << text;
  if (!file) throw std::invalid_argument("failed writing '" + *o.out_path + "'");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"First-extension tables for category O in type A"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub, std::vector<std::string> choices) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(choices));
    sub->add_option("--out", o.out_path, "Write to FILE instead of standard output");
  };
  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "Rank of the symmetric group")->required(); };

  auto* ext = app.add_subcommand("ext", "Table of ext^1 between simples and (proper) standard objects");
  add_n(ext);
  ext->add_option("--target", o.target, "verma, singular-verma, proper-standard or standard")
      ->required()
      ->check(CLI::IsMember({"verma", "singular-verma", "proper-standard", "standard"}));
  ext->add_option("--parabolic", o.parabolic, "Simple reflection indices, e.g. 1,3");
  ext->add_option("--stabilizer", o.stabilizer, "Dot-stabiliser for singular-verma, e.g. 2");
  ext->add_flag("--graded", o.graded, "Show (dim, degree) cells");
  add_format(ext, {"text", "csv", "json"});

  auto* base = app.add_subcommand("base", "List the bigrassmannian permutations");
  add_n(base);
  base->add_flag("--coords", o.coords, "Show (i,j,k) coordinates");
  add_format(base, {"text", "json"});

  auto* bm_cmd = app.add_subcommand("bm", "Bruhat-maximal bigrassmannians below a permutation");
  add_n(bm_cmd);
  bm_cmd->add_option("--perm", o.perm, "One-line notation, e.g. 3,1,2")->required();
  add_format(bm_cmd, {"text", "json"});

  auto* cells = app.add_subcommand("cells", "Two-sided cells by RSK shape");
  add_n(cells);
  cells->add_option("--shape", o.shape, "Only this shape, e.g. 2,1,1");
  add_format(cells, {"text", "json"});

  auto* phi_cmd = app.add_subcommand("phi", "Image of a bigrassmannian in the penultimate cell");
  add_n(phi_cmd);
  phi_cmd->add_option("--perm", o.perm, "Bigrassmannian in one-line notation")->required();
  add_format(phi_cmd, {"text", "json"});

  auto* socle = app.add_subcommand("socle", "Socle of the cokernel of Delta_w in Delta_v");
  add_n(socle);
  socle->add_option("--perm", o.perm, "w in one-line notation")->required();
  socle->add_option("--from", o.from, "v in one-line notation (default identity)");
  add_format(socle, {"text", "json"});

  auto* self = app.add_subcommand("selftest", "Run the invariant battery");
  self->add_option("--max-n", o.max_n, "Largest rank to check (3..7)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (self->parsed()) {
      if (o.max_n < kSelftestMinRank || o.max_n > kSelftestMaxRank) {
        err << "error: --max-n must be between " << kSelftestMinRank << " and " << kSelftestMaxRank << '\n';
        return kExitUsage;
      }
      return selftest(o.max_n, out) == 0 ? kExitOk : kExitSelftestFailed;
    }
    std::string text;
    if (ext->parsed()) text = render_ext(o);
    else if (base->parsed()) text = render_base(o);
    else if (bm_cmd->parsed()) text = render_bm(o);
    else if (cells->parsed()) text = render_cells(o);
    else if (phi_cmd->parsed()) text = render_phi(o);
    else text = render_socle(o);
    emit(o, text, out);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

}  // namespace extcat::cli
