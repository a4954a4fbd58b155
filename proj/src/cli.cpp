#include "fusion/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "fusion/coefficients.hpp"
#include "fusion/crosscheck.hpp"
#include "fusion/crystal.hpp"
#include "fusion/cylindric.hpp"
#include "fusion/tableau.hpp"
#include "fusion/tabloid.hpp"

namespace fusion::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Thrown for inputs that parse but make no sense to the library.
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string format = "text";
  int level = 0;
  int rank = 0;
  std::string lambda, mu, nu, shape, outer, inner, content, method = "auto", op, word;
  int index = 0;
  int max_weight = 6;
};

Json rows_json(const SkewTableau& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows()) rows.push_back(r);
  return rows;
}

Json cells_json(const std::vector<Cell>& cells) {
  Json out = Json::array();
  for (const Cell& c : cells) out.push_back({c.col, c.row + 1});
  return out;
}

std::string cells_text(const std::vector<Cell>& cells) {
  std::string s = "{";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) s += ",";
    s += "(" + std::to_string(cells[i].col) + "," + std::to_string(cells[i].row + 1) + ")";
  }
  return s + "}";
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s.empty() ? "-" : s;
}

std::vector<int> parse_composition(const std::string& text) {
  if (text == "-" || text.empty()) return {};
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
      throw InvalidInput("malformed content '" + text + "'");
    }
    out.push_back(std::stoi(tok));
  }
  if (!text.empty() && text.back() == ',') throw InvalidInput("malformed content '" + text + "'");
  return out;
}

Partition partition_arg(const std::string& name, const std::string& text) {
  try {
    return parse_partition(text);
  } catch (const std::invalid_argument& e) {
    throw InvalidInput("--" + name + ": " + e.what());
  }
}

void emit(std::ostream& out, const std::string& command, Json inputs, Json result) {
  Json doc;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["result"] = std::move(result);
  out << doc.dump(2) << "\n";
}

int cmd_coeff(const Options& o, std::ostream& out) {
  const FusionContext ctx(o.level, o.rank);
  const Partition lambda = partition_arg("lambda", o.lambda);
  const Partition mu = partition_arg("mu", o.mu);
  const Partition nu = partition_arg("nu", o.nu);
  require_fusion_inputs(lambda, mu, nu, ctx);

  std::vector<std::pair<std::string, std::optional<std::int64_t>>> values;
  if (o.method == "all") {
    values.emplace_back("kw", fusion_kac_walton(lambda, mu, nu, ctx));
    values.emplace_back("cyl", fusion_signed_tabloid(lambda, mu, nu, ctx));
    values.emplace_back("det", fusion_signed_det(lambda, mu, nu, ctx));
    values.emplace_back("pos", fusion_positive(lambda, mu, nu, ctx));
  } else {
    values.emplace_back(o.method, fusion_coefficient(lambda, mu, nu, ctx, parse_method(o.method)));
  }

  if (o.format == "json") {
    Json result = Json::object();
    for (auto& [m, v] : values) result[m] = v ? Json(*v) : Json(nullptr);
    emit(out, "coeff",
         {{"level", o.level}, {"rank", o.rank}, {"lambda", lambda.parts()}, {"mu", mu.parts()},
          {"nu", nu.parts()}, {"method", o.method}},
         std::move(result));
  } else if (values.size() == 1) {
    out << *values.front().second << "\n";
  } else {
    for (auto& [m, v] : values) out << m << std::string(5 - m.size(), ' ') << (v ? std::to_string(*v) : "n/a") << "\n";
  }
  return kOk;
}

int cmd_expand(const Options& o, std::ostream& out) {
  const FusionContext ctx(o.level, o.rank);
  const Partition lambda = partition_arg("lambda", o.lambda);
  const Partition mu = partition_arg("mu", o.mu);
  const SchurExpansion e = expand_product(lambda, mu, ctx);
  const auto& terms = e.terms();
  if (o.format == "json") {
    Json result = Json::array();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      result.push_back({{"nu", it->first.parts()}, {"coefficient", it->second}});
    }
    emit(out, "expand", {{"level", o.level}, {"rank", o.rank}, {"lambda", lambda.parts()}, {"mu", mu.parts()}},
         std::move(result));
  } else if (terms.empty()) {
    out << "0\n";
  } else {
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) out << it->second << " " << to_string(it->first) << "\n";
  }
  return kOk;
}

int cmd_lr(const Options& o, std::ostream& out) {
  const Partition lambda = partition_arg("lambda", o.lambda);
  const Partition mu = partition_arg("mu", o.mu);
  const Partition nu = partition_arg("nu", o.nu);
  const auto value = lr_coefficient(lambda, mu, nu);
  if (o.format == "json") {
    emit(out, "lr", {{"lambda", lambda.parts()}, {"mu", mu.parts()}, {"nu", nu.parts()}}, value);
  } else {
    out << value << "\n";
  }
  return kOk;
}

int cmd_tabloids(const Options& o, std::ostream& out) {
  const Partition mu = partition_arg("shape", o.shape);
  const auto tabloids = enumerate_tabloids(mu);
  if (o.format == "json") {
    Json result = Json::array();
    for (const Tabloid& t : tabloids) {
      Json ribbons = Json::array();
      for (const Ribbon& r : t.ribbons) ribbons.push_back(cells_json(r.cells));
      result.push_back({{"weight", t.weight}, {"sign", t.sign}, {"type", t.type.parts()}, {"ribbons", ribbons}});
    }
    emit(out, "tabloids", {{"shape", mu.parts()}}, std::move(result));
    return kOk;
  }
  for (const Tabloid& t : tabloids) {
    out << (t.sign > 0 ? "+" : "-") << " weight " << join(t.weight) << " type " << to_string(t.type);
    for (const Ribbon& r : t.ribbons) out << " " << cells_text(r.cells);
    out << "\n";
  }
  return kOk;
}

int cmd_cylindric(const Options& o, std::ostream& out) {
  const FusionContext ctx(o.level, o.rank);
  const Partition outer = partition_arg("outer", o.outer);
  const Partition inner = partition_arg("inner", o.inner);
  const auto content = parse_composition(o.content);
  if (!outer.contains(inner)) throw InvalidInput("--inner must be contained in --outer");
  const auto tableaux = enumerate_cylindric(SkewShape(outer, inner), content, ctx);
  if (o.format == "json") {
    Json list = Json::array();
    for (const auto& t : tableaux) list.push_back(rows_json(t));
    emit(out, "cylindric",
         {{"level", o.level}, {"rank", o.rank}, {"outer", outer.parts()}, {"inner", inner.parts()},
          {"content", content}},
         {{"count", tableaux.size()}, {"tableaux", list}});
    return kOk;
  }
  for (const auto& t : tableaux) out << to_string(t) << "\n";
  out << tableaux.size() << (tableaux.size() == 1 ? " tableau" : " tableaux") << "\n";
  return kOk;
}

int cmd_crystal(const Options& o, std::ostream& out) {
  const CrystalOp op = parse_crystal_op(o.op);
  Word w;
  try {
    w = parse_word(o.word);
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(std::string("--word: ") + e.what());
  }
  if (std::any_of(w.begin(), w.end(), [](int a) { return a < 1; })) throw InvalidInput("letters must be positive");
  const int alphabet = std::max(o.index + 1, w.empty() ? 0 : *std::max_element(w.begin(), w.end()));
  const auto image = apply_crystal(w, op, o.index, alphabet);
  if (o.format == "json") {
    emit(out, "crystal", {{"op", std::string(to_string(op))}, {"index", o.index}, {"word", to_string(w)}},
         image ? Json(to_string(*image)) : Json(nullptr));
  } else {
    out << (image ? to_string(*image) : "0") << "\n";
  }
  return kOk;
}

int cmd_crosscheck(const Options& o, std::ostream& out) {
  const FusionContext ctx(o.level, o.rank);
  if (o.max_weight < 0) throw InvalidInput("--max-weight must be nonnegative");
  const CrosscheckReport report = crosscheck(ctx, o.max_weight);
  if (o.format == "json") {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name}, {"checked", c.checked}, {"passed", c.passed}, {"failures", c.failures}});
    }
    emit(out, "crosscheck", {{"level", o.level}, {"rank", o.rank}, {"max_weight", o.max_weight}},
         {{"ok", report.ok()}, {"checks", checks}});
  } else {
    for (const auto& c : report.checks) {
      std::string name = c.name;
      name.resize(std::max<std::size_t>(name.size(), 26), ' ');
      out << name << c.passed << "/" << c.checked << (c.ok() ? "  ok" : "  FAIL") << "\n";
      for (const auto& f : c.failures) out << "  " << f << "\n";
    }
    out << (report.ok() ? "all identities hold" : "identity failures found") << "\n";
  }
  return report.ok() ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Fusion coefficients of type A", "fusion"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto level_rank = [&](CLI::App* sub) {
    sub->add_option("--level", o.level, "Level l")->required()->check(CLI::PositiveNumber);
    sub->add_option("--rank", o.rank, "Rank n")->required()->check(CLI::PositiveNumber);
  };

  auto* coeff = app.add_subcommand("coeff", "Single fusion coefficient");
  level_rank(coeff);
  coeff->add_option("--lambda", o.lambda, "Partition, e.g. 2,1 or -")->required();
  coeff->add_option("--mu", o.mu, "Partition")->required();
  coeff->add_option("--nu", o.nu, "Partition")->required();
  coeff->add_option("--method", o.method, "auto, kw, cyl, det, pos or all")
      ->check(CLI::IsMember({"auto", "kw", "cyl", "det", "pos", "all"}));

  auto* expand = app.add_subcommand("expand", "Fusion product in the Schur basis");
  level_rank(expand);
  expand->add_option("--lambda", o.lambda, "Partition")->required();
  expand->add_option("--mu", o.mu, "Partition")->required();

  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
  lr->add_option("--lambda", o.lambda, "Partition")->required();
  lr->add_option("--mu", o.mu, "Partition")->required();
  lr->add_option("--nu", o.nu, "Partition")->required();

  auto* tabloids = app.add_subcommand("tabloids", "Ribbon tabloids of a shape");
  tabloids->add_option("--shape", o.shape, "Partition")->required();

  auto* cylindric = app.add_subcommand("cylindric", "Cylindric tableaux of a skew shape");
  level_rank(cylindric);
  cylindric->add_option("--outer", o.outer, "Partition")->required();
  cylindric->add_option("--inner", o.inner, "Partition")->required();
  cylindric->add_option("--content", o.content, "Composition, e.g. 2,1,3")->required();

  auto* crystal = app.add_subcommand("crystal", "Crystal operator on a word");
  crystal->add_option("--op", o.op, "e, f or s")->required()->check(CLI::IsMember({"e", "f", "s"}));
  crystal->add_option("--index", o.index, "Operator index i >= 1")->required()->check(CLI::PositiveNumber);
  crystal->add_option("--word", o.word, "Digits, or comma-separated letters")->required();

  auto* check = app.add_subcommand("crosscheck", "Verify all identities on a grid");
  level_rank(check);
  check->add_option("--max-weight", o.max_weight, "Bound on |nu|")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto chosen = app.get_subcommands();
    out << (chosen.empty() ? app.help() : chosen.front()->help());
    return kOk;
  } catch (const CLI::ParseError& e) {
    const auto chosen = app.get_subcommands();
    err << "error: " << e.what() << "\n" << (chosen.empty() ? app.help() : chosen.front()->help());
    return kUsage;
  }

  try {
    if (coeff->parsed()) return cmd_coeff(o, out);
    if (expand->parsed()) return cmd_expand(o, out);
    if (lr->parsed()) return cmd_lr(o, out);
    if (tabloids->parsed()) return cmd_tabloids(o, out);
    if (cylindric->parsed()) return cmd_cylindric(o, out);
    if (crystal->parsed()) return cmd_crystal(o, out);
    return cmd_crosscheck(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const NotApplicable& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kInvalidInput;
}

}  // namespace fusion::cli
