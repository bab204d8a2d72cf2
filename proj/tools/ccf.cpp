#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccf/braid.hpp"
#include "ccf/canonical_formula.hpp"
#include "ccf/catalog.hpp"
#include "ccf/dump.hpp"
#include "ccf/expr.hpp"
#include "ccf/verify.hpp"

using json = nlohmann::json;

namespace {

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ccf::GroupPtr lookup(const std::string& name) {
  try {
    return ccf::build(name);
  } catch (const ccf::UnknownGroup& e) {
    throw UsageError(e.what());
  }
}

int cmd_catalog() {
  for (const auto& name : ccf::catalog_names()) {
    std::cout << name.str() << "\t" << ccf::build(name)->order() << "\t" << ccf::realization_kind(name) << "\n";
  }
  return 0;
}

int cmd_group(const std::string& sub, const std::string& name, const std::string& format) {
  const auto g = lookup(name);
  const bool as_json = format == "json";
  if (sub == "show") {
    if (as_json) std::cout << ccf::group_json(*g).dump(2) << "\n";
    else std::cout << ccf::group_markdown(*g);
  } else if (sub == "table") {
    if (as_json) std::cout << ccf::group_json(*g)["table"].dump() << "\n";
    else std::cout << ccf::cayley_markdown(*g);
  } else if (sub == "aut") {
    const auto aut = ccf::automorphism_group(g);
    const auto type = ccf::identify(aut);
    if (as_json) {
      json elements = json::array();
      for (const auto& e : aut->elements()) elements.push_back(e.label);
      std::cout << json{{"group", g->name()}, {"order", aut->order()}, {"isomorphic_to", type}, {"elements", elements}}.dump(2)
                << "\n";
    } else {
      std::cout << "order " << aut->order();
      if (type != "?") std::cout << ", isomorphic to " << type;
      std::cout << "\n";
    }
  } else if (sub == "subgroups") {
    const auto subs = ccf::subgroups(*g);
    json out = json::array();
    for (std::size_t n = 0; n < subs.size(); ++n) {
      json members = json::array();
      for (auto id : subs[n]) members.push_back(g->label(id));
      const auto type = ccf::identify(ccf::induced_subgroup(g, subs[n], "H").group);
      const bool normal = ccf::is_normal(*g, subs[n]);
      if (as_json) {
        out.push_back({{"order", subs[n].size()}, {"type", type}, {"normal", normal}, {"members", members}});
      } else {
        std::cout << subs[n].size() << "\t" << type << (normal ? "\tnormal" : "\t") << "\t{";
        for (std::size_t m = 0; m < subs[n].size(); ++m) std::cout << (m ? ", " : "") << g->label(subs[n][m]);
        std::cout << "}\n";
      }
    }
    if (as_json) std::cout << out.dump(2) << "\n";
  } else if (sub == "lattice-dot") {
    std::cout << ccf::lattice_dot(g);
  }
  return 0;
}

std::vector<ccf::RatioConvention> conventions(const std::string& flag) {
  if (flag == "both") return {ccf::RatioConvention::Plain, ccf::RatioConvention::Star};
  return {ccf::parse_convention(flag)};
}

int cmd_verify(const std::string& scope, const std::string& convention, const std::string& json_path) {
  const auto report = ccf::run_verify({ccf::parse_scope(scope), conventions(convention)});
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw UsageError("cannot write " + json_path);
    out << ccf::report_json(report).dump(2) << "\n";
  }
  std::cout << ccf::report_markdown(report);
  return ccf::exit_code(report);
}

json quat_json(const ccf::Quat& q) { return {{"value", q}, {"label", ccf::label(q)}}; }

int cmd_eval(const std::string& text, const std::string& convention, bool as_json) {
  try {
    const auto value = ccf::expr::eval(ccf::expr::parse(text), ccf::parse_convention(convention));
    if (const auto* q = std::get_if<ccf::Quat>(&value)) {
      if (as_json) std::cout << quat_json(*q).dump(2) << "\n";
      else std::cout << ccf::label(*q) << "\n";
    } else {
      const auto& c = std::get<ccf::CFCheck>(value);
      if (as_json) {
        std::cout << json{{"holds", c.holds}, {"lhs", quat_json(c.sides.lhs)}, {"rhs", quat_json(c.sides.rhs)}}.dump(2)
                  << "\n";
      } else {
        std::cout << (c.holds ? "true" : "false") << "; lhs=" << ccf::label(c.sides.lhs)
                  << " rhs=" << ccf::label(c.sides.rhs) << "\n";
      }
    }
    return 0;
  } catch (const ccf::PositionedError& e) {
    std::cerr << "error: " << e.what() << "\n  " << text << "\n  " << std::string(std::min(e.position(), text.size()), ' ')
              << "^\n";
    return 1;
  } catch (const ccf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_braid(const std::string& text) {
  ccf::BraidWord w;
  try {
    w = ccf::parse_braid(text);
  } catch (const ccf::SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  const auto perm = ccf::braid_permutation(w);
  json images = json::array();
  for (auto x : perm.images) images.push_back(x + 1);
  std::cout << json{{"word", w.str()},
                    {"burau", ccf::matrix_json(ccf::burau(w))},
                    {"sl2", ccf::matrix_json(ccf::sl2_image(w))},
                    {"permutation", images}}
                   .dump(2)
            << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact quaternion and finite-group checks for the canonical formula"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ccf::kToolVersion));

  auto* catalog = app.add_subcommand("catalog", "Catalog of named groups");
  catalog->add_subcommand("list", "List group names with order and realization")->final_callback([] {});
  catalog->require_subcommand(1);

  std::string group_sub, group_name, format = "md";
  auto* group = app.add_subcommand("group", "Inspect a catalog group");
  group->add_option("command", group_sub, "show | table | aut | subgroups | lattice-dot")
      ->required()
      ->check(CLI::IsMember({"show", "table", "aut", "subgroups", "lattice-dot"}));
  group->add_option("name", group_name, "Catalog name, e.g. Q, 2T, S4, SL2(3)")->required();
  group->add_option("--format", format, "json | md")->check(CLI::IsMember({"json", "md"}));

  std::string scope, convention = "both", json_path;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("scope", scope, "all | cf | sequences | aut | braid | matrix-iso | jordan")
      ->required()
      ->check(CLI::IsMember({"all", "cf", "sequences", "aut", "braid", "matrix-iso", "jordan"}));
  verify->add_option("--convention", convention, "plain | star | both")->check(CLI::IsMember({"plain", "star", "both"}));
  verify->add_option("--json", json_path, "Write the JSON report to this path");

  std::string expression, eval_convention = "plain";
  bool eval_json = false;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression exactly");
  eval->add_option("expr", expression, "Expression, e.g. \"cf(1,i,j,k)\"")->required();
  eval->add_option("--convention", eval_convention, "plain | star")->check(CLI::IsMember({"plain", "star"}));
  eval->add_flag("--json", eval_json, "JSON output");

  std::string scan_convention = "plain";
  auto* scan = app.add_subcommand("scan", "Classify all 4096 quadruples over Q");
  scan->add_option("--convention", scan_convention, "plain | star")->check(CLI::IsMember({"plain", "star"}));

  std::string word;
  auto* braid = app.add_subcommand("braid", "Burau, SL2(Z) and permutation images of a braid word");
  braid->add_option("word", word, "Word over a, A, b, B (or a^-1, b^-1)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*catalog) return cmd_catalog();
    if (*group) return cmd_group(group_sub, group_name, format);
    if (*verify) return cmd_verify(scope, convention, json_path);
    if (*eval) return cmd_eval(expression, eval_convention, eval_json);
    if (*scan) {
      std::cout << ccf::scan_json(ccf::cf_scan(ccf::parse_convention(scan_convention))).dump(2) << "\n";
      return 0;
    }
    if (*braid) return cmd_braid(word);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsage;
}
