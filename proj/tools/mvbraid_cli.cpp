// mvbraid: command-line front end.
//
// Exit codes: 0 success, 2 usage or input error, 3 verification mismatch,
// 4 resource limit.  MVBRAID_MAX_COSETS overrides the coset limit of
// Todd-Coxeter enumeration.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mvbraid/checks.hpp"
#include "mvbraid/homomorphism.hpp"
#include "mvbraid/invariants.hpp"
#include "mvbraid/json_io.hpp"
#include "mvbraid/pipeline.hpp"
#include "mvbraid/reidemeister_schreier.hpp"

using namespace mvbraid;

namespace {

constexpr int exit_usage = 2;
constexpr int exit_mismatch = 3;
constexpr int exit_resource = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t max_cosets() {
  if (const char* v = std::getenv("MVBRAID_MAX_COSETS")) {
    try {
      return static_cast<std::size_t>(std::stoull(v));
    } catch (const std::exception&) {
      throw UsageError(std::string("MVBRAID_MAX_COSETS is not a number: ") + v);
    }
  }
  return default_max_cosets;
}

// Where a presentation comes from: a catalog key or a JSON file ("-" is stdin).
struct Source {
  std::string group;
  std::string input;
  int n = 0, k = 0;

  void add(CLI::App* app) {
    app->add_option("--group", group, "catalog key");
    app->add_option("--input", input, "presentation JSON file, - for stdin");
    app->add_option("--n", n, "strands");
    app->add_option("--k", k, "virtual sorts");
  }

  Presentation load() const {
    if (!group.empty()) return build(group, n, k).presentation;
    std::string text;
    if (input.empty() || input == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream f(input);
      if (!f) throw UsageError("cannot read " + input);
      text.assign(std::istreambuf_iterator<char>(f), {});
    }
    auto p = presentation_from_json(text);
    auto rep = validate(p);
    if (!rep.ok()) throw UsageError("invalid presentation:\n" + rep.str());
    return normalised(p);
  }
};

void emit(const Presentation& p, const std::string& format) {
  if (format == "text") std::cout << to_text(p) << "\n";
  else std::cout << presentation_to_json(p) << "\n";
}

TransversalStrategy strategy(const std::string& s) {
  if (s == "bfs") return TransversalStrategy::bfs;
  if (s == "lambda") return TransversalStrategy::lambda;
  throw UsageError("unknown transversal '" + s + "'");
}

int report(const std::vector<CheckResult>& results, const std::string& format) {
  bool ok = true;
  if (format == "json") {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& c : results) a.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    std::cout << a.dump(2) << "\n";
  }
  for (const auto& c : results) {
    ok = ok && c.ok;
    if (format != "json") std::cout << (c.ok ? "ok   " : "FAIL ") << c.name << "\n" << (c.ok ? "" : c.detail);
  }
  return ok ? 0 : exit_mismatch;
}

int run(int argc, char** argv) {
  CLI::App app{"Finitely presented groups of multi-virtual braids"};
  app.require_subcommand(1);
  int code = 0;

  // catalog
  auto* catalog = app.add_subcommand("catalog", "list or show catalog presentations");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "list catalog keys");
  list->callback([&] {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& k : catalog_keys())
      a.push_back({{"key", k.key}, {"n", k.uses_n}, {"k", k.uses_k}, {"min_k", k.min_k}, {"description", k.description}});
    std::cout << a.dump(2) << "\n";
  });
  std::string show_key, show_format = "json";
  int show_n = 0, show_k = 0;
  auto* show = catalog->add_subcommand("show", "print a catalog presentation");
  show->add_option("key", show_key, "catalog key")->required();
  show->add_option("--n", show_n);
  show->add_option("--k", show_k);
  show->add_option("--format", show_format)->check(CLI::IsMember({"json", "text"}));
  show->callback([&] { emit(build(show_key, show_n, show_k).presentation, show_format); });

  // derive
  std::string d_group = "MkVB", d_map = "phi", d_trans = "lambda", d_dict, d_stage = "named", d_format = "json";
  int d_n = 3, d_k = 1, d_budget = default_budget;
  bool d_table = false;
  auto* der = app.add_subcommand("derive", "derive the kernel presentation of a map onto S_n");
  der->add_option("--group", d_group, "catalog key of the ambient group");
  der->add_option("--n", d_n);
  der->add_option("--k", d_k);
  der->add_option("--map", d_map)->check(CLI::IsMember({"phi", "psi", "chi3", "chi4", "rho-only"}));
  der->add_option("--transversal", d_trans)->check(CLI::IsMember({"bfs", "lambda"}));
  der->add_option("--dictionary", d_dict, "dictionary key, or none (default for bfs)");
  der->add_option("--stage", d_stage)->check(CLI::IsMember({"raw", "simplified", "named"}));
  der->add_option("--budget", d_budget, "Tietze passes");
  der->add_option("--format", d_format)->check(CLI::IsMember({"json", "text"}));
  der->add_flag("--table", d_table, "print the coset table instead");
  der->callback([&] {
    DeriveOptions opts;
    opts.transversal = strategy(d_trans);
    opts.budget = d_budget;
    std::optional<std::string> dict;
    if (!d_dict.empty()) dict = d_dict == "none" ? "" : d_dict;
    // Dictionary words name single Schreier generators only for the explicit
    // transversal.
    else if (opts.transversal == TransversalStrategy::bfs) dict = "";
    auto d = derive(d_group, d_n, d_k, d_map, dict, opts);
    if (d_table) {
      std::cout << coset_table_to_json(d.table) << "\n";
      return;
    }
    if (d_stage == "raw") emit(d.raw, d_format);
    else if (d_stage == "simplified") emit(d.simplified.presentation, d_format);
    else emit(d.named, d_format);
    if (d.simplified.budget_exhausted || d.simplified.length_ceiling_hit) {
      std::cerr << "simplification stopped early (" << (d.simplified.budget_exhausted ? "budget" : "length ceiling")
                << ")\n";
      code = exit_resource;
    }
  });

  // simplify
  Source s_src;
  std::string s_format = "json";
  int s_budget = default_budget;
  auto* simp = app.add_subcommand("simplify", "Tietze-simplify a presentation");
  s_src.add(simp);
  simp->add_option("--budget", s_budget);
  simp->add_option("--format", s_format)->check(CLI::IsMember({"json", "text"}));
  simp->callback([&] {
    auto r = simplify(s_src.load(), s_budget);
    emit(r.presentation, s_format);
    if (r.budget_exhausted || r.length_ceiling_hit) {
      std::cerr << "simplification stopped early\n";
      code = exit_resource;
    }
  });

  // compare
  Source c_src;
  std::string c_against, c_format = "text";
  int c_n = 0, c_k = 0;
  auto* cmp = app.add_subcommand("compare", "compare relator sets with a catalog presentation");
  cmp->add_option("--input", c_src.input, "presentation JSON file, - for stdin");
  cmp->add_option("--against", c_against, "catalog key")->required();
  cmp->add_option("--n", c_n);
  cmp->add_option("--k", c_k);
  cmp->add_option("--format", c_format)->check(CLI::IsMember({"json", "text"}));
  cmp->callback([&] {
    auto diff = relator_diff(c_src.load(), build(c_against, c_n, c_k).presentation);
    std::cout << (c_format == "json" ? diff_to_json(diff) + "\n" : diff.str());
    if (!diff.equal()) code = exit_mismatch;
  });

  // abelianize
  Source a_src;
  std::string a_format = "text";
  auto* abl = app.add_subcommand("abelianize", "abelian invariants of a presentation");
  a_src.add(abl);
  abl->add_option("--format", a_format)->check(CLI::IsMember({"json", "text"}));
  abl->callback([&] {
    auto a = abelianization(a_src.load());
    std::cout << (a_format == "json" ? abelian_to_json(a) : a.str()) << "\n";
  });

  // index
  std::string i_group = "MkVB", i_map = "phi", i_dict;
  int i_n = 3, i_k = 1;
  bool i_tc = false;
  auto* idx = app.add_subcommand("index", "index of the kernel of a map onto S_n");
  idx->add_option("--group", i_group);
  idx->add_option("--n", i_n);
  idx->add_option("--k", i_k);
  idx->add_option("--map", i_map)->check(CLI::IsMember({"phi", "psi", "chi3", "chi4", "rho-only"}));
  idx->add_flag("--todd-coxeter", i_tc, "enumerate cosets of the subgroup generated by the dictionary words");
  idx->add_option("--dictionary", i_dict, "dictionary key for --todd-coxeter");
  idx->callback([&] {
    auto e = build(i_group, i_n, i_k);
    int hk = e.k > 0 ? e.k : 1;
    if (!i_tc) {
      auto h = build_perm_hom(i_map, e.n, hk);
      std::cout << kernel_coset_table(e.presentation, h.images, e.n).degree() << "\n";
      return;
    }
    std::string key = i_dict.empty() ? default_dictionary(i_map) : i_dict;
    std::vector<Word> gens;
    for (const auto& entry : build_dictionary(key, e.n, hk)) gens.push_back(entry.expansion);
    std::cout << todd_coxeter(e.presentation, gens, max_cosets()).degree() << "\n";
  });

  // verify
  auto* ver = app.add_subcommand("verify", "verification suites");
  ver->require_subcommand(1);
  std::string v_format = "text", v_map = "phi", v_hom = "phi", v_group = "MkVB";
  int v_n = 3, v_k = 2, v_pair = 1;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", v_n);
    sub->add_option("--k", v_k);
    sub->add_option("--format", v_format)->check(CLI::IsMember({"json", "text"}));
  };
  auto* v_action = ver->add_subcommand("action", "conjugation action of the transversal on kernel generators");
  common(v_action);
  v_action->add_option("--map", v_map)->check(CLI::IsMember({"phi", "psi"}));
  v_action->callback([&] { code = report({action(v_map, v_n, v_k)}, v_format); });
  auto* v_homc = ver->add_subcommand("hom", "well-definedness of a map onto S_n");
  common(v_homc);
  v_homc->add_option("--hom", v_hom)->check(CLI::IsMember({"phi", "psi", "chi3", "chi4", "rho-only"}));
  v_homc->add_option("--group", v_group);
  v_homc->callback([&] { code = report({hom_well_defined(v_hom, v_group, v_n, v_k)}, v_format); });
  auto* v_ret = ver->add_subcommand("retraction", "projection after inclusion is the identity");
  common(v_ret);
  v_ret->add_option("--pair", v_pair, "1: VB, 2: FVB, 3: M_{k}VB in M_{k+1}VB")->check(CLI::Range(1, 3));
  v_ret->callback([&] { code = report({retraction(v_pair, v_n, v_k)}, v_format); });
  auto* v_all = ver->add_subcommand("all", "every check for (n, k)");
  common(v_all);
  v_all->callback([&] { code = report(verify_all(v_n, v_k), v_format); });

  auto* v_quot = ver->add_subcommand("quotients", "welded and unrestricted kernels against the stated lists (report only)");
  common(v_quot);
  v_quot->callback([&] { report(quotient_reports(v_n, v_k), v_format); });

  // export
  Source e_src;
  std::string e_format = "json";
  auto* exp = app.add_subcommand("export", "print a presentation as JSON or text");
  e_src.add(exp);
  exp->add_option("--format", e_format)->check(CLI::IsMember({"json", "text"}));
  exp->callback([&] { emit(e_src.load(), e_format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : exit_usage;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const CatalogError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const NotWellDefined& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_mismatch;
  } catch (const ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_resource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
