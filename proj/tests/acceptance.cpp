// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
//
//   acceptance [--expect-fail 2,3,4] [--only 1,5]
//
// Without --expect-fail the exit status is 0 iff every criterion passes.
// With it, the exit status is 0 iff the failing set equals the given set.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "mvbraid/checks.hpp"
#include "mvbraid/homomorphism.hpp"
#include "mvbraid/invariants.hpp"
#include "mvbraid/reidemeister_schreier.hpp"

using namespace mvbraid;

namespace {

// Tolerances.
constexpr std::size_t action_mismatches_allowed = 0;
constexpr int property_cases = 1000;
constexpr int property_failures_allowed = 0;
constexpr double seconds_per_criterion = 10.0;
constexpr std::uint32_t property_seed = 20240611;

struct Outcome {
  bool pass = true;
  std::vector<std::string> lines;

  void item(bool ok, const std::string& what, bool gating = true) {
    if (gating) pass = pass && ok;
    lines.push_back(std::string(ok ? "ok    " : gating ? "FAIL  " : "info  ") + what);
  }
  void detail(const std::string& text) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) lines.push_back("      " + l);
  }
  void check(const CheckResult& c, bool gating = true) {
    item(c.ok, c.name, gating);
    if (!c.ok) detail(c.detail);
  }
};

std::size_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::size_t>(n) * factorial(n - 1); }

std::string nk(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

// 1. Index n! and Todd-Coxeter agreement.
Outcome index_check() {
  Outcome o;
  for (const char* map : {"phi", "psi"}) {
    for (int n = 2; n <= 4; ++n)
      for (int k = 1; k <= 3; ++k) {
        auto p = build("MkVB", n, k).presentation;
        auto h = build_perm_hom(map, n, k);
        auto t = kernel_coset_table(p, h.images, n);
        o.item(t.degree() == factorial(n), std::string(map) + " on MkVB" + nk(n, k) + ": index " +
                                               std::to_string(t.degree()) + ", expected " +
                                               std::to_string(factorial(n)));
        if (n > 3) continue;
        std::vector<Word> gens;
        for (const auto& e : build_dictionary(default_dictionary(map), n, k)) gens.push_back(e.expansion);
        auto tc = todd_coxeter(p, gens);
        o.item(tc.standardized() == t.standardized(),
               std::string(map) + " on MkVB" + nk(n, k) + ": Todd-Coxeter on dictionary words gives the same table (" +
                   std::to_string(tc.degree()) + " cosets)");
      }
  }
  return o;
}

void kernel_match(Outcome& o, const std::string& map, const std::string& claimed, const std::string& corrected) {
  for (auto [n, k] : {std::pair{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}}) {
    auto d = derive("MkVB", n, k, map);
    o.check(compare_kernel("MkVB", n, k, map, default_dictionary(map), claimed));
    if (n == 3) {
      std::size_t gens = 6 + 3 * static_cast<std::size_t>(k - 1), rels = 6 + static_cast<std::size_t>(k - 1);
      o.item(d.named.generators().size() == gens && d.named.relators().size() == rels,
             "derived " + map + " kernel of MkVB" + nk(n, k) + " has " + std::to_string(d.named.generators().size()) +
                 " generators and " + std::to_string(d.named.relators().size()) + " relators, expected " +
                 std::to_string(gens) + " and " + std::to_string(rels));
    }
    auto cor = compare_kernel("MkVB", n, k, map, default_dictionary(map), corrected);
    o.item(cor.ok, cor.name + " (non-gating)", false);
  }
  auto d = derive("MkVB", 4, 2, map);
  o.item(d.table.degree() == 24, map + " on MkVB(4,2): index " + std::to_string(d.table.degree()));
  auto got = abelianization(d.named), want = abelianization(build(claimed, 4, 2).presentation);
  o.item(got == want, "abelianization of derived kernel " + got.str() + " vs " + claimed + "(4,2) " + want.str());
  auto full = compare_kernel("MkVB", 4, 2, map, default_dictionary(map), claimed);
  o.item(full.ok, full.name + " (non-gating)", false);
}

// 2. Pure kernel against the stated presentation.
Outcome pure_kernel() {
  Outcome o;
  kernel_match(o, "phi", "MkVP-claimed", "MkVP-corrected");
  return o;
}

// 3. Semi-pure kernel against the stated presentation; (3,1) is VH_3.
Outcome semipure_kernel() {
  Outcome o;
  kernel_match(o, "psi", "MkVH-claimed", "MkVH-corrected");
  auto d = derive("MkVB", 3, 1, "psi");
  auto diff = relator_diff(d.named, build("VH", 3).presentation);
  o.item(diff.equal(), "kernel MkVB(3,1) psi vs VH(3)");
  if (!diff.equal()) o.detail(diff.str());
  return o;
}

// 4. Three-strand, two-sort kernels.
Outcome zoo() {
  Outcome o;
  auto d = derive("MkVB", 3, 2, "phi", std::string("MVP3"));
  auto triangle = relation("m1.2 m1.3 m2.3", "m2.3 m1.3 m1.2");
  bool has = false;
  for (const auto& r : d.named.relators()) has = has || r == triangle;
  o.item(d.named.generators().size() == 9 && d.named.relators().size() == 7 && has,
         "derived MVP3 has " + std::to_string(d.named.generators().size()) + " generators and " +
             std::to_string(d.named.relators().size()) + " relators including " + triangle.str() +
             ", expected 9 and 7");
  o.check(zoo_mvp3());
  o.check(zoo_mvh3());
  auto q = derive("MkVB", 3, 2, "chi3", std::string("MVQ3"));
  auto comps = support_components(q.named).size();
  o.item(comps == 3, "derived MVQ3 has " + std::to_string(comps) + " components, expected 3");
  o.check(zoo_mvq3());
  o.check(zoo_mvc3());
  return o;
}

// 5. Conjugation action of the transversal.
Outcome action_check() {
  Outcome o;
  for (const char* map : {"phi", "psi"})
    for (int k = 1; k <= 2; ++k) {
      auto d = derive("MkVB", 3, k, map);
      auto rep = verify_action(d.table, d.transversal, d.dictionary, d.images, d.degree, d.simplified.eliminations);
      std::size_t pairs = factorial(3) * d.dictionary.size();
      o.item(rep.checked == pairs && rep.mismatches.size() <= action_mismatches_allowed,
             std::string("action ") + map + " on MkVB" + nk(3, k) + ": " + std::to_string(rep.checked) + " of " +
                 std::to_string(pairs) + " pairs, " + std::to_string(rep.mismatches.size()) + " mismatches");
      if (!rep.ok()) o.detail(rep.str());
    }
  return o;
}

// 6. Abelianization oracles.
Outcome abelian_oracles() {
  Outcome o;
  auto expect = [&](const Presentation& p, const std::string& label, AbelianInvariants want) {
    auto m = relation_matrix(p);
    auto s = smith_normal_form(m);
    bool verified = verify_smith(m, s);
    auto got = abelianization(p);
    o.item(verified && got == want,
           label + " -> " + got.str() + ", expected " + want.str() + (verified ? "" : " (L*m*R != D)"));
  };
  expect(build("B", 3).presentation, "B(3)", {1, {}});
  expect(build("Y").presentation, "Y", {0, {2}});
  expect(build("MkVP-claimed", 3, 2).presentation, "MkVP-claimed(3,2)", {9, {}});
  for (int k = 1; k <= 3; ++k)
    expect(build("MkVB", 3, k).presentation, "MkVB" + nk(3, k), {1, std::vector<BigInt>(k, BigInt(2))});
  return o;
}

// 7. The rho-only map does not respect the symmetric relations.
Outcome negative_control() {
  Outcome o;
  o.check(rho_only_map_rejected(3, 2));
  return o;
}

// 8. Extra relators of the symmetric groups.
Outcome symmetric_quotients() {
  Outcome o;
  o.check(symmetric_extras("phi", 3, 2));
  o.check(symmetric_extras("psi", 3, 2));
  o.check(symmetric_abelian_triple("phi"));
  o.check(symmetric_abelian_triple("psi"));
  return o;
}

// Random transitive action of m generators on at most `points` points,
// restricted to the orbit of 0.
CosetTable random_table(std::mt19937& rng, int m, int points) {
  std::vector<std::vector<int>> perms(static_cast<std::size_t>(m));
  for (auto& p : perms) {
    p.resize(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) p[static_cast<std::size_t>(i)] = i;
    std::shuffle(p.begin(), p.end(), rng);
  }
  std::vector<int> label(static_cast<std::size_t>(points), -1), order{0};
  label[0] = 0;
  for (std::size_t q = 0; q < order.size(); ++q)
    for (const auto& p : perms)
      for (int next : {p[static_cast<std::size_t>(order[q])],
                       static_cast<int>(std::find(p.begin(), p.end(), order[q]) - p.begin())})
        if (label[static_cast<std::size_t>(next)] < 0) {
          label[static_cast<std::size_t>(next)] = static_cast<int>(order.size());
          order.push_back(next);
        }
  std::vector<GeneratorId> gens;
  std::vector<std::vector<int>> action;
  for (int g = 0; g < m; ++g) {
    gens.push_back(GeneratorId::user("g" + std::to_string(g + 1)));
    const auto& p = perms[static_cast<std::size_t>(g)];
    std::vector<int> fwd(order.size()), back(order.size());
    for (std::size_t c = 0; c < order.size(); ++c) {
      int img = label[static_cast<std::size_t>(p[static_cast<std::size_t>(order[c])])];
      fwd[c] = img;
      back[static_cast<std::size_t>(img)] = static_cast<int>(c);
    }
    action.push_back(fwd);
    action.push_back(back);
  }
  return CosetTable(gens, action);
}

Word random_word(std::mt19937& rng, const std::vector<GeneratorId>& gens, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), pick(0, static_cast<int>(gens.size()) - 1), sign(0, 1);
  std::vector<Letter> ls;
  for (int i = len(rng); i > 0; --i) ls.push_back({gens[static_cast<std::size_t>(pick(rng))], sign(rng) ? 1 : -1});
  return free_reduce(ls);
}

bool prefix_closed(const Transversal& tr) {
  std::set<Word> reps(tr.reps().begin(), tr.reps().end());
  for (const auto& w : tr.reps())
    for (std::size_t i = 0; i < w.size(); ++i)
      if (!reps.count(Word(std::vector<Letter>(w.begin(), w.begin() + static_cast<long>(i))))) return false;
  return true;
}

// 9. Randomized mechanics properties.
Outcome mechanics() {
  Outcome o;
  std::mt19937 rng(property_seed);
  std::uniform_int_distribution<int> gens_d(1, 4), points_d(1, 12), nd(2, 4), kd(1, 3), coin(0, 9);

  // Transversal prefix-closure; one case in ten uses a kernel table with the
  // explicit transversal.
  int bad = 0;
  for (int c = 0; c < property_cases; ++c) {
    if (coin(rng) == 0) {
      int n = nd(rng), k = kd(rng);
      auto t = kernel_coset_table(build("MkVB", n, k).presentation, build_perm_hom(coin(rng) < 5 ? "phi" : "psi", n, k).images, n);
      auto tr = schreier_transversal(t, TransversalStrategy::lambda, n);
      bad += !(prefix_closed(tr) && is_schreier_transversal(t, tr));
    } else {
      auto t = random_table(rng, gens_d(rng), points_d(rng));
      auto tr = schreier_transversal(t, TransversalStrategy::bfs);
      bad += !(prefix_closed(tr) && is_schreier_transversal(t, tr));
    }
  }
  o.item(bad <= property_failures_allowed,
         "transversal prefix-closure: " + std::to_string(property_cases) + " cases, " + std::to_string(bad) + " failures");

  // Expanding tau(w) gives back w.
  bad = 0;
  for (int c = 0; c < property_cases; ++c) {
    auto t = random_table(rng, gens_d(rng), points_d(rng));
    auto tr = schreier_transversal(t, TransversalStrategy::bfs);
    auto u = random_word(rng, t.generators(), 12);
    auto w = concat(u, invert(tr.rep(t.trace(u))));
    bad += expand_symbols(tau_rewrite(w, t, tr), t, tr) != w;
  }
  o.item(bad <= property_failures_allowed,
         "tau round-trip: " + std::to_string(property_cases) + " cases, " + std::to_string(bad) + " failures");

  // Eliminating a generator through a relator in which it occurs once keeps
  // the abelianization.
  bad = 0;
  for (int c = 0; c < property_cases; ++c) {
    std::vector<GeneratorId> gens;
    int m = gens_d(rng) + 1;
    for (int g = 0; g < m; ++g) gens.push_back(GeneratorId::user("a" + std::to_string(g + 1)));
    std::uniform_int_distribution<int> pick(0, m - 1), count(0, 4), exp(0, 1);
    auto g = gens[static_cast<std::size_t>(pick(rng))];
    std::vector<GeneratorId> others;
    for (const auto& h : gens)
      if (h != g) others.push_back(h);
    auto left = random_word(rng, others, 6), right = random_word(rng, others, 6);
    Relator defining(concat({left, Word::of(g, exp(rng) ? 1 : -1), right}));
    std::vector<Relator> rs{defining};
    for (int i = count(rng); i > 0; --i) {
      Relator r(random_word(rng, gens, 8));
      if (!r.trivial()) rs.push_back(r);
    }
    auto p = normalised(Presentation::raw("random", gens, rs));
    auto q = eliminate_generator(p, g, defining);
    bad += abelianization(p) != abelianization(q) || q.has_generator(g);
  }
  o.item(bad <= property_failures_allowed, "elimination keeps the abelianization: " + std::to_string(property_cases) +
                                               " cases, " + std::to_string(bad) + " failures");
  return o;
}

std::set<int> parse_list(const std::string& s) {
  std::set<int> out;
  std::istringstream in(s);
  for (std::string tok; std::getline(in, tok, ',');)
    if (!tok.empty()) out.insert(std::stoi(tok));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance suite"};
  std::string expect_fail, only;
  app.add_option("--expect-fail", expect_fail, "comma-separated criteria known to fail");
  app.add_option("--only", only, "comma-separated criteria to run");
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    int id;
    const char* title;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "kernel index is n! and Todd-Coxeter reproduces the table", index_check},
      {2, "pure kernel matches the stated presentation", pure_kernel},
      {3, "semi-pure kernel matches the stated presentation", semipure_kernel},
      {4, "three-strand two-sort kernels match their stated decompositions", zoo},
      {5, "transversal acts on kernel generators as stated", action_check},
      {6, "abelianization oracles", abelian_oracles},
      {7, "rho-only map is rejected on the symmetric group", negative_control},
      {8, "symmetric extra relators rewrite to the stated families", symmetric_quotients},
      {9, "mechanics properties over randomized cases", mechanics},
  };

  auto selected = parse_list(only);
  std::set<int> failed, ran;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    ran.insert(c.id);
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.item(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > seconds_per_criterion) o.item(false, "time limit exceeded");
    if (!o.pass) failed.insert(c.id);
    std::cout << "criterion " << c.id << " " << (o.pass ? "PASS" : "FAIL") << ": " << c.title << " ["
              << std::round(secs * 100) / 100 << " s]\n";
    for (const auto& l : o.lines) std::cout << "    " << l << "\n";
    std::cout.flush();
  }

  auto expected = parse_list(expect_fail);
  std::set<int> expected_ran;
  for (int id : expected)
    if (ran.count(id)) expected_ran.insert(id);
  if (failed == expected_ran) return 0;
  std::cout << "failing set differs from the expected set\n";
  return 1;
}
