#include "mvbraid/checks.hpp"

#include <set>
#include <sstream>

#include "mvbraid/homomorphism.hpp"
#include "mvbraid/invariants.hpp"

namespace mvbraid {

namespace {

std::string tag(const std::string& key, int n, int k) {
  return key + "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

std::string indent(const std::string& text) {
  std::ostringstream os;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) os << "  " << line << "\n";
  return os.str();
}

// Renames the lambda generators of p (all with alpha = 0) to family f.
Presentation lambda_as(const Presentation& p, Family f, std::string name) {
  std::map<GeneratorId, GeneratorId> names;
  for (const auto& g : p.generators()) {
    int i = g.index(0), j = g.index(1);
    names[g] = f == Family::mu ? GeneratorId::mu(i, j) : f == Family::z ? GeneratorId::z(i, j) : GeneratorId::y(i, j);
  }
  return relabel(p, names).renamed(std::move(name));
}

Presentation only_family(const Presentation& p, Family f) {
  std::vector<GeneratorId> gens;
  for (const auto& g : p.generators())
    if (g.family() == f) gens.push_back(g);
  std::vector<Relator> rs;
  for (const auto& r : p.relators()) {
    bool inside = true;
    for (const auto& l : r.word()) inside = inside && l.gen.family() == f;
    if (inside) rs.push_back(r);
  }
  return Presentation(p.name(), gens, rs);
}

CheckResult components(std::string name, const Presentation& derived, const std::vector<Presentation>& factors) {
  auto rep = match_components(derived, factors);
  return {std::move(name), rep.ok(), indent(rep.str())};
}

}  // namespace

CheckResult compare_kernel(const std::string& group, int n, int k, const std::string& map,
                           const std::string& dictionary, const std::string& against) {
  CheckResult c;
  c.name = "kernel " + tag(group, n, k) + " " + map + " vs " + tag(against, n, k);
  auto d = derive(group, n, k, map, dictionary);
  auto diff = relator_diff(d.named, build(against, n, k).presentation);
  c.ok = diff.equal();
  if (!c.ok) c.detail = indent(diff.str());
  return c;
}

CheckResult hom_well_defined(const std::string& hom, const std::string& group, int n, int k) {
  auto p = build(group, n, k).presentation;
  auto h = build_perm_hom(hom, n, k);
  auto rep = check_well_defined(p, h.images, n);
  return {"hom " + hom + " on " + tag(group, n, k), rep.ok(), rep.ok() ? "" : indent(rep.str())};
}

CheckResult rho_only_map_rejected(int n, int k) {
  auto p = build("sym-MkVB", n, k).presentation;
  auto h = build_perm_hom("rho-only", n, k);
  auto rep = check_well_defined(p, h.images, n);
  bool nontrivial = !rep.failures.empty() && !rep.failures.front().image.is_identity();
  return {"rho-only map rejected on " + tag("sym-MkVB", n, k), nontrivial, indent(rep.str())};
}

CheckResult retraction(int pair, int n, int k) {
  static const char* proj_keys[] = {"psi1", "psi2", "psi3"};
  static const char* incl_keys[] = {"iota1", "iota2", "iota3"};
  if (pair < 1 || pair > 3) throw std::invalid_argument("retraction pair must be 1, 2 or 3");
  auto proj = build_word_hom(proj_keys[pair - 1], n, k);
  auto incl = build_word_hom(incl_keys[pair - 1], n, k);
  auto src = build(incl.source, incl.source_n, incl.source_k).presentation;
  auto rep = check_retraction(proj.images, incl.images, src);
  return {std::string("retraction ") + proj_keys[pair - 1] + "." + incl_keys[pair - 1] + " on " +
              tag(incl.source, incl.source_n, incl.source_k),
          rep.ok(), rep.ok() ? "" : indent(rep.str())};
}

CheckResult word_hom(const std::string& key, int n, int k) {
  auto h = build_word_hom(key, n, k);
  auto src = build(h.source, h.source_n, h.source_k).presentation;
  auto dst = build(h.target, h.target_n, h.target_k).presentation;
  auto rep = check_word_hom(src, h.images, dst);
  return {"word hom " + key + " " + tag(h.source, h.source_n, h.source_k) + " -> " +
              tag(h.target, h.target_n, h.target_k),
          rep.ok(), rep.ok() ? "" : indent(rep.str())};
}

CheckResult action(const std::string& map, int n, int k) {
  auto d = derive("MkVB", n, k, map);
  auto rep = verify_action(d.table, d.transversal, d.dictionary, d.images, d.degree, d.simplified.eliminations);
  std::ostringstream name;
  name << "action " << map << " on " << tag("MkVB", n, k) << " (" << rep.checked << " pairs)";
  return {name.str(), rep.ok(), rep.ok() ? "" : indent(rep.str())};
}

CheckResult zoo_mvp3() { return compare_kernel("MkVB", 3, 2, "phi", "MVP3", "MVP3"); }

CheckResult zoo_mvh3() {
  auto d = derive("MkVB", 3, 2, "psi", std::string("MVH3"));
  return components("kernel MkVB(3,2) psi as VH3 * FVP3", d.named,
                    {build("VH", 3).presentation, lambda_as(build("FVP", 3).presentation, Family::z, "FVP3[z]")});
}

CheckResult zoo_mvq3() {
  auto d = derive("MkVB", 3, 2, "chi3", std::string("MVQ3"));
  return components("kernel MkVB(3,2) chi3 as H1 * H2 * Y", d.named,
                    {build("H1").presentation, build("H2").presentation, build("Y").presentation});
}

CheckResult zoo_mvc3() {
  auto d = derive("MkVB", 3, 2, "chi4", std::string("MVC3"));
  return components("kernel MkVB(3,2) chi4 as VP3 * Y", d.named,
                    {build("VP", 3).presentation, build("Y").presentation});
}

CheckResult symmetric_extras(const std::string& map, int n, int k) {
  const bool pure = map == "phi";
  auto d = derive("MkVB", n, k, map);
  std::vector<Relator> extras = symmetric_relators("sigma", n, k);
  for (auto& r : symmetric_relators("aab", n, k)) extras.push_back(r);
  std::set<Relator> got;
  for (auto& r : d.rewrite_conjugates(extras))
    if (!r.trivial()) got.insert(r);
  auto claimed = claimed_extra_relators(pure ? "sym-MkVP" : "sym-MkVH", n, k);
  std::set<Relator> want(claimed.begin(), claimed.end());
  CheckResult c;
  c.name = std::string("symmetric extras ") + map + " on " + tag("MkVB", n, k) + " vs claimed " +
           (pure ? "sym-MkVP" : "sym-MkVH") + " (" + std::to_string(want.size()) + " relators)";
  c.ok = got == want;
  std::ostringstream os;
  for (const auto& r : got)
    if (!want.count(r)) os << "- " << r.str() << "\n";
  for (const auto& r : want)
    if (!got.count(r)) os << "+ " << r.str() << "\n";
  c.detail = indent(os.str());
  return c;
}

CheckResult symmetric_abelian_triple(const std::string& map) {
  const bool pure = map == "phi";
  const Family f = pure ? Family::mu : Family::z;
  auto d = derive("sym-MkVB", 3, 2, map, std::string(pure ? "MVP3" : "MVH3"));
  auto sub = only_family(d.named, f);
  auto mk = [&](int i, int j) { return Word::of(pure ? GeneratorId::mu(i, j) : GeneratorId::z(i, j)); };
  std::set<Relator> have(sub.relators().begin(), sub.relators().end());
  bool commutators = true;
  for (auto [a, b] : {std::pair{mk(1, 2), mk(1, 3)}, {mk(1, 2), mk(2, 3)}, {mk(1, 3), mk(2, 3)}})
    commutators = commutators && have.count(relation(concat(a, b), concat(b, a)));
  auto ab = abelianization(sub);
  CheckResult c;
  c.name = std::string("symmetric ") + (pure ? "mu" : "z") + " triple is Z^3";
  c.ok = sub.generators().size() == 3 && commutators && ab.rank == 3 && ab.torsion.empty();
  c.detail = indent(to_text(sub) + "\nabelianization " + ab.str());
  return c;
}

std::vector<CheckResult> quotient_reports(int n, int k) {
  std::vector<CheckResult> out;
  for (const char* q : {"W", "U"})
    for (auto [map, kernel] : {std::pair{"phi", "P"}, {"psi", "H"}}) {
      std::string group = std::string("Mk") + q + "B", against = std::string("Mk") + q + kernel + "-claimed";
      try {
        out.push_back(compare_kernel(group, n, k, map, std::string("Mk") + "V" + kernel, against));
      } catch (const NotWellDefined& e) {
        out.push_back({"kernel " + tag(group, n, k) + " " + map + " vs " + tag(against, n, k), false,
                       indent(std::string(map) + " is not defined on " + group + ": " + e.what())});
      }
    }
  return out;
}

std::vector<CheckResult> verify_all(int n, int k) {
  std::vector<CheckResult> out;
  for (const char* h : {"phi", "psi", "chi3", "chi4"}) out.push_back(hom_well_defined(h, "MkVB", n, k));
  if (k >= 2) {
    out.push_back(hom_well_defined("phi", "sym-MkVB", n, k));
    out.push_back(hom_well_defined("psi", "sym-MkVB", n, k));
    if (n >= 3) out.push_back(rho_only_map_rejected(n, k));
  }
  out.push_back(retraction(1, n, k));
  if (k >= 2) out.push_back(retraction(2, n, k));
  out.push_back(retraction(3, n, k));
  for (const char* h : {"psi1", "iota1", "psi3", "iota3"}) out.push_back(word_hom(h, n, k));
  if (k >= 2)
    for (const char* h : {"psi2", "iota2"}) out.push_back(word_hom(h, n, k));
  out.push_back(action("phi", n, k));
  out.push_back(action("psi", n, k));
  out.push_back(compare_kernel("MkVB", n, k, "phi", "MkVP", "MkVP-claimed"));
  out.push_back(compare_kernel("MkVB", n, k, "psi", "MkVH", "MkVH-claimed"));
  if (n == 3 && k == 2) {
    out.push_back(zoo_mvp3());
    out.push_back(zoo_mvh3());
    out.push_back(zoo_mvq3());
    out.push_back(zoo_mvc3());
  }
  if (k >= 2 && n >= 3) {
    out.push_back(symmetric_extras("phi", n, k));
    out.push_back(symmetric_extras("psi", n, k));
  }
  if (n == 3 && k == 2) {
    out.push_back(symmetric_abelian_triple("phi"));
    out.push_back(symmetric_abelian_triple("psi"));
  }
  return out;
}

}  // namespace mvbraid
