#include "mvbraid/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace mvbraid {

namespace {

Word operator*(const Word& a, const Word& b) { return concat(a, b); }
Word inv(const Word& w) { return invert(w); }

Word s(int i) { return Word::of(GeneratorId::sigma(i)); }
Word r(int i, int a = 0) { return Word::of(GeneratorId::rho(i, a)); }
Word c(int i) { return Word::of(GeneratorId::user("c" + std::to_string(i))); }
Word lam(int i, int j) { return Word::of(GeneratorId::lambda(i, j)); }
Word xx(int i, int j) { return Word::of(GeneratorId::x(i, j)); }
Word mu(int i, int j) { return Word::of(GeneratorId::mu(i, j)); }
Word y(int i, int j) { return Word::of(GeneratorId::y(i, j)); }
Word z(int i, int j) { return Word::of(GeneratorId::z(i, j)); }

Word power(const Word& w, int e) {
  Word out;
  for (int i = 0; i < e; ++i) out = out * w;
  return out;
}

Relator eq(const Word& lhs, const Word& rhs) { return relation(lhs, rhs); }
Relator comm(const Word& a, const Word& b) { return eq(a * b, b * a); }

void need(bool ok, const std::string& what) {
  if (!ok) throw CatalogError(what);
}

void need_n(int n, int lo = 2) { need(n >= lo, "n must be at least " + std::to_string(lo)); }
void need_k(int k, int lo = 1) { need(k >= lo, "k must be at least " + std::to_string(lo)); }

std::vector<GeneratorId> mkvb_generators(int n, int k) {
  std::vector<GeneratorId> g;
  for (int i = 1; i < n; ++i) g.push_back(GeneratorId::sigma(i));
  for (int a = 0; a < k; ++a)
    for (int i = 1; i < n; ++i) g.push_back(GeneratorId::rho(i, a));
  return g;
}

std::vector<Relator> mkvb_relators(int n, int k) {
  std::vector<Relator> rs;
  // Involutions.
  for (int a = 0; a < k; ++a)
    for (int i = 1; i < n; ++i) rs.push_back(Relator(power(r(i, a), 2)));
  // Far commutativity, homogeneous then mixed.
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j) rs.push_back(comm(s(i), s(j)));
  for (int a = 0; a < k; ++a)
    for (int i = 1; i < n; ++i)
      for (int j = i + 2; j < n; ++j) rs.push_back(comm(r(i, a), r(j, a)));
  for (int a = 0; a < k; ++a)
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j)
        if (std::abs(i - j) >= 2) rs.push_back(comm(s(i), r(j, a)));
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
          if (std::abs(i - j) >= 2) rs.push_back(comm(r(i, a), r(j, b)));
  // Braid relations, homogeneous then mixed.
  for (int i = 1; i + 1 < n; ++i) rs.push_back(eq(s(i) * s(i + 1) * s(i), s(i + 1) * s(i) * s(i + 1)));
  for (int a = 0; a < k; ++a)
    for (int i = 1; i + 1 < n; ++i)
      rs.push_back(eq(r(i, a) * r(i + 1, a) * r(i, a), r(i + 1, a) * r(i, a) * r(i + 1, a)));
  for (int i = 1; i + 1 < n; ++i) rs.push_back(eq(s(i) * r(i + 1) * r(i), r(i + 1) * r(i) * s(i + 1)));
  for (int b = 1; b < k; ++b)
    for (int i = 1; i + 1 < n; ++i)
      rs.push_back(eq(r(i) * r(i + 1) * r(i, b), r(i + 1, b) * r(i) * r(i + 1)));
  return rs;
}

std::vector<Relator> f1(int n, int k) {
  std::vector<Relator> rs;
  for (int a = 0; a < k; ++a)
    for (int i = 1; i + 1 < n; ++i) rs.push_back(eq(s(i) * s(i + 1) * r(i, a), r(i + 1, a) * s(i) * s(i + 1)));
  return rs;
}

std::vector<Relator> f2(int n, int k) {
  std::vector<Relator> rs;
  for (int a = 0; a < k; ++a)
    for (int i = 1; i + 1 < n; ++i) rs.push_back(eq(s(i + 1) * s(i) * r(i + 1, a), r(i, a) * s(i + 1) * s(i)));
  return rs;
}

std::vector<Relator> f3(int n, int k) {
  std::vector<Relator> rs;
  for (int i = 1; i + 1 < n; ++i) {
    for (int b = 1; b < k; ++b)
      rs.push_back(eq(r(i) * r(i + 1, b) * r(i, b), r(i + 1, b) * r(i, b) * r(i + 1)));
    for (int g = 1; g < k; ++g)
      for (int b = g + 1; b < k; ++b) {
        rs.push_back(eq(r(i, g) * r(i + 1, b) * r(i, b), r(i + 1, b) * r(i, b) * r(i + 1, g)));
        rs.push_back(eq(r(i, g) * r(i + 1, g) * r(i, b), r(i + 1, b) * r(i, g) * r(i + 1, g)));
      }
  }
  return rs;
}

std::vector<Relator> symmetric_family(const std::string& family, int n, int k) {
  std::vector<Relator> rs;
  for (int i = 1; i + 1 < n; ++i) {
    if (family == "sigma")
      for (int a = 1; a < k; ++a) rs.push_back(eq(s(i) * r(i + 1, a) * r(i, a), r(i + 1, a) * r(i, a) * s(i + 1)));
    if (family == "aab")
      for (int a = 1; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
          rs.push_back(eq(r(i, a) * r(i + 1, a) * r(i, b), r(i + 1, b) * r(i, a) * r(i + 1, a)));
    if (family == "abb")
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
          rs.push_back(eq(r(i, a) * r(i + 1, b) * r(i, b), r(i + 1, b) * r(i, b) * r(i + 1, a)));
  }
  return rs;
}

// Relations added to M_kVB_n in the symmetric group.
std::vector<Relator> symmetric_extra(int n, int k) {
  std::vector<Relator> rs;
  for (const char* f : {"sigma", "aab", "abb"}) {
    auto part = symmetric_family(f, n, k);
    rs.insert(rs.end(), part.begin(), part.end());
  }
  return rs;
}

std::vector<Relator> concat_relators(std::vector<Relator> a, const std::vector<Relator>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<Relator> braid_relators(int n) {
  std::vector<Relator> rs;
  for (int i = 1; i + 1 < n; ++i) rs.push_back(eq(s(i) * s(i + 1) * s(i), s(i + 1) * s(i) * s(i + 1)));
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j) rs.push_back(comm(s(i), s(j)));
  return rs;
}

Presentation coxeter(int n) {
  std::vector<GeneratorId> g;
  std::vector<Relator> rs;
  for (int i = 1; i < n; ++i) g.push_back(GeneratorId::rho(i));
  for (int i = 1; i < n; ++i) rs.push_back(Relator(power(r(i), 2)));
  for (int i = 1; i + 1 < n; ++i) rs.push_back(Relator(power(r(i) * r(i + 1), 3)));
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j) rs.push_back(Relator(power(r(i) * r(j), 2)));
  return Presentation("S", g, rs);
}

Presentation flat_virtual_braid(int n) {
  std::vector<GeneratorId> g;
  for (int i = 1; i < n; ++i) g.push_back(GeneratorId::rho(i));
  for (int i = 1; i < n; ++i) g.push_back(GeneratorId::user("c" + std::to_string(i)));
  std::vector<Relator> rs;
  for (int i = 1; i < n; ++i) rs.push_back(Relator(power(r(i), 2)));
  for (int i = 1; i < n; ++i) rs.push_back(Relator(power(c(i), 2)));
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      rs.push_back(comm(r(i), r(j)));
      rs.push_back(comm(c(i), c(j)));
    }
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (std::abs(i - j) >= 2) rs.push_back(comm(c(i), r(j)));
  for (int i = 1; i + 1 < n; ++i) {
    rs.push_back(eq(r(i) * r(i + 1) * r(i), r(i + 1) * r(i) * r(i + 1)));
    rs.push_back(eq(c(i) * c(i + 1) * c(i), c(i + 1) * c(i) * c(i + 1)));
    rs.push_back(eq(r(i) * r(i + 1) * c(i), c(i + 1) * r(i) * r(i + 1)));
  }
  return Presentation("FVB", g, rs);
}

// Kernel generator families.  make(i, j, a) returns the word for the
// generator with those indices (a >= 1 families use the inverse convention).
using Maker = std::function<Word(int, int, int)>;

std::vector<GeneratorId> kernel_generators(int n, int k, GeneratorId (*id)(int, int, int)) {
  std::vector<GeneratorId> g;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) g.push_back(id(i, j, 0));
  for (int b = 1; b < k; ++b)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) g.push_back(id(i, j, b));
  return g;
}

// Commuting pairs of generators on four distinct indices.
std::vector<Relator> far_commutators(const std::vector<GeneratorId>& gens) {
  std::vector<Relator> rs;
  for (std::size_t p = 0; p < gens.size(); ++p)
    for (std::size_t q = p + 1; q < gens.size(); ++q) {
      const auto &g = gens[p], &h = gens[q];
      int a = g.index(0), b = g.index(1), c = h.index(0), d = h.index(1);
      if (a == c || a == d || b == c || b == d) continue;
      rs.push_back(comm(Word::of(g), Word::of(h)));
    }
  return rs;
}

template <class F>
void for_distinct_triples(int n, F f) {
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (i != j && j != k && i != k) f(i, j, k);
}

// l(ij) l(ik) l(jk) = l(jk) l(ik) l(ij), the orientation the rewriting
// process produces.
Relator triangle(const Maker& g, int i, int j, int k, int a) {
  return eq(g(i, j, a) * g(i, k, a) * g(j, k, a), g(j, k, a) * g(i, k, a) * g(i, j, a));
}

// As stated: l(ik) l(jk) l(ij) = l(ij) l(jk) l(ik).
Relator stated_triangle(const Maker& g, int i, int j, int k, int a) {
  return eq(g(i, k, a) * g(j, k, a) * g(i, j, a), g(i, j, a) * g(j, k, a) * g(i, k, a));
}

Presentation claimed_pure(int n, int k, bool corrected) {
  auto gens = kernel_generators(n, k, [](int i, int j, int a) { return GeneratorId::lambda(i, j, a); });
  auto rs = far_commutators(gens);
  Maker L = [](int i, int j, int a) { return lambda_word(i, j, a); };
  auto tri = corrected ? triangle : stated_triangle;
  for_distinct_triples(n, [&](int i, int j, int kk) { rs.push_back(tri(L, i, j, kk, 0)); });
  for (int b = 1; b < k; ++b)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int kk = j + 1; kk <= n; ++kk) rs.push_back(tri(L, i, j, kk, b));
  return Presentation(corrected ? "MkVP-corrected" : "MkVP-claimed", gens, rs);
}

Presentation claimed_semipure(int n, int k, bool corrected) {
  auto gens = kernel_generators(n, k, [](int i, int j, int a) { return GeneratorId::x(i, j, a); });
  auto rs = far_commutators(gens);
  Maker X = [](int i, int j, int a) { return x_word(i, j, a); };
  auto tri = corrected ? triangle : stated_triangle;
  for_distinct_triples(n, [&](int i, int j, int kk) {
    rs.push_back(eq(X(i, kk, 0) * X(kk, j, 0) * X(i, kk, 0), X(kk, j, 0) * X(i, kk, 0) * X(kk, j, 0)));
  });
  for (int b = 1; b < k; ++b)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int kk = j + 1; kk <= n; ++kk) rs.push_back(tri(X, i, j, kk, b));
  return Presentation(corrected ? "MkVH-corrected" : "MkVH-claimed", gens, rs);
}

Presentation virtual_pure(int n) {
  auto gens = kernel_generators(n, 1, [](int i, int j, int a) { return GeneratorId::lambda(i, j, a); });
  auto rs = far_commutators(gens);
  for_distinct_triples(n, [&](int i, int j, int k) {
    rs.push_back(eq(lam(k, i) * lam(k, j) * lam(i, j), lam(i, j) * lam(k, j) * lam(k, i)));
  });
  return Presentation("VP", gens, rs);
}

Presentation virtual_semipure(int n) {
  auto gens = kernel_generators(n, 1, [](int i, int j, int a) { return GeneratorId::x(i, j, a); });
  auto rs = far_commutators(gens);
  for_distinct_triples(n, [&](int i, int j, int k) {
    rs.push_back(eq(xx(i, k) * xx(k, j) * xx(i, k), xx(k, j) * xx(i, k) * xx(k, j)));
  });
  return Presentation("VH", gens, rs);
}

// VP_n modulo lambda(j,i) = lambda(i,j)^-1.
Presentation flat_virtual_pure(int n) {
  auto vp = virtual_pure(n);
  std::vector<GeneratorId> gens;
  WordMap images;
  for (const auto& g : vp.generators()) {
    int i = g.index(0), j = g.index(1);
    if (i < j) {
      gens.push_back(g);
      images[g] = Word::of(g);
    } else {
      images[g] = inv(lam(j, i));
    }
  }
  std::vector<Relator> rs;
  for (const auto& rel : vp.relators()) rs.emplace_back(substitute(rel.word(), images));
  return Presentation("FVP", gens, rs);
}

// The six braid-type x relations of the three-strand semi-pure kernels, as
// printed (the last one included).
std::vector<Relator> three_strand_x_relators() {
  return {
      eq(xx(1, 2) * xx(2, 3) * xx(1, 2), xx(2, 3) * xx(1, 2) * xx(2, 3)),
      eq(xx(2, 1) * xx(1, 3) * xx(2, 1), xx(1, 3) * xx(2, 1) * xx(1, 3)),
      eq(xx(1, 3) * xx(3, 2) * xx(1, 3), xx(3, 2) * xx(1, 3) * xx(3, 2)),
      eq(xx(3, 1) * xx(1, 2) * xx(3, 1), xx(1, 2) * xx(3, 1) * xx(1, 2)),
      eq(xx(2, 3) * xx(3, 1) * xx(2, 3), xx(3, 1) * xx(2, 3) * xx(3, 1)),
      eq(xx(3, 2) * xx(2, 1) * xx(3, 2), xx(1, 3) * xx(2, 1) * xx(1, 3)),
  };
}

std::vector<GeneratorId> three_strand_x_generators() {
  return {GeneratorId::x(1, 2), GeneratorId::x(2, 3), GeneratorId::x(1, 3),
          GeneratorId::x(2, 1), GeneratorId::x(3, 2), GeneratorId::x(3, 1)};
}

std::vector<GeneratorId> ids(std::initializer_list<Word> ws) {
  std::vector<GeneratorId> g;
  for (const auto& w : ws) g.push_back(w[0].gen);
  return g;
}

Presentation mvp3() {
  return Presentation("MVP3",
                      ids({lam(1, 2), lam(2, 1), lam(1, 3), lam(3, 1), lam(2, 3), lam(3, 2), mu(1, 2), mu(1, 3),
                           mu(2, 3)}),
                      std::vector<Relator>{
                          eq(lam(1, 2) * lam(3, 2) * lam(1, 3), lam(1, 3) * lam(3, 2) * lam(1, 2)),
                          eq(lam(2, 1) * lam(3, 1) * lam(2, 3), lam(2, 3) * lam(3, 1) * lam(2, 1)),
                          eq(lam(1, 3) * lam(2, 3) * lam(1, 2), lam(1, 2) * lam(2, 3) * lam(1, 3)),
                          eq(lam(3, 1) * lam(2, 1) * lam(3, 2), lam(3, 2) * lam(2, 1) * lam(3, 1)),
                          eq(lam(2, 3) * lam(1, 3) * lam(2, 1), lam(2, 1) * lam(1, 3) * lam(2, 3)),
                          eq(lam(3, 2) * lam(1, 2) * lam(3, 1), lam(3, 1) * lam(1, 2) * lam(3, 2)),
                          eq(mu(1, 2) * mu(1, 3) * mu(2, 3), mu(2, 3) * mu(1, 3) * mu(1, 2)),
                      });
}

Presentation mvh3() {
  auto g = three_strand_x_generators();
  for (auto id : ids({z(1, 2), z(1, 3), z(2, 3)})) g.push_back(id);
  auto rs = three_strand_x_relators();
  rs.push_back(eq(z(1, 2) * z(1, 3) * z(2, 3), z(2, 3) * z(1, 3) * z(1, 2)));
  return Presentation("MVH3", g, rs);
}

Presentation group_y() {
  return Presentation("Y", ids({y(1, 2), y(1, 3), y(2, 3)}),
                      std::vector<Relator>{
                          Relator(power(y(1, 2), 2)),
                          Relator(power(y(1, 3), 2)),
                          Relator(power(y(2, 3), 2)),
                          Relator(power(y(1, 2) * y(1, 3), 3)),
                          Relator(power(y(1, 2) * y(2, 3), 3)),
                          Relator(power(y(2, 3) * y(1, 3), 3)),
                      });
}

Presentation mvq3() {
  auto g = three_strand_x_generators();
  for (auto id : ids({y(1, 2), y(1, 3), y(2, 3)})) g.push_back(id);
  std::vector<Relator> rs{
      Relator(power(y(1, 2) * y(2, 3), 3)),
      Relator(power(y(1, 2) * y(1, 3), 3)),
      Relator(power(y(2, 3) * y(1, 3), 3)),
  };
  for (auto& rel : three_strand_x_relators()) rs.push_back(rel);
  return Presentation("MVQ3", g, rs);
}

Presentation group_h1() {
  return Presentation("H1", ids({xx(1, 3), xx(2, 1), xx(3, 2)}),
                      std::vector<Relator>{
                          eq(xx(2, 1) * xx(1, 3) * xx(2, 1), xx(1, 3) * xx(2, 1) * xx(1, 3)),
                          eq(xx(1, 3) * xx(3, 2) * xx(1, 3), xx(3, 2) * xx(1, 3) * xx(3, 2)),
                          eq(xx(3, 2) * xx(2, 1) * xx(3, 2), xx(1, 3) * xx(2, 1) * xx(1, 3)),
                      });
}

Presentation group_h2() {
  return Presentation("H2", ids({xx(1, 2), xx(3, 1), xx(2, 3)}),
                      std::vector<Relator>{
                          eq(xx(1, 2) * xx(2, 3) * xx(1, 2), xx(2, 3) * xx(1, 2) * xx(2, 3)),
                          eq(xx(3, 1) * xx(1, 2) * xx(3, 1), xx(1, 2) * xx(3, 1) * xx(1, 2)),
                          eq(xx(2, 3) * xx(3, 1) * xx(2, 3), xx(3, 1) * xx(2, 3) * xx(3, 1)),
                      });
}

Presentation free_product(std::string name, const std::vector<Presentation>& parts) {
  std::vector<GeneratorId> g;
  std::vector<Relator> rs;
  for (const auto& p : parts) {
    g.insert(g.end(), p.generators().begin(), p.generators().end());
    rs.insert(rs.end(), p.relators().begin(), p.relators().end());
  }
  return Presentation(std::move(name), g, rs);
}

Presentation with_extra(std::string name, const Presentation& base, const std::vector<Relator>& extra) {
  return Presentation(std::move(name), base.generators(), concat_relators(base.relators(), extra));
}

struct KeySpec {
  CatalogKey info;
  std::function<Presentation(int, int)> make;
};

const std::vector<KeySpec>& specs() {
  static const std::vector<KeySpec> all = [] {
    std::vector<KeySpec> v;
    auto add = [&](std::string key, bool un, bool uk, int mk, std::string desc, std::function<Presentation(int, int)> f) {
      v.push_back({{std::move(key), un, uk, mk, std::move(desc)}, std::move(f)});
    };
    add("B", true, false, 0, "braid group B_n", [](int n, int) { return Presentation("B", mkvb_generators(n, 0), braid_relators(n)); });
    add("S", true, false, 0, "symmetric group S_n, Coxeter presentation", [](int n, int) { return coxeter(n); });
    add("VB", true, false, 0, "virtual braid group VB_n",
        [](int n, int) { return Presentation("VB", mkvb_generators(n, 1), mkvb_relators(n, 1)); });
    add("FVB", true, false, 0, "flat virtual braid group FVB_n on rho_i and c_i",
        [](int n, int) { return flat_virtual_braid(n); });
    add("VP", true, false, 0, "virtual pure braid group VP_n", [](int n, int) { return virtual_pure(n); });
    add("VH", true, false, 0, "virtual semi-pure braid group VH_n", [](int n, int) { return virtual_semipure(n); });
    add("FVP", true, false, 0, "flat virtual pure braid group FVP_n", [](int n, int) { return flat_virtual_pure(n); });
    add("MkVB", true, true, 1, "multi-virtual braid group M_kVB_n",
        [](int n, int k) { return Presentation("MkVB", mkvb_generators(n, k), mkvb_relators(n, k)); });
    add("MkVP-claimed", true, true, 1, "stated presentation of the pure kernel M_kVP_n",
        [](int n, int k) { return claimed_pure(n, k, false); });
    add("MkVH-claimed", true, true, 1, "stated presentation of the semi-pure kernel M_kVH_n",
        [](int n, int k) { return claimed_semipure(n, k, false); });
    add("MkVP-corrected", true, true, 1, "stated pure kernel presentation with the triangle relations reoriented",
        [](int n, int k) { return claimed_pure(n, k, true); });
    add("MkVH-corrected", true, true, 1, "stated semi-pure kernel presentation with the beta triangle relations reoriented",
        [](int n, int k) { return claimed_semipure(n, k, true); });
    add("sym-MkVB", true, true, 2, "symmetric multi-virtual braid group", [](int n, int k) {
      return Presentation("sym-MkVB", mkvb_generators(n, k), concat_relators(mkvb_relators(n, k), symmetric_extra(n, k)));
    });
    add("sym-MkVP-claimed", true, true, 2, "stated presentation of the symmetric pure kernel", [](int n, int k) {
      return with_extra("sym-MkVP-claimed", claimed_pure(n, k, false), claimed_extra_relators("sym-MkVP", n, k));
    });
    add("sym-MkVH-claimed", true, true, 2, "stated presentation of the symmetric semi-pure kernel", [](int n, int k) {
      return with_extra("sym-MkVH-claimed", claimed_semipure(n, k, false), claimed_extra_relators("sym-MkVH", n, k));
    });
    add("MkWB", true, true, 1, "multi-welded braid group: M_kVB_n plus F1", [](int n, int k) {
      return Presentation("MkWB", mkvb_generators(n, k), concat_relators(mkvb_relators(n, k), f1(n, k)));
    });
    add("MkUB", true, true, 1, "multi-unrestricted braid group: M_kVB_n plus F1 and F2", [](int n, int k) {
      return Presentation("MkUB", mkvb_generators(n, k),
                          concat_relators(concat_relators(mkvb_relators(n, k), f1(n, k)), f2(n, k)));
    });
    for (const char* q : {"MkWP", "MkUP"})
      add(std::string(q) + "-claimed", true, true, 1, std::string("stated relations of ") + q + " (report only)",
          [q](int n, int k) { return with_extra(std::string(q) + "-claimed", claimed_pure(n, k, false), claimed_extra_relators(q, n, k)); });
    for (const char* q : {"MkWH", "MkUH"})
      add(std::string(q) + "-claimed", true, true, 1, std::string("stated relations of ") + q + " (report only)",
          [q](int n, int k) {
            return with_extra(std::string(q) + "-claimed", claimed_semipure(n, k, false), claimed_extra_relators(q, n, k));
          });
    add("MVP3", false, false, 0, "stated presentation of the 2-virtual pure braid group on 3 strands",
        [](int, int) { return mvp3(); });
    add("MVH3", false, false, 0, "stated relations of the 2-virtual semi-pure braid group on 3 strands",
        [](int, int) { return mvh3(); });
    add("MVQ3", false, false, 0, "stated presentation of the kernel of chi3 on 3 strands",
        [](int, int) { return mvq3(); });
    add("MVC3", false, false, 0, "stated kernel of chi4 on 3 strands as VP_3 * Y",
        [](int, int) { return free_product("MVC3", {virtual_pure(3), group_y()}); });
    add("H1", false, false, 0, "factor H_1 of the x-subgroup of MVQ3", [](int, int) { return group_h1(); });
    add("H2", false, false, 0, "factor H_2 of the x-subgroup of MVQ3", [](int, int) { return group_h2(); });
    add("Y", false, false, 0, "factor Y of MVQ3", [](int, int) { return group_y(); });
    return v;
  }();
  return all;
}

const KeySpec& spec_for(const std::string& key) {
  for (const auto& s : specs())
    if (s.info.key == key) return s;
  throw CatalogError("unknown catalog key '" + key + "'");
}

// ρ_{j-1} ... ρ_{i+1} w ρ_{i+1} ... ρ_{j-1}
Word conjugate_up(const Word& w, int i, int j) {
  Word pre, post;
  for (int m = j - 1; m > i; --m) pre = pre * r(m);
  for (int m = i + 1; m < j; ++m) post = post * r(m);
  return pre * w * post;
}

}  // namespace

Word lambda_word(int i, int j, int a) {
  if (a > 0 && i > j) return inv(Word::of(GeneratorId::lambda(j, i, a)));
  return Word::of(GeneratorId::lambda(i, j, a));
}

Word x_word(int i, int j, int a) {
  if (a > 0 && i > j) return inv(Word::of(GeneratorId::x(j, i, a)));
  return Word::of(GeneratorId::x(i, j, a));
}

const std::vector<CatalogKey>& catalog_keys() {
  static const std::vector<CatalogKey> keys = [] {
    std::vector<CatalogKey> out;
    for (const auto& s : specs()) out.push_back(s.info);
    return out;
  }();
  return keys;
}

CatalogEntry build(const std::string& key, int n, int k) {
  const auto& s = spec_for(key);
  if (s.info.uses_n) need_n(n);
  else n = 3;
  if (s.info.uses_k) need_k(k, s.info.min_k);
  else k = (s.info.uses_n ? 0 : 2);
  if (n > 8) throw CatalogError("n must be at most 8");
  CatalogEntry e;
  e.key = key;
  e.n = n;
  e.k = k;
  e.presentation = s.make(n, k);
  e.description = s.info.description;
  return e;
}

std::vector<Relator> forbidden_relators(const std::string& family, int n, int k) {
  need_n(n);
  need_k(k);
  if (family == "F1") return f1(n, k);
  if (family == "F2") return f2(n, k);
  if (family == "F3") return f3(n, k);
  throw CatalogError("unknown relator family '" + family + "'");
}

std::vector<Relator> symmetric_relators(const std::string& family, int n, int k) {
  need_n(n);
  need_k(k);
  if (family != "sigma" && family != "aab" && family != "abb")
    throw CatalogError("unknown relator family '" + family + "'");
  return symmetric_family(family, n, k);
}

std::vector<Relator> claimed_extra_relators(const std::string& key, int n, int k) {
  need_n(n);
  need_k(k);
  std::vector<Relator> rs;
  auto L = [](int i, int j, int a) { return lambda_word(i, j, a); };
  auto X = [](int i, int j, int a) { return x_word(i, j, a); };
  if (key == "sym-MkVP" || key == "sym-MkVH") {
    const bool pure = key == "sym-MkVP";
    auto G = [&](int i, int j, int a) { return pure ? L(i, j, a) : X(i, j, a); };
    for_distinct_triples(n, [&](int i, int j, int kk) {
      for (int a = 1; a < k; ++a) {
        if (pure)
          rs.push_back(eq(G(i, j, 0) * G(i, kk, a) * G(j, kk, a), G(j, kk, a) * G(i, kk, a) * G(i, j, 0)));
        else
          rs.push_back(eq(G(i, j, 0) * G(i, kk, a) * G(j, kk, a), G(i, kk, a) * G(j, kk, a) * G(i, j, 0)));
      }
      for (int a = 1; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
          rs.push_back(eq(G(i, j, a) * G(i, kk, a) * G(j, kk, b), G(j, kk, b) * G(i, kk, a) * G(i, j, a)));
    });
  } else if (key == "MkWP" || key == "MkUP") {
    for_distinct_triples(n, [&](int i, int j, int kk) {
      for (int a = 1; a < k; ++a)
        rs.push_back(eq(L(i, j, 0) * L(i, kk, 0) * L(j, kk, a), L(j, kk, a) * L(i, kk, 0) * L(i, j, 0)));
      rs.push_back(comm(L(i, j, 0), L(i, kk, 0)));
      if (key == "MkUP") {
        for (int a = 1; a < k; ++a)
          rs.push_back(eq(L(j, kk, 0) * L(i, kk, 0) * L(i, j, a), L(i, j, a) * L(i, kk, 0) * L(j, kk, 0)));
        rs.push_back(comm(L(j, kk, 0), L(i, kk, 0)));
      }
    });
  } else if (key == "MkWH" || key == "MkUH") {
    for_distinct_triples(n, [&](int i, int j, int kk) {
      for (int a = 1; a < k; ++a)
        rs.push_back(eq(X(i, kk, 0) * X(j, i, 0) * X(kk, i, a), X(i, j, a) * X(j, kk, 0) * X(i, j, 0)));
      rs.push_back(comm(X(j, kk, 0), X(i, kk, 0)));
      if (key == "MkUH")
        for (int a = 1; a < k; ++a)
          rs.push_back(eq(X(i, kk, 0) * X(kk, j, 0) * X(kk, i, a), X(j, kk, a) * X(i, j, 0) * X(j, kk, 0)));
    });
  } else {
    throw CatalogError("no claimed extra relations for '" + key + "'");
  }
  // Deduplicate through a presentation.
  return Presentation("", {}, rs).relators();
}

PermHom build_perm_hom(const std::string& key, int n, int k) {
  need_n(n);
  need_k(k);
  PermHom h;
  h.key = key;
  h.degree = n;
  auto t = [&](int i) { return Permutation::transposition(n, i, i + 1); };
  const auto e = Permutation::identity(n);
  bool sigma_moves, other_sorts_move;
  if (key == "phi") sigma_moves = true, other_sorts_move = true;
  else if (key == "psi") sigma_moves = false, other_sorts_move = true;
  else if (key == "chi3" || key == "rho-only") sigma_moves = false, other_sorts_move = false;
  else if (key == "chi4") sigma_moves = true, other_sorts_move = false;
  else throw CatalogError("unknown homomorphism '" + key + "'");
  for (int i = 1; i < n; ++i) {
    h.images[GeneratorId::sigma(i)] = sigma_moves ? t(i) : e;
    h.images[GeneratorId::rho(i)] = t(i);
    for (int a = 1; a < k; ++a) h.images[GeneratorId::rho(i, a)] = other_sorts_move ? t(i) : e;
  }
  return h;
}

WordHom build_word_hom(const std::string& key, int n, int k) {
  need_n(n);
  need_k(k);
  WordHom h;
  h.key = key;
  auto set = [&](std::string src, int sn, int sk, std::string dst, int tn, int tk) {
    h.source = std::move(src);
    h.target = std::move(dst);
    h.source_n = sn;
    h.source_k = sk;
    h.target_n = tn;
    h.target_k = tk;
  };
  if (key == "psi1") {
    set("MkVB", n, k, "VB", n, 0);
    for (int i = 1; i < n; ++i) {
      h.images[GeneratorId::sigma(i)] = s(i);
      h.images[GeneratorId::rho(i)] = r(i);
      for (int a = 1; a < k; ++a) h.images[GeneratorId::rho(i, a)] = Word();
    }
  } else if (key == "iota1") {
    set("VB", n, 0, "MkVB", n, k);
    for (int i = 1; i < n; ++i) {
      h.images[GeneratorId::sigma(i)] = s(i);
      h.images[GeneratorId::rho(i)] = r(i);
    }
  } else if (key == "psi2") {
    need_k(k, 2);
    set("MkVB", n, k, "FVB", n, 0);
    for (int i = 1; i < n; ++i) {
      h.images[GeneratorId::sigma(i)] = Word();
      h.images[GeneratorId::rho(i)] = r(i);
      h.images[GeneratorId::rho(i, 1)] = c(i);
      for (int a = 2; a < k; ++a) h.images[GeneratorId::rho(i, a)] = Word();
    }
  } else if (key == "iota2") {
    need_k(k, 2);
    set("FVB", n, 0, "MkVB", n, k);
    for (int i = 1; i < n; ++i) {
      h.images[GeneratorId::rho(i)] = r(i);
      h.images[GeneratorId::user("c" + std::to_string(i))] = r(i, 1);
    }
  } else if (key == "psi3") {
    set("MkVB", n, k + 1, "MkVB", n, k);
    for (int i = 1; i < n; ++i) {
      h.images[GeneratorId::sigma(i)] = s(i);
      for (int a = 0; a < k; ++a) h.images[GeneratorId::rho(i, a)] = r(i, a);
      h.images[GeneratorId::rho(i, k)] = Word();
    }
  } else if (key == "iota3") {
    set("MkVB", n, k, "MkVB", n, k + 1);
    for (int i = 1; i < n; ++i) {
      h.images[GeneratorId::sigma(i)] = s(i);
      for (int a = 0; a < k; ++a) h.images[GeneratorId::rho(i, a)] = r(i, a);
    }
  } else {
    throw CatalogError("unknown homomorphism '" + key + "'");
  }
  return h;
}

HomSpec build_hom(const std::string& key, int n, int k) {
  if (key == "phi" || key == "psi" || key == "chi3" || key == "chi4" || key == "rho-only")
    return build_perm_hom(key, n, k);
  return build_word_hom(key, n, k);
}

Dictionary build_dictionary(const std::string& key, int n, int k) {
  Dictionary d;
  auto add = [&](const Word& name, const Word& w) { d.push_back({name[0].gen, w}); };
  if (key == "MkVP" || key == "MkVH" || key == "VP" || key == "VH") {
    need_n(n);
    const bool pure = key == "MkVP" || key == "VP";
    if (key == "VP" || key == "VH") k = 1;
    need_k(k);
    // Base words on adjacent strands.
    auto up = [&](int i, int a) -> Word {
      if (a > 0) return r(i) * r(i, a);
      if (pure) return r(i) * inv(s(i));
      return key == "VH" ? s(i) : inv(s(i));
    };
    auto down = [&](int i) -> Word {
      if (pure) return inv(s(i)) * r(i);
      return r(i) * up(i, 0) * r(i);
    };
    auto id = [&](int i, int j, int a) { return pure ? GeneratorId::lambda(i, j, a) : GeneratorId::x(i, j, a); };
    auto entry = [&](int i, int j, int a) -> Word {
      if (i < j) return conjugate_up(up(i, a), i, j);
      return conjugate_up(down(j), j, i);
    };
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j) d.push_back({id(i, j, 0), entry(i, j, 0)});
    for (int b = 1; b < k; ++b)
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) d.push_back({id(i, j, b), entry(i, j, b)});
    return d;
  }
  auto t = [](int i) { return r(i, 1); };
  auto lambdas = [&] {
    add(lam(1, 2), r(1) * inv(s(1)));
    add(lam(2, 1), inv(s(1)) * r(1));
    add(lam(1, 3), r(2) * r(1) * inv(s(1)) * r(2));
    add(lam(3, 1), r(2) * inv(s(1)) * r(1) * r(2));
    add(lam(2, 3), r(2) * inv(s(2)));
    add(lam(3, 2), inv(s(2)) * r(2));
  };
  auto xs = [&] {
    add(xx(1, 2), s(1));
    add(xx(2, 3), s(2));
    add(xx(1, 3), r(2) * s(1) * r(2));
    add(xx(2, 1), r(1) * s(1) * r(1));
    add(xx(3, 2), r(2) * s(2) * r(2));
    add(xx(3, 1), r(2) * r(1) * s(1) * r(1) * r(2));
  };
  auto ys = [&] {
    add(y(1, 2), t(1));
    add(y(2, 3), t(2));
    add(y(1, 3), r(2) * t(1) * r(2));
    add(y(2, 1), r(1) * t(1) * r(1));
    add(y(3, 2), r(2) * t(2) * r(2));
    add(y(3, 1), r(2) * r(1) * t(1) * r(1) * r(2));
  };
  if (key == "MVP3") {
    lambdas();
    add(mu(1, 2), r(1) * t(1));
    add(mu(1, 3), r(2) * r(1) * t(1) * r(2));
    add(mu(2, 3), r(2) * t(2));
  } else if (key == "MVH3") {
    xs();
    add(z(1, 2), r(1) * t(1));
    add(z(2, 3), r(2) * t(2));
    add(z(1, 3), r(2) * r(1) * t(1) * r(2));
  } else if (key == "MVQ3") {
    xs();
    ys();
  } else if (key == "MVC3") {
    lambdas();
    ys();
  } else {
    throw CatalogError("no dictionary for '" + key + "'");
  }
  return d;
}

}  // namespace mvbraid
