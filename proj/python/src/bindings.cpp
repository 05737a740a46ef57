#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mvbraid/checks.hpp"
#include "mvbraid/invariants.hpp"
#include "mvbraid/json_io.hpp"
#include "mvbraid/pipeline.hpp"

namespace py = pybind11;
using namespace mvbraid;

namespace {

std::vector<std::string> generator_names(const Presentation& p) {
  std::vector<std::string> out;
  for (const auto& g : p.generators()) out.push_back(g.str());
  return out;
}

std::vector<std::string> relator_words(const Presentation& p) {
  std::vector<std::string> out;
  for (const auto& r : p.relators()) out.push_back(r.str());
  return out;
}

Presentation from_lists(const std::string& name, const std::vector<std::string>& gens,
                        const std::vector<std::string>& rels) {
  std::vector<GeneratorId> gs;
  for (const auto& g : gens) gs.push_back(parse_generator(g));
  std::vector<Relator> rs;
  for (const auto& r : rels) rs.push_back(Relator::parse(r));
  auto p = Presentation::raw(name, gs, rs);
  auto rep = validate(p);
  if (!rep.ok()) throw std::invalid_argument(rep.str());
  return normalised(p);
}

py::dict check_dict(const CheckResult& c) {
  py::dict d;
  d["name"] = c.name;
  d["ok"] = c.ok;
  d["detail"] = c.detail;
  return d;
}

TransversalStrategy strategy(const std::string& s) {
  if (s == "lambda") return TransversalStrategy::lambda;
  if (s == "bfs") return TransversalStrategy::bfs;
  throw std::invalid_argument("transversal must be 'lambda' or 'bfs'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finitely presented groups of multi-virtual braids";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CatalogError>(m, "CatalogError", PyExc_ValueError);
  py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);
  py::register_exception<NotWellDefined>(m, "NotWellDefined", PyExc_ValueError);

  py::class_<Presentation>(m, "Presentation")
      .def(py::init(&from_lists), py::arg("name"), py::arg("generators"), py::arg("relators"))
      .def_property_readonly("name", &Presentation::name)
      .def_property_readonly("generators", &generator_names)
      .def_property_readonly("relators", &relator_words)
      .def("to_json", [](const Presentation& p) { return presentation_to_json(p); })
      .def_static("from_json", [](const std::string& s) { return normalised(presentation_from_json(s)); })
      .def("__str__", &to_text)
      .def("__repr__", [](const Presentation& p) {
        return "<Presentation " + p.name() + ": " + std::to_string(p.generators().size()) + " generators, " +
               std::to_string(p.relators().size()) + " relators>";
      })
      .def("__eq__", [](const Presentation& a, const Presentation& b) { return a == b; });

  py::class_<AbelianInvariants>(m, "AbelianInvariants")
      .def_readonly("rank", &AbelianInvariants::rank)
      .def_property_readonly("torsion",
                             [](const AbelianInvariants& a) {
                               std::vector<std::string> out;
                               for (const auto& t : a.torsion) out.push_back(t.str());
                               return out;
                             })
      .def("__str__", &AbelianInvariants::str)
      .def("__repr__", [](const AbelianInvariants& a) { return "<AbelianInvariants " + a.str() + ">"; })
      .def("__eq__", [](const AbelianInvariants& a, const AbelianInvariants& b) { return a == b; });

  m.def("catalog_keys", [] {
    std::vector<std::string> out;
    for (const auto& k : catalog_keys()) out.push_back(k.key);
    return out;
  });
  m.def("build", [](const std::string& key, int n, int k) { return build(key, n, k).presentation; }, py::arg("key"),
        py::arg("n") = 0, py::arg("k") = 0);

  m.def("free_reduce", [](const std::string& w) { return Word::parse(w).str(); }, py::arg("word"));
  m.def("invert", [](const std::string& w) { return invert(Word::parse(w)).str(); }, py::arg("word"));
  m.def("canonical_relator", [](const std::string& w) { return Relator::parse(w).str(); }, py::arg("word"));

  m.def(
      "index",
      [](const std::string& group, int n, int k, const std::string& map) {
        auto e = build(group, n, k);
        auto h = build_perm_hom(map, e.n, e.k > 0 ? e.k : 1);
        return kernel_coset_table(e.presentation, h.images, e.n).degree();
      },
      py::arg("group"), py::arg("n"), py::arg("k"), py::arg("map"));
  m.def(
      "todd_coxeter_index",
      [](const Presentation& p, const std::vector<std::string>& subgroup, std::size_t max_cosets) {
        std::vector<Word> ws;
        for (const auto& s : subgroup) ws.push_back(Word::parse(s));
        py::gil_scoped_release release;
        return todd_coxeter(p, ws, max_cosets).degree();
      },
      py::arg("presentation"), py::arg("subgroup") = std::vector<std::string>{},
      py::arg("max_cosets") = default_max_cosets);

  m.def(
      "derive",
      [](const std::string& group, int n, int k, const std::string& map, std::optional<std::string> dictionary,
         const std::string& transversal, const std::string& stage) {
        DeriveOptions opts;
        opts.transversal = strategy(transversal);
        Derivation d;
        {
          py::gil_scoped_release release;
          d = derive(group, n, k, map, dictionary, opts);
        }
        if (stage == "raw") return d.raw;
        if (stage == "simplified") return d.simplified.presentation;
        if (stage == "named") return d.named;
        throw std::invalid_argument("stage must be 'raw', 'simplified' or 'named'");
      },
      py::arg("group"), py::arg("n"), py::arg("k"), py::arg("map"), py::arg("dictionary") = py::none(),
      py::arg("transversal") = "lambda", py::arg("stage") = "named");

  m.def("simplify", [](const Presentation& p, int budget) { return simplify(p, budget).presentation; },
        py::arg("presentation"), py::arg("budget") = default_budget);
  m.def("abelianization", &abelianization, py::arg("presentation"));
  m.def(
      "compare",
      [](const Presentation& a, const Presentation& b) {
        auto d = relator_diff(a, b);
        return py::make_tuple(d.equal(), d.str());
      },
      py::arg("left"), py::arg("right"));
  m.def(
      "components",
      [](const Presentation& p) { return support_components(p); }, py::arg("presentation"));

  m.def("verify_all", [](int n, int k) {
    std::vector<CheckResult> rs;
    {
      py::gil_scoped_release release;
      rs = verify_all(n, k);
    }
    py::list out;
    for (const auto& c : rs) out.append(check_dict(c));
    return out;
  });
  m.def("verify_action", [](const std::string& map, int n, int k) { return check_dict(action(map, n, k)); },
        py::arg("map"), py::arg("n"), py::arg("k"));
  m.def(
      "verify_hom",
      [](const std::string& hom, const std::string& group, int n, int k) {
        return check_dict(hom_well_defined(hom, group, n, k));
      },
      py::arg("hom"), py::arg("group"), py::arg("n"), py::arg("k"));
}
