#include "mvbraid/json_io.hpp"

#include "json.hpp"

namespace mvbraid {

using json = nlohmann::ordered_json;

namespace {

std::string word_text(const Word& w) { return w.empty() ? "1" : w.str(); }

json relator_list(const std::vector<Relator>& rs) {
  json a = json::array();
  for (const auto& r : rs) a.push_back(word_text(r.word()));
  return a;
}

json generator_list(const std::vector<GeneratorId>& gs) {
  json a = json::array();
  for (const auto& g : gs) a.push_back(g.str());
  return a;
}

}  // namespace

std::string presentation_to_json(const Presentation& p, int indent) {
  json j;
  j["name"] = p.name();
  j["generators"] = generator_list(p.generators());
  j["relators"] = relator_list(p.relators());
  return j.dump(indent);
}

Presentation presentation_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("generators") || !j.contains("relators"))
    throw ParseError("presentation JSON needs generators and relators");
  std::vector<GeneratorId> gens;
  std::vector<Relator> rels;
  try {
    for (const auto& g : j.at("generators")) gens.push_back(parse_generator(g.get<std::string>()));
    for (const auto& r : j.at("relators")) rels.push_back(Relator::parse(r.get<std::string>()));
  } catch (const json::type_error& e) {
    throw ParseError(std::string("presentation JSON: ") + e.what());
  }
  return Presentation::raw(j.value("name", std::string()), std::move(gens), std::move(rels));
}

std::string coset_table_to_json(const CosetTable& t, int indent) {
  json j;
  j["degree"] = t.degree();
  j["generators"] = generator_list(t.generators());
  json action = json::object();
  for (std::size_t g = 0; g < t.generators().size(); ++g) {
    action[t.generators()[g].str()] = t.columns()[2 * g];
    action[t.generators()[g].str() + "^-1"] = t.columns()[2 * g + 1];
  }
  j["action"] = action;
  return j.dump(indent);
}

std::string diff_to_json(const RelatorDiff& d, int indent) {
  json j;
  j["equal"] = d.equal();
  j["generators_only_left"] = generator_list(d.generators_only_left);
  j["generators_only_right"] = generator_list(d.generators_only_right);
  j["relators_only_left"] = relator_list(d.only_left);
  j["relators_only_right"] = relator_list(d.only_right);
  return j.dump(indent);
}

std::string abelian_to_json(const AbelianInvariants& a, int indent) {
  json j;
  j["rank"] = a.rank;
  json t = json::array();
  for (const auto& d : a.torsion) t.push_back(d.str());
  j["torsion"] = t;
  j["group"] = a.str();
  return j.dump(indent);
}

std::string well_defined_to_json(const WellDefinedReport& r, int indent) {
  json j;
  j["ok"] = r.ok();
  j["checked"] = r.checked;
  json f = json::array();
  for (const auto& x : r.failures) f.push_back({{"relator", word_text(x.relator.word())}, {"image", x.image.str()}});
  j["failures"] = f;
  return j.dump(indent);
}

std::string retraction_to_json(const RetractionReport& r, int indent) {
  json j;
  j["ok"] = r.ok();
  j["checked"] = r.checked;
  json f = json::array();
  for (const auto& x : r.failures) f.push_back({{"generator", x.gen.str()}, {"image", word_text(x.image)}});
  j["failures"] = f;
  return j.dump(indent);
}

std::string action_to_json(const ActionReport& r, int indent) {
  json j;
  j["ok"] = r.ok();
  j["checked"] = r.checked;
  json f = json::array();
  for (const auto& m : r.mismatches)
    f.push_back({{"conjugator", word_text(m.conjugator)},
                 {"generator", m.gen.str()},
                 {"expected", m.expected},
                 {"why", m.why}});
  j["mismatches"] = f;
  return j.dump(indent);
}

}  // namespace mvbraid
