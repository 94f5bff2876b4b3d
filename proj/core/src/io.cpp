#include "orbitdata/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "orbitdata/errors.hpp"

namespace orbitdata {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON document");
  return j;
}

PresetGroup group_from_json(const json& j, int order_cap) {
  if (j.is_string()) return preset_group(j.get<std::string>(), order_cap);
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw ParseError("group spec must be an object with a \"type\" field");
  std::string type = j["type"].get<std::string>();
  if (type == "preset") {
    if (!j.contains("name") || !j["name"].is_string())
      throw ParseError("preset spec needs a \"name\" string");
    return preset_group(j["name"].get<std::string>(), order_cap);
  }
  if (type == "permutation") {
    if (!j.contains("degree") || !j["degree"].is_number_integer())
      throw ParseError("permutation spec needs an integer \"degree\"");
    if (!j.contains("generators") || !j["generators"].is_array())
      throw ParseError("permutation spec needs a \"generators\" array");
    int degree = j["degree"].get<int>();
    std::vector<std::vector<int>> gens;
    for (const auto& g : j["generators"]) {
      if (!g.is_array()) throw ParseError("each generator must be an array of images");
      gens.push_back(g.get<std::vector<int>>());
    }
    PresetGroup pg;
    pg.group = build_from_permutations(degree, gens, order_cap);
    for (size_t i = 0; i < gens.size(); ++i)
      pg.generator_names["g" + std::to_string(i + 1)] = pg.group->generator_elements()[i];
    return pg;
  }
  if (type == "cyclic_product") {
    if (!j.contains("orders") || !j["orders"].is_array())
      throw ParseError("cyclic_product spec needs an \"orders\" array");
    std::vector<int> orders = j["orders"].get<std::vector<int>>();
    PresetGroup pg;
    pg.group = build_cyclic_product(orders, order_cap);
    static const char* names[] = {"x", "y", "z", "w"};
    for (size_t i = 0; i < orders.size(); ++i) {
      std::string nm = i < 4 ? names[i] : "g" + std::to_string(i + 1);
      pg.generator_names[nm] = pg.group->factor_generators()[i];
    }
    return pg;
  }
  if (type == "table") {
    if (!j.contains("order") || !j["order"].is_number_integer())
      throw ParseError("table spec needs an integer \"order\"");
    if (!j.contains("mul") || !j["mul"].is_array())
      throw ParseError("table spec needs a row-major \"mul\" array");
    PresetGroup pg;
    pg.group = build_from_table(j["order"].get<int>(), j["mul"].get<std::vector<int>>(), order_cap);
    return pg;
  }
  throw ParseError("unknown group spec type: " + type);
}

}  // namespace

PresetGroup group_from_spec(const std::string& json_text, int order_cap) {
  return group_from_json(parse_json(json_text), order_cap);
}

PresetGroup group_from_spec_file(const std::string& path, int order_cap) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spec file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return group_from_spec(ss.str(), order_cap);
}

HomSpec hom_from_spec_file(const std::string& path, int order_cap) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open hom spec file: " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON document");
  if (!j.is_object() || !j.contains("source") || !j.contains("target") || !j.contains("images"))
    throw ParseError("hom spec needs \"source\", \"target\" and \"images\"");
  HomSpec out;
  out.source = group_from_json(j["source"], order_cap);
  out.target = group_from_json(j["target"], order_cap);
  if (!j["images"].is_array()) throw ParseError("\"images\" must be an array of words");
  std::vector<int> images;
  for (const auto& w : j["images"]) {
    if (w.is_number_integer())
      images.push_back(w.get<int>());
    else if (w.is_string())
      images.push_back(evaluate_word(out.target, w.get<std::string>()));
    else
      throw ParseError("each image must be a word or an element index");
  }
  out.hom = hom_from_generator_images(out.source.group, out.target.group, images);
  return out;
}

std::vector<int> parse_element_list(const PresetGroup& g, const std::string& comma_words) {
  std::vector<int> out;
  std::string cur;
  std::stringstream ss(comma_words);
  while (std::getline(ss, cur, ',')) {
    if (cur.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(evaluate_word(g, cur));
  }
  return out;
}

OrbitDatum parse_datum(const PresetGroup& g, const ConjClassTable& classes,
                       const std::string& comma_words) {
  return datum_from_elements(g.group, classes, parse_element_list(g, comma_words));
}

std::string class_word(const PresetGroup& g, const ConjClassTable& classes, int class_id) {
  return element_word(g, classes.rep(class_id));
}

std::string datum_to_text(const OrbitDatum& d, const PresetGroup& g,
                          const ConjClassTable& classes) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [c, k] : d.counts)
    for (long long i = 0; i < k; ++i) {
      if (!first) os << ",";
      os << class_word(g, classes, c);
      first = false;
    }
  os << "]";
  return os.str();
}

std::string form_to_text(const CanonicalForm& f, const PresetGroup& g) {
  if (f.is_zero()) return "0";
  const ConjClassTable& classes = *f.frame->classes;
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, k] : f.free) {
    if (!first) os << " ";
    os << class_word(g, classes, c) << ":" << k;
    first = false;
  }
  for (int c : f.torsion) {
    if (!first) os << " ";
    os << class_word(g, classes, c) << ":bit";
    first = false;
  }
  return os.str();
}

std::string coords_to_text(const Coordinates& c) {
  if (c.free_coeffs.empty() && c.torsion_coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, k] : c.free_coeffs) {
    if (!first) os << " ";
    os << "e" << i << ":" << k;
    first = false;
  }
  for (int i : c.torsion_coeffs) {
    if (!first) os << " ";
    os << "e" << i << ":bit";
    first = false;
  }
  return os.str();
}

namespace {

json report_json(const StructureReport& r) {
  return json{{"free_rank", r.free_rank},
              {"two_torsion_rank", r.two_torsion_rank},
              {"card_T_plus", r.card_T_plus},
              {"card_S", r.card_S},
              {"n_Kprime", r.n_Kprime},
              {"source", r.source}};
}

json shape_json(const AbelianGroupShape& s) {
  return json{{"free_rank", s.free_rank}, {"invariant_factors", s.invariant_factors}};
}

json form_json_obj(const CanonicalForm& f, const PresetGroup& g) {
  const ConjClassTable& classes = *f.frame->classes;
  json free = json::object();
  for (const auto& [c, k] : f.free) free[class_word(g, classes, c)] = k;
  json torsion = json::array();
  for (int c : f.torsion) torsion.push_back(class_word(g, classes, c));
  return json{{"free", free}, {"torsion", torsion}};
}

}  // namespace

std::string to_json(const StructureReport& r) { return report_json(r).dump(2); }

std::string to_json(const AbelianGroupShape& s) { return shape_json(s).dump(2); }

std::string form_to_json(const CanonicalForm& f, const PresetGroup& g) {
  return form_json_obj(f, g).dump(2);
}

std::string coords_to_json(const Coordinates& c) {
  json free = json::object();
  for (const auto& [i, k] : c.free_coeffs) free[std::to_string(i)] = k;
  json torsion = json::array();
  for (int i : c.torsion_coeffs) torsion.push_back(i);
  return json{{"free_coeffs", free}, {"torsion_coeffs", torsion}}.dump(2);
}

std::string datum_to_json(const OrbitDatum& d, const PresetGroup& g,
                          const ConjClassTable& classes) {
  json entries = json::array();
  for (const auto& [c, k] : d.counts)
    entries.push_back(json{{"class", class_word(g, classes, c)}, {"count", k}});
  return entries.dump(2);
}

std::string catalog_to_json(const BasisCatalog& cat, const PresetGroup& g) {
  json arr = json::array();
  for (const auto& el : cat.elements) {
    json tuple = json::array();
    for (const auto& [c, k] : el.datum.counts)
      for (long long i = 0; i < k; ++i)
        tuple.push_back(class_word(g, *cat.frame->classes, c));
    arr.push_back(json{{"index", el.coordinate_index},
                       {"tag", tag_name(el.tag)},
                       {"tuple", tuple},
                       {"order", el.infinite_order ? "infinite" : "two"}});
  }
  json out{{"elements", arr}, {"warnings", cat.warnings}};
  return out.dump(2);
}

std::string cobordism_to_json(const CobordismReport& r) {
  json j{{"B", report_json(r.b_structure)},
         {"extension", r.extension_kind},
         {"every_action_cobordant_to_free", r.every_action_cobordant_to_free}};
  j["H2"] = r.h2 ? shape_json(*r.h2) : json("not computed");
  return j.dump(2);
}

}  // namespace orbitdata
