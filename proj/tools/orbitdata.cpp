// Batch CLI over the orbit-data library: load a group, run one computation,
// print deterministic text or a single structured JSON document.
//
// Exit codes: 0 success, 1 domain error, 2 spec/parse error, 3 oracle-verify
// mismatch.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "orbitdata/basis.hpp"
#include "orbitdata/class_frame.hpp"
#include "orbitdata/errors.hpp"
#include "orbitdata/group.hpp"
#include "orbitdata/io.hpp"
#include "orbitdata/lattice_oracle.hpp"
#include "orbitdata/maps.hpp"
#include "orbitdata/orbit_algebra.hpp"
#include "orbitdata/presets.hpp"

using json = nlohmann::json;
using namespace orbitdata;

namespace {

struct Options {
  std::string preset;
  std::string spec_path;
  std::string datum;
  std::string subgroup;
  std::string hom_path;
  std::string output = "text";
  std::string family = "auto";
  bool corpus = false;
};

int order_cap_from_env() {
  const char* v = std::getenv("ORBITDATA_ORDER_CAP");
  if (!v) return kDefaultOrderCap;
  try {
    int cap = std::stoi(v);
    if (cap < 1) throw std::invalid_argument("cap");
    return cap;
  } catch (const std::exception&) {
    throw ParseError("ORBITDATA_ORDER_CAP is not a positive integer");
  }
}

PresetGroup load_group(const Options& opt) {
  if (!opt.preset.empty() && !opt.spec_path.empty())
    throw ParseError("give either --preset or --spec, not both");
  int cap = order_cap_from_env();
  if (!opt.preset.empty()) return preset_group(opt.preset, cap);
  if (!opt.spec_path.empty()) return group_from_spec_file(opt.spec_path, cap);
  throw ParseError("a group is required: --preset NAME or --spec PATH");
}

std::string shape_text(const AbelianGroupShape& s) {
  if (s.free_rank == 0 && s.invariant_factors.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  if (s.free_rank > 0) {
    os << "Z^" << s.free_rank;
    first = false;
  }
  for (long long d : s.invariant_factors) {
    if (!first) os << " ⊕ ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

std::string b_text(const StructureReport& r) {
  return shape_string(r.free_rank, r.two_torsion_rank);
}

json envelope(const std::string& verb, const std::string& group_name) {
  return json{{"schema_version", 1}, {"verb", verb}, {"group", group_name}};
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

BasisCatalog catalog_for(const PresetGroup& pg, const std::string& family) {
  if (family == "cyclic") return cyclic_basis(pg.group);
  if (family == "abelian") return abelian_basis(pg.group);
  if (family == "general") return general_basis(pg.group);
  if (family == "auto")
    return pg.group->origin() == GroupOrigin::CyclicProduct ? abelian_basis(pg.group)
                                                            : general_basis(pg.group);
  throw ParseError("unknown basis family: " + family);
}

std::vector<PresetGroup> corpus_groups() { return verification_corpus(64); }

// ---- verbs ---------------------------------------------------------------

int run_structure(const Options& opt) {
  auto one = [&](const PresetGroup& pg, bool text) -> json {
    StructureReport r = structure_closed_form(pg.group);
    if (text)
      std::cout << (opt.corpus ? pg.group->name() + ": " : std::string("")) << "B_G ≅ "
                << b_text(r) << "; |T+|=" << r.card_T_plus << " |S|=" << r.card_S
                << " n_K'=" << r.n_Kprime << "\n";
    json j = json::parse(to_json(r));
    j["group"] = pg.group->name();
    return j;
  };
  if (opt.corpus) {
    json arr = json::array();
    for (const auto& pg : corpus_groups()) arr.push_back(one(pg, opt.output == "text"));
    if (opt.output != "text") {
      json doc = envelope("structure", "corpus");
      doc["corpus"] = arr;
      emit(doc);
    }
    return 0;
  }
  PresetGroup pg = load_group(opt);
  json j = one(pg, opt.output == "text");
  if (opt.output != "text") {
    json doc = envelope("structure", pg.group->name());
    doc["report"] = j;
    emit(doc);
  }
  return 0;
}

int run_oracle_verify(const Options& opt) {
  int worst = 0;
  auto one = [&](const PresetGroup& pg, bool text) -> json {
    StructureReport cf = structure_closed_form(pg.group);
    StructureReport oc = oracle_structure(pg.group);
    bool ok = cf.same_shape(oc);
    if (!ok) worst = 3;
    if (text)
      std::cout << (opt.corpus ? pg.group->name() + ": " : std::string("")) << "closed-form "
                << b_text(cf) << " == oracle " << b_text(oc) << " : " << (ok ? "OK" : "MISMATCH")
                << "\n";
    return json{{"group", pg.group->name()},
                {"closed_form", json::parse(to_json(cf))},
                {"oracle", json::parse(to_json(oc))},
                {"match", ok}};
  };
  if (opt.corpus) {
    json arr = json::array();
    for (const auto& pg : corpus_groups()) arr.push_back(one(pg, opt.output == "text"));
    if (opt.output != "text") {
      json doc = envelope("oracle-verify", "corpus");
      doc["corpus"] = arr;
      emit(doc);
    }
    return worst;
  }
  PresetGroup pg = load_group(opt);
  json j = one(pg, opt.output == "text");
  if (opt.output != "text") {
    json doc = envelope("oracle-verify", pg.group->name());
    doc["result"] = j;
    emit(doc);
  }
  return worst;
}

int run_validate(const Options& opt) {
  PresetGroup pg = load_group(opt);
  FramePtr frame = build_class_frame(pg.group);
  OrbitDatum d = parse_datum(pg, *frame->classes, opt.datum);
  bool ok = validate(d, *frame);
  if (opt.output == "text") {
    std::cout << (ok ? "valid: product lies in [G,G]" : "invalid: product not in [G,G]") << "\n";
  } else {
    json doc = envelope("validate", pg.group->name());
    doc["datum"] = json::parse(datum_to_json(d, pg, *frame->classes));
    doc["valid"] = ok;
    emit(doc);
  }
  return ok ? 0 : 1;
}

int run_canonicalize(const Options& opt) {
  PresetGroup pg = load_group(opt);
  FramePtr frame = build_class_frame(pg.group);
  OrbitDatum d = parse_datum(pg, *frame->classes, opt.datum);
  CanonicalForm f = canonicalize(d, frame);
  if (opt.output == "text") {
    std::cout << "canonical form: " << form_to_text(f, pg) << "\n";
    std::cout << "reduced tuple: " << datum_to_text(reduced_tuple(f), pg, *frame->classes) << "\n";
  } else {
    json doc = envelope("canonicalize", pg.group->name());
    doc["form"] = json::parse(form_to_json(f, pg));
    doc["reduced_tuple"] = json::parse(datum_to_json(reduced_tuple(f), pg, *frame->classes));
    emit(doc);
  }
  return 0;
}

int run_basis(const Options& opt) {
  auto one = [&](const PresetGroup& pg, bool text) -> json {
    BasisCatalog cat = catalog_for(pg, opt.family);
    if (text) {
      if (opt.corpus) std::cout << pg.group->name() << ": ";
      std::cout << "catalog size " << cat.size() << " (infinite "
                << cat.infinite_indices.size() << ", order-two " << cat.torsion_indices.size()
                << ")\n";
      if (!opt.corpus) {
        for (const auto& el : cat.elements) {
          std::cout << "  " << el.coordinate_index << " " << tag_name(el.tag) << " "
                    << (el.infinite_order ? "inf" : "two") << " "
                    << datum_to_text(el.datum, pg, *cat.frame->classes) << "\n";
        }
        for (const auto& w : cat.warnings) std::cout << "  warning: " << w << "\n";
      }
    }
    json j = json::parse(catalog_to_json(cat, pg));
    j["group"] = pg.group->name();
    return j;
  };
  if (opt.corpus) {
    json arr = json::array();
    for (const auto& pg : corpus_groups()) arr.push_back(one(pg, opt.output == "text"));
    if (opt.output != "text") {
      json doc = envelope("basis", "corpus");
      doc["corpus"] = arr;
      emit(doc);
    }
    return 0;
  }
  PresetGroup pg = load_group(opt);
  json j = one(pg, opt.output == "text");
  if (opt.output != "text") {
    json doc = envelope("basis", pg.group->name());
    doc["catalog"] = j;
    emit(doc);
  }
  return 0;
}

int run_decompose(const Options& opt) {
  PresetGroup pg = load_group(opt);
  BasisCatalog cat = catalog_for(pg, opt.family);
  OrbitDatum d = parse_datum(pg, *cat.frame->classes, opt.datum);
  CanonicalForm f = canonicalize(d, cat.frame);
  Coordinates co = decompose(f, cat);
  if (opt.output == "text") {
    std::cout << "coords: " << coords_to_text(co) << "\n";
  } else {
    json doc = envelope("decompose", pg.group->name());
    doc["coords"] = json::parse(coords_to_json(co));
    emit(doc);
  }
  return 0;
}

int run_restrict(const Options& opt) {
  PresetGroup pg = load_group(opt);
  FramePtr frame = build_class_frame(pg.group);
  OrbitDatum d = parse_datum(pg, *frame->classes, opt.datum);
  if (opt.subgroup.empty()) throw ParseError("restrict needs --subgroup LIST");
  Subgroup k = subgroup_closure(pg.group, parse_element_list(pg, opt.subgroup));
  GroupPtr kg = subgroup_as_group(k);
  PresetGroup kpg{kg, {}};
  ClassTablePtr kcls = conjugacy_classes(kg);
  OrbitDatum rd = restrict_datum(d, *frame->classes, k, kg, *kcls);
  FramePtr kframe = build_class_frame(kg);
  CanonicalForm f = canonicalize(rd, kframe);
  if (opt.output == "text") {
    std::cout << "subgroup order: " << kg->order() << "\n";
    std::cout << "restricted datum: " << datum_to_text(rd, kpg, *kcls) << "\n";
    std::cout << "canonical form: " << form_to_text(f, kpg) << "\n";
  } else {
    json doc = envelope("restrict", pg.group->name());
    doc["subgroup_order"] = kg->order();
    doc["restricted_datum"] = json::parse(datum_to_json(rd, kpg, *kcls));
    doc["form"] = json::parse(form_to_json(f, kpg));
    emit(doc);
  }
  return 0;
}

int run_induce(const Options& opt) {
  if (opt.hom_path.empty()) throw ParseError("induce needs --hom PATH");
  HomSpec hs = hom_from_spec_file(opt.hom_path, order_cap_from_env());
  ClassTablePtr src_cls = conjugacy_classes(hs.source.group);
  ClassTablePtr tgt_cls = conjugacy_classes(hs.target.group);
  OrbitDatum d = parse_datum(hs.source, *src_cls, opt.datum);
  OrbitDatum pushed = induced_map(hs.hom, d, *src_cls, *tgt_cls);
  FramePtr tframe = build_class_frame(hs.target.group);
  CanonicalForm f = canonicalize(pushed, tframe);
  if (opt.output == "text") {
    std::cout << "induced datum: " << datum_to_text(pushed, hs.target, *tgt_cls) << "\n";
    std::cout << "canonical form: " << form_to_text(f, hs.target) << "\n";
  } else {
    json doc = envelope("induce", hs.source.group->name());
    doc["target"] = hs.target.group->name();
    doc["induced_datum"] = json::parse(datum_to_json(pushed, hs.target, *tgt_cls));
    doc["form"] = json::parse(form_to_json(f, hs.target));
    emit(doc);
  }
  return 0;
}

int run_ambivalent(const Options& opt) {
  auto one = [&](const PresetGroup& pg, bool text) -> json {
    bool amb = two_torsion_only(pg.group);
    StructureReport r = structure_closed_form(pg.group);
    if (text)
      std::cout << (opt.corpus ? pg.group->name() + ": " : std::string("")) << "ambivalent: "
                << (amb ? "yes" : "no") << "; free_rank=" << r.free_rank << "\n";
    return json{{"group", pg.group->name()}, {"ambivalent", amb}, {"free_rank", r.free_rank}};
  };
  if (opt.corpus) {
    json arr = json::array();
    for (const auto& pg : corpus_groups()) arr.push_back(one(pg, opt.output == "text"));
    if (opt.output != "text") {
      json doc = envelope("ambivalent", "corpus");
      doc["corpus"] = arr;
      emit(doc);
    }
    return 0;
  }
  PresetGroup pg = load_group(opt);
  json j = one(pg, opt.output == "text");
  if (opt.output != "text") {
    json doc = envelope("ambivalent", pg.group->name());
    doc["result"] = j;
    emit(doc);
  }
  return 0;
}

int run_cobordism(const Options& opt) {
  auto one = [&](const PresetGroup& pg, bool text) -> json {
    CobordismReport r = cobordism_report(pg.group);
    if (text) {
      if (opt.corpus) std::cout << pg.group->name() << ": ";
      std::string b = b_text(r.b_structure);
      std::string h2 = r.h2 ? shape_text(*r.h2) : "not computed";
      if (opt.corpus) {
        std::cout << "B=" << b << " H2=" << h2 << " extension=" << r.extension_kind << "\n";
      } else {
        std::cout << "B: " << b << "\n";
        std::cout << "H2: " << h2 << "\n";
        std::cout << "cobordant-to-free: " << (r.every_action_cobordant_to_free ? "yes" : "no")
                  << "\n";
        std::cout << "extension: " << r.extension_kind << "\n";
        if (r.extension_kind == "split-direct-sum")
          std::cout << "Omega: " << b << " ⊕ " << h2 << "\n";
        else
          std::cout << "Omega: undetermined\n";
      }
    }
    json j = json::parse(cobordism_to_json(r));
    j["group"] = pg.group->name();
    return j;
  };
  if (opt.corpus) {
    json arr = json::array();
    for (const auto& pg : corpus_groups()) arr.push_back(one(pg, opt.output == "text"));
    if (opt.output != "text") {
      json doc = envelope("cobordism", "corpus");
      doc["corpus"] = arr;
      emit(doc);
    }
    return 0;
  }
  PresetGroup pg = load_group(opt);
  json j = one(pg, opt.output == "text");
  if (opt.output != "text") {
    json doc = envelope("cobordism", pg.group->name());
    doc["report"] = j;
    emit(doc);
  }
  return 0;
}

void add_group_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--preset", opt.preset, "named preset group (S3, C9, C3xC3, ...)");
  cmd->add_option("--spec", opt.spec_path, "path to a group spec document");
  cmd->add_option("--output", opt.output, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computations in the group of singular orbit data of finite group actions"};
  app.require_subcommand(1);

  Options opt;
  auto* structure = app.add_subcommand("structure", "closed-form structure of B_G");
  auto* basis = app.add_subcommand("basis", "explicit basis catalog");
  auto* canonicalize = app.add_subcommand("canonicalize", "canonical form of a datum");
  auto* decompose = app.add_subcommand("decompose", "basis coordinates of a datum");
  auto* validate = app.add_subcommand("validate", "is the datum a singular orbit datum?");
  auto* oracle = app.add_subcommand("oracle-verify", "closed form against the lattice oracle");
  auto* restr = app.add_subcommand("restrict", "restriction to a subgroup");
  auto* induce = app.add_subcommand("induce", "push-forward along a homomorphism");
  auto* ambivalent = app.add_subcommand("ambivalent", "every element conjugate to its inverse?");
  auto* cobordism = app.add_subcommand("cobordism", "cobordism group report");

  for (auto* cmd : {structure, basis, canonicalize, decompose, validate, oracle, restr,
                    ambivalent, cobordism})
    add_group_flags(cmd, opt);
  induce->add_option("--output", opt.output, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}));

  for (auto* cmd : {canonicalize, decompose, validate, restr, induce})
    cmd->add_option("--datum", opt.datum, "comma-separated element words")->required();
  restr->add_option("--subgroup", opt.subgroup, "comma-separated subgroup generators");
  induce->add_option("--hom", opt.hom_path, "path to a homomorphism spec")->required();
  for (auto* cmd : {basis, decompose})
    cmd->add_option("--family", opt.family, "auto | cyclic | abelian | general")
        ->check(CLI::IsMember({"auto", "cyclic", "abelian", "general"}));
  for (auto* cmd : {structure, basis, oracle, ambivalent, cobordism})
    cmd->add_flag("--corpus", opt.corpus, "run over the built-in verification corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (structure->parsed()) return run_structure(opt);
    if (basis->parsed()) return run_basis(opt);
    if (canonicalize->parsed()) return run_canonicalize(opt);
    if (decompose->parsed()) return run_decompose(opt);
    if (validate->parsed()) return run_validate(opt);
    if (oracle->parsed()) return run_oracle_verify(opt);
    if (restr->parsed()) return run_restrict(opt);
    if (induce->parsed()) return run_induce(opt);
    if (ambivalent->parsed()) return run_ambivalent(opt);
    if (cobordism->parsed()) return run_cobordism(opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
