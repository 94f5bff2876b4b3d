#ifndef ORBITDATA_IO_HPP
#define ORBITDATA_IO_HPP

#include <string>

#include "orbitdata/basis.hpp"
#include "orbitdata/class_frame.hpp"
#include "orbitdata/group.hpp"
#include "orbitdata/lattice_oracle.hpp"
#include "orbitdata/maps.hpp"
#include "orbitdata/orbit_algebra.hpp"
#include "orbitdata/presets.hpp"

namespace orbitdata {

// Group-spec documents (UTF-8 JSON):
//   {"type":"permutation","degree":n,"generators":[[images...],...]}
//   {"type":"cyclic_product","orders":[...]}
//   {"type":"table","order":n,"mul":[...row-major...]}
//   {"type":"preset","name":"S3"}
PresetGroup group_from_spec(const std::string& json_text, int order_cap = kDefaultOrderCap);
PresetGroup group_from_spec_file(const std::string& path, int order_cap = kDefaultOrderCap);

// Homomorphism spec: {"source": <spec or preset name>, "target": <spec or
// preset name>, "images": [<word in target>, ...]}; one image per source
// generator (or per element for table groups).  Validated exhaustively.
struct HomSpec {
  GroupHom hom;
  PresetGroup source;
  PresetGroup target;
};
HomSpec hom_from_spec_file(const std::string& path, int order_cap = kDefaultOrderCap);

// "a,a,b^2" -> elements -> their classes
std::vector<int> parse_element_list(const PresetGroup& g, const std::string& comma_words);
OrbitDatum parse_datum(const PresetGroup& g, const ConjClassTable& classes,
                       const std::string& comma_words);

// word of the minimal representative, e.g. "a" for the class {a, a^2}
std::string class_word(const PresetGroup& g, const ConjClassTable& classes, int class_id);

std::string datum_to_text(const OrbitDatum& d, const PresetGroup& g,
                          const ConjClassTable& classes);
std::string form_to_text(const CanonicalForm& f, const PresetGroup& g);
std::string coords_to_text(const Coordinates& c);

// deterministic JSON text (sorted keys, 2-space indent)
std::string to_json(const StructureReport& r);
std::string to_json(const AbelianGroupShape& s);
std::string form_to_json(const CanonicalForm& f, const PresetGroup& g);
std::string coords_to_json(const Coordinates& c);
std::string datum_to_json(const OrbitDatum& d, const PresetGroup& g,
                          const ConjClassTable& classes);
std::string catalog_to_json(const BasisCatalog& cat, const PresetGroup& g);
std::string cobordism_to_json(const CobordismReport& r);

}  // namespace orbitdata

#endif
