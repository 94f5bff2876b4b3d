#ifndef ORBITDATA_PRESETS_HPP
#define ORBITDATA_PRESETS_HPP

#include <map>
#include <string>
#include <vector>

#include "orbitdata/group.hpp"

namespace orbitdata {

// A constructed group together with the named generators usable in datum
// and homomorphism words ("a*b", "x^2", ...).
struct PresetGroup {
  GroupPtr group;
  std::map<std::string, int> generator_names;
};

// Recognized names: C<m> and products like C3xC3 or C4xC2 (cyclic factors
// in the written order), S3, S4, A4, A5, D<2n> (dihedral of that order,
// even >= 4), Q8, Heis3 (alias Heis27), C1/trivial.
PresetGroup preset_group(const std::string& name, int order_cap = kDefaultOrderCap);

bool is_preset_name(const std::string& name);

// All named presets, for corpus-style runs (cyclic families excluded).
std::vector<std::string> named_presets();

// The verification corpus: every abelian group of order <= max_abelian_order
// (one cyclic-product build per multiset of prime-power factors, ascending)
// followed by the nonabelian presets S3, S4, A4, A5, D4..D16, Q8, Heis3.
std::vector<PresetGroup> verification_corpus(int max_abelian_order = 64);

// Evaluates a word like "a*b^2*x" (or a bare element index) over the named
// generators; used by datum and homomorphism parsing.
int evaluate_word(const PresetGroup& g, const std::string& word);

// Deterministic printable word for an element (generator names when the
// origin provides them, otherwise "#<index>").
std::string element_word(const PresetGroup& g, int element);

}  // namespace orbitdata

#endif
