#ifndef ORBITDATA_MAPS_HPP
#define ORBITDATA_MAPS_HPP

#include <optional>
#include <string>
#include <vector>

#include "orbitdata/class_frame.hpp"
#include "orbitdata/group.hpp"
#include "orbitdata/lattice_oracle.hpp"
#include "orbitdata/orbit_algebra.hpp"

namespace orbitdata {

struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> image;  // element of source -> element of target
};

// Checks image(identity) = identity and image(xy) = image(x) image(y) on
// every pair; raises NotAHomomorphism otherwise.
GroupHom make_hom_checked(const GroupPtr& source, const GroupPtr& target, std::vector<int> image);

// Builds the full image map from images of the source's generators
// (permutation origin: the recorded generator list; cyclic product: the
// factor generators), then checks it exhaustively.
GroupHom hom_from_generator_images(const GroupPtr& source, const GroupPtr& target,
                                   const std::vector<int>& generator_images);

GroupHom identity_hom(const GroupPtr& g);
GroupHom compose(const GroupHom& f, const GroupHom& g);  // x -> f(g(x))
// The projection onto the abelianization quotient.
GroupHom abelianization_hom(const GroupPtr& g, const Abelianization& ab);

// Entrywise push-forward of class representatives; entries landing on the
// identity are dropped (a stabilizer generator mapping to 1 contributes a
// regular orbit, i.e. nothing).
OrbitDatum induced_map(const GroupHom& f, const OrbitDatum& d, const ConjClassTable& src_classes,
                       const ConjClassTable& tgt_classes);

// Restriction of singular orbits to a subgroup: for each entry with
// representative gamma of order nu, every double coset K a <gamma> with
// d_a = min{d >= 1 : (a gamma a^-1)^d in K} < nu contributes the K-class
// of (a gamma a^-1)^{d_a}.
OrbitDatum restrict_datum(const OrbitDatum& d, const ConjClassTable& src_classes,
                          const Subgroup& k, const GroupPtr& k_group,
                          const ConjClassTable& k_classes);

// Every element conjugate to its inverse; equivalent to every complex
// character being real-valued, and to the orbit-data group being 2-torsion.
bool two_torsion_only(const GroupPtr& g);

// Pairwise-gcd formula over the invariant factors; abelian groups only.
AbelianGroupShape schur_multiplier_abelian(const GroupPtr& g);

struct CobordismReport {
  StructureReport b_structure;
  std::optional<AbelianGroupShape> h2;  // nullopt = not computed (nonabelian)
  std::string extension_kind;           // "split-direct-sum" or "undetermined"
  bool every_action_cobordant_to_free = false;
};

CobordismReport cobordism_report(const GroupPtr& g);

}  // namespace orbitdata

#endif
