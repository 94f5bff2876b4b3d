#ifndef ORBITDATA_SPAN_CASES_HPP
#define ORBITDATA_SPAN_CASES_HPP

#include "orbitdata/basis.hpp"
#include "orbitdata/orbit_algebra.hpp"

namespace testutil {

// Differential-testing alternative to the generic solver: decomposes a
// validating TRIPLE over the general catalog by replaying the constructive
// case analysis (split off commutator-fiber entries, rewrite pairs against
// fiber heads, push head triples through the abelianization and absorb the
// section defects into the N6/N7 part).  Coordinates must agree exactly
// with orbitdata::decompose.
orbitdata::Coordinates decompose_triple_by_cases(const orbitdata::OrbitDatum& triple,
                                                 const orbitdata::BasisCatalog& catalog);

}  // namespace testutil

#endif
