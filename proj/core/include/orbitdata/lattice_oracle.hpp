#ifndef ORBITDATA_LATTICE_ORACLE_HPP
#define ORBITDATA_LATTICE_ORACLE_HPP

#include "orbitdata/class_frame.hpp"
#include "orbitdata/group.hpp"
#include "orbitdata/intmat.hpp"
#include "orbitdata/orbit_algebra.hpp"

namespace orbitdata {

struct AbelianGroupShape {
  long long free_rank = 0;
  std::vector<long long> invariant_factors;  // each >= 2, each dividing the next

  bool operator==(const AbelianGroupShape& o) const = default;
};

// Lattice coordinates are the nontrivial class ids shifted down by one:
// coordinate j <-> class id j+1.
std::vector<long long> datum_vector(const SignedDatum& d, const ConjClassTable& classes);

// Basis (as rows) of the kernel of e_c -> phi(rep(c)), computed by stacking
// the coordinate map with the diagonal of quotient factor orders and
// projecting the integer kernel back onto the class coordinates.
IntMatrix kernel_lattice(const ConjClassTable& classes, const Abelianization& ab);

// One row per cancelling-pair relation: e_c + e_{c^-1} for a class pair
// counted once, 2 e_c for a self-inverse class.
IntMatrix relation_vectors(const ConjClassTable& classes);

// Shape of K/R: expresses every relation in the kernel basis (they must all
// lie inside, else RelationOutsideKernel) and reads the Smith form.
AbelianGroupShape quotient_shape(const IntMatrix& kernel, const IntMatrix& relations);

// Full pipeline; raises UnexpectedTorsion if any invariant factor is not 2.
StructureReport oracle_structure(const GroupPtr& g);
AbelianGroupShape oracle_shape(const GroupPtr& g);

bool lattice_membership(const SignedDatum& v, const RowSpanSolver& relation_solver,
                        const ConjClassTable& classes);

}  // namespace orbitdata

#endif
