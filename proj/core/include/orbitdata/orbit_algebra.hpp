#ifndef ORBITDATA_ORBIT_ALGEBRA_HPP
#define ORBITDATA_ORBIT_ALGEBRA_HPP

#include <map>
#include <set>
#include <vector>

#include "orbitdata/class_frame.hpp"
#include "orbitdata/group.hpp"

namespace orbitdata {

// Formal Z>=0-combination of nontrivial conjugacy classes.  Constructed via
// make_datum so the trivial class is rejected up front.
struct OrbitDatum {
  GroupPtr group;
  std::map<int, long long> counts;  // class id -> multiplicity > 0

  long long total() const;
  bool operator==(const OrbitDatum& o) const { return counts == o.counts; }
};

struct SignedDatum {
  GroupPtr group;
  std::map<int, long long> counts;  // class id -> nonzero integer
};

OrbitDatum make_datum(const GroupPtr& g, const std::map<int, long long>& class_counts);
OrbitDatum datum_from_elements(const GroupPtr& g, const ConjClassTable& classes,
                               const std::vector<int>& elements);
SignedDatum make_signed(const GroupPtr& g, const std::map<int, long long>& class_counts);
SignedDatum difference(const OrbitDatum& a, const OrbitDatum& b);

// Folded normal form: one integer per T+ class (count minus count of the
// inverse class) and one bit per S class.  Complete invariant for equality
// modulo the cancelling-pair relations.
struct CanonicalForm {
  FramePtr frame;
  std::map<int, long long> free;  // T+ class id -> nonzero integer
  std::set<int> torsion;          // S class ids with bit 1

  bool is_zero() const { return free.empty() && torsion.empty(); }
  bool operator==(const CanonicalForm& o) const { return free == o.free && torsion == o.torsion; }
};

// True iff the product of one representative per entry, with multiplicity,
// lies in the commutator subgroup; evaluated as vanishing of the image sum
// in the abelianization, which is order-independent.
bool validate(const OrbitDatum& d, const ClassFrame& frame);
bool validate(const SignedDatum& d, const ClassFrame& frame);

CanonicalForm canonicalize(const SignedDatum& d, const FramePtr& frame);
CanonicalForm canonicalize(const OrbitDatum& d, const FramePtr& frame);

CanonicalForm zero_form(const FramePtr& frame);
CanonicalForm add(const CanonicalForm& a, const CanonicalForm& b);
CanonicalForm negate(const CanonicalForm& a);
CanonicalForm scale(const CanonicalForm& a, long long k);

// A representative tuple with the given canonical form: k > 0 on a T+ class
// emits k copies, k < 0 emits |k| copies of the inverse class, a torsion bit
// emits one copy.  Derived output only; the canonical form stays primary.
OrbitDatum reduced_tuple(const CanonicalForm& form);

// Rewrites a datum with at least 4 entries as a list of validating triples
// whose canonical forms sum to the input's.  Connectors follow the actual
// group product of minimal representatives accumulated in class-id order;
// a connector that hits the identity closes a cancelling pair, which is
// dropped, and a short leftover is padded with a cancelling pair when the
// group allows it.
std::vector<OrbitDatum> split_into_triples(const OrbitDatum& d, const ClassFrame& frame);

}  // namespace orbitdata

#endif
