#ifndef ORBITDATA_BASIS_HPP
#define ORBITDATA_BASIS_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "orbitdata/class_frame.hpp"
#include "orbitdata/intmat.hpp"
#include "orbitdata/orbit_algebra.hpp"

namespace orbitdata {

enum class BasisTag { W, V, L, N1, N2, N3, N4, N5, N6, N7 };

std::string tag_name(BasisTag t);

struct BasisElement {
  BasisTag tag;
  OrbitDatum datum;       // the defining tuple
  CanonicalForm form;
  bool infinite_order;    // false <=> order two <=> empty free part
  int coordinate_index;
};

// An explicit basis with a precomputed solver, so decompose stays a pure
// function over an immutable catalog.
struct BasisCatalog {
  FramePtr frame;
  std::vector<BasisElement> elements;
  std::vector<int> infinite_indices;  // positions into elements
  std::vector<int> torsion_indices;
  std::vector<std::string> warnings;  // duplicate defining tuples, if any

  // solver internals (free part over Z, torsion part over GF(2))
  std::vector<int> t_plus_col, s_col;  // class id -> column, -1 elsewhere
  IntMatrix free_matrix;               // infinite elements x |T+|
  std::shared_ptr<const RowSpanSolver> free_solver;
  std::vector<std::vector<uint64_t>> torsion_rows;   // per torsion element, bits over S
  std::vector<std::vector<uint64_t>> torsion_inverse;  // B with (x = t B), rows indexed by S bit

  int size() const { return static_cast<int>(elements.size()); }
};

struct Coordinates {
  std::map<int, long long> free_coeffs;  // coordinate index -> integer
  std::set<int> torsion_coeffs;          // coordinate indices with bit 1

  bool operator==(const Coordinates& o) const = default;
};

// Basis of a cyclic group of prime power order m with recorded generator g:
// the triples [g, g^i, g^(m-1-i)] for every power g^i in the canonical T+.
BasisCatalog cyclic_basis(const GroupPtr& g);

// Recursive basis over the recorded factor list of a cyclic product.
BasisCatalog abelian_basis(const GroupPtr& g);

// Basis of the orbit-data group of an elementary abelian 2-group: one tuple
// [z_{i1},...,z_{is}, z_{i1}...z_{is}] per generator subset of size >= 2.
BasisCatalog L_basis(const GroupPtr& g, const std::vector<int>& generators);

// The general catalog N1..N7 over the generic frame.
BasisCatalog general_basis(const GroupPtr& g);

Coordinates decompose(const CanonicalForm& x, const BasisCatalog& catalog);
CanonicalForm recombine(const Coordinates& coords, const BasisCatalog& catalog);

// --- helpers shared with tests ------------------------------------------

// (order, generator) factors of an abelian group, folded into the recursive
// W/V tuple families and the matching T+/S element sets.
struct AbelianBasisSets {
  std::vector<std::vector<int>> w_tuples;
  std::vector<std::vector<int>> v_tuples;
  std::vector<int> t_plus;
  std::vector<int> s;
};

AbelianBasisSets abelian_basis_sets(const FiniteGroup& grp,
                                    const std::vector<std::pair<long long, int>>& factors);

// Generator subsets of size >= 2 with their products appended.
std::vector<std::vector<int>> l_tuples(const FiniteGroup& grp, const std::vector<int>& gens);

// Invariant factors refined into prime-power cyclic factors with fixed
// generators, ascending prime within each factor.
std::vector<std::pair<long long, int>> refined_prime_power_factors(const Abelianization& ab);

// The H'_2 generating set used by the general catalog: greedy generators of
// K' scanned from the self-inverse-headed fibers first, then completed over
// H'_2; returns the generator list, first n_kprime of which generate K'.
std::vector<int> h2_prime_generators(const ClassFrame& frame);

}  // namespace orbitdata

#endif
