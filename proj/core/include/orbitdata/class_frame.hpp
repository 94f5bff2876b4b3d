#ifndef ORBITDATA_CLASS_FRAME_HPP
#define ORBITDATA_CLASS_FRAME_HPP

#include <memory>
#include <string>
#include <vector>

#include "orbitdata/group.hpp"

namespace orbitdata {

// Partition of the nontrivial conjugacy classes into the self-inverse set S
// and a chosen positive half T+ of the rest, together with the per-coset
// ("fiber") numbering of classes over the abelianization and the section
// that picks each fiber's head class.
//
// The numbering rules: inside a fiber all self-inverse classes come first;
// for a self-inverse fiber the remaining classes are arranged as adjacent
// inverse pairs ordered by their smaller representative, smaller first; a
// pair of mutually inverse fibers is numbered on the side with the smaller
// minimal representative and mirrored onto the other side, so classes at
// equal positions are inverse to each other.  T+ takes whole fibers on the
// smaller-representative side of each fiber pair, and the pair-minimal
// class of every inverse pair inside self-inverse fibers.  Everything is
// deterministic: rebuilding from the same group spec is bit-identical.
struct ClassFrame {
  GroupPtr group;
  ClassTablePtr classes;
  Abelianization ab;

  std::vector<int> s_classes, t_plus, t_minus;  // sorted class ids
  std::vector<char> in_s, in_t_plus;            // indexed by class id
  std::vector<int> fiber_of;                    // class id -> quotient element
  std::vector<std::vector<int>> fiber_classes;  // quotient element -> numbered class ids
  std::vector<int> head;                        // quotient element -> head class id (the section)

  std::vector<int> m_set;     // quotient elements whose head class is self-inverse
  std::vector<int> k_prime;   // members of the subgroup generated by m_set
  std::vector<int> h2_prime;  // members of the maximal elementary abelian 2-subgroup of G'
  int n_kprime = 0;
  int n_gprime = 0;
  bool canonical_abelian = false;

  int num_classes() const { return classes->num_classes(); }
  bool is_in_s(int c) const { return in_s[c]; }
  bool is_in_t_plus(int c) const { return in_t_plus[c]; }
};

using FramePtr = std::shared_ptr<const ClassFrame>;

// (S, T): self-inverse nontrivial classes and the rest of the nontrivial
// classes, both sorted by class id.
std::pair<std::vector<int>, std::vector<int>> classify_classes(const ConjClassTable& classes);

// The recursively defined positive half for a cyclic-product group, folded
// left to right over the recorded factor list with the recorded generators.
// Returned as sorted element indices (= class ids, the group is abelian).
std::vector<int> canonical_T_plus_abelian(const GroupPtr& g);

FramePtr build_class_frame(const GroupPtr& g);
// Same frame but with T+ replaced by the recursive cyclic-product choice.
FramePtr build_class_frame_abelian_canonical(const GroupPtr& g);

bool same_frame(const ClassFrame& a, const ClassFrame& b);

struct StructureReport {
  long long free_rank = 0;
  long long two_torsion_rank = 0;
  long long card_T_plus = 0;
  long long card_S = 0;
  long long n_Kprime = 0;
  std::string source;  // "closed-form" or "oracle"

  bool same_shape(const StructureReport& o) const {
    return free_rank == o.free_rank && two_torsion_rank == o.two_torsion_rank;
  }
};

// Z^|T+| (+) (Z/2)^(|S| - n_K'), evaluated from the frame.
StructureReport structure_closed_form(const GroupPtr& g);
StructureReport report_from_frame(const ClassFrame& frame);

// True exactly for the trivial group and the group of order two; always
// equals "both ranks vanish".
bool is_trivial_B(const GroupPtr& g);

// "0", "Z^3", "(Z/2)^2" or "Z^3 ⊕ (Z/2)^2"
std::string shape_string(long long free_rank, long long two_torsion_rank);

}  // namespace orbitdata

#endif
