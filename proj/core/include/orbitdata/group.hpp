#ifndef ORBITDATA_GROUP_HPP
#define ORBITDATA_GROUP_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace orbitdata {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline constexpr int kDefaultOrderCap = 20160;
// Above this order the multiplication table is not materialized; products
// are computed on demand from permutation images or factor coordinates.
inline constexpr int kDenseTableLimit = 4096;

enum class GroupOrigin { Permutation, CyclicProduct, ExplicitTable };

// A finite group over element indices 0..order-1 with the identity always
// at index 0.  Immutable after construction; all queries are const and safe
// to call concurrently.
//
// Indexing is deterministic per origin: permutation-generated groups are
// indexed by breadth-first discovery order from the generators, cyclic
// products lexicographically by factor coordinates, explicit tables as
// given.
class FiniteGroup {
public:
  int order() const { return order_; }
  int mul(int a, int b) const;
  int inv(int a) const { return inv_[a]; }
  static constexpr int identity = 0;

  int power(int a, long long e) const;
  int element_order(int a) const;
  bool is_abelian() const { return abelian_; }

  GroupOrigin origin() const { return origin_; }
  const std::string& name() const { return name_; }

  // cyclic-product metadata (empty for other origins)
  const std::vector<int>& factor_orders() const { return factor_orders_; }
  const std::vector<int>& factor_generators() const { return factor_generators_; }
  std::vector<int> coords_of(int a) const;       // factor coordinates
  int element_at(const std::vector<int>& coords) const;

  // permutation metadata
  int degree() const { return degree_; }
  const std::vector<std::vector<int>>& elements_as_perms() const { return perms_; }
  // how element i was first reached: i = mul(bfs_parent, generator bfs_gen)
  const std::vector<int>& bfs_parent() const { return bfs_parent_; }
  const std::vector<int>& bfs_gen() const { return bfs_gen_; }
  const std::vector<int>& generator_elements() const { return generator_elements_; }

  bool same_group(const FiniteGroup& o) const;

  friend GroupPtr build_from_permutations(int, const std::vector<std::vector<int>>&, int,
                                          const std::string&);
  friend GroupPtr build_cyclic_product(const std::vector<int>&, int, const std::string&);
  friend GroupPtr build_from_table(int, const std::vector<int>&, int, const std::string&);

private:
  FiniteGroup() = default;

  int mul_lazy(int a, int b) const;

  int order_ = 1;
  GroupOrigin origin_ = GroupOrigin::ExplicitTable;
  std::string name_;
  bool abelian_ = true;
  std::vector<int> table_;  // row-major; empty when order > kDenseTableLimit
  std::vector<int> inv_;

  std::vector<int> factor_orders_;
  std::vector<int> factor_generators_;
  std::vector<long long> strides_;

  int degree_ = 0;
  std::vector<std::vector<int>> perms_;
  std::vector<int> bfs_parent_, bfs_gen_;
  std::vector<int> generator_elements_;
  std::map<std::vector<int>, int> perm_index_;
};

GroupPtr build_from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                                 int order_cap = kDefaultOrderCap, const std::string& name = "");
GroupPtr build_cyclic_product(const std::vector<int>& orders, int order_cap = kDefaultOrderCap,
                              const std::string& name = "");
GroupPtr build_from_table(int order, const std::vector<int>& row_major_table,
                          int order_cap = kDefaultOrderCap, const std::string& name = "");

// Conjugacy classes, ids ordered by minimal member index; the class of the
// identity is therefore always id 0.
struct ConjClassTable {
  GroupPtr group;
  std::vector<int> class_of;                // element -> class id
  std::vector<std::vector<int>> members;    // class id -> sorted elements
  std::vector<int> inverse_class;           // class id -> class id

  int num_classes() const { return static_cast<int>(members.size()); }
  int rep(int c) const { return members[c][0]; }
  int trivial_class() const { return 0; }
};
using ClassTablePtr = std::shared_ptr<const ConjClassTable>;

ClassTablePtr conjugacy_classes(const GroupPtr& g);

struct Subgroup {
  GroupPtr parent;
  std::vector<int> members;  // sorted, members[0] == 0

  bool contains(int x) const;
  int index_of(int x) const;  // position in members, -1 if absent
  int size() const { return static_cast<int>(members.size()); }
};

Subgroup subgroup_closure(const GroupPtr& g, std::vector<int> generators);
Subgroup commutator_subgroup(const GroupPtr& g);
bool is_subgroup(const GroupPtr& g, const std::vector<int>& members);

// The subgroup as a group in its own right; element i of the result is
// members[i] in the parent (identity stays at 0).
GroupPtr subgroup_as_group(const Subgroup& s);

struct Abelianization {
  GroupPtr group;
  GroupPtr quotient;                     // abelian; == group when group is abelian
  std::vector<int> phi;                  // element -> quotient element
  std::vector<long long> cyclic_decomposition;  // invariant factors d1 | d2 | ...
  std::vector<int> factor_generators;    // quotient elements; quotient = (+) <g_i>, ord g_i = d_i
};

Abelianization abelianize(const GroupPtr& g);

// Coordinates of every quotient element with respect to factor_generators;
// the quotient is the direct sum of the cyclic groups they generate, so the
// coordinate tuple is unique.
std::vector<std::vector<long long>> quotient_coordinates(const Abelianization& ab);

// Rank of the maximal elementary abelian 2-subgroup of an abelian group,
// i.e. log2 |{x : x^2 = 1}|.
int elementary_two_rank(const GroupPtr& abelian_group);

}  // namespace orbitdata

#endif
