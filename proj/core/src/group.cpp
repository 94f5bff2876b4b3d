#include "orbitdata/group.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "orbitdata/errors.hpp"
#include "orbitdata/intmat.hpp"

namespace orbitdata {

namespace {

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

std::vector<int> invert_perm(const std::vector<int>& a) {
  std::vector<int> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

void check_permutation(const std::vector<int>& p, int degree) {
  if (static_cast<int>(p.size()) != degree)
    throw NotAPermutation("generator has wrong degree");
  std::vector<char> seen(degree, 0);
  for (int v : p) {
    if (v < 0 || v >= degree || seen[v]) throw NotAPermutation("generator is not a bijection");
    seen[v] = 1;
  }
}

std::string synth_cyclic_name(const std::vector<int>& orders) {
  if (orders.empty()) return "C1";
  std::ostringstream os;
  for (size_t i = 0; i < orders.size(); ++i) os << (i ? "x" : "") << "C" << orders[i];
  return os.str();
}

}  // namespace

int FiniteGroup::mul(int a, int b) const {
  if (!table_.empty()) return table_[static_cast<size_t>(a) * order_ + b];
  return mul_lazy(a, b);
}

int FiniteGroup::mul_lazy(int a, int b) const {
  switch (origin_) {
    case GroupOrigin::Permutation: {
      auto it = perm_index_.find(compose(perms_[a], perms_[b]));
      return it->second;
    }
    case GroupOrigin::CyclicProduct: {
      long long idx = 0;
      for (size_t i = 0; i < factor_orders_.size(); ++i) {
        int ai = static_cast<int>((a / strides_[i]) % factor_orders_[i]);
        int bi = static_cast<int>((b / strides_[i]) % factor_orders_[i]);
        idx += static_cast<long long>((ai + bi) % factor_orders_[i]) * strides_[i];
      }
      return static_cast<int>(idx);
    }
    case GroupOrigin::ExplicitTable:
      break;
  }
  throw Error("internal: no multiplication backend");
}

int FiniteGroup::power(int a, long long e) const {
  if (e < 0) return power(inv(a), -e);
  int acc = identity;
  int base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

int FiniteGroup::element_order(int a) const {
  int x = a, n = 1;
  while (x != identity) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

std::vector<int> FiniteGroup::coords_of(int a) const {
  if (origin_ != GroupOrigin::CyclicProduct) throw WrongOrigin("coords_of: not a cyclic product");
  std::vector<int> c(factor_orders_.size());
  for (size_t i = 0; i < factor_orders_.size(); ++i)
    c[i] = static_cast<int>((a / strides_[i]) % factor_orders_[i]);
  return c;
}

int FiniteGroup::element_at(const std::vector<int>& coords) const {
  if (origin_ != GroupOrigin::CyclicProduct) throw WrongOrigin("element_at: not a cyclic product");
  if (coords.size() != factor_orders_.size()) throw Error("element_at: wrong arity");
  long long idx = 0;
  for (size_t i = 0; i < coords.size(); ++i) idx += static_cast<long long>(coords[i]) * strides_[i];
  return static_cast<int>(idx);
}

bool FiniteGroup::same_group(const FiniteGroup& o) const {
  if (this == &o) return true;
  if (order_ != o.order_) return false;
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      if (mul(a, b) != o.mul(a, b)) return false;
  return true;
}

GroupPtr build_from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                                 int order_cap, const std::string& name) {
  if (degree < 1) throw Error("degree must be positive");
  for (const auto& g : generators) check_permutation(g, degree);

  auto grp = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  grp->origin_ = GroupOrigin::Permutation;
  grp->degree_ = degree;

  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  grp->perms_.push_back(id);
  grp->perm_index_[id] = 0;
  grp->bfs_parent_.push_back(-1);
  grp->bfs_gen_.push_back(-1);

  std::queue<int> todo;
  todo.push(0);
  while (!todo.empty()) {
    int cur = todo.front();
    todo.pop();
    for (size_t gi = 0; gi < generators.size(); ++gi) {
      std::vector<int> p = compose(grp->perms_[cur], generators[gi]);
      auto [it, fresh] = grp->perm_index_.try_emplace(p, static_cast<int>(grp->perms_.size()));
      if (fresh) {
        if (static_cast<int>(grp->perms_.size()) >= order_cap)
          throw OrderCapExceeded("closure exceeds order cap " + std::to_string(order_cap));
        grp->perms_.push_back(std::move(p));
        grp->bfs_parent_.push_back(cur);
        grp->bfs_gen_.push_back(static_cast<int>(gi));
        todo.push(it->second);
      }
    }
  }

  int n = static_cast<int>(grp->perms_.size());
  grp->order_ = n;
  for (const auto& g : generators) grp->generator_elements_.push_back(grp->perm_index_.at(g));

  grp->inv_.resize(n);
  for (int i = 0; i < n; ++i) grp->inv_[i] = grp->perm_index_.at(invert_perm(grp->perms_[i]));

  if (n <= kDenseTableLimit) {
    grp->table_.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        grp->table_[static_cast<size_t>(a) * n + b] =
            grp->perm_index_.at(compose(grp->perms_[a], grp->perms_[b]));
  }

  grp->abelian_ = true;
  for (size_t i = 0; i < generators.size() && grp->abelian_; ++i)
    for (size_t j = i + 1; j < generators.size() && grp->abelian_; ++j)
      if (compose(generators[i], generators[j]) != compose(generators[j], generators[i]))
        grp->abelian_ = false;

  grp->name_ = name.empty() ? "G" + std::to_string(n) : name;
  return grp;
}

GroupPtr build_cyclic_product(const std::vector<int>& orders, int order_cap,
                              const std::string& name) {
  long long n = 1;
  for (int m : orders) {
    if (m < 2) throw Error("cyclic factor orders must be >= 2");
    n *= m;
    if (n > order_cap) throw OrderCapExceeded("product exceeds order cap");
  }

  auto grp = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  grp->origin_ = GroupOrigin::CyclicProduct;
  grp->order_ = static_cast<int>(n);
  grp->factor_orders_ = orders;
  grp->abelian_ = true;

  size_t k = orders.size();
  grp->strides_.assign(k, 1);
  for (size_t i = k; i-- > 1;) grp->strides_[i - 1] = grp->strides_[i] * orders[i];
  for (size_t i = 0; i < k; ++i)
    grp->factor_generators_.push_back(static_cast<int>(grp->strides_[i]));

  grp->inv_.resize(grp->order_);
  for (int a = 0; a < grp->order_; ++a) {
    long long idx = 0;
    for (size_t i = 0; i < k; ++i) {
      int ai = static_cast<int>((a / grp->strides_[i]) % orders[i]);
      idx += static_cast<long long>((orders[i] - ai) % orders[i]) * grp->strides_[i];
    }
    grp->inv_[a] = static_cast<int>(idx);
  }

  if (grp->order_ <= kDenseTableLimit) {
    grp->table_.resize(static_cast<size_t>(grp->order_) * grp->order_);
    for (int a = 0; a < grp->order_; ++a)
      for (int b = 0; b < grp->order_; ++b)
        grp->table_[static_cast<size_t>(a) * grp->order_ + b] = grp->mul_lazy(a, b);
  }

  grp->name_ = name.empty() ? synth_cyclic_name(orders) : name;
  return grp;
}

GroupPtr build_from_table(int order, const std::vector<int>& row_major_table, int order_cap,
                          const std::string& name) {
  if (order < 1) throw InvalidGroupTable("order must be positive");
  if (order > order_cap) throw OrderCapExceeded("table order exceeds cap");
  if (static_cast<long long>(row_major_table.size()) != static_cast<long long>(order) * order)
    throw InvalidGroupTable("table size does not match order^2");
  for (int v : row_major_table)
    if (v < 0 || v >= order) throw InvalidGroupTable("table entry out of range");

  auto at = [&](int a, int b) { return row_major_table[static_cast<size_t>(a) * order + b]; };

  for (int x = 0; x < order; ++x)
    if (at(0, x) != x || at(x, 0) != x)
      throw InvalidGroupTable("index 0 is not a two-sided identity");

  // rows and columns must be permutations
  for (int a = 0; a < order; ++a) {
    std::vector<char> seen_r(order, 0), seen_c(order, 0);
    for (int b = 0; b < order; ++b) {
      if (seen_r[at(a, b)]++) throw InvalidGroupTable("row is not a permutation");
      if (seen_c[at(b, a)]++) throw InvalidGroupTable("column is not a permutation");
    }
  }

  // associativity: full check for small orders, sampled beyond
  if (order <= 512) {
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b)
        for (int c = 0; c < order; ++c)
          if (at(at(a, b), c) != at(a, at(b, c)))
            throw InvalidGroupTable("multiplication is not associative");
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> d(0, order - 1);
    for (int t = 0; t < 1000000; ++t) {
      int a = d(rng), b = d(rng), c = d(rng);
      if (at(at(a, b), c) != at(a, at(b, c)))
        throw InvalidGroupTable("multiplication is not associative");
    }
  }

  auto grp = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  grp->origin_ = GroupOrigin::ExplicitTable;
  grp->order_ = order;
  grp->table_ = row_major_table;

  grp->inv_.resize(order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (at(a, b) == 0) {
        grp->inv_[a] = b;
        break;
      }

  grp->abelian_ = true;
  for (int a = 0; a < order && grp->abelian_; ++a)
    for (int b = a + 1; b < order; ++b)
      if (at(a, b) != at(b, a)) {
        grp->abelian_ = false;
        break;
      }

  grp->name_ = name.empty() ? "table" + std::to_string(order) : name;
  return grp;
}

ClassTablePtr conjugacy_classes(const GroupPtr& g) {
  int n = g->order();
  auto table = std::make_shared<ConjClassTable>();
  table->group = g;
  table->class_of.assign(n, -1);
  if (g->is_abelian()) {
    for (int x = 0; x < n; ++x) {
      table->class_of[x] = x;
      table->members.push_back({x});
    }
  }
  for (int x = 0; x < n; ++x) {
    if (table->class_of[x] != -1) continue;
    int cid = table->num_classes();
    std::set<int> orbit;
    for (int a = 0; a < n; ++a) orbit.insert(g->mul(a, g->mul(x, g->inv(a))));
    table->members.emplace_back(orbit.begin(), orbit.end());
    for (int y : table->members.back()) table->class_of[y] = cid;
  }
  table->inverse_class.resize(table->num_classes());
  for (int c = 0; c < table->num_classes(); ++c)
    table->inverse_class[c] = table->class_of[g->inv(table->rep(c))];
  return table;
}

bool Subgroup::contains(int x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

int Subgroup::index_of(int x) const {
  auto it = std::lower_bound(members.begin(), members.end(), x);
  if (it == members.end() || *it != x) return -1;
  return static_cast<int>(it - members.begin());
}

Subgroup subgroup_closure(const GroupPtr& g, std::vector<int> generators) {
  for (int x : generators)
    if (x < 0 || x >= g->order()) throw IndexOutOfRange("generator index out of range");
  std::set<int> members{FiniteGroup::identity};
  std::queue<int> todo;
  todo.push(FiniteGroup::identity);
  for (int x : generators)
    if (members.insert(x).second) todo.push(x);
  while (!todo.empty()) {
    int cur = todo.front();
    todo.pop();
    for (int x : generators) {
      int y = g->mul(cur, x);
      if (members.insert(y).second) todo.push(y);
    }
  }
  return Subgroup{g, std::vector<int>(members.begin(), members.end())};
}

Subgroup commutator_subgroup(const GroupPtr& g) {
  if (g->is_abelian()) return Subgroup{g, {FiniteGroup::identity}};
  int n = g->order();
  std::set<int> comms;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      comms.insert(g->mul(g->mul(x, y), g->mul(g->inv(x), g->inv(y))));
  return subgroup_closure(g, std::vector<int>(comms.begin(), comms.end()));
}

bool is_subgroup(const GroupPtr& g, const std::vector<int>& members) {
  std::set<int> s(members.begin(), members.end());
  if (!s.count(FiniteGroup::identity)) return false;
  for (int x : s) {
    if (x < 0 || x >= g->order()) return false;
    if (!s.count(g->inv(x))) return false;
    for (int y : s)
      if (!s.count(g->mul(x, y))) return false;
  }
  return true;
}

GroupPtr subgroup_as_group(const Subgroup& s) {
  int m = s.size();
  if (m > kDenseTableLimit) throw OrderCapExceeded("subgroup too large to materialize as a table");
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = s.parent->mul(s.members[i], s.members[j]);
      int k = s.index_of(p);
      if (k < 0) throw NotASubgroup("member set is not closed under multiplication");
      table[static_cast<size_t>(i) * m + j] = k;
    }
  return build_from_table(m, table, kDefaultOrderCap, s.parent->name() + "-sub" + std::to_string(m));
}

namespace {

// Greedy generating set for an abelian group: scan elements in index
// order, keep those outside the span of what was already collected.
std::vector<int> greedy_generators(const FiniteGroup& g) {
  std::vector<int> gens;
  std::set<int> span{FiniteGroup::identity};
  for (int x = 1; x < g.order(); ++x) {
    if (span.count(x)) continue;
    gens.push_back(x);
    std::set<int> next;
    for (int s : span) {
      int p = s;
      do {
        next.insert(p);
        p = g.mul(p, x);
      } while (p != s);
    }
    span = std::move(next);
    if (static_cast<int>(span.size()) == g.order()) break;
  }
  return gens;
}

}  // namespace

Abelianization abelianize(const GroupPtr& g) {
  Abelianization ab;
  ab.group = g;

  if (g->is_abelian()) {
    ab.quotient = g;
    ab.phi.resize(g->order());
    std::iota(ab.phi.begin(), ab.phi.end(), 0);
  } else {
    Subgroup comm = commutator_subgroup(g);
    int n = g->order();
    // cosets keyed by their minimal element; identity coset gets id 0
    std::vector<int> coset_min(n, -1);
    std::vector<int> reps;
    for (int x = 0; x < n; ++x) {
      if (coset_min[x] != -1) continue;
      int mn = x;  // elements scanned in increasing order
      reps.push_back(mn);
      for (int h : comm.members) coset_min[g->mul(x, h)] = mn;
    }
    std::sort(reps.begin(), reps.end());
    int m = static_cast<int>(reps.size());
    if (m > kDenseTableLimit) throw OrderCapExceeded("abelianization quotient too large");
    std::vector<int> rep_id(n, -1);
    for (int i = 0; i < m; ++i) rep_id[reps[i]] = i;

    ab.phi.resize(n);
    for (int x = 0; x < n; ++x) ab.phi[x] = rep_id[coset_min[x]];

    std::vector<int> table(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        table[static_cast<size_t>(i) * m + j] = ab.phi[g->mul(reps[i], reps[j])];
    ab.quotient = build_from_table(m, table, kDefaultOrderCap, g->name() + "-ab");
  }

  // invariant factors of the abelian quotient via the Smith form of its
  // relation lattice over a greedy generating set
  const FiniteGroup& q = *ab.quotient;
  int m = q.order();
  if (m == 1) return ab;

  std::vector<int> gens = greedy_generators(q);
  int k = static_cast<int>(gens.size());

  // one representation vector per element, from a BFS over the Cayley graph
  std::vector<std::vector<long long>> dlog(m);
  std::vector<char> seen(m, 0);
  dlog[0].assign(k, 0);
  seen[0] = 1;
  std::queue<int> todo;
  todo.push(0);
  while (!todo.empty()) {
    int a = todo.front();
    todo.pop();
    for (int i = 0; i < k; ++i) {
      int b = q.mul(a, gens[i]);
      if (!seen[b]) {
        seen[b] = 1;
        dlog[b] = dlog[a];
        dlog[b][i] += 1;
        todo.push(b);
      }
    }
  }

  // relation lattice generated by closed edges dlog(a) + e_i - dlog(a*g_i)
  std::set<std::vector<long long>> rel;
  for (int a = 0; a < m; ++a)
    for (int i = 0; i < k; ++i) {
      int b = q.mul(a, gens[i]);
      std::vector<long long> v = dlog[a];
      v[i] += 1;
      for (int j = 0; j < k; ++j) v[j] -= dlog[b][j];
      if (std::any_of(v.begin(), v.end(), [](long long x) { return x != 0; })) rel.insert(v);
    }

  IntMatrix R = IntMatrix::from_rows({rel.begin(), rel.end()});
  IntMatrix N = R.transposed();  // k x |rel|, quotient = Z^k / column space
  SmithResult s = smith_normal_form(N);

  std::vector<long long> factors(k, 0);
  int nn = std::min(N.rows(), N.cols());
  for (int i = 0; i < k; ++i) factors[i] = i < nn ? s.D.at(i, i) : 0;
  for (long long d : factors)
    if (d <= 0) throw Error("internal: relation lattice not of full rank");

  // y = U x are the split coordinates; find one element per cyclic factor
  std::vector<std::vector<long long>> ycoord(m, std::vector<long long>(k, 0));
  for (int a = 0; a < m; ++a)
    for (int i = 0; i < k; ++i) {
      long long y = 0;
      for (int j = 0; j < k; ++j) y += s.U.at(i, j) * dlog[a][j];
      long long d = factors[i];
      ycoord[a][i] = ((y % d) + d) % d;
    }
  long long check = 1;
  for (int i = 0; i < k; ++i) {
    long long d = factors[i];
    if (d == 1) continue;
    check *= d;
    int gen = -1;
    for (int a = 0; a < m && gen < 0; ++a) {
      bool unit = true;
      for (int j = 0; j < k && unit; ++j) unit = ycoord[a][j] == (j == i ? 1 : 0);
      if (unit) gen = a;
    }
    if (gen < 0) throw Error("internal: no generator found for invariant factor");
    ab.cyclic_decomposition.push_back(d);
    ab.factor_generators.push_back(gen);
  }
  if (check != m) throw Error("internal: invariant factor product mismatch");
  return ab;
}

std::vector<std::vector<long long>> quotient_coordinates(const Abelianization& ab) {
  const FiniteGroup& q = *ab.quotient;
  int m = q.order();
  int k = static_cast<int>(ab.cyclic_decomposition.size());
  std::vector<std::vector<long long>> coords(m);
  std::vector<char> seen(m, 0);
  std::vector<long long> tuple(k, 0);
  int assigned = 0;
  for (;;) {
    int el = FiniteGroup::identity;
    for (int i = 0; i < k; ++i)
      el = q.mul(el, q.power(ab.factor_generators[i], tuple[i]));
    if (seen[el]) throw Error("internal: factor generators do not split the quotient");
    seen[el] = 1;
    coords[el] = tuple;
    ++assigned;
    int i = k - 1;
    while (i >= 0 && ++tuple[i] == ab.cyclic_decomposition[i]) tuple[i--] = 0;
    if (i < 0) break;
  }
  if (assigned != m) throw Error("internal: factor generators do not span the quotient");
  return coords;
}

int elementary_two_rank(const GroupPtr& a) {
  if (!a->is_abelian()) throw NotAbelian("elementary_two_rank requires an abelian group");
  int count = 0;
  for (int x = 0; x < a->order(); ++x)
    if (a->mul(x, x) == FiniteGroup::identity) ++count;
  int rank = 0;
  while ((1 << rank) < count) ++rank;
  if ((1 << rank) != count) throw Error("internal: involution count is not a power of two");
  return rank;
}

}  // namespace orbitdata
