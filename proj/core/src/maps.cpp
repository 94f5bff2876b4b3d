#include "orbitdata/maps.hpp"

#include <numeric>

#include "orbitdata/errors.hpp"

namespace orbitdata {

GroupHom make_hom_checked(const GroupPtr& source, const GroupPtr& target, std::vector<int> image) {
  if (static_cast<int>(image.size()) != source->order())
    throw NotAHomomorphism("image map has wrong length");
  for (int v : image)
    if (v < 0 || v >= target->order()) throw NotAHomomorphism("image element out of range");
  if (image[FiniteGroup::identity] != FiniteGroup::identity)
    throw NotAHomomorphism("identity does not map to identity");
  int n = source->order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (image[source->mul(x, y)] != target->mul(image[x], image[y]))
        throw NotAHomomorphism("multiplicativity fails at a pair");
  return GroupHom{source, target, std::move(image)};
}

GroupHom hom_from_generator_images(const GroupPtr& source, const GroupPtr& target,
                                   const std::vector<int>& generator_images) {
  std::vector<int> image(source->order(), -1);
  image[FiniteGroup::identity] = FiniteGroup::identity;
  switch (source->origin()) {
    case GroupOrigin::Permutation: {
      const auto& gens = source->generator_elements();
      if (generator_images.size() != gens.size())
        throw NotAHomomorphism("expected one image per source generator");
      // follow the BFS parents: every element is parent * generator
      for (int x = 1; x < source->order(); ++x) {
        // discovery order coincides with the index order, so parents are done
        int p = source->bfs_parent()[x];
        int gi = source->bfs_gen()[x];
        image[x] = target->mul(image[p], generator_images[gi]);
      }
      break;
    }
    case GroupOrigin::CyclicProduct: {
      const auto& orders = source->factor_orders();
      if (generator_images.size() != orders.size())
        throw NotAHomomorphism("expected one image per cyclic factor");
      for (int x = 0; x < source->order(); ++x) {
        std::vector<int> c = source->coords_of(x);
        int acc = FiniteGroup::identity;
        for (size_t i = 0; i < c.size(); ++i)
          acc = target->mul(acc, target->power(generator_images[i], c[i]));
        image[x] = acc;
      }
      break;
    }
    case GroupOrigin::ExplicitTable:
      if (static_cast<int>(generator_images.size()) != source->order())
        throw NotAHomomorphism("table groups need the full image map");
      image = generator_images;
      break;
  }
  return make_hom_checked(source, target, std::move(image));
}

GroupHom identity_hom(const GroupPtr& g) {
  std::vector<int> image(g->order());
  std::iota(image.begin(), image.end(), 0);
  return GroupHom{g, g, std::move(image)};
}

GroupHom compose(const GroupHom& f, const GroupHom& g) {
  if (g.target.get() != f.source.get() && !g.target->same_group(*f.source))
    throw NotAHomomorphism("compose: inner target differs from outer source");
  std::vector<int> image(g.source->order());
  for (int x = 0; x < g.source->order(); ++x) image[x] = f.image[g.image[x]];
  return GroupHom{g.source, f.target, std::move(image)};
}

GroupHom abelianization_hom(const GroupPtr& g, const Abelianization& ab) {
  return GroupHom{g, ab.quotient, ab.phi};
}

OrbitDatum induced_map(const GroupHom& f, const OrbitDatum& d, const ConjClassTable& src_classes,
                       const ConjClassTable& tgt_classes) {
  std::map<int, long long> counts;
  for (const auto& [c, k] : d.counts) {
    int img = f.image[src_classes.rep(c)];
    if (img == FiniteGroup::identity) continue;  // regular orbits contribute nothing
    counts[tgt_classes.class_of[img]] += k;
  }
  return make_datum(f.target, counts);
}

OrbitDatum restrict_datum(const OrbitDatum& d, const ConjClassTable& src_classes,
                          const Subgroup& k, const GroupPtr& k_group,
                          const ConjClassTable& k_classes) {
  const GroupPtr& g = d.group;
  if (!is_subgroup(g, k.members)) throw NotASubgroup("member list is not a subgroup");
  int n = g->order();
  std::map<int, long long> counts;
  for (const auto& [c, mult] : d.counts) {
    int gamma = src_classes.rep(c);
    int nu = g->element_order(gamma);
    std::vector<char> visited(n, 0);
    for (int a = 0; a < n; ++a) {
      if (visited[a]) continue;
      // mark the double coset K a <gamma>
      for (int kk : k.members) {
        int base = g->mul(kk, a);
        int cur = base;
        for (int j = 0; j < nu; ++j) {
          visited[cur] = 1;
          cur = g->mul(cur, gamma);
        }
      }
      int delta = g->mul(a, g->mul(gamma, g->inv(a)));
      int pw = delta;
      int da = 1;
      while (!k.contains(pw)) {
        pw = g->mul(pw, delta);
        ++da;
      }
      if (da < nu) counts[k_classes.class_of[k.index_of(pw)]] += mult;
    }
  }
  return make_datum(k_group, counts);
}

bool two_torsion_only(const GroupPtr& g) {
  ClassTablePtr classes = conjugacy_classes(g);
  for (int c = 0; c < classes->num_classes(); ++c)
    if (classes->inverse_class[c] != c) return false;
  return true;
}

AbelianGroupShape schur_multiplier_abelian(const GroupPtr& g) {
  if (!g->is_abelian()) throw NotAbelian("Schur multiplier implemented for abelian groups only");
  Abelianization ab = abelianize(g);
  const auto& m = ab.cyclic_decomposition;
  AbelianGroupShape shape;
  // gcd(m_i, m_j) = m_i for i < j along the divisibility chain
  for (size_t i = 0; i + 1 < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j)
      if (m[i] > 1) shape.invariant_factors.push_back(m[i]);
  std::sort(shape.invariant_factors.begin(), shape.invariant_factors.end());
  return shape;
}

CobordismReport cobordism_report(const GroupPtr& g) {
  CobordismReport r;
  r.b_structure = structure_closed_form(g);
  if (g->is_abelian()) r.h2 = schur_multiplier_abelian(g);
  r.extension_kind = r.b_structure.two_torsion_rank == 0 ? "split-direct-sum" : "undetermined";
  r.every_action_cobordant_to_free =
      r.b_structure.free_rank == 0 && r.b_structure.two_torsion_rank == 0;
  return r;
}

}  // namespace orbitdata
