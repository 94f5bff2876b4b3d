#include "orbitdata/basis.hpp"

#include <algorithm>

#include "orbitdata/errors.hpp"

namespace orbitdata {

std::string tag_name(BasisTag t) {
  switch (t) {
    case BasisTag::W: return "W";
    case BasisTag::V: return "V";
    case BasisTag::L: return "L";
    case BasisTag::N1: return "N1";
    case BasisTag::N2: return "N2";
    case BasisTag::N3: return "N3";
    case BasisTag::N4: return "N4";
    case BasisTag::N5: return "N5";
    case BasisTag::N6: return "N6";
    case BasisTag::N7: return "N7";
  }
  return "?";
}

namespace {

std::vector<long long> prime_power_parts(long long d) {
  std::vector<long long> parts;
  for (long long p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    long long q = 1;
    while (d % p == 0) {
      q *= p;
      d /= p;
    }
    parts.push_back(q);
  }
  if (d > 1) parts.push_back(d);
  std::sort(parts.begin(), parts.end());
  return parts;
}

// exponents of the canonical positive half / self-inverse set of a cyclic
// factor of the given order
void cyclic_exponents(long long m, std::vector<long long>& t_plus, std::vector<long long>& s) {
  t_plus.clear();
  s.clear();
  if (m % 2 == 0) {
    for (long long i = 1; i < m / 2; ++i) t_plus.push_back(i);
    s.push_back(m / 2);
  } else {
    for (long long i = 1; i <= (m - 1) / 2; ++i) t_plus.push_back(i);
  }
}

}  // namespace

AbelianBasisSets abelian_basis_sets(const FiniteGroup& grp,
                                    const std::vector<std::pair<long long, int>>& factors) {
  AbelianBasisSets acc;  // everything expressed as elements of grp
  for (const auto& [m, gen] : factors) {
    std::vector<long long> texp, sexp;
    cyclic_exponents(m, texp, sexp);
    std::vector<int> ft, fs, fall;
    for (long long e : texp) ft.push_back(grp.power(gen, e));
    for (long long e : sexp) fs.push_back(grp.power(gen, e));
    for (long long e = 1; e < m; ++e) fall.push_back(grp.power(gen, e));

    AbelianBasisSets next;
    next.w_tuples = acc.w_tuples;
    next.v_tuples = acc.v_tuples;
    // cyclic family of the new factor
    for (long long e : texp)
      next.w_tuples.push_back({gen, grp.power(gen, e), grp.power(gen, m - 1 - e)});
    // mixed triples [x, y, (xy)^-1] and [x, y, xy]
    for (int x : acc.t_plus)
      for (int y : fall) next.w_tuples.push_back({x, y, grp.inv(grp.mul(x, y))});
    for (int x : acc.s)
      for (int y : ft) next.w_tuples.push_back({x, y, grp.inv(grp.mul(x, y))});
    for (int x : acc.s)
      for (int y : fs) next.v_tuples.push_back({x, y, grp.mul(x, y)});

    next.t_plus = acc.t_plus;
    for (int x : acc.t_plus)
      for (int y : fall) next.t_plus.push_back(grp.mul(x, y));
    for (int y : ft) next.t_plus.push_back(y);
    for (int x : acc.s)
      for (int y : ft) next.t_plus.push_back(grp.mul(x, y));
    next.s = acc.s;
    for (int y : fs) next.s.push_back(y);
    for (int x : acc.s)
      for (int y : fs) next.s.push_back(grp.mul(x, y));

    acc = std::move(next);
  }
  std::sort(acc.t_plus.begin(), acc.t_plus.end());
  std::sort(acc.s.begin(), acc.s.end());
  return acc;
}

std::vector<std::vector<int>> l_tuples(const FiniteGroup& grp, const std::vector<int>& gens) {
  int n = static_cast<int>(gens.size());
  std::vector<std::vector<int>> out;
  // subsets ordered by size, then lexicographically by index tuple
  for (int s = 2; s <= n; ++s) {
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      std::vector<int> tuple;
      int prod = FiniteGroup::identity;
      for (int i : idx) {
        tuple.push_back(gens[i]);
        prod = grp.mul(prod, gens[i]);
      }
      tuple.push_back(prod);
      out.push_back(std::move(tuple));
      int i = s - 1;
      while (i >= 0 && idx[i] == n - s + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

std::vector<std::pair<long long, int>> refined_prime_power_factors(const Abelianization& ab) {
  std::vector<std::pair<long long, int>> out;
  const FiniteGroup& q = *ab.quotient;
  for (size_t i = 0; i < ab.cyclic_decomposition.size(); ++i) {
    long long d = ab.cyclic_decomposition[i];
    for (long long pp : prime_power_parts(d))
      out.emplace_back(pp, q.power(ab.factor_generators[i], d / pp));
  }
  return out;
}

std::vector<int> h2_prime_generators(const ClassFrame& frame) {
  const FiniteGroup& q = *frame.ab.quotient;
  std::vector<int> gens;
  std::set<int> span{FiniteGroup::identity};
  auto try_add = [&](int x) {
    if (span.count(x)) return;
    gens.push_back(x);
    std::set<int> next;
    for (int s : span) {
      next.insert(s);
      next.insert(q.mul(s, x));
    }
    span = std::move(next);
  };
  for (int x : frame.m_set)
    if (x != FiniteGroup::identity) try_add(x);
  int k_count = static_cast<int>(gens.size());
  if (k_count != frame.n_kprime) throw Error("internal: K' generator count mismatch");
  for (int x : frame.h2_prime)
    if (x != FiniteGroup::identity) try_add(x);
  if (static_cast<int>(gens.size()) != frame.n_gprime)
    throw Error("internal: H'_2 generator count mismatch");
  return gens;
}

namespace {

int bit_words(int nbits) { return (nbits + 63) / 64; }

std::vector<uint64_t> bits_of_torsion(const CanonicalForm& f, const std::vector<int>& s_col,
                                      int scount) {
  std::vector<uint64_t> w(bit_words(scount), 0);
  for (int c : f.torsion) {
    int col = s_col[c];
    w[col / 64] |= uint64_t{1} << (col % 64);
  }
  return w;
}

void xor_into(std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}

bool all_zero(const std::vector<uint64_t>& a) {
  for (uint64_t w : a)
    if (w) return false;
  return true;
}

bool get_bit(const std::vector<uint64_t>& a, int i) { return (a[i / 64] >> (i % 64)) & 1; }

BasisCatalog finish_catalog(FramePtr frame, std::vector<std::pair<BasisTag, OrbitDatum>> raw) {
  BasisCatalog cat;
  cat.frame = frame;

  std::map<std::pair<std::map<int, long long>, std::set<int>>, int> seen;
  for (auto& [tag, datum] : raw) {
    CanonicalForm f = canonicalize(datum, frame);
    auto key = std::make_pair(f.free, f.torsion);
    auto it = seen.find(key);
    if (it != seen.end()) {
      cat.warnings.push_back("duplicate basis tuple dropped (" + tag_name(tag) + ")");
      continue;
    }
    if (f.is_zero()) {
      cat.warnings.push_back("zero basis tuple dropped (" + tag_name(tag) + ")");
      continue;
    }
    seen[key] = static_cast<int>(cat.elements.size());
    BasisElement el{tag, std::move(datum), std::move(f), false, static_cast<int>(cat.elements.size())};
    el.infinite_order = !el.form.free.empty();
    cat.elements.push_back(std::move(el));
  }

  for (int i = 0; i < cat.size(); ++i)
    (cat.elements[i].infinite_order ? cat.infinite_indices : cat.torsion_indices).push_back(i);

  int nc = frame->num_classes();
  cat.t_plus_col.assign(nc, -1);
  cat.s_col.assign(nc, -1);
  for (size_t j = 0; j < frame->t_plus.size(); ++j) cat.t_plus_col[frame->t_plus[j]] = static_cast<int>(j);
  for (size_t j = 0; j < frame->s_classes.size(); ++j) cat.s_col[frame->s_classes[j]] = static_cast<int>(j);

  int tp = static_cast<int>(frame->t_plus.size());
  cat.free_matrix = IntMatrix(static_cast<int>(cat.infinite_indices.size()), tp);
  for (size_t r = 0; r < cat.infinite_indices.size(); ++r)
    for (const auto& [c, k] : cat.elements[cat.infinite_indices[r]].form.free)
      cat.free_matrix.at(static_cast<int>(r), cat.t_plus_col[c]) = k;
  cat.free_solver = std::make_shared<RowSpanSolver>(cat.free_matrix);

  int sc = static_cast<int>(frame->s_classes.size());
  for (int i : cat.torsion_indices)
    cat.torsion_rows.push_back(bits_of_torsion(cat.elements[i].form, cat.s_col, sc));

  // right inverse B with M B = I over GF(2): solve one column per torsion
  // element by Gaussian elimination on M^T
  int tor = static_cast<int>(cat.torsion_indices.size());
  if (tor > 0) {
    // build M^T augmented with I_tor on the right, eliminate, then read the
    // solution columns; rows of the system are S bits, unknowns are the B rows
    int rows = sc, colsM = tor;
    std::vector<std::vector<uint64_t>> aug(rows, std::vector<uint64_t>(bit_words(colsM + rows), 0));
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < colsM; ++c)
        if (get_bit(cat.torsion_rows[c], r)) aug[r][c / 64] |= uint64_t{1} << (c % 64);
      int acol = colsM + r;
      aug[r][acol / 64] |= uint64_t{1} << (acol % 64);
    }
    // forward elimination to reduced row echelon over the first tor columns
    std::vector<int> pivot_row(colsM, -1);
    int rr = 0;
    for (int c = 0; c < colsM && rr < rows; ++c) {
      int p = -1;
      for (int r = rr; r < rows; ++r)
        if (get_bit(aug[r], c)) {
          p = r;
          break;
        }
      if (p < 0) continue;
      std::swap(aug[p], aug[rr]);
      for (int r = 0; r < rows; ++r)
        if (r != rr && get_bit(aug[r], c)) xor_into(aug[r], aug[rr]);
      pivot_row[c] = rr;
      ++rr;
    }
    for (int c = 0; c < colsM; ++c)
      if (pivot_row[c] < 0) throw Error("internal: torsion basis rows are GF(2)-dependent");
    // B row for S-bit s: coefficients x with x M = e_s'?  We instead store,
    // for each pivot column c, which original S bits feed it: row c of B is
    // the augmented part of the pivot row of c.
    cat.torsion_inverse.assign(sc, std::vector<uint64_t>(bit_words(tor), 0));
    for (int c = 0; c < colsM; ++c) {
      const auto& row = aug[pivot_row[c]];
      for (int s = 0; s < rows; ++s) {
        int acol = colsM + s;
        if ((row[acol / 64] >> (acol % 64)) & 1)
          cat.torsion_inverse[s][c / 64] ^= uint64_t{1} << (c % 64);
      }
    }
  }
  return cat;
}

void require_cyclic_product(const GroupPtr& g, const char* what) {
  if (g->origin() != GroupOrigin::CyclicProduct)
    throw WrongShape(std::string(what) + " requires a cyclic-product group");
}

}  // namespace

BasisCatalog cyclic_basis(const GroupPtr& g) {
  require_cyclic_product(g, "cyclic_basis");
  const auto& orders = g->factor_orders();
  if (orders.size() > 1) throw WrongShape("cyclic_basis requires a single cyclic factor");
  if (!orders.empty() && prime_power_parts(orders[0]).size() != 1)
    throw WrongShape("cyclic_basis requires prime power order");
  return abelian_basis(g);
}

BasisCatalog abelian_basis(const GroupPtr& g) {
  require_cyclic_product(g, "abelian_basis");
  FramePtr frame = build_class_frame_abelian_canonical(g);
  std::vector<std::pair<long long, int>> factors;
  for (size_t i = 0; i < g->factor_orders().size(); ++i)
    factors.emplace_back(g->factor_orders()[i], g->factor_generators()[i]);
  AbelianBasisSets sets = abelian_basis_sets(*g, factors);

  std::vector<std::pair<BasisTag, OrbitDatum>> raw;
  for (const auto& t : sets.w_tuples)
    raw.emplace_back(BasisTag::W, datum_from_elements(g, *frame->classes, t));
  for (const auto& t : sets.v_tuples)
    raw.emplace_back(BasisTag::V, datum_from_elements(g, *frame->classes, t));
  return finish_catalog(frame, std::move(raw));
}

BasisCatalog L_basis(const GroupPtr& g, const std::vector<int>& generators) {
  if (!g->is_abelian()) throw NotElementaryAbelian("group is not abelian");
  for (int x = 0; x < g->order(); ++x)
    if (g->mul(x, x) != FiniteGroup::identity)
      throw NotElementaryAbelian("group has an element of order > 2");
  std::set<int> span{FiniteGroup::identity};
  for (int z : generators) {
    if (z <= 0 || z >= g->order() || g->mul(z, z) != FiniteGroup::identity)
      throw NotElementaryAbelian("generator is not an involution");
    if (span.count(z)) throw NotElementaryAbelian("generators are not independent");
    std::set<int> next;
    for (int s : span) {
      next.insert(s);
      next.insert(g->mul(s, z));
    }
    span = std::move(next);
  }
  if (static_cast<int>(span.size()) != g->order())
    throw NotElementaryAbelian("generators do not span the group");

  FramePtr frame = build_class_frame(g);
  std::vector<std::pair<BasisTag, OrbitDatum>> raw;
  for (const auto& t : l_tuples(*g, generators))
    raw.emplace_back(BasisTag::L, datum_from_elements(g, *frame->classes, t));
  return finish_catalog(frame, std::move(raw));
}

BasisCatalog general_basis(const GroupPtr& g) {
  FramePtr frame = build_class_frame(g);
  const ConjClassTable& cls = *frame->classes;
  const FiniteGroup& q = *frame->ab.quotient;
  std::vector<std::pair<BasisTag, OrbitDatum>> raw;

  auto datum_of_classes = [&](std::vector<int> class_ids) {
    std::map<int, long long> counts;
    for (int c : class_ids) counts[c] += 1;
    return make_datum(g, counts);
  };

  // N1: nontrivial classes inside the commutator subgroup, T+ or S side
  for (int c = 1; c < cls.num_classes(); ++c)
    if (frame->fiber_of[c] == FiniteGroup::identity &&
        (frame->is_in_t_plus(c) || frame->is_in_s(c)))
      raw.emplace_back(BasisTag::N1, datum_of_classes({c}));

  // N2..N4: pairs against the fiber head
  for (int x = 0; x < q.order(); ++x) {
    const auto& fib = frame->fiber_classes[x];
    int h = frame->head[x];
    if (q.inv(x) != x) {
      if (!frame->is_in_t_plus(h)) continue;  // only the T+ side of a fiber pair
      for (size_t i = 1; i < fib.size(); ++i)
        raw.emplace_back(BasisTag::N2, datum_of_classes({h, cls.inverse_class[fib[i]]}));
    } else if (x != FiniteGroup::identity) {
      if (frame->is_in_t_plus(h)) {
        for (size_t i = 1; i < fib.size(); ++i)
          if (frame->is_in_t_plus(fib[i]))
            raw.emplace_back(BasisTag::N3, datum_of_classes({h, fib[i]}));
      } else {
        for (size_t i = 1; i < fib.size(); ++i)
          if (frame->is_in_t_plus(fib[i]) || frame->is_in_s(fib[i]))
            raw.emplace_back(BasisTag::N4, datum_of_classes({h, fib[i]}));
      }
    }
  }

  // N5: section images of the W family of the abelianization
  AbelianBasisSets qsets = abelian_basis_sets(q, refined_prime_power_factors(frame->ab));
  for (const auto& t : qsets.w_tuples)
    raw.emplace_back(BasisTag::N5,
                     datum_of_classes({frame->head[t[0]], frame->head[t[1]], frame->head[t[2]]}));

  // N6/N7: section images of the L family over H'_2 with K' generators first
  std::vector<int> zs = h2_prime_generators(*frame);
  for (const auto& t : l_tuples(q, zs)) {
    std::vector<int> mapped;
    for (int e : t) mapped.push_back(frame->head[e]);
    raw.emplace_back(BasisTag::N6, datum_of_classes(mapped));
  }
  for (int i = frame->n_kprime; i < frame->n_gprime; ++i)
    raw.emplace_back(BasisTag::N7, datum_of_classes({frame->head[zs[i]], frame->head[zs[i]]}));

  return finish_catalog(frame, std::move(raw));
}

Coordinates decompose(const CanonicalForm& x, const BasisCatalog& catalog) {
  if (!x.frame || (x.frame != catalog.frame && !same_frame(*x.frame, *catalog.frame)))
    throw FrameMismatch("form is not over the catalog's frame");
  const ClassFrame& frame = *catalog.frame;

  std::vector<long long> v(frame.t_plus.size(), 0);
  for (const auto& [c, k] : x.free) v[catalog.t_plus_col[c]] = k;
  auto solved = catalog.free_solver->solve(v);
  if (!solved) throw NotInSpan("free part outside the lattice spanned by the catalog");
  std::vector<long long> coeffs = *solved;

  Coordinates out;
  int sc = static_cast<int>(frame.s_classes.size());
  std::vector<uint64_t> residue = bits_of_torsion(x, catalog.s_col, sc);
  for (size_t r = 0; r < catalog.infinite_indices.size(); ++r) {
    long long k = coeffs[r];
    const BasisElement& el = catalog.elements[catalog.infinite_indices[r]];
    if (k != 0) out.free_coeffs[el.coordinate_index] = k;
    if (((k % 2) + 2) % 2 == 1)
      xor_into(residue, bits_of_torsion(el.form, catalog.s_col, sc));
  }

  int tor = static_cast<int>(catalog.torsion_indices.size());
  if (tor == 0) {
    if (!all_zero(residue)) throw NotInSpan("torsion residue outside the span of the catalog");
    return out;
  }
  std::vector<uint64_t> eps(bit_words(tor), 0);
  for (int s = 0; s < sc; ++s)
    if (get_bit(residue, s)) xor_into(eps, catalog.torsion_inverse[s]);
  // verify, since the bit solve used a right inverse
  std::vector<uint64_t> check(residue.size(), 0);
  for (int t = 0; t < tor; ++t)
    if (get_bit(eps, t)) xor_into(check, catalog.torsion_rows[t]);
  xor_into(check, residue);
  if (!all_zero(check)) throw NotInSpan("torsion residue outside the span of the catalog");
  for (int t = 0; t < tor; ++t)
    if (get_bit(eps, t))
      out.torsion_coeffs.insert(catalog.elements[catalog.torsion_indices[t]].coordinate_index);
  return out;
}

CanonicalForm recombine(const Coordinates& coords, const BasisCatalog& catalog) {
  CanonicalForm acc = zero_form(catalog.frame);
  for (const auto& [idx, k] : coords.free_coeffs) {
    if (idx < 0 || idx >= catalog.size()) throw IndexOutOfRange("coordinate index out of range");
    acc = add(acc, scale(catalog.elements[idx].form, k));
  }
  for (int idx : coords.torsion_coeffs) {
    if (idx < 0 || idx >= catalog.size()) throw IndexOutOfRange("coordinate index out of range");
    acc = add(acc, catalog.elements[idx].form);
  }
  return acc;
}

}  // namespace orbitdata
