#include "orbitdata/lattice_oracle.hpp"

#include "orbitdata/errors.hpp"

namespace orbitdata {

std::vector<long long> datum_vector(const SignedDatum& d, const ConjClassTable& classes) {
  std::vector<long long> v(classes.num_classes() - 1, 0);
  for (const auto& [c, k] : d.counts) {
    if (c <= 0 || c >= classes.num_classes()) throw IndexOutOfRange("class id out of range");
    v[c - 1] = k;
  }
  return v;
}

IntMatrix kernel_lattice(const ConjClassTable& classes, const Abelianization& ab) {
  int nclasses = classes.num_classes() - 1;
  int k = static_cast<int>(ab.cyclic_decomposition.size());
  std::vector<std::vector<long long>> coords = quotient_coordinates(ab);

  IntMatrix stacked(k, nclasses + k);
  for (int j = 0; j < nclasses; ++j) {
    int img = ab.phi[classes.rep(j + 1)];
    for (int i = 0; i < k; ++i) stacked.at(i, j) = coords[img][i];
  }
  for (int i = 0; i < k; ++i) stacked.at(i, nclasses + i) = ab.cyclic_decomposition[i];

  IntMatrix full = right_kernel_rows(stacked);
  if (full.rows() != nclasses)
    throw Error("internal: kernel projection has unexpected rank");
  IntMatrix out(nclasses, nclasses);
  for (int i = 0; i < nclasses; ++i)
    for (int j = 0; j < nclasses; ++j) out.at(i, j) = full.at(i, j);
  return out;
}

IntMatrix relation_vectors(const ConjClassTable& classes) {
  int nclasses = classes.num_classes() - 1;
  std::vector<std::vector<long long>> rows;
  for (int c = 1; c <= nclasses; ++c) {
    int ci = classes.inverse_class[c];
    if (ci < c) continue;
    std::vector<long long> r(nclasses, 0);
    if (ci == c)
      r[c - 1] = 2;
    else {
      r[c - 1] = 1;
      r[ci - 1] = 1;
    }
    rows.push_back(std::move(r));
  }
  IntMatrix m = IntMatrix::from_rows(rows);
  if (m.rows() == 0) return IntMatrix(0, nclasses);
  return m;
}

AbelianGroupShape quotient_shape(const IntMatrix& kernel, const IntMatrix& relations) {
  RowSpanSolver ks(kernel);
  std::vector<std::vector<long long>> in_basis;
  for (int i = 0; i < relations.rows(); ++i) {
    auto x = ks.solve(relations.row(i));
    if (!x) throw RelationOutsideKernel("relation vector outside the kernel lattice");
    in_basis.push_back(*x);
  }
  AbelianGroupShape shape;
  if (in_basis.empty()) {
    shape.free_rank = kernel.rows();
    return shape;
  }
  IntMatrix X = IntMatrix::from_rows(in_basis);
  std::vector<long long> diag = smith_diagonal(X);
  shape.free_rank = kernel.rows() - static_cast<long long>(diag.size());
  for (long long d : diag)
    if (d > 1) shape.invariant_factors.push_back(d);
  return shape;
}

AbelianGroupShape oracle_shape(const GroupPtr& g) {
  ClassTablePtr classes = conjugacy_classes(g);
  Abelianization ab = abelianize(g);
  return quotient_shape(kernel_lattice(*classes, ab), relation_vectors(*classes));
}

StructureReport oracle_structure(const GroupPtr& g) {
  AbelianGroupShape shape = oracle_shape(g);
  for (long long d : shape.invariant_factors)
    if (d != 2)
      throw UnexpectedTorsion("oracle found an invariant factor " + std::to_string(d) +
                              " != 2 for " + g->name());
  StructureReport r;
  r.free_rank = shape.free_rank;
  r.two_torsion_rank = static_cast<long long>(shape.invariant_factors.size());
  r.card_T_plus = r.free_rank;
  r.card_S = r.two_torsion_rank;
  r.n_Kprime = 0;
  r.source = "oracle";
  return r;
}

bool lattice_membership(const SignedDatum& v, const RowSpanSolver& relation_solver,
                        const ConjClassTable& classes) {
  return relation_solver.contains(datum_vector(v, classes));
}

}  // namespace orbitdata
