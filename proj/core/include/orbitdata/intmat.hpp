#ifndef ORBITDATA_INTMAT_HPP
#define ORBITDATA_INTMAT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbitdata {

// Dense matrix over the integers.  Entries are stored as int64; every
// routine that can blow past 64 bits reruns internally with arbitrary
// precision and converts back (OverflowError if the final result itself
// does not fit, which does not happen at the lattice sizes this library
// works with).  No floating point anywhere.
class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  long long at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  long long& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }

  std::vector<long long> row(int r) const;
  IntMatrix transposed() const;

  bool operator==(const IntMatrix& o) const = default;

  std::string to_string() const;  // for debugging and error messages

private:
  int rows_, cols_;
  std::vector<long long> a_;
};

// U * A * V = D with U, V unimodular and D diagonal, D[i][i] >= 0 and
// D[i][i] | D[i+1][i+1].
struct SmithResult {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
};

// Pivot selection is minimal nonzero absolute value; the computation
// retries with arbitrary-precision integers if 64-bit arithmetic
// overflows (force_exact skips the 64-bit attempt, for tests).
//
// The returned transforms are 64-bit; an adversarial dense input can in
// principle drive their exact values past that range, which raises
// OverflowError.  The kernel and relation lattices built by this library
// stay orders of magnitude below the limit.
SmithResult smith_normal_form(const IntMatrix& A, bool force_exact = false);

// Diagonal of the Smith form, nonzero entries only (includes 1s).
std::vector<long long> smith_diagonal(const IntMatrix& A);

// Rows spanning { x : A x^T = 0 } as a full-rank lattice basis.
IntMatrix right_kernel_rows(const IntMatrix& A);

// Exact matrix product (checked, big-int fallback).
IntMatrix multiply(const IntMatrix& A, const IntMatrix& B);

// Solves x A = v over the integers, x a row vector; nullopt if v is not in
// the lattice spanned by the rows of A.
std::optional<std::vector<long long>> solve_row_combination(const IntMatrix& A,
                                                            const std::vector<long long>& v);

bool in_row_span(const IntMatrix& A, const std::vector<long long>& v);

// True iff the matrix is square with determinant +/-1.
bool is_unimodular(const IntMatrix& A);

// Factors a row lattice once so that repeated solves/membership tests cost
// one vector-matrix product each.
class RowSpanSolver {
public:
  explicit RowSpanSolver(IntMatrix A);

  std::optional<std::vector<long long>> solve(const std::vector<long long>& v) const;
  bool contains(const std::vector<long long>& v) const;

  const IntMatrix& lattice() const { return a_; }

private:
  IntMatrix a_;
  SmithResult s_;
};

}  // namespace orbitdata

#endif
