#include "orbitdata/intmat.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "orbitdata/errors.hpp"

namespace orbitdata {

using boost::multiprecision::cpp_int;

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw Error("from_rows: ragged row list");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<long long> IntMatrix::row(int r) const {
  std::vector<long long> out(cols_);
  for (int j = 0; j < cols_; ++j) out[j] = at(r, j);
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) os << at(i, j) << (j + 1 == cols_ ? "" : " ");
    os << "\n";
  }
  return os.str();
}

namespace {

// int64 wrapper whose arithmetic throws on overflow, so the generic Smith
// routine can be rerun with cpp_int.
struct Checked64 {
  long long v = 0;
  Checked64() = default;
  Checked64(long long x) : v(x) {}

  Checked64 operator+(Checked64 o) const {
    long long r;
    if (__builtin_add_overflow(v, o.v, &r)) throw OverflowError("int64 add overflow");
    return r;
  }
  Checked64 operator-(Checked64 o) const {
    long long r;
    if (__builtin_sub_overflow(v, o.v, &r)) throw OverflowError("int64 sub overflow");
    return r;
  }
  Checked64 operator*(Checked64 o) const {
    long long r;
    if (__builtin_mul_overflow(v, o.v, &r)) throw OverflowError("int64 mul overflow");
    return r;
  }
  Checked64 operator/(Checked64 o) const { return v / o.v; }
  Checked64 operator-() const {
    if (v == std::numeric_limits<long long>::min()) throw OverflowError("int64 negate overflow");
    return -v;
  }
  bool operator==(Checked64 o) const { return v == o.v; }
  bool operator!=(Checked64 o) const { return v != o.v; }
  bool operator<(Checked64 o) const { return v < o.v; }
};

Checked64 abs_val(Checked64 x) { return x.v < 0 ? -x : x; }
cpp_int abs_val(const cpp_int& x) { return x < 0 ? cpp_int(-x) : x; }

bool is_zero(Checked64 x) { return x.v == 0; }
bool is_zero(const cpp_int& x) { return x == 0; }

long long to_int64(Checked64 x) { return x.v; }
long long to_int64(const cpp_int& x) {
  if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
    throw OverflowError("exact result does not fit in 64 bits");
  return static_cast<long long>(x);
}

template <typename T>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<T> a;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, T(0)) {}
  T& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const T& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }
};

template <typename T>
Mat<T> lift(const IntMatrix& m) {
  Mat<T> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = T(m.at(i, j));
  return out;
}

template <typename T>
IntMatrix lower(const Mat<T>& m) {
  IntMatrix out(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(i, j) = to_int64(m.at(i, j));
  return out;
}

// quotient with remainder minimal in absolute value, to keep entry growth
// and the transform matrices small
template <typename T>
T nearest_quotient(const T& a, const T& b) {
  T q = a / b;
  T r = a - q * b;
  if (abs_val(b) < abs_val(r) + abs_val(r)) {
    bool same_sign = (r < T(0)) == (b < T(0));
    q = same_sign ? q + T(1) : q - T(1);
  }
  return q;
}

// extended gcd, g > 0 for nonzero inputs
template <typename T>
void extgcd(T a, T b, T& g, T& x, T& y) {
  T old_r = a, r = b;
  T old_s = T(1), s = T(0);
  T old_t = T(0), tt = T(1);
  while (!is_zero(r)) {
    T q = old_r / r;
    T tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * tt;
    old_t = tt;
    tt = tmp;
  }
  g = old_r;
  x = old_s;
  y = old_t;
  if (g < T(0)) {
    g = -g;
    x = -x;
    y = -y;
  }
}

// Row/column reduction to Smith form, tracking U (row ops) and V (col ops)
// so that U * A_in * V = A_out at every step.  Elimination uses unimodular
// two-row (two-column) gcd updates, which keeps the transforms small.
template <typename T>
struct SmithWork {
  Mat<T> A, U, V;

  explicit SmithWork(const IntMatrix& in)
      : A(lift<T>(in)), U(Mat<T>::identity(in.rows())), V(Mat<T>::identity(in.cols())) {}

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < A.cols; ++k) std::swap(A.at(i, k), A.at(j, k));
    for (int k = 0; k < U.cols; ++k) std::swap(U.at(i, k), U.at(j, k));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < A.rows; ++k) std::swap(A.at(k, i), A.at(k, j));
    for (int k = 0; k < V.rows; ++k) std::swap(V.at(k, i), V.at(k, j));
  }
  void add_row_multiple(int dst, int src, T q) {  // row_dst += q * row_src
    for (int k = 0; k < A.cols; ++k) A.at(dst, k) = A.at(dst, k) + q * A.at(src, k);
    for (int k = 0; k < U.cols; ++k) U.at(dst, k) = U.at(dst, k) + q * U.at(src, k);
  }
  void add_col_multiple(int dst, int src, T q) {
    for (int k = 0; k < A.rows; ++k) A.at(k, dst) = A.at(k, dst) + q * A.at(k, src);
    for (int k = 0; k < V.rows; ++k) V.at(k, dst) = V.at(k, dst) + q * V.at(k, src);
  }
  // (row_a, row_b) <- (p row_a + q row_b, r row_a + s row_b), ps - qr = 1
  void row_combine(int a, int b, T p, T q, T r, T s) {
    for (int k = 0; k < A.cols; ++k) {
      T x = A.at(a, k), y = A.at(b, k);
      A.at(a, k) = p * x + q * y;
      A.at(b, k) = r * x + s * y;
    }
    for (int k = 0; k < U.cols; ++k) {
      T x = U.at(a, k), y = U.at(b, k);
      U.at(a, k) = p * x + q * y;
      U.at(b, k) = r * x + s * y;
    }
  }
  void col_combine(int a, int b, T p, T q, T r, T s) {
    for (int k = 0; k < A.rows; ++k) {
      T x = A.at(k, a), y = A.at(k, b);
      A.at(k, a) = p * x + q * y;
      A.at(k, b) = r * x + s * y;
    }
    for (int k = 0; k < V.rows; ++k) {
      T x = V.at(k, a), y = V.at(k, b);
      V.at(k, a) = p * x + q * y;
      V.at(k, b) = r * x + s * y;
    }
  }
  void negate_row(int i) {
    for (int k = 0; k < A.cols; ++k) A.at(i, k) = -A.at(i, k);
    for (int k = 0; k < U.cols; ++k) U.at(i, k) = -U.at(i, k);
  }

  bool find_pivot(int t, int& pr, int& pc) {
    bool found = false;
    T best(0);
    for (int i = t; i < A.rows; ++i)
      for (int j = t; j < A.cols; ++j) {
        if (is_zero(A.at(i, j))) continue;
        T a = abs_val(A.at(i, j));
        if (!found || a < best) {
          found = true;
          best = a;
          pr = i;
          pc = j;
        }
      }
    return found;
  }

  void clear_col_entry(int t, int i) {
    T a = A.at(t, t), b = A.at(i, t);
    T r = b - (b / a) * a;
    if (is_zero(r)) {
      add_row_multiple(i, t, -nearest_quotient(b, a));
    } else {
      T g, p, q;
      extgcd(a, b, g, p, q);
      row_combine(t, i, p, q, -(b / g), a / g);
    }
  }
  void clear_row_entry(int t, int j) {
    T a = A.at(t, t), b = A.at(t, j);
    T r = b - (b / a) * a;
    if (is_zero(r)) {
      add_col_multiple(j, t, -nearest_quotient(b, a));
    } else {
      T g, p, q;
      extgcd(a, b, g, p, q);
      col_combine(t, j, p, q, -(b / g), a / g);
    }
  }

  void run() {
    int n = std::min(A.rows, A.cols);
    for (int t = 0; t < n; ++t) {
      bool first = true;
      for (;;) {
        // re-selecting the minimal pivot every round keeps the Euclid
        // cascades short once gcd updates have shrunk the block
        int pr, pc;
        if (!find_pivot(t, pr, pc)) {
          if (!first) throw Error("internal: pivot vanished during reduction");
          return;
        }
        first = false;
        swap_rows(t, pr);
        swap_cols(t, pc);
        bool clean = true;
        for (int i = t + 1; i < A.rows; ++i)
          if (!is_zero(A.at(i, t))) {
            clear_col_entry(t, i);
            clean = false;
          }
        for (int j = t + 1; j < A.cols; ++j)
          if (!is_zero(A.at(t, j))) {
            clear_row_entry(t, j);
            clean = false;
          }
        if (!clean) continue;  // gcd column updates may refill the row
        // pivot must divide the whole remaining block
        bool divides = true;
        for (int i = t + 1; i < A.rows && divides; ++i)
          for (int j = t + 1; j < A.cols && divides; ++j) {
            T r = A.at(i, j) - (A.at(i, j) / A.at(t, t)) * A.at(t, t);
            if (!is_zero(r)) {
              add_row_multiple(t, i, T(1));
              divides = false;
            }
          }
        if (divides) break;
      }
      if (A.at(t, t) < T(0)) negate_row(t);
    }
  }
};

template <typename T>
SmithResult smith_impl(const IntMatrix& A) {
  SmithWork<T> w(A);
  w.run();
  return SmithResult{lower(w.A), lower(w.U), lower(w.V)};
}

template <typename T>
IntMatrix multiply_impl(const IntMatrix& A, const IntMatrix& B) {
  Mat<T> a = lift<T>(A), b = lift<T>(B);
  Mat<T> c(A.rows(), B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int k = 0; k < A.cols(); ++k) {
      if (is_zero(a.at(i, k))) continue;
      for (int j = 0; j < B.cols(); ++j)
        c.at(i, j) = c.at(i, j) + a.at(i, k) * b.at(k, j);
    }
  return lower(c);
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& A, bool force_exact) {
  if (!force_exact) {
    try {
      return smith_impl<Checked64>(A);
    } catch (const OverflowError&) {
      // fall through to arbitrary precision
    }
  }
  return smith_impl<cpp_int>(A);
}

std::vector<long long> smith_diagonal(const IntMatrix& A) {
  SmithResult s = smith_normal_form(A);
  std::vector<long long> d;
  int n = std::min(A.rows(), A.cols());
  for (int i = 0; i < n; ++i)
    if (s.D.at(i, i) != 0) d.push_back(s.D.at(i, i));
  return d;
}

IntMatrix multiply(const IntMatrix& A, const IntMatrix& B) {
  if (A.cols() != B.rows()) throw Error("multiply: dimension mismatch");
  try {
    return multiply_impl<Checked64>(A, B);
  } catch (const OverflowError&) {
    return multiply_impl<cpp_int>(A, B);
  }
}

IntMatrix right_kernel_rows(const IntMatrix& A) {
  SmithResult s = smith_normal_form(A);
  int n = std::min(A.rows(), A.cols());
  int rank = 0;
  for (int i = 0; i < n; ++i)
    if (s.D.at(i, i) != 0) ++rank;
  // A * V = U^-1 * D, so the columns of V beyond the rank span the kernel.
  IntMatrix out(A.cols() - rank, A.cols());
  for (int k = rank; k < A.cols(); ++k)
    for (int j = 0; j < A.cols(); ++j) out.at(k - rank, j) = s.V.at(j, k);
  return out;
}

namespace {

std::optional<std::vector<long long>> solve_with_smith(const SmithResult& s, int rows, int cols,
                                                       const std::vector<long long>& v) {
  if (static_cast<int>(v.size()) != cols) throw Error("solve: dimension mismatch");
  if (rows == 0) {
    for (long long x : v)
      if (x != 0) return std::nullopt;
    return std::vector<long long>{};
  }
  // x A = v  <=>  (x U^-1) D = v V; solve for z = x U^-1 then x = z U.
  IntMatrix vm(1, cols);
  for (int j = 0; j < cols; ++j) vm.at(0, j) = v[j];
  IntMatrix w = multiply(vm, s.V);
  std::vector<long long> z(rows, 0);
  int n = std::min(rows, cols);
  for (int j = 0; j < cols; ++j) {
    long long d = j < n ? s.D.at(j, j) : 0;
    if (d == 0) {
      if (w.at(0, j) != 0) return std::nullopt;
    } else {
      if (w.at(0, j) % d != 0) return std::nullopt;
      z[j] = w.at(0, j) / d;
    }
  }
  IntMatrix zm(1, rows);
  for (int i = 0; i < rows; ++i) zm.at(0, i) = z[i];
  IntMatrix x = multiply(zm, s.U);
  return x.row(0);
}

}  // namespace

std::optional<std::vector<long long>> solve_row_combination(const IntMatrix& A,
                                                            const std::vector<long long>& v) {
  SmithResult s = smith_normal_form(A);
  return solve_with_smith(s, A.rows(), A.cols(), v);
}

RowSpanSolver::RowSpanSolver(IntMatrix A) : a_(std::move(A)), s_(smith_normal_form(a_)) {}

std::optional<std::vector<long long>> RowSpanSolver::solve(const std::vector<long long>& v) const {
  return solve_with_smith(s_, a_.rows(), a_.cols(), v);
}

bool RowSpanSolver::contains(const std::vector<long long>& v) const {
  return solve(v).has_value();
}

bool in_row_span(const IntMatrix& A, const std::vector<long long>& v) {
  return solve_row_combination(A, v).has_value();
}

bool is_unimodular(const IntMatrix& A) {
  if (A.rows() != A.cols()) return false;
  int n = A.rows();
  if (n == 0) return true;
  // fraction-free Gaussian elimination; exact and immune to the entry growth
  // a second Smith reduction of a transform matrix would suffer
  Mat<cpp_int> m = lift<cpp_int>(A);
  cpp_int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (is_zero(m.at(k, k))) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (!is_zero(m.at(i, k))) {
          p = i;
          break;
        }
      if (p < 0) return false;  // singular
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  cpp_int det = m.at(n - 1, n - 1) * sign;
  return det == 1 || det == -1;
}

}  // namespace orbitdata
