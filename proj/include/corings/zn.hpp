#ifndef CORINGS_ZN_HPP
#define CORINGS_ZN_HPP

// Exact linear algebra over the finite ground ring Z/n: matrices, Smith
// normal form with recorded unimodular transforms, linear solving with
// canonical (least lexicographic) solutions, kernels and image membership.
// Everything above this file reduces to these primitives.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace corings {

using Int = std::int64_t;
using Vec = std::vector<Int>;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& msg)
      : Error("DimensionMismatch: " + msg) {}
};
struct SubmoduleMismatch : Error {
  explicit SubmoduleMismatch(const std::string& msg)
      : Error("SubmoduleMismatch: " + msg) {}
};
struct BaseMismatch : Error {
  explicit BaseMismatch(const std::string& msg)
      : Error("BaseMismatch: " + msg) {}
};
struct CrossModuleError : Error {
  explicit CrossModuleError(const std::string& msg)
      : Error("CrossModuleError: " + msg) {}
};
struct AxiomViolation : Error {
  explicit AxiomViolation(const std::string& msg)
      : Error("AxiomViolation: " + msg) {}
};
struct AmbiguousCoaction : Error {
  explicit AmbiguousCoaction(const std::string& msg)
      : Error("AmbiguousCoaction: " + msg) {}
};
struct NotRational : Error {
  explicit NotRational(const std::string& msg)
      : Error("NotRational: " + msg) {}
};
struct NotGrouplike : Error {
  explicit NotGrouplike(const std::string& msg)
      : Error("NotGrouplike: " + msg) {}
};
struct NotSubalgebra : Error {
  explicit NotSubalgebra(const std::string& msg)
      : Error("NotSubalgebra: " + msg) {}
};
struct BadArity : Error {
  explicit BadArity(const std::string& msg) : Error("BadArity: " + msg) {}
};
struct BadInput : Error {
  explicit BadInput(const std::string& msg) : Error("BadInput: " + msg) {}
};
struct UnsupportedBase : Error {
  explicit UnsupportedBase(const std::string& msg)
      : Error("UnsupportedBase: " + msg) {}
};
struct EnumerationTooLarge : Error {
  explicit EnumerationTooLarge(const std::string& msg)
      : Error("EnumerationTooLarge: " + msg) {}
};

// ---------------------------------------------------------------------------
// RingContext
// ---------------------------------------------------------------------------

// The ground ring Z/n. All arithmetic keeps canonical representatives in
// [0, n). Z/n is commutative, artinian and quasi-Frobenius, which several
// higher-level laws rely on.
struct RingContext {
  Int modulus;

  explicit RingContext(Int n) : modulus(n) {
    if (n < 2) throw BadInput("modulus must be >= 2, got " + std::to_string(n));
  }

  Int norm(Int a) const {
    Int r = a % modulus;
    return r < 0 ? r + modulus : r;
  }
  Int add(Int a, Int b) const { return norm(a + b); }
  Int sub(Int a, Int b) const { return norm(a - b); }
  Int mul(Int a, Int b) const { return norm(norm(a) * norm(b)); }
  Int neg(Int a) const { return norm(-a); }

  bool is_unit(Int a) const { return std::gcd(norm(a), modulus) == 1; }

  // Multiplicative inverse of a unit.
  Int inv(Int a) const {
    a = norm(a);
    Int t = 0, new_t = 1, r = modulus, new_r = a;
    while (new_r != 0) {
      Int q = r / new_r;
      std::swap(t -= q * new_t, new_t);
      std::swap(r -= q * new_r, new_r);
    }
    if (r != 1) throw BadInput(std::to_string(a) + " is not a unit mod " +
                               std::to_string(modulus));
    return norm(t);
  }

  // Divisors of n in increasing order (the ideals of Z/n are exactly (d)).
  std::vector<Int> divisors() const {
    std::vector<Int> out;
    for (Int d = 1; d <= modulus; ++d)
      if (modulus % d == 0) out.push_back(d);
    return out;
  }

  bool operator==(const RingContext& o) const { return modulus == o.modulus; }
};

// ---------------------------------------------------------------------------
// ZnMatrix
// ---------------------------------------------------------------------------

// Dense row-major matrix over Z/n. Entries always canonical in [0, n).
class ZnMatrix {
 public:
  ZnMatrix() : mod_(2), rows_(0), cols_(0) {}

  ZnMatrix(Int mod, int rows, int cols)
      : mod_(mod), rows_(rows), cols_(cols),
        e_(static_cast<size_t>(rows) * cols, 0) {
    if (mod < 2) throw BadInput("modulus must be >= 2");
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative dimension");
  }

  ZnMatrix(Int mod, int rows, int cols, std::vector<Int> entries)
      : ZnMatrix(mod, rows, cols) {
    if (entries.size() != e_.size())
      throw DimensionMismatch("entry count " + std::to_string(entries.size()) +
                              " != " + std::to_string(rows) + "x" +
                              std::to_string(cols));
    RingContext R(mod);
    for (size_t i = 0; i < e_.size(); ++i) e_[i] = R.norm(entries[i]);
  }

  static ZnMatrix identity(Int mod, int k) {
    ZnMatrix m(mod, k, k);
    for (int i = 0; i < k; ++i) m.at(i, i) = 1;
    return m;
  }

  static ZnMatrix from_columns(Int mod, int rows,
                               const std::vector<Vec>& cols) {
    ZnMatrix m(mod, rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j) {
      if (static_cast<int>(cols[j].size()) != rows)
        throw DimensionMismatch("column length mismatch");
      for (int i = 0; i < rows; ++i) m.at(i, j) = m.ring().norm(cols[j][i]);
    }
    return m;
  }

  Int modulus() const { return mod_; }
  RingContext ring() const { return RingContext(mod_); }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  Int at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  Vec column(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
  }
  Vec row(int i) const {
    Vec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
  }
  void set_column(int j, const Vec& v) {
    for (int i = 0; i < rows_; ++i) at(i, j) = ring().norm(v[i]);
  }

  bool is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](Int x) { return x == 0; });
  }

  bool operator==(const ZnMatrix& o) const {
    return mod_ == o.mod_ && rows_ == o.rows_ && cols_ == o.cols_ &&
           e_ == o.e_;
  }

  ZnMatrix operator*(const ZnMatrix& o) const {
    check_mod(o);
    if (cols_ != o.rows_)
      throw DimensionMismatch("matmul " + shape() + " * " + o.shape());
    ZnMatrix out(mod_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        Int a = at(i, k);
        if (a == 0) continue;
        for (int j = 0; j < o.cols_; ++j)
          out.at(i, j) = (out.at(i, j) + a * o.at(k, j)) % mod_;
      }
    return out;
  }

  Vec apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != cols_)
      throw DimensionMismatch("apply: vector length " +
                              std::to_string(x.size()) + " vs cols " +
                              std::to_string(cols_));
    RingContext R(mod_);
    Vec out(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
      Int acc = 0;
      for (int j = 0; j < cols_; ++j) acc = (acc + at(i, j) * R.norm(x[j])) % mod_;
      out[i] = acc;
    }
    return out;
  }

  ZnMatrix operator+(const ZnMatrix& o) const {
    check_same_shape(o);
    ZnMatrix out(mod_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = (e_[i] + o.e_[i]) % mod_;
    return out;
  }
  ZnMatrix operator-(const ZnMatrix& o) const {
    check_same_shape(o);
    ZnMatrix out(mod_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i)
      out.e_[i] = ((e_[i] - o.e_[i]) % mod_ + mod_) % mod_;
    return out;
  }
  ZnMatrix scaled(Int c) const {
    RingContext R(mod_);
    c = R.norm(c);
    ZnMatrix out(mod_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = (e_[i] * c) % mod_;
    return out;
  }

  // Kronecker (tensor) product; index (i1,i2) flattens to i1*o.rows + i2.
  ZnMatrix kronecker(const ZnMatrix& o) const {
    check_mod(o);
    ZnMatrix out(mod_, rows_ * o.rows_, cols_ * o.cols_);
    for (int i1 = 0; i1 < rows_; ++i1)
      for (int j1 = 0; j1 < cols_; ++j1) {
        Int a = at(i1, j1);
        if (a == 0) continue;
        for (int i2 = 0; i2 < o.rows_; ++i2)
          for (int j2 = 0; j2 < o.cols_; ++j2)
            out.at(i1 * o.rows_ + i2, j1 * o.cols_ + j2) =
                (a * o.at(i2, j2)) % mod_;
      }
    return out;
  }

  ZnMatrix transposed() const {
    ZnMatrix out(mod_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  // Horizontal concatenation [this | o].
  ZnMatrix hconcat(const ZnMatrix& o) const {
    check_mod(o);
    if (rows_ != o.rows_) throw DimensionMismatch("hconcat row mismatch");
    ZnMatrix out(mod_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
      for (int j = 0; j < o.cols_; ++j) out.at(i, cols_ + j) = o.at(i, j);
    }
    return out;
  }

  // Vertical concatenation [this ; o].
  ZnMatrix vconcat(const ZnMatrix& o) const {
    check_mod(o);
    if (cols_ != o.cols_) throw DimensionMismatch("vconcat col mismatch");
    ZnMatrix out(mod_, rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i)
      for (int j = 0; j < cols_; ++j) out.at(rows_ + i, j) = o.at(i, j);
    return out;
  }

  ZnMatrix submatrix(int r0, int c0, int nrows, int ncols) const {
    ZnMatrix out(mod_, nrows, ncols);
    for (int i = 0; i < nrows; ++i)
      for (int j = 0; j < ncols; ++j) out.at(i, j) = at(r0 + i, c0 + j);
    return out;
  }

  std::string shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

  const std::vector<Int>& raw() const { return e_; }

 private:
  void check_mod(const ZnMatrix& o) const {
    if (mod_ != o.mod_) throw BaseMismatch("matrices over different moduli");
  }
  void check_same_shape(const ZnMatrix& o) const {
    check_mod(o);
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionMismatch("shape " + shape() + " vs " + o.shape());
  }

  Int mod_;
  int rows_, cols_;
  std::vector<Int> e_;
};

inline Vec vec_add(const RingContext& R, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vec_add length");
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = R.add(a[i], b[i]);
  return out;
}
inline Vec vec_sub(const RingContext& R, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vec_sub length");
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = R.sub(a[i], b[i]);
  return out;
}
inline Vec vec_scale(const RingContext& R, Int c, const Vec& a) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = R.mul(c, a[i]);
  return out;
}
inline bool vec_is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; });
}

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

// U*A*V = S with S diagonal, diagonal entries divisors of n forming a
// divisibility chain, U and V products of elementary matrices (unit
// determinant). invariant_factors records the invariant factor decomposition
// of the column span (image) of A: one factor n/gcd(d,n) per nonzero diagonal
// d, trivial factors dropped, so a free rank-k image reports k copies of n.
struct SmithForm {
  ZnMatrix S, U, V;
  std::vector<Int> invariant_factors;
  Int det_u = 1, det_v = 1;  // determinants of U, V (units mod n)
};

namespace detail {

// Extended gcd over Z: returns (g, x, y) with x*a + y*b = g >= 0.
inline void ext_gcd(Int a, Int b, Int& g, Int& x, Int& y) {
  if (b == 0) {
    g = a < 0 ? -a : a;
    x = a < 0 ? -1 : 1;
    y = 0;
    return;
  }
  Int x1, y1;
  ext_gcd(b, a % b, g, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
}

// A unit u mod n with u * a == gcd(a, n) (mod n). Every residue is a unit
// multiple of the divisor it generates.
inline Int unit_normalizer(Int a, Int n) {
  RingContext R(n);
  a = R.norm(a);
  Int g = std::gcd(a, n);
  if (g == n) return 1;  // a == 0
  Int ap = a / g, m = n / g;
  // Inverse of ap mod m, lifted to a unit mod n.
  Int t = 0, nt = 1, r = m, nr = ap % m;
  while (nr != 0) {
    Int q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  Int u0 = ((t % m) + m) % m;
  if (u0 == 0) u0 = m;  // m == 1 case: any unit works
  for (Int k = 0; k < g; ++k) {
    Int u = (u0 + k * m) % n;
    if (u != 0 && std::gcd(u, n) == 1) return u;
  }
  throw Error("unit_normalizer: no unit lift found (internal)");
}

}  // namespace detail

inline SmithForm smith_normal_form(const ZnMatrix& A) {
  const Int n = A.modulus();
  RingContext R(n);
  SmithForm f{A, ZnMatrix::identity(n, A.rows()),
              ZnMatrix::identity(n, A.cols()),
              {}, 1, 1};
  ZnMatrix& S = f.S;
  ZnMatrix& U = f.U;
  ZnMatrix& V = f.V;

  auto row_addmul = [&](ZnMatrix& M, int dst, int src, Int c) {
    for (int j = 0; j < M.cols(); ++j)
      M.at(dst, j) = R.add(M.at(dst, j), R.mul(c, M.at(src, j)));
  };
  auto col_addmul = [&](ZnMatrix& M, int dst, int src, Int c) {
    for (int i = 0; i < M.rows(); ++i)
      M.at(i, dst) = R.add(M.at(i, dst), R.mul(c, M.at(i, src)));
  };
  auto row_swap = [&](ZnMatrix& M, int a, int b) {
    for (int j = 0; j < M.cols(); ++j) std::swap(M.at(a, j), M.at(b, j));
  };
  auto col_swap = [&](ZnMatrix& M, int a, int b) {
    for (int i = 0; i < M.rows(); ++i) std::swap(M.at(i, a), M.at(i, b));
  };
  auto row_scale = [&](ZnMatrix& M, int r, Int u) {
    for (int j = 0; j < M.cols(); ++j) M.at(r, j) = R.mul(u, M.at(r, j));
  };
  // Unimodular 2x2 row transform from an extended gcd step: replaces rows
  // (r1, r2) by (x*r1 + y*r2, -(b/g)*r1 + (a/g)*r2); determinant 1 over Z.
  auto row_gcd_step = [&](int r1, int r2, Int a, Int b) {
    if (a != 0 && b % a == 0) {  // plain elimination keeps row r1 intact
      Int c = R.neg(b / a);
      row_addmul(S, r2, r1, c);
      row_addmul(U, r2, r1, c);
      return;
    }
    Int g, x, y;
    detail::ext_gcd(a, b, g, x, y);
    Int p = -(b / g), q = a / g;
    for (int j = 0; j < S.cols(); ++j) {
      Int s1 = S.at(r1, j), s2 = S.at(r2, j);
      S.at(r1, j) = R.norm(x * s1 + y * s2);
      S.at(r2, j) = R.norm(p * s1 + q * s2);
    }
    for (int j = 0; j < U.cols(); ++j) {
      Int s1 = U.at(r1, j), s2 = U.at(r2, j);
      U.at(r1, j) = R.norm(x * s1 + y * s2);
      U.at(r2, j) = R.norm(p * s1 + q * s2);
    }
  };
  auto col_gcd_step = [&](int c1, int c2, Int a, Int b) {
    if (a != 0 && b % a == 0) {  // plain elimination keeps column c1 intact
      Int c = R.neg(b / a);
      col_addmul(S, c2, c1, c);
      col_addmul(V, c2, c1, c);
      return;
    }
    Int g, x, y;
    detail::ext_gcd(a, b, g, x, y);
    Int p = -(b / g), q = a / g;
    for (int i = 0; i < S.rows(); ++i) {
      Int s1 = S.at(i, c1), s2 = S.at(i, c2);
      S.at(i, c1) = R.norm(x * s1 + y * s2);
      S.at(i, c2) = R.norm(p * s1 + q * s2);
    }
    for (int i = 0; i < V.rows(); ++i) {
      Int s1 = V.at(i, c1), s2 = V.at(i, c2);
      V.at(i, c1) = R.norm(x * s1 + y * s2);
      V.at(i, c2) = R.norm(p * s1 + q * s2);
    }
  };

  const int m = std::min(A.rows(), A.cols());
  for (int t = 0; t < m; ++t) {
    for (;;) {
      // Pivot: entry in the remaining block generating the largest ideal,
      // i.e. with minimal gcd with n.
      int pi = -1, pj = -1;
      Int best = n + 1;
      for (int i = t; i < S.rows(); ++i)
        for (int j = t; j < S.cols(); ++j)
          if (S.at(i, j) != 0) {
            Int g = std::gcd(S.at(i, j), n);
            if (g < best) best = g, pi = i, pj = j;
          }
      if (pi < 0) goto done;  // block is zero
      if (pi != t) { row_swap(S, t, pi); row_swap(U, t, pi); f.det_u = R.neg(f.det_u); }
      if (pj != t) { col_swap(S, t, pj); col_swap(V, t, pj); f.det_v = R.neg(f.det_v); }

      // Clear column t then row t with gcd steps; restart if a remainder
      // reappears (the pivot ideal strictly grows, so this terminates).
      for (int i = t + 1; i < S.rows(); ++i)
        if (S.at(i, t) != 0) row_gcd_step(t, i, S.at(t, t), S.at(i, t));
      bool row_clear = true;
      for (int j = t + 1; j < S.cols(); ++j)
        if (S.at(t, j) != 0) {
          col_gcd_step(t, j, S.at(t, t), S.at(t, j));
          row_clear = false;
        }
      if (!row_clear) {
        bool col_ok = true;
        for (int i = t + 1; i < S.rows(); ++i)
          if (S.at(i, t) != 0) col_ok = false;
        if (!col_ok) continue;
      }
      // Divisibility fix-up: the pivot ideal must contain every remaining
      // entry's ideal.
      Int piv_g = std::gcd(S.at(t, t), n);
      int bi = -1, bj = -1;
      for (int i = t + 1; i < S.rows() && bi < 0; ++i)
        for (int j = t + 1; j < S.cols(); ++j)
          if (S.at(i, j) % piv_g != 0) { bi = i; bj = j; break; }
      if (bi >= 0) {
        row_addmul(S, t, bi, 1);
        row_addmul(U, t, bi, 1);
        (void)bj;
        continue;
      }
      // Normalize the pivot to the divisor it generates.
      Int u = detail::unit_normalizer(S.at(t, t), n);
      row_scale(S, t, u);
      row_scale(U, t, u);
      f.det_u = R.mul(f.det_u, u);
      break;
    }
  }
done:
  for (int t = 0; t < m; ++t) {
    Int d = S.at(t, t);
    if (d == 0) continue;
    Int g = std::gcd(d, n);
    if (n / g > 1) f.invariant_factors.push_back(n / g);
  }
  std::sort(f.invariant_factors.begin(), f.invariant_factors.end());
  return f;
}

// ---------------------------------------------------------------------------
// Kernel, solving, membership
// ---------------------------------------------------------------------------

// Columns generating {x : A x = 0} over Z/n.
inline ZnMatrix kernel(const ZnMatrix& A) {
  const Int n = A.modulus();
  SmithForm f = smith_normal_form(A);
  std::vector<Vec> gens;
  const int m = std::min(A.rows(), A.cols());
  for (int j = 0; j < A.cols(); ++j) {
    Int d = j < m ? f.S.at(j, j) : 0;
    Int g = std::gcd(d, n);  // gcd(0, n) = n
    Int step = n / g;        // minimal y_j with d*y_j == 0 (mod n)
    if (step == n) continue; // only y_j = 0 works... step==n means g==1
    Vec e(A.cols(), 0);
    e[j] = step;
    gens.push_back(f.V.apply(e));
  }
  return ZnMatrix::from_columns(n, A.cols(), gens);
}

namespace detail {

// A combination t of the entries of `row` with row . t == g, where g
// generates the ideal spanned by the entries mod n. Returns (g, t).
inline std::pair<Int, Vec> row_ideal_generator(const RingContext& R,
                                               const Vec& row) {
  const Int n = R.modulus;
  Int g = n;
  Vec t(row.size(), 0);
  Vec acc_comb;  // combination achieving current g
  Int cur = 0;   // current combination value
  for (size_t j = 0; j < row.size(); ++j) {
    Int a = R.norm(row[j]);
    if (a == 0) continue;
    Int gg, x, y;
    ext_gcd(cur, a, gg, x, y);
    // New value x*cur + y*a has gcd(gg, ...) -- track combination.
    for (auto& c : t) c = R.mul(c, x);
    t[j] = R.add(t[j], R.norm(y));
    cur = R.norm(x * cur + y * a);
    g = std::gcd(gg, n);
  }
  // cur generates (g); normalize so row . t == g exactly.
  if (g != n) {
    Int u = unit_normalizer(cur, n);
    for (auto& c : t) c = R.mul(c, u);
  } else {
    std::fill(t.begin(), t.end(), 0);
  }
  return {g, t};
}

}  // namespace detail

// Lexicographically least element of the coset x + column-span(K).
inline Vec coset_minimize(const RingContext& R, Vec x, ZnMatrix K) {
  const Int n = R.modulus;
  for (auto& c : x) c = R.norm(c);
  if (static_cast<int>(x.size()) != K.rows())
    throw DimensionMismatch("coset_minimize: vector vs kernel rows");
  for (int i = 0; i < K.rows(); ++i) {
    if (K.cols() == 0) break;
    auto [g, t] = detail::row_ideal_generator(R, K.row(i));
    if (g < n) {
      Vec v = K.apply(t);  // v[i] == g, v[j] == 0 for j < i (by induction)
      Int q = x[i] / g;
      for (size_t k = 0; k < x.size(); ++k) x[k] = R.sub(x[k], R.mul(q, v[k]));
    }
    // Restrict to the stabilizer of coordinate i.
    ZnMatrix rowmat(n, 1, K.cols(), K.row(i));
    K = K * kernel(rowmat);
  }
  return x;
}

// Canonical solution of A x = b (least lexicographic representative), or
// nullopt when none exists.
inline std::optional<Vec> solve_linear(const ZnMatrix& A, const Vec& b) {
  if (static_cast<int>(b.size()) != A.rows())
    throw DimensionMismatch("solve_linear: b length vs rows");
  const Int n = A.modulus();
  RingContext R(n);
  SmithForm f = smith_normal_form(A);
  Vec y = f.U.apply(b);
  Vec z(A.cols(), 0);
  const int m = std::min(A.rows(), A.cols());
  for (int i = 0; i < A.rows(); ++i) {
    Int d = i < m ? f.S.at(i, i) : 0;
    Int g = std::gcd(d, n);
    if (y[i] % g != 0) return std::nullopt;  // g == n means y[i] must be 0
    if (i < m && d != 0) {
      // d == u * g for a unit u after normalization; solve d z = y.
      Int u = detail::unit_normalizer(d, n);  // u*d == g (mod n)
      z[i] = R.mul(u, R.norm(y[i] / g));
      // d*z[i] == (d*u)*(y[i]/g) == g*(y[i]/g) == y[i] (mod n).
    }
  }
  Vec x0 = f.V.apply(z);
  return coset_minimize(R, x0, kernel(A));
}

inline bool image_membership(const ZnMatrix& A, const Vec& b) {
  return solve_linear(A, b).has_value();
}

// Determinant mod n (Laplace for tests on small matrices).
inline Int determinant(const ZnMatrix& A) {
  if (A.rows() != A.cols()) throw DimensionMismatch("determinant of non-square");
  const int k = A.rows();
  RingContext R(A.modulus());
  if (k == 0) return 1;
  if (k == 1) return A.at(0, 0);
  Int det = 0;
  for (int j = 0; j < k; ++j) {
    if (A.at(0, j) == 0) continue;
    ZnMatrix minor(A.modulus(), k - 1, k - 1);
    for (int i = 1; i < k; ++i) {
      int cc = 0;
      for (int c = 0; c < k; ++c)
        if (c != j) minor.at(i - 1, cc++) = A.at(i, c);
    }
    Int term = R.mul(A.at(0, j), determinant(minor));
    det = (j % 2 == 0) ? R.add(det, term) : R.sub(det, term);
  }
  return det;
}

}  // namespace corings

#endif  // CORINGS_ZN_HPP
