// Linear-algebra kernel tests. Expected values for the non-trivial cases are
// computed by independent brute-force oracles (enumeration over all residue
// vectors) frozen into this file.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <corings/zn.hpp>

#include <set>

using namespace corings;

namespace {

// Oracle: all solutions of A x = b by exhaustive enumeration.
std::vector<Vec> enumerate_solutions(const ZnMatrix& A, const Vec& b) {
  const Int n = A.modulus();
  std::vector<Vec> out;
  Vec x(A.cols(), 0);
  for (;;) {
    if (A.apply(x) == b) out.push_back(x);
    int i = 0;
    while (i < A.cols() && ++x[i] == n) x[i++] = 0;
    if (i == A.cols()) break;
  }
  return out;
}

std::set<Vec> span_of_columns(const ZnMatrix& K) {
  const Int n = K.modulus();
  std::set<Vec> span;
  Vec c(K.cols(), 0);
  for (;;) {
    span.insert(K.apply(c));
    int i = 0;
    while (i < K.cols() && ++c[i] == n) c[i++] = 0;
    if (i == K.cols()) break;
  }
  if (K.cols() == 0) span.insert(Vec(K.rows(), 0));
  return span;
}

void check_snf_contract(const ZnMatrix& A) {
  SmithForm f = smith_normal_form(A);
  CHECK(f.U * A * f.V == f.S);
  CHECK(A.ring().is_unit(determinant(f.U)));
  CHECK(A.ring().is_unit(determinant(f.V)));
  CHECK(determinant(f.U) == f.det_u);
  CHECK(determinant(f.V) == f.det_v);
  // Diagonality and divisor chain.
  for (int i = 0; i < f.S.rows(); ++i)
    for (int j = 0; j < f.S.cols(); ++j)
      if (i != j) CHECK(f.S.at(i, j) == 0);
  Int prev = 1;
  for (int t = 0; t < std::min(A.rows(), A.cols()); ++t) {
    Int d = f.S.at(t, t);
    Int g = std::gcd(d, A.modulus());
    CHECK(g % prev == 0);
    prev = g;
  }
}

}  // namespace

TEST_CASE("smith normal form: identity over Z/4") {
  auto A = ZnMatrix::identity(4, 2);
  SmithForm f = smith_normal_form(A);
  CHECK(f.S == A);
  CHECK(f.invariant_factors == std::vector<Int>{4, 4});
  check_snf_contract(A);
}

TEST_CASE("smith normal form: zero over Z/6") {
  ZnMatrix A(6, 2, 2);
  SmithForm f = smith_normal_form(A);
  CHECK(f.S.is_zero());
  CHECK(f.invariant_factors.empty());
  check_snf_contract(A);
}

TEST_CASE("smith normal form: [[2,4],[6,8]] over Z/12") {
  ZnMatrix A(12, 2, 2, {2, 4, 6, 8});
  SmithForm f = smith_normal_form(A);
  CHECK(f.S.at(0, 0) == 2);
  CHECK(f.S.at(1, 1) == 4);
  CHECK(f.S.at(0, 1) == 0);
  CHECK(f.S.at(1, 0) == 0);
  check_snf_contract(A);
}

TEST_CASE("smith normal form: contract on a sweep of small matrices") {
  for (Int n : {2, 3, 4, 5, 6, 8, 9, 12}) {
    // A deterministic pseudo-random sweep of shapes and entries.
    Int seed = 12345;
    auto next = [&] { return seed = (seed * 1103515245 + 12345) % (1 << 24); };
    for (int trial = 0; trial < 25; ++trial) {
      int r = 1 + static_cast<int>(next() % 4);
      int c = 1 + static_cast<int>(next() % 4);
      ZnMatrix A(n, r, c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) A.at(i, j) = next() % n;
      check_snf_contract(A);
    }
  }
}

TEST_CASE("solve_linear: identity returns b") {
  auto A = ZnMatrix::identity(6, 3);
  Vec b{1, 4, 5};
  auto x = solve_linear(A, b);
  REQUIRE(x.has_value());
  CHECK(*x == b);
}

TEST_CASE("solve_linear: [2]x = 1 over Z/4 has no solution") {
  ZnMatrix A(4, 1, 1, {2});
  CHECK(!solve_linear(A, {1}).has_value());
  CHECK(!image_membership(A, {1}));
  CHECK(enumerate_solutions(A, {1}).empty());
}

TEST_CASE("solve_linear: [2]x = 2 over Z/4 returns canonical 1") {
  ZnMatrix A(4, 1, 1, {2});
  auto x = solve_linear(A, {2});
  REQUIRE(x.has_value());
  CHECK(*x == Vec{1});  // 3 also solves; 1 is lexicographically least
  CHECK(image_membership(A, {2}));
}

TEST_CASE("solve_linear agrees with enumeration and returns the lex-least") {
  for (Int n : {2, 3, 4, 6, 8, 9, 12}) {
    Int seed = 999 + n;
    auto next = [&] { return seed = (seed * 48271) % 2147483647; };
    for (int trial = 0; trial < 20; ++trial) {
      int r = 1 + static_cast<int>(next() % 3);
      int c = 1 + static_cast<int>(next() % 3);
      ZnMatrix A(n, r, c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) A.at(i, j) = next() % n;
      Vec b(r);
      for (int i = 0; i < r; ++i) b[i] = next() % n;
      auto sols = enumerate_solutions(A, b);
      auto x = solve_linear(A, b);
      if (sols.empty()) {
        CHECK(!x.has_value());
      } else {
        REQUIRE(x.has_value());
        CHECK(A.apply(*x) == b);
        CHECK(*x == *std::min_element(sols.begin(), sols.end()));
      }
    }
  }
}

TEST_CASE("kernel: stated examples") {
  CHECK(kernel(ZnMatrix::identity(4, 2)).cols() == 0);
  auto K = kernel(ZnMatrix(4, 1, 1, {2}));
  REQUIRE(K.cols() == 1);
  CHECK(K.column(0) == Vec{2});
  auto Z = kernel(ZnMatrix(5, 2, 3));  // zero map on rank 3
  CHECK(span_of_columns(Z).size() == 125);
}

TEST_CASE("kernel: soundness and completeness against enumeration") {
  for (Int n : {2, 3, 4, 6, 8, 9, 12}) {
    Int seed = 77 * n + 1;
    auto next = [&] { return seed = (seed * 48271) % 2147483647; };
    for (int trial = 0; trial < 15; ++trial) {
      int r = 1 + static_cast<int>(next() % 3);
      int c = 1 + static_cast<int>(next() % 3);
      ZnMatrix A(n, r, c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) A.at(i, j) = next() % n;
      ZnMatrix K = kernel(A);
      for (int j = 0; j < K.cols(); ++j)
        CHECK(vec_is_zero(A.apply(K.column(j))));
      auto sols = enumerate_solutions(A, Vec(r, 0));
      auto span = span_of_columns(K);
      CHECK(span.size() == sols.size());
      for (const auto& s : sols) CHECK(span.count(s) == 1);
    }
  }
}

TEST_CASE("coset_minimize finds the least coset representative") {
  RingContext R(6);
  ZnMatrix K(6, 2, 1, {3, 2});
  Vec x{5, 5};
  Vec m = coset_minimize(R, x, K);
  // Oracle: minimum over the 6 coset elements.
  Vec best = x;
  for (Int t = 0; t < 6; ++t) {
    Vec cand{R.add(x[0], R.mul(t, 3)), R.add(x[1], R.mul(t, 2))};
    best = std::min(best, cand);
  }
  CHECK(m == best);
}

TEST_CASE("matrix plumbing: kronecker, concat, determinant") {
  ZnMatrix A(5, 2, 2, {1, 2, 3, 4});
  ZnMatrix B(5, 1, 2, {1, 1});
  auto K = A.kronecker(B);
  CHECK(K.rows() == 2);
  CHECK(K.cols() == 4);
  CHECK(K.at(0, 0) == 1);
  CHECK(K.at(0, 2) == 2);
  CHECK(determinant(A) == (1 * 4 - 2 * 3 + 25) % 5);
  CHECK_THROWS_AS(A * B, DimensionMismatch);
  CHECK_THROWS_AS(ZnMatrix(4, 1, 1, {1}) + ZnMatrix(5, 1, 1, {1}),
                  BaseMismatch);
  CHECK_THROWS_AS(RingContext(1), BadInput);
}
