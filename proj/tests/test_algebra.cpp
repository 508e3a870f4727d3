// Algebra / coalgebra / bialgebra layer tests. Multiplication tables for the
// dual and convolution products are checked against brute-force expansion of
// the structure constants.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <corings/algebra.hpp>

using namespace corings;

namespace {

const CheckItem* find_item(const Report& r, const std::string& name) {
  for (const auto& it : r.items)
    if (it.name == name) return &it;
  return nullptr;
}

// Functional with a single 1 at basis index i (row matrix 1 x rank).
ZnMatrix delta_functional(Int mod, int rank, int i) {
  ZnMatrix f(mod, 1, rank);
  f.at(0, i) = 1;
  return f;
}

}  // namespace

TEST_CASE("verify_algebra: group algebra R[C2] over Z/4 passes") {
  Bialgebra h = group_algebra(4, FiniteGroup::cyclic(2));
  CHECK(verify_algebra(h.algebra).ok());
  CHECK(verify_algebra(ring_algebra(6)).ok());
}

TEST_CASE("verify_algebra: wrong unit is witnessed") {
  Bialgebra h = group_algebra(4, FiniteGroup::cyclic(2));
  Algebra bad = h.algebra;
  bad.unit = Vec{0, 1};  // g instead of e
  Report r = verify_algebra(bad);
  CHECK(!r.ok());
  const CheckItem* it = find_item(r, "left-unit");
  REQUIRE(it != nullptr);
  CHECK(it->status == CheckStatus::fail);
  CHECK(it->witness == "basis (0)");  // g * e = g != e, witnessed at e
  CHECK(find_item(r, "associativity")->status == CheckStatus::pass);
}

TEST_CASE("verify_coalgebra: matrix coalgebra and grouplikes pass") {
  CHECK(verify_coalgebra(matrix_coalgebra(6, 2)).ok());
  CHECK(verify_coalgebra(matrix_coalgebra(5, 3)).ok());
  CHECK(verify_coalgebra(group_algebra(4, FiniteGroup::cyclic(2)).coalgebra)
            .ok());
  CHECK(verify_coalgebra(gset_coalgebra(9, 3)).ok());
}

TEST_CASE("verify_coalgebra: corrupted counit is witnessed at e_12") {
  Coalgebra c = matrix_coalgebra(6, 2);
  ZnMatrix e = c.counit.matrix();
  e.at(0, 1) = 1;  // e_12 has flat index 0*2+1 = 1
  Coalgebra bad{c.carrier, c.comult,
                ModuleMap(c.carrier, FPModule::ring(6), e)};
  Report r = verify_coalgebra(bad);
  CHECK(!r.ok());
  bool witnessed = false;
  for (const auto& it : r.items)
    if (it.status == CheckStatus::fail && it.witness == "basis (1)")
      witnessed = true;
  CHECK(witnessed);
  CHECK(find_item(r, "coassociativity")->status == CheckStatus::pass);
}

TEST_CASE("iterated_delta: k=1, grouplike cubes, matrix coalgebra expansion") {
  Coalgebra c = group_algebra(6, FiniteGroup::cyclic(2)).coalgebra;
  Vec g{0, 1};
  CHECK(iterated_delta(c, g, 1) == c.comult.apply(g));
  Vec ggg(8, 0);
  ggg[1 * 4 + 1 * 2 + 1] = 1;  // g (x) g (x) g
  CHECK(iterated_delta(c, g, 2) == ggg);
  CHECK_THROWS_AS(iterated_delta(c, g, 0), BadArity);

  Coalgebra m2 = matrix_coalgebra(6, 2);
  auto idx = [](int i, int j) { return i * 2 + j; };
  Vec e11(4, 0);
  e11[idx(0, 0)] = 1;
  Vec want(64, 0);
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l)
      want[idx(0, k) * 16 + idx(k, l) * 4 + idx(l, 0)] += 1;
  CHECK(iterated_delta(m2, e11, 2) == want);
}

TEST_CASE("grouplike law: Delta_n(x) = x^(n+1) and eps(x) = 1") {
  Coalgebra c = gset_coalgebra(8, 3);
  for (int x = 0; x < 3; ++x) {
    Vec v(3, 0);
    v[x] = 1;
    CHECK(c.counit.apply(v) == Vec{1});
    for (int k = 1; k <= 3; ++k) {
      Vec got = iterated_delta(c, v, k);
      Int flat = 0;
      for (int t = 0; t <= k; ++t) flat = flat * 3 + x;
      Vec want(got.size(), 0);
      want[flat] = 1;
      CHECK(got == want);
    }
  }
}

TEST_CASE("dual_algebra of matrix coalgebra is the matrix algebra") {
  for (Int mod : {4, 6}) {
    Coalgebra c = matrix_coalgebra(mod, 2);
    HomAlgebra d = dual_algebra(c);
    CHECK(verify_algebra(d.algebra).ok());
    auto idx = [](int i, int j) { return i * 2 + j; };
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l) {
            Vec a = d.hom.coords_of(delta_functional(mod, 4, idx(i, j)));
            Vec b = d.hom.coords_of(delta_functional(mod, 4, idx(k, l)));
            Vec prod = d.algebra.multiply(a, b);
            ZnMatrix got = d.hom.matrix_of(prod);
            // Oracle from structure constants: (f*g)(e_pq) = sum_t
            // f(e_pt) g(e_tq); for delta functionals this is
            // delta_jk e_il*.
            ZnMatrix want(mod, 1, 4);
            if (j == k) want.at(0, idx(i, l)) = 1;
            CHECK(got == want);
          }
    // The counit is the two-sided unit.
    REQUIRE(d.algebra.unit.has_value());
    CHECK(d.hom.matrix_of(*d.algebra.unit) == c.counit.matrix());
  }
}

TEST_CASE("dual_algebra of R[C2]: e*.e* = e*, e*.g* = 0") {
  Coalgebra c = group_algebra(4, FiniteGroup::cyclic(2)).coalgebra;
  HomAlgebra d = dual_algebra(c);
  Vec es = d.hom.coords_of(delta_functional(4, 2, 0));
  Vec gs = d.hom.coords_of(delta_functional(4, 2, 1));
  CHECK(d.hom.matrix_of(d.algebra.multiply(es, es)) ==
        delta_functional(4, 2, 0));
  CHECK(d.hom.matrix_of(d.algebra.multiply(es, gs)).is_zero());
  CHECK(d.hom.matrix_of(d.algebra.multiply(gs, gs)) ==
        delta_functional(4, 2, 1));
}

TEST_CASE("convolution_algebra: A = R reduces to dual_algebra") {
  Coalgebra c = matrix_coalgebra(4, 2);
  HomAlgebra conv = convolution_algebra(c, ring_algebra(4));
  HomAlgebra d = dual_algebra(c);
  CHECK(conv.algebra.mult.matrix() == d.algebra.mult.matrix());
  CHECK(*conv.algebra.unit == *d.algebra.unit);
}

TEST_CASE("convolution_algebra: unit eta.eps is two-sided for corpus pairs") {
  std::vector<std::pair<Coalgebra, Algebra>> pairs;
  pairs.push_back({group_algebra(4, FiniteGroup::cyclic(2)).coalgebra,
                   group_algebra(4, FiniteGroup::cyclic(2)).algebra});
  pairs.push_back({matrix_coalgebra(6, 2), ring_algebra(6)});
  pairs.push_back({gset_coalgebra(9, 2), ring_algebra(9)});
  for (const auto& [c, a] : pairs) {
    HomAlgebra conv = convolution_algebra(c, a);
    Report r = verify_algebra(conv.algebra);
    CHECK(r.ok());
    REQUIRE(conv.algebra.unit.has_value());
    for (const auto& f : conv.algebra.carrier.elements(4096)) {
      CHECK(conv.algebra.carrier.reduce(
                conv.algebra.multiply(*conv.algebra.unit, f)) == f);
      CHECK(conv.algebra.carrier.reduce(
                conv.algebra.multiply(f, *conv.algebra.unit)) == f);
    }
  }
}

TEST_CASE("convolution on grouplike basis is the pointwise product") {
  Coalgebra c = gset_coalgebra(6, 3);
  HomAlgebra conv = convolution_algebra(c, ring_algebra(6));
  RingContext R(6);
  for (const auto& f : conv.algebra.carrier.elements(4096)) {
    for (const auto& g : conv.algebra.carrier.elements(4096)) {
      ZnMatrix fm = conv.hom.matrix_of(f), gm = conv.hom.matrix_of(g);
      ZnMatrix pm = conv.hom.matrix_of(conv.algebra.multiply(f, g));
      for (int x = 0; x < 3; ++x)
        CHECK(pm.at(0, x) == R.mul(fm.at(0, x), gm.at(0, x)));
    }
  }
}

TEST_CASE("dual_algebra is contravariantly functorial on coalgebra maps") {
  // theta: R[C2] -> R collapsing both grouplikes (induced by the G-set fold);
  // theta*: R* -> R[C2]* must be an algebra morphism.
  const Int mod = 4;
  Coalgebra c2 = group_algebra(mod, FiniteGroup::cyclic(2)).coalgebra;
  Coalgebra pt = gset_coalgebra(mod, 1);
  ModuleMap theta(c2.carrier, pt.carrier, ZnMatrix(mod, 1, 2, {1, 1}));
  // Coalgebra morphism sanity: Delta . theta = (theta(x)theta) . Delta.
  CHECK((pt.comult.matrix() * theta.matrix()) ==
        (theta.matrix().kronecker(theta.matrix()) * c2.comult.matrix()));
  HomAlgebra dd = dual_algebra(pt), dc = dual_algebra(c2);
  auto pull = [&](const Vec& f) {
    return dc.hom.coords_of(dd.hom.matrix_of(f) * theta.matrix());
  };
  for (const auto& f : dd.algebra.carrier.elements(256))
    for (const auto& g : dd.algebra.carrier.elements(256)) {
      Vec lhs = pull(dd.algebra.multiply(f, g));
      Vec rhs = dc.algebra.multiply(pull(f), pull(g));
      CHECK(dc.algebra.carrier.equal(lhs, rhs));
    }
  // theta* carries the unit to the unit.
  CHECK(dc.algebra.carrier.equal(pull(*dd.algebra.unit), *dc.algebra.unit));
}

TEST_CASE("C* bimodule: left and right hit actions commute") {
  std::vector<Coalgebra> corpus = {
      matrix_coalgebra(6, 2), group_algebra(9, FiniteGroup::cyclic(3)).coalgebra,
      gset_coalgebra(4, 2)};
  for (const Coalgebra& c : corpus) {
    const int r = c.carrier.rank();
    for (int fi = 0; fi < r; ++fi)
      for (int gi = 0; gi < r; ++gi) {
        ZnMatrix f = delta_functional(c.carrier.modulus(), r, fi);
        ZnMatrix g = delta_functional(c.carrier.modulus(), r, gi);
        for (int b = 0; b < r; ++b) {
          Vec x(r, 0);
          x[b] = 1;
          Vec lhs = star_right_act(c, g, star_left_act(c, f, x));
          Vec rhs = star_left_act(c, f, star_right_act(c, g, x));
          CHECK(lhs == rhs);
        }
      }
  }
}

TEST_CASE("verify_bialgebra: group algebras pass") {
  CHECK(verify_bialgebra(group_algebra(4, FiniteGroup::cyclic(2))).ok());
  CHECK(verify_bialgebra(group_algebra(6, FiniteGroup::cyclic(3))).ok());
  CHECK(verify_bialgebra(
            group_algebra(4, FiniteGroup::product(FiniteGroup::cyclic(2),
                                                  FiniteGroup::cyclic(2))))
            .ok());
  CHECK(verify_bialgebra(dual_group_bialgebra(8, FiniteGroup::cyclic(3))).ok());
}

TEST_CASE("H is an H-module coalgebra via mu and an H-comodule algebra via Delta") {
  for (Int mod : {4, 9}) {
    Bialgebra h = group_algebra(mod, FiniteGroup::cyclic(2));
    HModuleCoalgebra mc{h.coalgebra, h, h.algebra.mult};
    CHECK(verify_module_coalgebra(mc).ok());
    HComoduleAlgebra ca{h.algebra, h, h.coalgebra.comult};
    CHECK(verify_comodule_algebra(ca).ok());
  }
}

TEST_CASE("gset_module_coalgebra passes for |X| in {1,2,3}") {
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  std::vector<GSet> xs = {GSet::trivial(c2, 1), GSet::regular(c2),
                          GSet::disjoint_union(GSet::regular(c2),
                                               GSet::trivial(c2, 1))};
  for (const GSet& x : xs) {
    HModuleCoalgebra mc = gset_module_coalgebra(4, c2, x);
    CHECK(verify_module_coalgebra(mc).ok());
  }
}

TEST_CASE("graded_algebra: group grading passes, broken grading fails") {
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  Bialgebra h = group_algebra(4, c2);
  HComoduleAlgebra good = graded_algebra(4, c2, h.algebra, {0, 1});
  CHECK(verify_comodule_algebra(good).ok());
  HComoduleAlgebra bad = graded_algebra(4, c2, h.algebra, {1, 1});
  Report r = verify_comodule_algebra(bad);
  CHECK(!r.ok());
}

TEST_CASE("opposite_algebra is an involution and stays an algebra") {
  Algebra a = dual_algebra(matrix_coalgebra(4, 2)).algebra;
  Algebra op = opposite_algebra(a);
  CHECK(verify_algebra(op).ok());
  CHECK(opposite_algebra(op).mult.matrix() == a.mult.matrix());
  // Genuinely noncommutative: op differs from a.
  CHECK(op.mult.matrix() != a.mult.matrix());
}

TEST_CASE("tensor_bialgebra of two group algebras passes") {
  Bialgebra k = group_algebra(4, FiniteGroup::cyclic(2));
  Bialgebra t = tensor_bialgebra(k, k);
  CHECK(verify_bialgebra(t).ok());
  // It is the group algebra of C2 x C2 up to basis identification.
  Bialgebra p = group_algebra(
      4, FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
  CHECK(t.algebra.mult.matrix() == p.algebra.mult.matrix());
  CHECK(t.coalgebra.comult.matrix() == p.coalgebra.comult.matrix());
}

TEST_CASE("builders reject degenerate input") {
  CHECK_THROWS_AS(FiniteGroup::cyclic(0), BadInput);
  CHECK_THROWS_AS(matrix_coalgebra(6, 0), BadInput);
  CHECK_THROWS_AS(gset_coalgebra(6, 0), BadInput);
  FiniteGroup broken = FiniteGroup::cyclic(2);
  broken.table[1][1] = 1;  // g*g = g: no inverse for g
  CHECK_THROWS_AS(group_algebra(4, broken), BadInput);
}
