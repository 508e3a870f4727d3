// Weak linear topology on pairings: orthogonals, closures, density, the
// double-orthogonal law, the C-adic filter, and the coincidence of the two
// topologies for measuring pairings.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <corings/pairing.hpp>

using namespace corings;

namespace {

// The evaluation pairing (dual(C), C).
Pairing eval_pairing(const FPModule& c) {
  HomModule d = dual(c);
  FPModule v = d.module;
  ZnMatrix e(c.modulus(), 1, v.rank() * c.rank());
  for (int t = 0; t < v.rank(); ++t) {
    Vec et(v.rank(), 0);
    et[t] = 1;
    ZnMatrix f = d.matrix_of(et);
    for (int j = 0; j < c.rank(); ++j) e.at(0, t * c.rank() + j) = f.at(0, j);
  }
  return make_pairing(v, c,
                      ModuleMap(tensor(v, c), FPModule::ring(c.modulus()), e));
}

Pairing zero_pairing(const FPModule& v, const FPModule& w) {
  ZnMatrix e(v.modulus(), 1, v.rank() * w.rank());
  return make_pairing(v, w,
                      ModuleMap(tensor(v, w), FPModule::ring(v.modulus()), e));
}

// A degenerate pairing Z4^2 x Z4 -> Z4, <(x,y), w> = 2xw.
Pairing degenerate_pairing() {
  FPModule v = FPModule::free(4, 2), w = FPModule::free(4, 1);
  ZnMatrix e(4, 1, 2);
  e.at(0, 0) = 2;  // <e0, w> = 2
  e.at(0, 1) = 0;  // <e1, w> = 0
  return make_pairing(v, w, ModuleMap(tensor(v, w), FPModule::ring(4), e));
}

// The trivial pairing (R, R) with <1,1> = 1.
Pairing trivial_pairing(Int mod) {
  FPModule r = FPModule::ring(mod);
  ZnMatrix e(mod, 1, 1);
  e.at(0, 0) = 1;
  return make_pairing(r, r, ModuleMap(tensor(r, r), FPModule::ring(mod), e));
}

// Identity measuring pairing: the full dual ring acting through itself.
MeasuringPairing self_pairing(const Coalgebra& c) {
  ACoring cor = coring_from_coalgebra(c);
  DualRing d = dual_ring(cor, DualSide::left);
  return make_measuring_pairing(d.algebra, cor,
                                ModuleMap::identity(d.carrier));
}

}  // namespace

TEST_CASE("orthogonals: zero and full submodules") {
  FPModule c = group_algebra(4, FiniteGroup::cyclic(2)).carrier();
  Pairing p = eval_pairing(c);
  // 0^perp is everything.
  CHECK(orthogonal_in_w(p, Submodule(p.v, {})) == Submodule::full(p.w));
  CHECK(orthogonal_in_v(p, Submodule(p.w, {})) == Submodule::full(p.v));
  // (whole W)^perp = Ke(kappa); the evaluation pairing is nondegenerate.
  CHECK(orthogonal_in_v(p, Submodule::full(p.w)) == kernel_kappa(p));
  CHECK(kernel_kappa(p).is_zero());
}

TEST_CASE("orthogonal of the counit line in (C*, C) for R[C2] over Z/4") {
  Bialgebra h = group_algebra(4, FiniteGroup::cyclic(2));
  FPModule c = h.carrier();
  HomModule d = dual(c);
  Pairing p = eval_pairing(c);
  Vec eps = d.coords_of(h.coalgebra.counit.matrix());
  Submodule x(p.v, {eps});
  // {c : eps(c) = 0} is the span of e - g.
  Submodule expected(c, {Vec{1, 3}});
  CHECK(orthogonal_in_w(p, x) == expected);
  // Already closed: closure(R.eps) = R.eps.
  CHECK(closure(p, x) == x);
  CHECK(orthogonal_in_v(p, orthogonal_in_w(p, x)) == x);
}

TEST_CASE("closure basics") {
  FPModule c = matrix_coalgebra(3, 2).carrier;
  Pairing p = eval_pairing(c);
  // Injective kappa: closure(0) = 0.
  CHECK(closure(p, Submodule(p.v, {})).is_zero());

  Pairing q = degenerate_pairing();
  // Ke(kappa) = {(x, y) : 2x = 0} = span{(2,0), (0,1)}.
  Submodule ke = kernel_kappa(q);
  CHECK(ke == Submodule(q.v, {Vec{2, 0}, Vec{0, 1}}));
  // closure(X) = V once X + Ke(kappa) = V.
  Submodule x(q.v, {Vec{1, 0}});
  CHECK(closure(q, x) == Submodule::full(q.v));
}

TEST_CASE("double orthogonal law: evaluation, zero, and matrix pairings") {
  {
    FPModule c = group_algebra(4, FiniteGroup::cyclic(2)).carrier();
    Report r = double_orthogonal_law(eval_pairing(c));
    CHECK(r.ok());
    // The degenerate finiteness legs are reported vacuous, not silently pass.
    int vac = 0;
    for (const auto& it : r.items)
      if (it.status == CheckStatus::vacuous) ++vac;
    CHECK(vac == 2);
  }
  {
    // Zero form: closure(X) = V = X^perp-perp for every X.
    Pairing z = zero_pairing(FPModule::free(4, 2), FPModule::free(4, 1));
    for (const auto& x : all_submodules(z.v)) {
      CHECK(closure(z, x) == Submodule::full(z.v));
      CHECK(orthogonal_in_v(z, orthogonal_in_w(z, x)) ==
            Submodule::full(z.v));
    }
    CHECK(double_orthogonal_law(z).ok());
  }
  {
    FPModule c = matrix_coalgebra(3, 2).carrier;
    CHECK(double_orthogonal_law(eval_pairing(c)).ok());
  }
  CHECK(double_orthogonal_law(degenerate_pairing()).ok());
}

TEST_CASE("Galois connection on small pairings") {
  std::vector<Pairing> corpus;
  corpus.push_back(eval_pairing(group_algebra(4, FiniteGroup::cyclic(2)).carrier()));
  corpus.push_back(degenerate_pairing());
  corpus.push_back(zero_pairing(FPModule::free(2, 2), FPModule::free(2, 2)));
  for (const auto& p : corpus) {
    auto xs = all_submodules(p.v);
    auto ks = all_submodules(p.w);
    for (const auto& x : xs) {
      Submodule xo = orthogonal_in_w(p, x);
      // X <= X^perp-perp.
      CHECK(orthogonal_in_v(p, xo).contains(x));
      // Triple orthogonal collapses.
      CHECK(orthogonal_in_w(p, orthogonal_in_v(p, xo)) == xo);
    }
    for (const auto& k : ks) {
      Submodule ko = orthogonal_in_v(p, k);
      CHECK(orthogonal_in_w(p, ko).contains(k));
      CHECK(orthogonal_in_v(p, orthogonal_in_w(p, ko)) == ko);
    }
    // Inclusion-reversing.
    for (const auto& x : xs)
      for (const auto& y : xs)
        if (y.contains(x))
          CHECK(orthogonal_in_w(p, x).contains(orthogonal_in_w(p, y)));
  }
}

TEST_CASE("Hausdorff criterion: Ke(kappa) = 0 iff closure(0) = 0") {
  std::vector<Pairing> corpus;
  corpus.push_back(eval_pairing(group_algebra(4, FiniteGroup::cyclic(2)).carrier()));
  corpus.push_back(eval_pairing(matrix_coalgebra(3, 2).carrier));
  corpus.push_back(degenerate_pairing());
  corpus.push_back(zero_pairing(FPModule::free(4, 1), FPModule::free(4, 1)));
  for (const auto& p : corpus) {
    bool hausdorff = kernel_kappa(p).is_zero();
    CHECK(hausdorff == closure(p, Submodule(p.v, {})).is_zero());
  }
}

TEST_CASE("closed submodules are exactly the orthogonals") {
  std::vector<Pairing> corpus;
  corpus.push_back(eval_pairing(group_algebra(4, FiniteGroup::cyclic(2)).carrier()));
  corpus.push_back(degenerate_pairing());
  corpus.push_back(zero_pairing(FPModule::free(2, 2), FPModule::free(2, 1)));
  for (const auto& p : corpus) {
    std::vector<Submodule> closed;
    for (const auto& x : all_submodules(p.v))
      if (closure(p, x) == x) closed.push_back(x);
    std::vector<Submodule> orths;
    for (const auto& k : all_submodules(p.w))
      orths.push_back(orthogonal_in_v(p, k));
    for (const auto& x : closed) {
      bool found = false;
      for (const auto& o : orths) found = found || x == o;
      CHECK(found);
    }
    for (const auto& o : orths) {
      CHECK(closure(p, o) == o);
    }
  }
}

TEST_CASE("measuring pairing construction checks kappa") {
  Coalgebra c = group_algebra(4, FiniteGroup::cyclic(2)).coalgebra;
  ACoring cor = coring_from_coalgebra(c);
  DualRing d = dual_ring(cor, DualSide::left);
  // Identity is a morphism of rings with kappa(1) = eps.
  MeasuringPairing p = self_pairing(c);
  CHECK(p.acting.carrier.cardinality() == 16);
  // The zero map sends 1 to 0 != eps.
  ZnMatrix z(4, d.carrier.rank(), d.carrier.rank());
  CHECK_THROWS_AS(make_measuring_pairing(d.algebra, cor,
                                         ModuleMap(d.carrier, d.carrier, z)),
                  AxiomViolation);
}

TEST_CASE("cadic neighborhoods") {
  Coalgebra c = group_algebra(4, FiniteGroup::cyclic(2)).coalgebra;
  MeasuringPairing p = self_pairing(c);
  Pairing pr = pairing_of(p);

  // Empty F gives the whole algebra.
  CHECK(cadic_neighborhood(p, {}) == Submodule::full(p.acting.carrier));

  // F = {g}, g grouplike: Delta(g) = g (x) g, so c <- a = g <a,g> and the
  // neighborhood is the annihilator of g alone.
  Vec g{0, 1};
  CHECK(cadic_neighborhood(p, {g}) == finite_orthogonal(pr, {g}));

  // F = a basis with kappa injective: only 0 kills everything.
  CHECK(cadic_neighborhood(p, {Vec{1, 0}, Vec{0, 1}}).is_zero());
}

TEST_CASE("hit action expands the comultiplication") {
  Coalgebra c = matrix_coalgebra(5, 2);
  MeasuringPairing p = self_pairing(c);
  // Delta(e_ij) = sum_k e_ik (x) e_kj, so e_ij <- a = sum_k e_ik <a, e_kj>.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int t = 0; t < p.acting.carrier.rank(); ++t) {
        Vec a(p.acting.carrier.rank(), 0);
        a[t] = 1;
        ZnMatrix row = p.eval_row(a);
        Vec eij(4, 0);
        eij[i * 2 + j] = 1;
        Vec expect(4, 0);
        RingContext R(5);
        for (int k = 0; k < 2; ++k)
          expect[i * 2 + k] = R.norm(row.at(0, k * 2 + j));
        CHECK(hit_action(p, eij, a) == expect);
      }
}

TEST_CASE("weak and adic topologies coincide") {
  {
    // Trivial coalgebra C = R: both filters are trivial.
    Coalgebra c = group_algebra(4, FiniteGroup::cyclic(1)).coalgebra;
    MeasuringPairing p = self_pairing(c);
    CHECK(topology_coincidence(p).ok());
    CHECK(cadic_neighborhood(p, {Vec{1}}).is_zero());
  }
  {
    Coalgebra c = matrix_coalgebra(3, 2);
    CHECK(topology_coincidence(self_pairing(c)).ok());
  }
  {
    // A measuring pairing that is far from surjective: R acting through
    // kappa(1) = eps on R[C2]. The coincidence needs only measuring.
    Coalgebra c = group_algebra(4, FiniteGroup::cyclic(2)).coalgebra;
    ACoring cor = coring_from_coalgebra(c);
    DualRing d = dual_ring(cor, DualSide::left);
    Algebra r = ring_algebra(4);
    ZnMatrix k(4, d.carrier.rank(), 1, *d.algebra.unit);
    MeasuringPairing p = make_measuring_pairing(
        r, cor, ModuleMap(r.carrier, d.carrier, k));
    CHECK(topology_coincidence(p).ok());
  }
}

TEST_CASE("kernel pullback law") {
  Bialgebra h = group_algebra(4, FiniteGroup::cyclic(2));
  FPModule w = h.carrier();
  HomModule dw = dual(w);
  Vec eps = dw.coords_of(h.coalgebra.counit.matrix());
  Submodule x(dw.module, {eps});

  // theta = identity.
  CHECK(ke_pullback_law(ModuleMap::identity(w), dw, x).ok());

  // theta = inclusion of R.g: eps pulls back to the identity functional on R,
  // so both sides are 0.
  FPModule line = FPModule::free(4, 1);
  ZnMatrix inc(4, 2, 1);
  inc.at(1, 0) = 1;
  ModuleMap theta(line, w, inc);
  CHECK(ke_pullback_law(theta, dw, x).ok());
  // Independent check of the common value.
  Submodule ke_x(w, {Vec{1, 3}});  // {c : eps(c) = 0}
  CHECK(preimage(theta, ke_x).is_zero());

  // theta = 0: both sides are all of W'.
  ModuleMap zero(line, w, ZnMatrix(4, 2, 1));
  CHECK(ke_pullback_law(zero, dw, x).ok());
  CHECK(preimage(zero, ke_x) == Submodule::full(line));

  // Random-ish theta on a torsion domain for good measure.
  FPModule t = FPModule::cyclic(4, 2);
  ZnMatrix m(4, 2, 1);
  m.at(0, 0) = 2;
  m.at(1, 0) = 2;
  CHECK(ke_pullback_law(ModuleMap(t, w, m), dw, x).ok());
}

TEST_CASE("tensor pairings") {
  Bialgebra h = group_algebra(4, FiniteGroup::cyclic(2));
  Pairing p = eval_pairing(h.carrier());
  Pairing triv = trivial_pairing(4);

  {
    // P (x) trivial is P up to the index identification.
    Pairing t = tensor_pairing(p, triv);
    REQUIRE(t.v.rank() == p.v.rank());
    REQUIRE(t.w.rank() == p.w.rank());
    for (int b = 0; b < p.v.rank(); ++b)
      for (int c = 0; c < p.w.rank(); ++c) {
        Vec x(t.v.rank(), 0), y(t.w.rank(), 0);
        x[b] = 1;
        y[c] = 1;
        Vec xb(p.v.rank(), 0), yc(p.w.rank(), 0);
        xb[b] = 1;
        yc[c] = 1;
        CHECK(t.form(x, y) == p.form(xb, yc));
      }
  }
  {
    // Two copies of the evaluation pairing: <f' (x) f, c (x) c'> = f(c) f'(c').
    Pairing t = tensor_pairing(p, p);
    RingContext R(4);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          for (int d2 = 0; d2 < 2; ++d2) {
            Vec x(4, 0), y(4, 0);
            x[a * 2 + b] = 1;
            y[c * 2 + d2] = 1;
            Vec fa(2, 0), fb(2, 0), ec(2, 0), ed(2, 0);
            fa[a] = 1;
            fb[b] = 1;
            ec[c] = 1;
            ed[d2] = 1;
            CHECK(t.form(x, y) == R.mul(p.form(fb, ec), p.form(fa, ed)));
          }
    // Nondegenerate (x) nondegenerate stays nondegenerate over Z/4.
    CHECK(kernel_kappa(t).is_zero());
  }
  {
    // Anything tensored with a zero pairing has zero form.
    Pairing z = zero_pairing(FPModule::free(4, 1), FPModule::free(4, 1));
    Pairing t = tensor_pairing(p, z);
    for (int i = 0; i < t.v.rank(); ++i)
      for (int j = 0; j < t.w.rank(); ++j) {
        Vec x(t.v.rank(), 0), y(t.w.rank(), 0);
        x[i] = 1;
        y[j] = 1;
        CHECK(t.form(x, y) == 0);
      }
  }
  // Mismatched moduli are rejected.
  CHECK_THROWS_AS(tensor_pairing(p, trivial_pairing(3)), DimensionMismatch);
}

TEST_CASE("orthogonals demand matching parents") {
  Pairing p = eval_pairing(group_algebra(4, FiniteGroup::cyclic(2)).carrier());
  FPModule other = FPModule::free(4, 3);
  CHECK_THROWS_AS(orthogonal_in_w(p, Submodule(other, {})), SubmoduleMismatch);
  CHECK_THROWS_AS(orthogonal_in_v(p, Submodule(other, {})), SubmoduleMismatch);
}
