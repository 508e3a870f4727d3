// Finitely presented module tests. Non-trivial expectations come from
// enumeration oracles (all candidate maps / elements checked by brute force).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <corings/fpmod.hpp>

#include <set>

using namespace corings;

namespace {

// Oracle: count well-defined maps M -> N by enumerating all matrices and all
// pairs, quotienting by map equality.
Int count_maps_bruteforce(const FPModule& m, const FPModule& n) {
  const Int mod = m.modulus();
  std::set<std::vector<Vec>> graphs;  // map as value table on all elements
  auto elems = m.elements();
  ZnMatrix t(mod, n.rank(), m.rank());
  Vec flat(static_cast<size_t>(n.rank()) * m.rank(), 0);
  for (;;) {
    ZnMatrix cand(mod, n.rank(), m.rank(), flat);
    bool ok = true;
    for (int j = 0; j < m.relations().cols() && ok; ++j)
      ok = n.is_zero(cand.apply(m.relations().column(j)));
    if (ok) {
      std::vector<Vec> graph;
      for (const auto& e : elems) graph.push_back(n.reduce(cand.apply(e)));
      graphs.insert(graph);
    }
    size_t i = 0;
    while (i < flat.size() && ++flat[i] == mod) flat[i++] = 0;
    if (i == flat.size()) break;
  }
  return static_cast<Int>(graphs.size());
}

}  // namespace

TEST_CASE("decompose: stated examples") {
  CHECK(decompose(FPModule::free(4, 2)) == std::vector<Int>{4, 4});
  CHECK(decompose(FPModule::cyclic(4, 2)) == std::vector<Int>{2});
  CHECK(decompose(FPModule::cyclic(6, 1)).empty());  // zero module
  CHECK(FPModule::cyclic(4, 2).cardinality() == 2);
  CHECK(FPModule::cyclic(6, 1).cardinality() == 1);
}

TEST_CASE("decompose cardinality matches enumeration on a sweep") {
  for (Int n : {4, 6, 8, 9, 12}) {
    Int seed = n;
    auto next = [&] { return seed = (seed * 48271 + 11) % 2147483647; };
    for (int trial = 0; trial < 12; ++trial) {
      int r = 1 + static_cast<int>(next() % 3);
      int k = static_cast<int>(next() % 4);
      ZnMatrix rel(n, r, k);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < k; ++j) rel.at(i, j) = next() % n;
      FPModule m = FPModule::presented(n, r, rel);
      Int prod = 1;
      for (Int d : m.invariants()) prod *= d;
      CHECK(prod == m.cardinality());
      CHECK(prod == static_cast<Int>(m.elements().size()));
      // Canonical forms are idempotent and additive-consistent.
      auto es = m.elements();
      for (size_t a = 0; a < es.size(); ++a) {
        CHECK(m.reduce(es[a]) == es[a]);
        for (size_t b = a; b < std::min(es.size(), a + 3); ++b) {
          Vec sum = vec_add(m.ctx(), es[a], es[b]);
          CHECK(m.is_zero(vec_sub(m.ctx(), sum, m.reduce(sum))));
        }
      }
      // Divisor chain.
      auto inv = m.invariants();
      for (size_t i = 0; i + 1 < inv.size(); ++i)
        CHECK(inv[i + 1] % inv[i] == 0);
    }
  }
}

TEST_CASE("element handles: parent identity is enforced") {
  FPModule a = FPModule::free(4, 1), b = FPModule::free(4, 2);
  Elem x(a, {1});
  Elem y(b, {1, 0});
  CHECK_THROWS_AS(x + y, CrossModuleError);
  FPModule c = FPModule::cyclic(4, 2);
  CHECK(Elem(c, {3}) == Elem(c, {1}));  // 3 = 1 + 2 = 1 mod the relation
}

TEST_CASE("hom_module: Hom(R, R) = R and Hom(M, 0) = 0") {
  FPModule r = FPModule::ring(6);
  auto h = hom_module(r, r);
  CHECK(h.module.cardinality() == 6);
  FPModule z = FPModule::cyclic(6, 1);
  auto h2 = hom_module(FPModule::free(6, 2), z);
  CHECK(h2.module.cardinality() == 1);
}

TEST_CASE("hom_module: Hom(Z/2, Z/4) over Z/4 has 2 elements (oracle)") {
  FPModule m = FPModule::cyclic(4, 2);
  FPModule n = FPModule::free(4, 1);
  auto h = hom_module(m, n);
  CHECK(h.module.cardinality() == 2);
  CHECK(h.module.cardinality() == count_maps_bruteforce(m, n));
}

TEST_CASE("hom_module bijects with well-defined maps on a sweep") {
  for (Int mod : {4, 6, 9}) {
    Int seed = 5 * mod;
    auto next = [&] { return seed = (seed * 48271 + 7) % 2147483647; };
    for (int trial = 0; trial < 8; ++trial) {
      int r1 = 1 + static_cast<int>(next() % 2);
      int r2 = 1 + static_cast<int>(next() % 2);
      ZnMatrix rel1(mod, r1, 1), rel2(mod, r2, 1);
      for (int i = 0; i < r1; ++i) rel1.at(i, 0) = next() % mod;
      for (int i = 0; i < r2; ++i) rel2.at(i, 0) = next() % mod;
      FPModule m = FPModule::presented(mod, r1, rel1);
      FPModule n = FPModule::presented(mod, r2, rel2);
      auto h = hom_module(m, n);
      CHECK(h.module.cardinality() == count_maps_bruteforce(m, n));
      // coords <-> matrix round trip on every element of the hom module.
      for (const auto& c : h.module.elements()) {
        ZnMatrix t = h.matrix_of(c);
        CHECK(h.module.reduce(h.coords_of(t)) == c);
      }
    }
  }
}

TEST_CASE("tensor: R (x) M = M, Z/2 (x) Z/2 = Z/2 over Z/4, M (x) 0 = 0") {
  FPModule m = FPModule::presented(4, 2, ZnMatrix(4, 2, 1, {2, 0}));
  FPModule r = FPModule::ring(4);
  CHECK(tensor(r, m).invariants() == m.invariants());
  FPModule z2 = FPModule::cyclic(4, 2);
  CHECK(tensor(z2, z2).invariants() == std::vector<Int>{2});
  CHECK(tensor(m, FPModule::cyclic(4, 1)).cardinality() == 1);
}

TEST_CASE("tensor universal property on small bilinear maps") {
  // Every bilinear map M x N -> L factors through the canonical map.
  FPModule m = FPModule::cyclic(6, 2), n = FPModule::cyclic(6, 3);
  FPModule t = tensor(m, n);
  CHECK(t.cardinality() == 1);  // gcd(2,3) = 1 over Z/6: 2Z/6 (x) 3Z/6 ... wait
  // Z/2 (x) Z/3 = Z/gcd(2,3) = 0.
  FPModule a = FPModule::cyclic(12, 4), b = FPModule::cyclic(12, 6);
  CHECK(tensor(a, b).invariants() == std::vector<Int>{2});  // Z/4 (x) Z/6 = Z/2
}

TEST_CASE("dual: stated examples and double-dual bijectivity") {
  CHECK(dual(FPModule::ring(6)).module.cardinality() == 6);
  CHECK(dual(FPModule::cyclic(4, 2)).module.cardinality() == 2);
  CHECK(dual(FPModule::cyclic(4, 1)).module.cardinality() == 1);
  // Over the QF ring Z/n the canonical map M -> M** is bijective.
  for (Int mod : {4, 6, 9, 12}) {
    FPModule m = FPModule::presented(
        mod, 2, ZnMatrix(mod, 2, 1, {mod / 2, 0}));
    auto d1 = dual(m);
    auto d2 = dual(d1.module);
    // eval: basis e_i of M -> functional on d1 evaluating each generator.
    std::vector<Vec> cols;
    for (int i = 0; i < m.rank(); ++i) {
      Vec e(m.rank(), 0);
      e[i] = 1;
      ZnMatrix f(mod, 1, static_cast<int>(d1.gens.size()));
      for (size_t k = 0; k < d1.gens.size(); ++k)
        f.at(0, static_cast<int>(k)) = d1.gens[k].apply(e)[0];
      cols.push_back(d2.coords_of(f));
    }
    ModuleMap ev(m, d2.module,
                 ZnMatrix::from_columns(mod, d2.module.rank(), cols));
    CHECK(is_bijective(ev));
  }
}

TEST_CASE("kernel/image/preimage: stated examples") {
  FPModule m = FPModule::free(4, 1);
  ModuleMap id = ModuleMap::identity(m);
  CHECK(kernel_of_map(id).is_zero());
  ModuleMap dbl(m, m, ZnMatrix(4, 1, 1, {2}));
  CHECK(preimage(dbl, Submodule::zero(m)) == kernel_of_map(dbl));
  Submodule s(m, {{2}});
  CHECK(preimage(dbl, s) == Submodule::full(m));  // 2x in span(2) for all x
}

TEST_CASE("preimage of image agrees with enumeration") {
  for (Int mod : {4, 6}) {
    FPModule m = FPModule::free(mod, 2);
    FPModule n = FPModule::presented(mod, 2, ZnMatrix(mod, 2, 1, {2, 0}));
    ModuleMap f(m, n, ZnMatrix(mod, 2, 2, {1, 2, 0, 2}));
    ModuleMap g(n, n, ZnMatrix(mod, 2, 2, {2, 0, 0, 1}));
    Submodule img = image_of_map(g);
    Submodule pre = preimage(f, img);
    for (const auto& x : m.elements()) {
      bool in_pre = pre.contains(x);
      bool maps_in = img.contains(f.apply(x));
      CHECK(in_pre == maps_in);
    }
  }
}

TEST_CASE("is_projective: stated examples and splitting oracle") {
  CHECK(is_projective(FPModule::free(4, 2)));
  CHECK(!is_projective(FPModule::cyclic(4, 2)));
  CHECK(is_projective(FPModule::cyclic(6, 3)));
  // Oracle: M projective iff the free cover F = R^rank -> M splits, i.e.
  // there is s: M -> F with cover . s = id. Search hom_module(M, F).
  for (Int mod : {4, 6, 8, 9, 12}) {
    for (Int d : RingContext(mod).divisors()) {
      FPModule m = FPModule::cyclic(mod, d);
      FPModule f = FPModule::free(mod, 1);
      ModuleMap cover(f, m, ZnMatrix::identity(mod, 1));
      bool split = false;
      auto h = hom_module(m, f);
      for (const auto& c : h.module.elements()) {
        ModuleMap s = h.map_of(c);
        if (cover.after(s).equals(ModuleMap::identity(m))) split = true;
      }
      CHECK(split == is_projective(m));
    }
  }
}

TEST_CASE("is_pure_submodule: stated examples") {
  FPModule m = FPModule::free(4, 2);
  // Direct summand: first coordinate axis.
  CHECK(is_pure_submodule(Submodule(m, {{1, 0}}), m));
  // 2*(Z/4) inside Z/4 is not pure (tensor with Z/2 kills it).
  FPModule r = FPModule::free(4, 1);
  CHECK(!is_pure_submodule(Submodule(r, {{2}}), r));
  CHECK(is_pure_submodule(Submodule::zero(m), m));
}

TEST_CASE("purity agrees with W-purity for every small W") {
  // N <= M pure iff N(x)W -> M(x)W injective for every f.p. W with |W|<=256.
  // W ranges over direct sums of at most two cyclics (every f.p. module is a
  // sum of cyclics, and injectivity is additive across summands).
  for (Int mod : {4, 6, 8, 9, 12}) {
    std::vector<std::pair<FPModule, std::vector<Vec>>> cases;
    FPModule r1 = FPModule::free(mod, 1);
    cases.push_back({r1, {{2}}});
    cases.push_back({r1, {{mod / 2}}});
    FPModule m2 = FPModule::presented(mod, 2, ZnMatrix(mod, 2, 1, {mod / 2, 0}));
    cases.push_back({m2, {{1, 0}}});
    cases.push_back({m2, {{0, 1}}});
    cases.push_back({m2, {{2, 1}}});
    for (auto& [m, gens] : cases) {
      Submodule s(m, gens);
      bool pure = is_pure_submodule(s, m);
      bool all_inj = true;
      auto pres = s.presented();
      for (Int d1 : RingContext(mod).divisors()) {
        for (Int d2 : RingContext(mod).divisors()) {
          if (d1 == 1 || d2 == 1) continue;
          FPModule w = direct_sum(FPModule::cyclic(mod, d1),
                                  FPModule::cyclic(mod, d2)).module;
          if (!is_injective(tensor_map(pres.inclusion, ModuleMap::identity(w))))
            all_inj = false;
        }
      }
      CHECK(pure == all_inj);
    }
  }
}

TEST_CASE("functoriality: composition respected by hom coords and tensor") {
  Int mod = 6;
  FPModule m = FPModule::presented(mod, 2, ZnMatrix(mod, 2, 1, {2, 0}));
  FPModule n = FPModule::free(mod, 2);
  FPModule l = FPModule::presented(mod, 1, ZnMatrix(mod, 1, 1, {3}));
  auto hmn = hom_module(m, n);
  auto hnl = hom_module(n, l);
  Int seed = 3;
  auto next = [&] { return seed = (seed * 48271 + 1) % 2147483647; };
  auto em = hmn.module.elements();
  auto en = hnl.module.elements();
  for (int t = 0; t < 10; ++t) {
    ModuleMap f = hmn.map_of(em[next() % em.size()]);
    ModuleMap g = hnl.map_of(en[next() % en.size()]);
    ModuleMap gf = g.after(f);
    CHECK(gf.matrix() == g.matrix() * f.matrix());
    // Tensor respects composition.
    ModuleMap lhs = tensor_map(gf, ModuleMap::identity(l));
    ModuleMap rhs =
        tensor_map(g, ModuleMap::identity(l)).after(tensor_map(f, ModuleMap::identity(l)));
    CHECK(lhs.equals(rhs));
  }
}

TEST_CASE("submodule lattice helpers: sum, intersection, enumeration") {
  FPModule m = FPModule::free(4, 1);
  auto subs = all_submodules(m);
  CHECK(subs.size() == 3);  // 0, span(2), all of Z/4
  FPModule m2 = FPModule::free(2, 2);
  CHECK(all_submodules(m2).size() == 5);  // 0, three lines, plane over GF(2)
  Submodule a(m2, {{1, 0}}), b(m2, {{0, 1}});
  CHECK(a.plus(b).is_full());
  CHECK(a.intersect(b).is_zero());
  Submodule d(m2, {{1, 1}});
  CHECK(a.plus(d).contains(b));
  CHECK(a.intersect(a.plus(b)) == a);
}

TEST_CASE("quotient and presented round trips") {
  FPModule m = FPModule::free(4, 2);
  Submodule s(m, {{2, 0}});
  auto q = quotient(m, s);
  CHECK(q.module.cardinality() == 8);
  auto pres = s.presented();
  CHECK(pres.module.cardinality() == 2);
  CHECK(image_of_map(pres.inclusion) == s);
  CHECK(kernel_of_map(q.projection) == s);
}
