#ifndef CORINGS_ALGEBRA_HPP
#define CORINGS_ALGEBRA_HPP

// Structure-constant algebras, coalgebras and bialgebras over Z/n, with
// axiom verifiers that report a witnessing basis tuple on failure, the
// convolution / dual algebra constructions, and finite-group / G-set
// builders for the example corpus.

#include <corings/fpmod.hpp>
#include <corings/report.hpp>

#include <optional>

namespace corings {

// ---------------------------------------------------------------------------
// Helpers shared by the axiom checkers
// ---------------------------------------------------------------------------

namespace detail {

// Mixed-radix decoding of a flat tensor index into "(i,j,k)" for witnesses.
inline std::string basis_tuple(int flat, const std::vector<int>& dims) {
  std::vector<int> idx(dims.size());
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    idx[k] = flat % dims[k];
    flat /= dims[k];
  }
  std::string out = "(";
  for (size_t k = 0; k < idx.size(); ++k)
    out += (k ? "," : "") + std::to_string(idx[k]);
  return out + ")";
}

// Columnwise equality of two composite matrices modulo the codomain; on
// failure reports the witnessing domain basis tuple with the given dims.
inline void check_composite(Report& rep, const std::string& name,
                            const FPModule& cod, const ZnMatrix& lhs,
                            const ZnMatrix& rhs,
                            const std::vector<int>& dom_dims) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    throw DimensionMismatch("composite shapes " + lhs.shape() + " vs " +
                            rhs.shape());
  ZnMatrix d = lhs - rhs;
  for (int j = 0; j < d.cols(); ++j)
    if (!cod.is_zero(d.column(j))) {
      rep.add(name, false, "basis " + basis_tuple(j, dom_dims));
      return;
    }
  rep.add(name, true);
}

// Permutation matrix swapping the middle two tensor factors:
// (i,j,k,l) with dims (r1,r2,r3,r4) -> (i,k,j,l).
inline ZnMatrix mid_twist(Int mod, int r1, int r2, int r3, int r4) {
  const int total = r1 * r2 * r3 * r4;
  ZnMatrix t(mod, total, total);
  for (int i = 0; i < r1; ++i)
    for (int j = 0; j < r2; ++j)
      for (int k = 0; k < r3; ++k)
        for (int l = 0; l < r4; ++l)
          t.at(((i * r3 + k) * r2 + j) * r4 + l,
               ((i * r2 + j) * r3 + k) * r4 + l) = 1;
  return t;
}

// Outer product: column (m x 1) times row (1 x k) -> m x k matrix.
inline ZnMatrix outer(const RingContext& R, const Vec& col, const Vec& row) {
  ZnMatrix out(R.modulus, static_cast<int>(col.size()),
               static_cast<int>(row.size()));
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < out.cols(); ++j) out.at(i, j) = R.mul(col[i], row[j]);
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Algebra
// ---------------------------------------------------------------------------

// An R-algebra on an f.p. carrier. The unit is optional: non-unital "rings"
// occur as honest objects (e.g. carriers of star products under test), and
// unit-law checks are then reported as vacuous.
struct Algebra {
  FPModule carrier;
  ModuleMap mult;               // carrier (x) carrier -> carrier
  std::optional<Vec> unit;      // canonical element, if unital

  Vec multiply(const Vec& x, const Vec& y) const {
    return mult.apply(tensor_elem(carrier, carrier, x, y));
  }
  Elem unit_elem() const {
    if (!unit) throw BadInput("algebra has no unit");
    return Elem(carrier, *unit);
  }
};

inline Algebra ring_algebra(Int mod) {
  FPModule r = FPModule::ring(mod);
  return Algebra{r, ModuleMap(tensor(r, r), r, ZnMatrix::identity(mod, 1)),
                 Vec{1}};
}

inline Report verify_algebra(const Algebra& a) {
  Report rep;
  rep.subject = "algebra";
  const FPModule& c = a.carrier;
  const Int mod = c.modulus();
  const int r = c.rank();
  ZnMatrix id = ZnMatrix::identity(mod, r);
  const ZnMatrix& m = a.mult.matrix();
  // mu . (mu (x) id) = mu . (id (x) mu) on the ambient triple tensor.
  detail::check_composite(rep, "associativity", c, m * m.kronecker(id),
                          m * id.kronecker(m), {r, r, r});
  if (!a.unit) {
    rep.add_status("left-unit", CheckStatus::vacuous, "non-unital");
    rep.add_status("right-unit", CheckStatus::vacuous, "non-unital");
    return rep;
  }
  RingContext R(mod);
  ZnMatrix ucol(mod, r, 1, *a.unit);
  detail::check_composite(rep, "left-unit", c, m * ucol.kronecker(id), id, {r});
  detail::check_composite(rep, "right-unit", c, m * id.kronecker(ucol), id, {r});
  return rep;
}

inline Algebra opposite_algebra(const Algebra& a) {
  ModuleMap tw = twist_map(a.carrier, a.carrier);
  return Algebra{a.carrier,
                 ModuleMap(tw.dom(), a.carrier, a.mult.matrix() * tw.matrix()),
                 a.unit};
}

// ---------------------------------------------------------------------------
// Coalgebra
// ---------------------------------------------------------------------------

struct Coalgebra {
  FPModule carrier;
  ModuleMap comult;  // carrier -> carrier (x) carrier
  ModuleMap counit;  // carrier -> R (free rank 1)
};

inline Report verify_coalgebra(const Coalgebra& c) {
  Report rep;
  rep.subject = "coalgebra";
  const FPModule& m = c.carrier;
  const Int mod = m.modulus();
  const int r = m.rank();
  ZnMatrix id = ZnMatrix::identity(mod, r);
  const ZnMatrix& d = c.comult.matrix();
  const ZnMatrix& e = c.counit.matrix();
  FPModule c3 = tensor(tensor(m, m), m);
  detail::check_composite(rep, "coassociativity", c3, d.kronecker(id) * d,
                          id.kronecker(d) * d, {r});
  detail::check_composite(rep, "left-counit", m, e.kronecker(id) * d, id, {r});
  detail::check_composite(rep, "right-counit", m, id.kronecker(e) * d, id, {r});
  return rep;
}

// Co-opposite: comultiplication composed with the twist.
inline Coalgebra coopposite_coalgebra(const Coalgebra& c) {
  ModuleMap tw = twist_map(c.carrier, c.carrier);
  return Coalgebra{c.carrier,
                   ModuleMap(c.carrier, tw.cod(),
                             tw.matrix() * c.comult.matrix()),
                   c.counit};
}

// Delta_k(c), an element of the (k+1)-fold ambient tensor power. Asserts
// independence of the association order (coassociativity made concrete).
inline Vec iterated_delta(const Coalgebra& c, const Vec& x, int k) {
  if (k < 1) throw BadArity("iterated_delta needs k >= 1");
  const Int mod = c.carrier.modulus();
  const int r = c.carrier.rank();
  Vec cur = c.comult.apply(c.carrier.reduce(x));
  int pow = r;  // rank of the trailing identity block
  for (int step = 2; step <= k; ++step) {
    Vec left = c.comult.matrix()
                   .kronecker(ZnMatrix::identity(mod, pow))
                   .apply(cur);
    Vec right = ZnMatrix::identity(mod, pow)
                    .kronecker(c.comult.matrix())
                    .apply(cur);
    CORINGS_ASSERT(left == right, "iterated_delta association independence");
    cur = std::move(left);
    pow *= r;
  }
  return cur;
}

// C* bimodule actions on C: f->c = sum c1 f(c2), c<-f = sum f(c1) c2,
// with f given as a functional row matrix (1 x rank).
inline Vec star_left_act(const Coalgebra& c, const ZnMatrix& f, const Vec& x) {
  const int r = c.carrier.rank();
  ZnMatrix id = ZnMatrix::identity(c.carrier.modulus(), r);
  return c.carrier.reduce(id.kronecker(f).apply(c.comult.apply(x)));
}
inline Vec star_right_act(const Coalgebra& c, const ZnMatrix& f, const Vec& x) {
  const int r = c.carrier.rank();
  ZnMatrix id = ZnMatrix::identity(c.carrier.modulus(), r);
  return c.carrier.reduce(f.kronecker(id).apply(c.comult.apply(x)));
}

// ---------------------------------------------------------------------------
// Convolution and dual algebras
// ---------------------------------------------------------------------------

// Hom(C, A) with the convolution product f * g = mu_A . (f (x) g) . Delta,
// presented as an Algebra on the hom FPModule; keeps the HomModule so that
// callers can move between coordinates and concrete functionals.
struct HomAlgebra {
  HomModule hom;
  Algebra algebra;
};

inline HomAlgebra convolution_algebra(const Coalgebra& c, const Algebra& a) {
  if (c.carrier.modulus() != a.carrier.modulus())
    throw BaseMismatch("convolution over mismatched moduli");
  const Int mod = c.carrier.modulus();
  HomModule h = hom_module(c.carrier, a.carrier);
  const int k = static_cast<int>(h.gens.size());
  FPModule dom = tensor(h.module, h.module);
  std::vector<Vec> cols;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      ZnMatrix prod =
          a.mult.matrix() * h.gens[i].kronecker(h.gens[j]) * c.comult.matrix();
      cols.push_back(h.coords_of(prod));
    }
  ModuleMap mult(dom, h.module,
                 ZnMatrix::from_columns(mod, h.module.rank(), cols));
  std::optional<Vec> unit;
  if (a.unit) {
    RingContext R(mod);
    unit = h.coords_of(detail::outer(R, *a.unit, c.counit.matrix().row(0)));
  }
  Algebra alg{h.module, mult, unit};
  return HomAlgebra{std::move(h), std::move(alg)};
}

inline HomAlgebra dual_algebra(const Coalgebra& c) {
  return convolution_algebra(c, ring_algebra(c.carrier.modulus()));
}

// ---------------------------------------------------------------------------
// Bialgebra
// ---------------------------------------------------------------------------

struct Bialgebra {
  Algebra algebra;
  Coalgebra coalgebra;

  const FPModule& carrier() const { return algebra.carrier; }
};

inline Report verify_bialgebra(const Bialgebra& h) {
  if (!h.algebra.carrier.same_as(h.coalgebra.carrier))
    throw DimensionMismatch("bialgebra halves on different carriers");
  Report rep;
  rep.subject = "bialgebra";
  rep.merge(verify_algebra(h.algebra), "algebra");
  rep.merge(verify_coalgebra(h.coalgebra), "coalgebra");
  const FPModule& c = h.carrier();
  const Int mod = c.modulus();
  const int r = c.rank();
  const ZnMatrix& m = h.algebra.mult.matrix();
  const ZnMatrix& d = h.coalgebra.comult.matrix();
  const ZnMatrix& e = h.coalgebra.counit.matrix();
  FPModule c2 = tensor(c, c);
  FPModule rr = FPModule::ring(mod);
  // Delta(xy) = Delta(x) Delta(y) with the middle twist.
  ZnMatrix mult2 = m.kronecker(m) * detail::mid_twist(mod, r, r, r, r);
  detail::check_composite(rep, "comult-multiplicative", c2, d * m,
                          mult2 * d.kronecker(d), {r, r});
  detail::check_composite(rep, "counit-multiplicative", rr, e * m,
                          e.kronecker(e), {r, r});
  if (h.algebra.unit) {
    ZnMatrix ucol(mod, r, 1, *h.algebra.unit);
    detail::check_composite(rep, "comult-unit", c2, d * ucol,
                            ucol.kronecker(ucol), {1});
    detail::check_composite(rep, "counit-unit", rr, e * ucol,
                            ZnMatrix::identity(mod, 1), {1});
  } else {
    rep.add_status("comult-unit", CheckStatus::vacuous, "non-unital");
    rep.add_status("counit-unit", CheckStatus::vacuous, "non-unital");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// H-module coalgebras and H-comodule algebras
// ---------------------------------------------------------------------------

// NOTE: the compatibility axioms below (action/coaction laws plus Delta and
// epsilon compatibility in the measuring sense) follow the standard
// Doi-Koppinen conventions from the literature on entwined module theory.

struct HModuleCoalgebra {
  Coalgebra coalgebra;
  Bialgebra h;
  ModuleMap action;  // C (x) H -> C
};

struct HComoduleAlgebra {
  Algebra algebra;
  Bialgebra h;
  ModuleMap coaction;  // A -> A (x) H
};

inline Report verify_module_coalgebra(const HModuleCoalgebra& mc) {
  Report rep;
  rep.subject = "h-module-coalgebra";
  rep.merge(verify_coalgebra(mc.coalgebra), "coalgebra");
  const FPModule& c = mc.coalgebra.carrier;
  const FPModule& hm = mc.h.carrier();
  if (c.modulus() != hm.modulus()) throw DimensionMismatch("mismatched moduli");
  const Int mod = c.modulus();
  const int rc = c.rank(), rh = hm.rank();
  ZnMatrix ic = ZnMatrix::identity(mod, rc), ih = ZnMatrix::identity(mod, rh);
  const ZnMatrix& act = mc.action.matrix();
  const ZnMatrix& muh = mc.h.algebra.mult.matrix();
  const ZnMatrix& dc = mc.coalgebra.comult.matrix();
  const ZnMatrix& ec = mc.coalgebra.counit.matrix();
  const ZnMatrix& dh = mc.h.coalgebra.comult.matrix();
  const ZnMatrix& eh = mc.h.coalgebra.counit.matrix();
  detail::check_composite(rep, "action-associativity", c,
                          act * act.kronecker(ih), act * ic.kronecker(muh),
                          {rc, rh, rh});
  if (mc.h.algebra.unit) {
    ZnMatrix ucol(mod, rh, 1, *mc.h.algebra.unit);
    detail::check_composite(rep, "action-unit", c, act * ic.kronecker(ucol),
                            ic, {rc});
  } else {
    rep.add_status("action-unit", CheckStatus::vacuous, "non-unital H");
  }
  // Delta_C(c.h) = sum (c1.h1) (x) (c2.h2).
  FPModule cc = tensor(c, c);
  ZnMatrix rhs = act.kronecker(act) *
                 detail::mid_twist(mod, rc, rc, rh, rh) * dc.kronecker(dh);
  detail::check_composite(rep, "comult-compat", cc, dc * act, rhs, {rc, rh});
  detail::check_composite(rep, "counit-compat", FPModule::ring(mod), ec * act,
                          ec.kronecker(eh), {rc, rh});
  return rep;
}

inline Report verify_comodule_algebra(const HComoduleAlgebra& ca) {
  Report rep;
  rep.subject = "h-comodule-algebra";
  rep.merge(verify_algebra(ca.algebra), "algebra");
  const FPModule& a = ca.algebra.carrier;
  const FPModule& hm = ca.h.carrier();
  if (a.modulus() != hm.modulus()) throw DimensionMismatch("mismatched moduli");
  const Int mod = a.modulus();
  const int ra = a.rank(), rh = hm.rank();
  ZnMatrix ia = ZnMatrix::identity(mod, ra), ih = ZnMatrix::identity(mod, rh);
  const ZnMatrix& rho = ca.coaction.matrix();
  const ZnMatrix& mua = ca.algebra.mult.matrix();
  const ZnMatrix& muh = ca.h.algebra.mult.matrix();
  const ZnMatrix& dh = ca.h.coalgebra.comult.matrix();
  const ZnMatrix& eh = ca.h.coalgebra.counit.matrix();
  FPModule ah = tensor(a, hm);
  FPModule ahh = tensor(ah, hm);
  detail::check_composite(rep, "coaction-coassociativity", ahh,
                          ia.kronecker(dh) * rho, rho.kronecker(ih) * rho,
                          {ra});
  detail::check_composite(rep, "coaction-counital", a,
                          ia.kronecker(eh) * rho, ia, {ra});
  ZnMatrix rhs = mua.kronecker(muh) *
                 detail::mid_twist(mod, ra, rh, ra, rh) * rho.kronecker(rho);
  detail::check_composite(rep, "coaction-multiplicative", ah, rho * mua, rhs,
                          {ra, ra});
  if (ca.algebra.unit && ca.h.algebra.unit) {
    Vec img = ah.reduce(rho.apply(*ca.algebra.unit));
    Vec want = ah.reduce(
        tensor_elem(a, hm, *ca.algebra.unit, *ca.h.algebra.unit));
    rep.add("coaction-unit", img == want, "coaction of 1");
  } else {
    rep.add_status("coaction-unit", CheckStatus::vacuous, "non-unital");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Finite groups and G-sets
// ---------------------------------------------------------------------------

struct FiniteGroup {
  std::vector<std::vector<int>> table;  // table[a][b] = a*b
  int identity = 0;

  int order() const { return static_cast<int>(table.size()); }
  int mul(int a, int b) const { return table[a][b]; }
  int inverse(int a) const {
    for (int b = 0; b < order(); ++b)
      if (mul(a, b) == identity) return b;
    throw BadInput("element has no inverse");
  }

  void validate() const {
    const int n = order();
    if (n == 0) throw BadInput("empty group");
    for (int a = 0; a < n; ++a) {
      if (static_cast<int>(table[a].size()) != n)
        throw BadInput("ragged multiplication table");
      if (mul(identity, a) != a || mul(a, identity) != a)
        throw BadInput("identity law fails");
      inverse(a);
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw BadInput("associativity fails");
    }
  }

  static FiniteGroup cyclic(int k) {
    if (k < 1) throw BadInput("cyclic group order must be positive");
    FiniteGroup g;
    g.table.assign(k, std::vector<int>(k));
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) g.table[a][b] = (a + b) % k;
    return g;
  }

  static FiniteGroup product(const FiniteGroup& g, const FiniteGroup& h) {
    const int n = g.order(), m = h.order();
    FiniteGroup p;
    p.table.assign(n * m, std::vector<int>(n * m));
    for (int a = 0; a < n * m; ++a)
      for (int b = 0; b < n * m; ++b)
        p.table[a][b] = g.mul(a / m, b / m) * m + h.mul(a % m, b % m);
    p.identity = g.identity * m + h.identity;
    return p;
  }
};

// A finite right G-set: act[x][g] = x.g.
struct GSet {
  std::vector<std::vector<int>> act;

  int size() const { return static_cast<int>(act.size()); }

  void validate(const FiniteGroup& g) const {
    if (act.empty()) throw BadInput("empty G-set");
    for (int x = 0; x < size(); ++x) {
      if (static_cast<int>(act[x].size()) != g.order())
        throw BadInput("ragged action table");
      if (act[x][g.identity] != x) throw BadInput("identity acts nontrivially");
      for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
          if (act[act[x][a]][b] != act[x][g.mul(a, b)])
            throw BadInput("action not associative");
    }
  }

  static GSet trivial(const FiniteGroup& g, int size) {
    if (size < 1) throw BadInput("empty G-set");
    GSet x;
    x.act.assign(size, std::vector<int>(g.order()));
    for (int p = 0; p < size; ++p)
      for (int a = 0; a < g.order(); ++a) x.act[p][a] = p;
    return x;
  }

  static GSet regular(const FiniteGroup& g) {
    GSet x;
    x.act = g.table;
    return x;
  }

  static GSet disjoint_union(const GSet& a, const GSet& b) {
    GSet x = a;
    for (const auto& row : b.act) {
      x.act.push_back(row);
      for (auto& p : x.act.back()) p += a.size();
    }
    return x;
  }
};

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

// R[G]: basis indexed by group elements, grouplike comultiplication.
inline Bialgebra group_algebra(Int mod, const FiniteGroup& g) {
  g.validate();
  const int n = g.order();
  FPModule c = FPModule::free(mod, n);
  FPModule cc = tensor(c, c);
  ZnMatrix m(mod, n, n * n), d(mod, n * n, n), e(mod, 1, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m.at(g.mul(a, b), a * n + b) = 1;
  for (int a = 0; a < n; ++a) {
    d.at(a * n + a, a) = 1;
    e.at(0, a) = 1;
  }
  Vec unit(n, 0);
  unit[g.identity] = 1;
  return Bialgebra{
      Algebra{c, ModuleMap(cc, c, m), unit},
      Coalgebra{c, ModuleMap(c, cc, d),
                ModuleMap(c, FPModule::ring(mod), e)}};
}

// The k x k matrix coalgebra: Delta(e_ij) = sum_k e_ik (x) e_kj.
inline Coalgebra matrix_coalgebra(Int mod, int k) {
  if (k < 1) throw BadInput("matrix coalgebra size must be positive");
  const int n = k * k;
  FPModule c = FPModule::free(mod, n);
  FPModule cc = tensor(c, c);
  ZnMatrix d(mod, n * n, n), e(mod, 1, n);
  auto idx = [k](int i, int j) { return i * k + j; };
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      for (int l = 0; l < k; ++l)
        d.at(idx(i, l) * n + idx(l, j), idx(i, j)) = 1;
      if (i == j) e.at(0, idx(i, j)) = 1;
    }
  return Coalgebra{c, ModuleMap(c, cc, d),
                   ModuleMap(c, FPModule::ring(mod), e)};
}

// Functions on G: basis p_g with pointwise product and Delta(p_g) =
// sum_{ab=g} p_a (x) p_b.
inline Bialgebra dual_group_bialgebra(Int mod, const FiniteGroup& g) {
  g.validate();
  const int n = g.order();
  FPModule c = FPModule::free(mod, n);
  FPModule cc = tensor(c, c);
  ZnMatrix m(mod, n, n * n), d(mod, n * n, n), e(mod, 1, n);
  for (int a = 0; a < n; ++a) {
    m.at(a, a * n + a) = 1;
    for (int b = 0; b < n; ++b) d.at(a * n + b, g.mul(a, b)) = 1;
  }
  e.at(0, g.identity) = 1;
  return Bialgebra{
      Algebra{c, ModuleMap(cc, c, m), Vec(static_cast<size_t>(n), 1)},
      Coalgebra{c, ModuleMap(c, cc, d),
                ModuleMap(c, FPModule::ring(mod), e)}};
}

// R[X] with every x grouplike: Delta(x) = x (x) x, eps(x) = 1.
inline Coalgebra gset_coalgebra(Int mod, int size) {
  if (size < 1) throw BadInput("empty G-set");
  FPModule c = FPModule::free(mod, size);
  FPModule cc = tensor(c, c);
  ZnMatrix d(mod, size * size, size), e(mod, 1, size);
  for (int x = 0; x < size; ++x) {
    d.at(x * size + x, x) = 1;
    e.at(0, x) = 1;
  }
  return Coalgebra{c, ModuleMap(c, cc, d),
                   ModuleMap(c, FPModule::ring(mod), e)};
}

// R[X] as a right R[G]-module coalgebra via the G-action on X.
inline HModuleCoalgebra gset_module_coalgebra(Int mod, const FiniteGroup& g,
                                              const GSet& x) {
  x.validate(g);
  Bialgebra h = group_algebra(mod, g);
  Coalgebra c = gset_coalgebra(mod, x.size());
  const int rc = x.size(), rh = g.order();
  ZnMatrix act(mod, rc, rc * rh);
  for (int p = 0; p < rc; ++p)
    for (int a = 0; a < rh; ++a) act.at(x.act[p][a], p * rh + a) = 1;
  ModuleMap action(tensor(c.carrier, h.carrier()), c.carrier, act);
  return HModuleCoalgebra{c, h, action};
}

// A G-graded algebra as a right R[G]-comodule algebra: each basis element
// carries a degree, and the coaction sends a basis element e to e (x) u_deg.
inline HComoduleAlgebra graded_algebra(Int mod, const FiniteGroup& g,
                                       const Algebra& a,
                                       const std::vector<int>& degree) {
  g.validate();
  if (static_cast<int>(degree.size()) != a.carrier.rank())
    throw BadInput("one degree per basis element required");
  Bialgebra h = group_algebra(mod, g);
  const int ra = a.carrier.rank(), rh = g.order();
  ZnMatrix rho(mod, ra * rh, ra);
  for (int i = 0; i < ra; ++i) rho.at(i * rh + degree[i], i) = 1;
  ModuleMap coaction(a.carrier, tensor(a.carrier, h.carrier()), rho);
  return HComoduleAlgebra{a, h, coaction};
}

// K (x) H with componentwise structure through the middle twist.
inline Bialgebra tensor_bialgebra(const Bialgebra& k, const Bialgebra& h) {
  if (k.carrier().modulus() != h.carrier().modulus())
    throw BaseMismatch("tensor bialgebra moduli");
  const Int mod = k.carrier().modulus();
  const int rk = k.carrier().rank(), rh = h.carrier().rank();
  FPModule c = tensor(k.carrier(), h.carrier());
  FPModule cc = tensor(c, c);
  ZnMatrix m = k.algebra.mult.matrix().kronecker(h.algebra.mult.matrix()) *
               detail::mid_twist(mod, rk, rh, rk, rh);
  ZnMatrix d = detail::mid_twist(mod, rk, rk, rh, rh) *
               k.coalgebra.comult.matrix().kronecker(
                   h.coalgebra.comult.matrix());
  ZnMatrix e =
      k.coalgebra.counit.matrix().kronecker(h.coalgebra.counit.matrix());
  std::optional<Vec> unit;
  if (k.algebra.unit && h.algebra.unit)
    unit = tensor_elem(k.carrier(), h.carrier(), *k.algebra.unit,
                       *h.algebra.unit);
  return Bialgebra{Algebra{c, ModuleMap(cc, c, m), unit},
                   Coalgebra{c, ModuleMap(c, cc, d),
                             ModuleMap(c, FPModule::ring(mod), e)}};
}

}  // namespace corings

#endif  // CORINGS_ALGEBRA_HPP
