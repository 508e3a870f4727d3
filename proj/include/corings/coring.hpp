#ifndef CORINGS_CORING_HPP
#define CORINGS_CORING_HPP

// A-corings over a possibly noncommutative base algebra A: balanced tensor
// quotients, coring axiom verification, the three dual rings with their star
// products, coideals, subcorings and coseparability cointegrals.

#include <corings/algebra.hpp>

namespace corings {

// ---------------------------------------------------------------------------
// Balanced tensor product M (x)_A N
// ---------------------------------------------------------------------------

// The quotient of the plain tensor by the balancing relators
// (m.a) (x) n - m (x) (a.n). The quotient shares the plain ambient basis, so
// a canonical form of a quotient element is itself a representative in the
// plain tensor; formulas consuming representatives must be checked for
// balance independence (they are, via assertions at the use sites).
struct TensorOverA {
  FPModule left_factor, right_factor;
  FPModule plain;      // left_factor (x) right_factor
  FPModule quotient;   // plain / balancing
  ModuleMap project;   // plain -> quotient (ambient identity)
  ZnMatrix balancing;  // the balancing relator columns in the plain ambient

  // A representative in the plain tensor of the class of x.
  Vec lift(const Vec& x) const { return quotient.reduce(x); }
};

inline TensorOverA tensor_over_A(const FPModule& m, const ModuleMap& right_act,
                                 const FPModule& n, const ModuleMap& left_act,
                                 const Algebra& a) {
  if (m.modulus() != n.modulus() || m.modulus() != a.carrier.modulus())
    throw BaseMismatch("balanced tensor over mismatched moduli");
  const Int mod = m.modulus();
  const int rm = m.rank(), rn = n.rank(), ra = a.carrier.rank();
  FPModule plain = tensor(m, n);
  std::vector<Vec> bal;
  for (int i = 0; i < rm; ++i)
    for (int t = 0; t < ra; ++t)
      for (int j = 0; j < rn; ++j) {
        Vec ei(rm, 0), et(ra, 0), ej(rn, 0);
        ei[i] = 1;
        et[t] = 1;
        ej[j] = 1;
        Vec ma = right_act.apply(tensor_elem(m, a.carrier, ei, et));
        Vec an = left_act.apply(tensor_elem(a.carrier, n, et, ej));
        Vec col = vec_sub(RingContext(mod), tensor_elem(m, n, ma, ej),
                          tensor_elem(m, n, ei, an));
        if (!vec_is_zero(col)) bal.push_back(std::move(col));
      }
  ZnMatrix balm = ZnMatrix::from_columns(mod, rm * rn, bal);
  FPModule q = FPModule::presented(mod, rm * rn,
                                   plain.relations().hconcat(balm));
  return TensorOverA{m, n, plain, q,
                     ModuleMap(plain, q, ZnMatrix::identity(mod, rm * rn)),
                     balm};
}

// ---------------------------------------------------------------------------
// ACoring
// ---------------------------------------------------------------------------

struct ACoring {
  Algebra base;            // A
  FPModule carrier;        // C
  ModuleMap left_action;   // A (x) C -> C
  ModuleMap right_action;  // C (x) A -> C
  ModuleMap comult;        // chosen lift C -> C (x) C; the real Delta is its
                           // class in C (x)_A C
  ModuleMap counit;        // C -> A
  TensorOverA cc;          // C (x)_A C
};

inline ACoring make_coring(Algebra base, FPModule carrier,
                           ModuleMap left_action, ModuleMap right_action,
                           ModuleMap comult, ModuleMap counit) {
  TensorOverA cc =
      tensor_over_A(carrier, right_action, carrier, left_action, base);
  return ACoring{std::move(base),   std::move(carrier), std::move(left_action),
                 std::move(right_action), std::move(comult), std::move(counit),
                 std::move(cc)};
}

// Every R-coalgebra is an R-coring over the base R.
inline ACoring coring_from_coalgebra(const Coalgebra& c) {
  const Int mod = c.carrier.modulus();
  Algebra r = ring_algebra(mod);
  const int rc = c.carrier.rank();
  ZnMatrix id = ZnMatrix::identity(mod, rc);
  ModuleMap lact(tensor(r.carrier, c.carrier), c.carrier, id);
  ModuleMap ract(tensor(c.carrier, r.carrier), c.carrier, id);
  return make_coring(r, c.carrier, lact, ract, c.comult, c.counit);
}

// The canonical Sweedler coring A (x) A of the ring extension R -> A.
inline ACoring sweedler_coring(const Algebra& a) {
  if (!a.unit) throw BadInput("Sweedler coring needs a unital base");
  const Int mod = a.carrier.modulus();
  const int ra = a.carrier.rank();
  FPModule c = tensor(a.carrier, a.carrier);
  ZnMatrix ia = ZnMatrix::identity(mod, ra);
  const ZnMatrix& mu = a.mult.matrix();
  ModuleMap lact(tensor(a.carrier, c), c, mu.kronecker(ia));
  ModuleMap ract(tensor(c, a.carrier), c, ia.kronecker(mu));
  // Delta(x (x) y) = (x (x) 1) (x) (1 (x) y).
  std::vector<Vec> dcols;
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < ra; ++j) {
      Vec ei(ra, 0), ej(ra, 0);
      ei[i] = 1;
      ej[j] = 1;
      Vec left = tensor_elem(a.carrier, a.carrier, ei, *a.unit);
      Vec right = tensor_elem(a.carrier, a.carrier, *a.unit, ej);
      dcols.push_back(tensor_elem(c, c, left, right));
    }
  ModuleMap comult(c, tensor(c, c),
                   ZnMatrix::from_columns(mod, ra * ra * ra * ra, dcols));
  ModuleMap counit(c, a.carrier, mu);
  return make_coring(a, c, lact, ract, comult, counit);
}

inline Report verify_coring(const ACoring& c) {
  Report rep;
  rep.subject = "coring";
  const Int mod = c.carrier.modulus();
  const int rc = c.carrier.rank(), ra = c.base.carrier.rank();
  ZnMatrix ic = ZnMatrix::identity(mod, rc), ia = ZnMatrix::identity(mod, ra);
  const ZnMatrix& lam = c.left_action.matrix();
  const ZnMatrix& rho = c.right_action.matrix();
  const ZnMatrix& mu = c.base.mult.matrix();
  const ZnMatrix& dm = c.comult.matrix();
  const ZnMatrix& em = c.counit.matrix();

  // Bimodule axioms.
  detail::check_composite(rep, "left-action-associativity", c.carrier,
                          lam * mu.kronecker(ic), lam * ia.kronecker(lam),
                          {ra, ra, rc});
  detail::check_composite(rep, "right-action-associativity", c.carrier,
                          rho * rho.kronecker(ia), rho * ic.kronecker(mu),
                          {rc, ra, ra});
  detail::check_composite(rep, "action-commutation", c.carrier,
                          rho * lam.kronecker(ia), lam * ia.kronecker(rho),
                          {ra, rc, ra});
  if (c.base.unit) {
    ZnMatrix u(mod, ra, 1, *c.base.unit);
    detail::check_composite(rep, "left-action-unit", c.carrier,
                            lam * u.kronecker(ic), ic, {rc});
    detail::check_composite(rep, "right-action-unit", c.carrier,
                            rho * ic.kronecker(u), ic, {rc});
  } else {
    rep.add_status("left-action-unit", CheckStatus::vacuous, "non-unital base");
    rep.add_status("right-action-unit", CheckStatus::vacuous, "non-unital base");
  }

  // A-bilinearity of Delta, compared in C (x)_A C.
  ZnMatrix act2l = lam.kronecker(ic);          // a.(x (x) y) = (a.x) (x) y
  ZnMatrix act2r = ic.kronecker(rho);          // (x (x) y).a = x (x) (y.a)
  detail::check_composite(rep, "comult-left-linear", c.cc.quotient, dm * lam,
                          act2l * ia.kronecker(dm), {ra, rc});
  detail::check_composite(rep, "comult-right-linear", c.cc.quotient, dm * rho,
                          act2r * dm.kronecker(ia), {rc, ra});
  detail::check_composite(rep, "counit-left-linear", c.base.carrier, em * lam,
                          mu * ia.kronecker(em), {ra, rc});
  detail::check_composite(rep, "counit-right-linear", c.base.carrier, em * rho,
                          mu * em.kronecker(ia), {rc, ra});

  // Coassociativity in C (x)_A C (x)_A C: quotient of the plain cube by the
  // tensor relations plus balancing in both middle positions.
  {
    FPModule c3 = tensor(c.cc.plain, c.carrier);
    ZnMatrix rel = c3.relations()
                       .hconcat(c.cc.balancing.kronecker(ic))
                       .hconcat(ic.kronecker(c.cc.balancing));
    FPModule q3 = FPModule::presented(mod, rc * rc * rc, rel);
    detail::check_composite(rep, "coassociativity", q3, dm.kronecker(ic) * dm,
                            ic.kronecker(dm) * dm, {rc});
  }

  // Counit diagrams over (x)_A.
  detail::check_composite(rep, "left-counit", c.carrier,
                          lam * em.kronecker(ic) * dm, ic, {rc});
  detail::check_composite(rep, "right-counit", c.carrier,
                          rho * ic.kronecker(em) * dm, ic, {rc});
  return rep;
}

// ---------------------------------------------------------------------------
// Dual rings
// ---------------------------------------------------------------------------

enum class DualSide { left, right, bi };

// *C / C* / *C*: the A-linear (resp. bilinear) functionals C -> A inside
// Hom_R(C, A), with the star product of the matching side and unit eps.
struct DualRing {
  DualSide side;
  HomModule hom;        // Hom_R(C, A)
  Submodule carrier_sub;  // the linear functionals, inside hom.module
  FPModule carrier;     // presentation of the carrier
  ModuleMap inclusion;  // carrier -> hom.module
  Algebra algebra;      // star product, unit eps

  ZnMatrix matrix_of(const Vec& coords) const {
    return hom.matrix_of(inclusion.apply(coords));
  }
  Vec coords_of(const ZnMatrix& t) const {
    auto c = carrier_sub.coordinates(hom.coords_of(t));
    if (!c) throw AxiomViolation("functional is not in this dual ring");
    return carrier.reduce(*c);
  }
};

namespace detail {

// Solutions x (coords in hom.module) of "sum x_k E_k = 0 mod the codomain
// relation span columnwise", where E_k are equal-shaped constraint matrices.
inline std::vector<Vec> constraint_solutions(const HomModule& hom,
                                             const std::vector<ZnMatrix>& e,
                                             const FPModule& cod) {
  const Int mod = cod.modulus();
  const int k = static_cast<int>(e.size());
  if (k == 0) return {};
  const int rows = e[0].rows(), cols = e[0].cols();
  std::vector<Vec> ecols;
  for (const auto& m : e) ecols.emplace_back(m.raw().begin(), m.raw().end());
  ZnMatrix flat = ZnMatrix::from_columns(mod, rows * cols, ecols);
  // Allowance: codomain relators placed in any input column.
  std::vector<Vec> allow;
  for (int j = 0; j < cols; ++j)
    for (int l = 0; l < cod.relations().cols(); ++l) {
      Vec z(static_cast<size_t>(rows) * cols, 0);
      for (int i = 0; i < rows; ++i)
        z[static_cast<size_t>(i) * cols + j] = cod.relations().at(i, l);
      allow.push_back(std::move(z));
    }
  ZnMatrix K = kernel(
      flat.hconcat(ZnMatrix::from_columns(mod, rows * cols, allow)));
  std::vector<Vec> out;
  for (int j = 0; j < K.cols(); ++j) {
    Vec full_col = K.column(j);
    out.emplace_back(full_col.begin(), full_col.begin() + k);
  }
  return out;
}

}  // namespace detail

inline DualRing dual_ring(const ACoring& c, DualSide side,
                          bool skip_verify = false) {
  if (!skip_verify && !verify_coring(c).ok())
    throw AxiomViolation("dual_ring over an unverified coring");
  const Int mod = c.carrier.modulus();
  const int rc = c.carrier.rank(), ra = c.base.carrier.rank();
  ZnMatrix ic = ZnMatrix::identity(mod, rc), ia = ZnMatrix::identity(mod, ra);
  const ZnMatrix& lam = c.left_action.matrix();
  const ZnMatrix& rho = c.right_action.matrix();
  const ZnMatrix& mu = c.base.mult.matrix();
  HomModule hom = hom_module(c.carrier, c.base.carrier);

  // Linearity constraints, one matrix per hom generator.
  auto left_constraint = [&](const ZnMatrix& t) {  // f(a.c) = a f(c)
    return t * lam - mu * ia.kronecker(t);
  };
  auto right_constraint = [&](const ZnMatrix& t) {  // f(c.a) = f(c) a
    return t * rho - mu * t.kronecker(ia);
  };
  std::vector<ZnMatrix> cons;
  for (const auto& g : hom.gens) {
    ZnMatrix e(mod, 0, 0);
    if (side == DualSide::left) e = left_constraint(g);
    else if (side == DualSide::right) e = right_constraint(g);
    else e = left_constraint(g).vconcat(right_constraint(g));
    cons.push_back(std::move(e));
  }
  Submodule sub(hom.module, detail::constraint_solutions(hom, cons,
                                                         c.base.carrier));
  auto pres = sub.presented();
  const FPModule& p = pres.module;
  const int k = p.rank();

  // Star product on basis pairs, with balance-independence assertions.
  const ZnMatrix& dm = c.comult.matrix();
  std::vector<Vec> cols;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Vec ei(k, 0), ej(k, 0);
      ei[i] = 1;
      ej[j] = 1;
      ZnMatrix f = hom.matrix_of(pres.inclusion.apply(ei));
      ZnMatrix g = hom.matrix_of(pres.inclusion.apply(ej));
      ZnMatrix inner(mod, 0, 0);  // the map C (x) C -> A applied after Delta
      if (side == DualSide::left)
        inner = g * rho * ic.kronecker(f);  // c1 (x) c2 -> g(c1 f(c2))
      else if (side == DualSide::right)
        inner = f * lam * g.kronecker(ic);  // c1 (x) c2 -> f(g(c1) c2)
      else
        inner = mu * g.kronecker(f);  // c1 (x) c2 -> g(c1) f(c2)
      // Representative independence: inner kills the balancing relators.
      for (int b = 0; b < c.cc.balancing.cols(); ++b)
        CORINGS_ASSERT(
            c.base.carrier.is_zero(inner.apply(c.cc.balancing.column(b))),
            "star product must be balance-independent");
      ZnMatrix prod = inner * dm;
      auto coords = sub.coordinates(hom.coords_of(prod));
      if (!coords)
        throw AxiomViolation("star product left the dual carrier");
      cols.push_back(p.reduce(*coords));
    }
  ModuleMap mult(tensor(p, p), p, ZnMatrix::from_columns(mod, k, cols));
  auto unit = sub.coordinates(hom.coords_of(c.counit.matrix()));
  if (!unit) throw AxiomViolation("counit is not in the dual carrier");
  DualRing d{side, std::move(hom), std::move(sub), p, pres.inclusion,
             Algebra{p, mult, p.reduce(*unit)}};
  return d;
}

// ---------------------------------------------------------------------------
// Coideals and subcorings
// ---------------------------------------------------------------------------

enum class CoidealKind { left, right, bi, coideal };

struct CoidealResult {
  bool ok = false;
  std::string witness;       // failing generator, if any
  bool counit_vanishes = false;  // eps(K) = 0, reported separately
};

// Membership of Delta(K) in the matching subspace of C (x)_A C:
// right: Im(K (x) C); left: Im(C (x) K); bi: both; coideal: the wedge
// K /\ K = Ke(C (x)_A C -> C/K (x)_A C/K).
inline CoidealResult check_coideal(const ACoring& c, const Submodule& k,
                                   CoidealKind kind) {
  if (!k.parent().same_as(c.carrier))
    throw SubmoduleMismatch("coideal candidate not inside the coring");
  const Int mod = c.carrier.modulus();
  const int rc = c.carrier.rank();
  CoidealResult res;
  res.counit_vanishes = true;
  for (const auto& g : k.generators())
    if (!c.base.carrier.is_zero(c.counit.apply(g))) res.counit_vanishes = false;

  auto side_span = [&](bool k_left) {
    std::vector<Vec> gens;
    for (const auto& kg : k.generators())
      for (int j = 0; j < rc; ++j) {
        Vec e(rc, 0);
        e[j] = 1;
        gens.push_back(k_left ? tensor_elem(c.carrier, c.carrier, kg, e)
                              : tensor_elem(c.carrier, c.carrier, e, kg));
      }
    return Submodule(c.cc.quotient, gens);
  };

  Submodule target = Submodule::zero(c.cc.quotient);
  if (kind == CoidealKind::right) {
    target = side_span(true);
  } else if (kind == CoidealKind::left) {
    target = side_span(false);
  } else if (kind == CoidealKind::bi) {
    // Both inclusions must hold; handled by two recursive calls.
    CoidealResult l = check_coideal(c, k, CoidealKind::left);
    CoidealResult r = check_coideal(c, k, CoidealKind::right);
    res.ok = l.ok && r.ok;
    res.witness = !l.ok ? l.witness : r.witness;
    return res;
  } else {
    // Wedge: kernel of C (x)_A C -> C/K (x)_A C/K. The projections are
    // ambient identities, so the wedge is the kernel of the identity matrix
    // into the enlarged quotient.
    ZnMatrix kg =
        ZnMatrix::from_columns(mod, rc, k.generators());
    ZnMatrix extra = kg.kronecker(ZnMatrix::identity(mod, rc))
                         .hconcat(ZnMatrix::identity(mod, rc).kronecker(kg));
    FPModule wedge_target = FPModule::presented(
        mod, rc * rc, c.cc.quotient.relations().hconcat(extra));
    ModuleMap pi(c.cc.quotient, wedge_target,
                 ZnMatrix::identity(mod, rc * rc));
    target = kernel_of_map(pi);
  }
  res.ok = true;
  for (const auto& g : k.generators()) {
    Vec img = c.cc.quotient.reduce(c.comult.apply(g));
    if (!target.contains(img)) {
      res.ok = false;
      res.witness = "Delta of generator (";
      for (size_t t = 0; t < g.size(); ++t)
        res.witness += (t ? "," : "") + std::to_string(g[t]);
      res.witness += ") escapes";
      break;
    }
  }
  return res;
}

// Base-R subcorings: purity plus Delta(D) inside the image of D (x) D.
inline bool check_subcoring(const ACoring& c, const Submodule& d) {
  if (!d.parent().same_as(c.carrier))
    throw SubmoduleMismatch("subcoring candidate not inside the coring");
  if (c.base.carrier.rank() != 1 || c.base.carrier.relations().cols() != 0)
    throw UnsupportedBase("subcorings only implemented over base R");
  if (!is_pure_submodule(d, c.carrier)) return false;
  std::vector<Vec> gens;
  for (const auto& x : d.generators())
    for (const auto& y : d.generators())
      gens.push_back(tensor_elem(c.carrier, c.carrier, x, y));
  Submodule dd(c.cc.plain, gens);
  for (const auto& g : d.generators())
    if (!dd.contains(c.cc.plain.reduce(c.comult.apply(g)))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Coseparability
// ---------------------------------------------------------------------------

struct CointegralResult {
  bool ok = false;
  std::string witness;
  Algebra induced;  // the (non-unital) algebra c (x) c~ -> sum c1 gamma(c2 (x) c~)
};

// gamma: C (x) C -> R is a cointegral iff gamma . Delta = eps and
// sum c1 gamma(c2 (x) c') = sum gamma(c (x) c'1) c'2.
inline CointegralResult coseparability_check(const ACoring& c,
                                             const ModuleMap& gamma) {
  if (c.base.carrier.rank() != 1 || c.base.carrier.relations().cols() != 0)
    throw UnsupportedBase("coseparability only implemented over base R");
  const Int mod = c.carrier.modulus();
  const int rc = c.carrier.rank();
  ZnMatrix ic = ZnMatrix::identity(mod, rc);
  const ZnMatrix& gm = gamma.matrix();
  const ZnMatrix& dm = c.comult.matrix();
  CointegralResult res;
  ZnMatrix lhs1 = gm * dm;
  ZnMatrix diff1 = lhs1 - c.counit.matrix();
  for (int j = 0; j < rc; ++j)
    if (!c.base.carrier.is_zero(diff1.column(j))) {
      res.witness = "gamma.Delta != eps at basis " +
                    detail::basis_tuple(j, {rc});
      return res;
    }
  ZnMatrix ml = ic.kronecker(gm) * dm.kronecker(ic);   // sum c1 gamma(c2 (x) c')
  ZnMatrix mr = gm.kronecker(ic) * ic.kronecker(dm);   // sum gamma(c (x) c'1) c'2
  ZnMatrix diff2 = ml - mr;
  for (int j = 0; j < rc * rc; ++j)
    if (!c.carrier.is_zero(diff2.column(j))) {
      res.witness = "colinearity fails at basis " +
                    detail::basis_tuple(j, {rc, rc});
      return res;
    }
  res.ok = true;
  res.induced = Algebra{c.carrier,
                        ModuleMap(tensor(c.carrier, c.carrier), c.carrier, ml),
                        std::nullopt};
  return res;
}

}  // namespace corings

#endif  // CORINGS_CORING_HPP
