#ifndef CORINGS_ENTWINE_HPP
#define CORINGS_ENTWINE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "corings/algebra.hpp"
#include "corings/coring.hpp"
#include "corings/pairing.hpp"
#include "corings/rational.hpp"

namespace corings {

// ---------------------------------------------------------------------------
// Entwining structures
// ---------------------------------------------------------------------------

enum class Handed { right_right, left_right };

// An entwining (A, C, psi) with psi : C (x) A -> A (x) C.  The left-right
// flavour keeps the same data; its axioms are those of the right-right
// structure over the opposite algebra, and every operation transports it
// through left_right_transform rather than duplicating code paths.
struct Entwining {
  Algebra algebra;      // A
  Coalgebra coalgebra;  // C
  ModuleMap psi;        // C (x) A -> A (x) C
  Handed handed = Handed::right_right;
};

inline Entwining make_entwining(Algebra a, Coalgebra c, ModuleMap psi,
                                Handed handed = Handed::right_right) {
  if (!psi.dom().same_as(tensor(c.carrier, a.carrier)) ||
      !psi.cod().same_as(tensor(a.carrier, c.carrier)))
    throw DimensionMismatch("psi must map C (x) A to A (x) C");
  return Entwining{std::move(a), std::move(c), std::move(psi), handed};
}

// psi = twist: always an entwining, for any algebra and coalgebra.
inline Entwining twist_entwining(Algebra a, Coalgebra c,
                                 Handed handed = Handed::right_right) {
  ModuleMap tw = twist_map(c.carrier, a.carrier);
  return make_entwining(std::move(a), std::move(c), std::move(tw), handed);
}

// (A, C, psi) left-right  <->  (A^op, C, psi) right-right; an involution.
inline Entwining left_right_transform(const Entwining& e) {
  return Entwining{opposite_algebra(e.algebra), e.coalgebra, e.psi,
                   e.handed == Handed::right_right ? Handed::left_right
                                                   : Handed::right_right};
}

inline Report verify_entwining(const Entwining& e) {
  const Entwining& t =
      (e.handed == Handed::left_right) ? left_right_transform(e) : e;
  Report rep;
  rep.subject = "entwining";
  const Int mod = t.algebra.carrier.modulus();
  const int ra = t.algebra.carrier.rank(), rc = t.coalgebra.carrier.rank();
  ZnMatrix ia = ZnMatrix::identity(mod, ra), ic = ZnMatrix::identity(mod, rc);
  const ZnMatrix& P = t.psi.matrix();
  const ZnMatrix& mu = t.algebra.mult.matrix();
  const ZnMatrix& dc = t.coalgebra.comult.matrix();
  const ZnMatrix& ec = t.coalgebra.counit.matrix();
  FPModule ac = tensor(t.algebra.carrier, t.coalgebra.carrier);

  detail::check_composite(
      rep, "psi-multiplicative", ac, P * ic.kronecker(mu),
      mu.kronecker(ic) * ia.kronecker(P) * P.kronecker(ia), {rc, ra, ra});
  if (t.algebra.unit) {
    ZnMatrix ucol(mod, ra, 1, *t.algebra.unit);
    detail::check_composite(rep, "psi-unit", ac, P * ic.kronecker(ucol),
                            ucol.kronecker(ic), {rc});
  } else {
    rep.add_status("psi-unit", CheckStatus::vacuous, "non-unital algebra");
  }
  detail::check_composite(
      rep, "psi-comultiplicative", tensor(t.algebra.carrier, tensor(t.coalgebra.carrier, t.coalgebra.carrier)),
      ia.kronecker(dc) * P,
      P.kronecker(ic) * ic.kronecker(P) * dc.kronecker(ia), {rc, ra});
  detail::check_composite(rep, "psi-counital", t.algebra.carrier,
                          ia.kronecker(ec) * P, ec.kronecker(ia), {rc, ra});
  return rep;
}

// ---------------------------------------------------------------------------
// The coring A (x) C of an entwining
// ---------------------------------------------------------------------------

inline ACoring coring_from_entwining(const Entwining& e0) {
  const Entwining e =
      (e0.handed == Handed::left_right) ? left_right_transform(e0) : e0;
  if (!e.algebra.unit)
    throw BadInput("coring_from_entwining needs a unital algebra");
  if (!verify_entwining(e).ok())
    throw AxiomViolation("entwining axioms fail; no coring");
  const Int mod = e.algebra.carrier.modulus();
  const int ra = e.algebra.carrier.rank(), rc = e.coalgebra.carrier.rank();
  ZnMatrix ia = ZnMatrix::identity(mod, ra), ic = ZnMatrix::identity(mod, rc);
  const ZnMatrix& P = e.psi.matrix();
  const ZnMatrix& mu = e.algebra.mult.matrix();
  FPModule c = tensor(e.algebra.carrier, e.coalgebra.carrier);

  ModuleMap lact(tensor(e.algebra.carrier, c), c, mu.kronecker(ic));
  ModuleMap ract(tensor(c, e.algebra.carrier), c,
                 mu.kronecker(ic) * ia.kronecker(P));
  // a (x) c |-> sum (a (x) c1) (x) (1 (x) c2), lifted into the plain tensor.
  ZnMatrix ucol(mod, ra, 1, *e.algebra.unit);
  ZnMatrix insert = ic.kronecker(ucol.kronecker(ic));  // C(x)C -> C(x)A(x)C
  ModuleMap comult(c, tensor(c, c),
                   ia.kronecker(insert) * ia.kronecker(e.coalgebra.comult.matrix()));
  ModuleMap counit(c, e.algebra.carrier,
                   ia.kronecker(e.coalgebra.counit.matrix()));
  return make_coring(e.algebra, c, lact, ract, comult, counit);
}

// ---------------------------------------------------------------------------
// The Koppinen ring Hom(C, A)
// ---------------------------------------------------------------------------

// Hom_R(C, A) with (f . g)(c) = sum f(c2)_psi g(c1^psi) and unit eta . eps;
// for a left-right structure, the opposite of the transported product.
inline HomAlgebra koppinen_ring(const Entwining& e) {
  if (e.handed == Handed::left_right) {
    HomAlgebra k = koppinen_ring(left_right_transform(e));
    k.algebra = opposite_algebra(k.algebra);
    return k;
  }
  if (!verify_entwining(e).ok())
    throw AxiomViolation("entwining axioms fail; no Koppinen ring");
  const Int mod = e.algebra.carrier.modulus();
  const int ra = e.algebra.carrier.rank(), rc = e.coalgebra.carrier.rank();
  ZnMatrix ia = ZnMatrix::identity(mod, ra), ic = ZnMatrix::identity(mod, rc);
  const ZnMatrix& P = e.psi.matrix();
  const ZnMatrix& mu = e.algebra.mult.matrix();
  const ZnMatrix& dc = e.coalgebra.comult.matrix();
  HomModule h = hom_module(e.coalgebra.carrier, e.algebra.carrier);
  const int k = static_cast<int>(h.gens.size());
  std::vector<Vec> cols;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      ZnMatrix f = h.gens[i], g = h.gens[j];
      ZnMatrix prod = mu * ia.kronecker(g) * P * ic.kronecker(f) * dc;
      cols.push_back(h.coords_of(prod));
    }
  ModuleMap mult(tensor(h.module, h.module), h.module,
                 ZnMatrix::from_columns(mod, h.module.rank(), cols));
  std::optional<Vec> unit;
  if (e.algebra.unit) {
    RingContext R(mod);
    unit = h.coords_of(
        detail::outer(R, *e.algebra.unit, e.coalgebra.counit.matrix().row(0)));
  }
  Algebra alg{h.module, mult, unit};
  return HomAlgebra{std::move(h), std::move(alg)};
}

// ---------------------------------------------------------------------------
// phi : Hom(C, A) -> *(A (x) C)
// ---------------------------------------------------------------------------

struct PhiIso {
  HomAlgebra koppinen;
  ACoring coring;
  DualRing dual;
  ModuleMap forward;  // koppinen carrier -> dual carrier
  ModuleMap inverse;  // dual carrier -> koppinen carrier
  Report report;
};

inline PhiIso phi_isomorphism(const Entwining& e0) {
  const Entwining e =
      (e0.handed == Handed::left_right) ? left_right_transform(e0) : e0;
  ACoring c = coring_from_entwining(e);
  HomAlgebra k = koppinen_ring(e);
  DualRing d = dual_ring(c, DualSide::left);
  const Int mod = c.carrier.modulus();
  const int ra = e.algebra.carrier.rank(), rc = e.coalgebra.carrier.rank();
  ZnMatrix ia = ZnMatrix::identity(mod, ra), ic = ZnMatrix::identity(mod, rc);
  const ZnMatrix& mu = e.algebra.mult.matrix();
  const int kr = k.hom.module.rank(), dr = d.carrier.rank();
  ZnMatrix ucol(mod, ra, 1, *e.algebra.unit);

  std::vector<Vec> fwd, inv;
  for (int t = 0; t < kr; ++t) {
    Vec et(kr, 0);
    et[t] = 1;
    ZnMatrix f = k.hom.matrix_of(et);
    fwd.push_back(d.coords_of(mu * ia.kronecker(f)));
  }
  for (int t = 0; t < dr; ++t) {
    Vec et(dr, 0);
    et[t] = 1;
    ZnMatrix h = d.matrix_of(et);
    inv.push_back(k.hom.coords_of(h * ucol.kronecker(ic)));
  }
  ModuleMap forward(k.hom.module, d.carrier,
                    ZnMatrix::from_columns(mod, dr, fwd));
  ModuleMap inverse(d.carrier, k.hom.module,
                    ZnMatrix::from_columns(mod, kr, inv));

  Report rep;
  rep.subject = "phi-isomorphism";
  {
    ZnMatrix r1 = inverse.matrix() * forward.matrix();
    ZnMatrix r2 = forward.matrix() * inverse.matrix();
    detail::check_composite(rep, "round-trip-hom", k.hom.module, r1,
                            ZnMatrix::identity(mod, kr), {kr});
    detail::check_composite(rep, "round-trip-dual", d.carrier, r2,
                            ZnMatrix::identity(mod, dr), {dr});
  }
  bool mult_ok = true;
  for (int i = 0; i < kr && mult_ok; ++i)
    for (int j = 0; j < kr && mult_ok; ++j) {
      Vec ei(kr, 0), ej(kr, 0);
      ei[i] = 1;
      ej[j] = 1;
      Vec lhs = forward.apply(k.algebra.multiply(ei, ej));
      Vec rhs = d.algebra.multiply(forward.apply(ei), forward.apply(ej));
      if (!d.carrier.equal(lhs, rhs)) {
        mult_ok = false;
        rep.add("multiplicative", false,
                "basis (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  if (mult_ok) rep.add("multiplicative", true);
  rep.add("unit",
          k.algebra.unit &&
              d.carrier.equal(forward.apply(*k.algebra.unit), *d.algebra.unit),
          "phi(eta . eps) = eps of the coring");

  // A-bilinearity: phi(a f) = a . phi(f) and phi(f a) = phi(f) . a.
  const ZnMatrix& P = e.psi.matrix();
  const ZnMatrix& rho = c.right_action.matrix();
  bool bil = true;
  for (int s = 0; s < ra && bil; ++s) {
    ZnMatrix acol(mod, ra, 1);
    for (int i = 0; i < ra; ++i) acol.at(i, 0) = (i == s) ? 1 : 0;
    for (int t = 0; t < kr && bil; ++t) {
      Vec et(kr, 0);
      et[t] = 1;
      ZnMatrix f = k.hom.matrix_of(et);
      // (a f)(c) = sum a_psi f(c^psi).
      ZnMatrix af = mu * ia.kronecker(f) * P * ic.kronecker(acol);
      // (a . h)(x) = h(x a).
      ZnMatrix h = d.matrix_of(forward.apply(et));
      ZnMatrix ah = h * rho * ZnMatrix::identity(mod, ra * rc).kronecker(acol);
      // (f a)(c) = f(c) a and (h . a)(x) = h(x) a.
      ZnMatrix fa = mu * ia.kronecker(acol) * f;
      ZnMatrix ha = mu * ia.kronecker(acol) * h;
      if (!d.carrier.equal(forward.apply(k.hom.coords_of(af)),
                           d.coords_of(ah)) ||
          !d.carrier.equal(forward.apply(k.hom.coords_of(fa)),
                           d.coords_of(ha))) {
        bil = false;
        rep.add("a-bilinear", false,
                "basis (" + std::to_string(s) + "," + std::to_string(t) + ")");
      }
    }
  }
  if (bil) rep.add("a-bilinear", true);
  if (!rep.ok()) throw AxiomViolation("phi is not an isomorphism of A-rings");
  return PhiIso{std::move(k), std::move(c), std::move(d), std::move(forward),
                std::move(inverse), std::move(rep)};
}

// ---------------------------------------------------------------------------
// Doi-Koppinen structures
// ---------------------------------------------------------------------------

struct DKStructure {
  Bialgebra h;
  HComoduleAlgebra a;  // right H-comodule algebra
  HModuleCoalgebra c;  // right H-module coalgebra
};

namespace detail {

inline void require_ok(const Report& rep, const std::string& component) {
  if (rep.ok()) return;
  for (const auto& item : rep.items)
    if (item.status == CheckStatus::fail)
      throw AxiomViolation(component + " fails: " + item.name);
  throw AxiomViolation(component + " fails");
}

inline void require_same_bialgebra(const Bialgebra& x, const Bialgebra& y) {
  if (!x.carrier().same_as(y.carrier()) ||
      !(x.algebra.mult.matrix() == y.algebra.mult.matrix()) ||
      !(x.coalgebra.comult.matrix() == y.coalgebra.comult.matrix()) ||
      !(x.coalgebra.counit.matrix() == y.coalgebra.counit.matrix()) ||
      x.algebra.unit != y.algebra.unit)
    throw BadInput("components carry different copies of H");
}

}  // namespace detail

inline DKStructure make_dk(const HComoduleAlgebra& a,
                           const HModuleCoalgebra& c) {
  detail::require_same_bialgebra(a.h, c.h);
  detail::require_ok(verify_bialgebra(a.h), "bialgebra H");
  detail::require_ok(verify_comodule_algebra(a), "comodule algebra A");
  detail::require_ok(verify_module_coalgebra(c), "module coalgebra C");
  return DKStructure{a.h, a, c};
}

// psi(c (x) a) = sum a<0> (x) c . a<1>.
inline Entwining dk_to_entwining(const DKStructure& d) {
  const Int mod = d.h.carrier().modulus();
  const FPModule& am = d.a.algebra.carrier;
  const FPModule& cm = d.c.coalgebra.carrier;
  const int ra = am.rank(), rc = cm.rank(), rh = d.h.carrier().rank();
  ZnMatrix ic = ZnMatrix::identity(mod, rc);
  ZnMatrix ia = ZnMatrix::identity(mod, ra);
  ZnMatrix ih = ZnMatrix::identity(mod, rh);
  ZnMatrix tw = twist_map(cm, am).matrix();
  ZnMatrix P = ia.kronecker(d.c.action.matrix()) * tw.kronecker(ih) *
               ic.kronecker(d.a.coaction.matrix());
  return make_entwining(d.a.algebra, d.c.coalgebra,
                        ModuleMap(tensor(cm, am), tensor(am, cm), P));
}

// ---------------------------------------------------------------------------
// Alternative Doi-Koppinen structures
// ---------------------------------------------------------------------------

struct HModuleAlgebra {
  Algebra algebra;
  Bialgebra h;
  ModuleMap action;  // A (x) H -> A
};

struct HComoduleCoalgebra {
  Coalgebra coalgebra;
  Bialgebra h;
  ModuleMap coaction;  // C -> C (x) H
};

inline Report verify_module_algebra(const HModuleAlgebra& ma) {
  Report rep;
  rep.subject = "h-module-algebra";
  rep.merge(verify_algebra(ma.algebra), "algebra");
  const FPModule& a = ma.algebra.carrier;
  const FPModule& hm = ma.h.carrier();
  if (a.modulus() != hm.modulus()) throw DimensionMismatch("mismatched moduli");
  const Int mod = a.modulus();
  const int ra = a.rank(), rh = hm.rank();
  ZnMatrix ia = ZnMatrix::identity(mod, ra), ih = ZnMatrix::identity(mod, rh);
  const ZnMatrix& act = ma.action.matrix();
  const ZnMatrix& mua = ma.algebra.mult.matrix();
  const ZnMatrix& muh = ma.h.algebra.mult.matrix();
  const ZnMatrix& dh = ma.h.coalgebra.comult.matrix();
  const ZnMatrix& eh = ma.h.coalgebra.counit.matrix();
  detail::check_composite(rep, "action-associativity", a,
                          act * act.kronecker(ih), act * ia.kronecker(muh),
                          {ra, rh, rh});
  if (ma.h.algebra.unit) {
    ZnMatrix ucol(mod, rh, 1, *ma.h.algebra.unit);
    detail::check_composite(rep, "action-unit", a, act * ia.kronecker(ucol),
                            ia, {ra});
  } else {
    rep.add_status("action-unit", CheckStatus::vacuous, "non-unital H");
  }
  // (a b) . h = sum (a . h1)(b . h2).
  ZnMatrix rhs = mua * act.kronecker(act) *
                 detail::mid_twist(mod, ra, ra, rh, rh) *
                 ia.kronecker(ia).kronecker(dh);
  detail::check_composite(rep, "mult-compat", a, act * mua.kronecker(ih), rhs,
                          {ra, ra, rh});
  if (ma.algebra.unit) {
    ZnMatrix ucol(mod, ra, 1, *ma.algebra.unit);
    detail::check_composite(rep, "unit-compat", a, act * ucol.kronecker(ih),
                            ucol * eh, {rh});
  } else {
    rep.add_status("unit-compat", CheckStatus::vacuous, "non-unital A");
  }
  return rep;
}

inline Report verify_comodule_coalgebra(const HComoduleCoalgebra& cc) {
  Report rep;
  rep.subject = "h-comodule-coalgebra";
  rep.merge(verify_coalgebra(cc.coalgebra), "coalgebra");
  const FPModule& c = cc.coalgebra.carrier;
  const FPModule& hm = cc.h.carrier();
  if (c.modulus() != hm.modulus()) throw DimensionMismatch("mismatched moduli");
  const Int mod = c.modulus();
  const int rc = c.rank(), rh = hm.rank();
  ZnMatrix ic = ZnMatrix::identity(mod, rc), ih = ZnMatrix::identity(mod, rh);
  const ZnMatrix& rho = cc.coaction.matrix();
  const ZnMatrix& muh = cc.h.algebra.mult.matrix();
  const ZnMatrix& dh = cc.h.coalgebra.comult.matrix();
  const ZnMatrix& eh = cc.h.coalgebra.counit.matrix();
  const ZnMatrix& dc = cc.coalgebra.comult.matrix();
  const ZnMatrix& ec = cc.coalgebra.counit.matrix();
  detail::check_composite(rep, "coaction-coassociativity",
                          tensor(tensor(c, hm), hm),
                          ic.kronecker(dh) * rho, rho.kronecker(ih) * rho,
                          {rc});
  detail::check_composite(rep, "coaction-counital", c,
                          ic.kronecker(eh) * rho, ic, {rc});
  // sum c1<0> (x) c2<0> (x) c1<1> c2<1> = sum (Delta c<0>) (x) c<1>.
  ZnMatrix lhs = ic.kronecker(ic).kronecker(muh) *
                 detail::mid_twist(mod, rc, rh, rc, rh) *
                 rho.kronecker(rho) * dc;
  detail::check_composite(rep, "comult-compat", tensor(tensor(c, c), hm), lhs,
                          dc.kronecker(ih) * rho, {rc});
  if (cc.h.algebra.unit) {
    ZnMatrix ucol(mod, rh, 1, *cc.h.algebra.unit);
    detail::check_composite(rep, "counit-compat", hm, ec.kronecker(ih) * rho,
                            ucol * ec, {rc});
  } else {
    rep.add_status("counit-compat", CheckStatus::vacuous, "non-unital H");
  }
  return rep;
}

struct AltDKStructure {
  Bialgebra h;
  HModuleAlgebra a;     // right H-module algebra
  HComoduleCoalgebra c; // right H-comodule coalgebra
};

inline AltDKStructure make_alt_dk(const HModuleAlgebra& a,
                                  const HComoduleCoalgebra& c) {
  detail::require_same_bialgebra(a.h, c.h);
  detail::require_ok(verify_bialgebra(a.h), "bialgebra H");
  detail::require_ok(verify_module_algebra(a), "module algebra A");
  detail::require_ok(verify_comodule_coalgebra(c), "comodule coalgebra C");
  return AltDKStructure{a.h, a, c};
}

// psi(c (x) a) = sum a . c<1> (x) c<0>.
inline Entwining alt_dk_to_entwining(const AltDKStructure& d) {
  const Int mod = d.h.carrier().modulus();
  const FPModule& am = d.a.algebra.carrier;
  const FPModule& cm = d.c.coalgebra.carrier;
  const int ra = am.rank(), rc = cm.rank(), rh = d.h.carrier().rank();
  ZnMatrix ia = ZnMatrix::identity(mod, ra);
  ZnMatrix ic = ZnMatrix::identity(mod, rc);
  ZnMatrix tw1 = twist_map(tensor(cm, d.h.carrier()), am).matrix();
  ZnMatrix tw2 = twist_map(cm, d.h.carrier()).matrix();
  ZnMatrix P = d.a.action.matrix().kronecker(ic) * ia.kronecker(tw2) * tw1 *
               d.c.coaction.matrix().kronecker(ia);
  return make_entwining(d.a.algebra, d.c.coalgebra,
                        ModuleMap(tensor(cm, am), tensor(am, cm), P));
}

// ---------------------------------------------------------------------------
// Entwined modules
// ---------------------------------------------------------------------------

struct EntwinedModule {
  Entwining entwining;
  FPModule carrier;
  ModuleMap action;    // M (x) A -> M
  ModuleMap coaction;  // M -> M (x) C
};

inline EntwinedModule make_entwined_module(Entwining e, FPModule carrier,
                                           ModuleMap action,
                                           ModuleMap coaction) {
  if (e.handed != Handed::right_right)
    throw BadInput("transport a left-right structure through opposites first");
  if (!action.dom().same_as(tensor(carrier, e.algebra.carrier)) ||
      !action.cod().same_as(carrier))
    throw DimensionMismatch("action must be M (x) A -> M");
  if (!coaction.dom().same_as(carrier) ||
      !coaction.cod().same_as(tensor(carrier, e.coalgebra.carrier)))
    throw DimensionMismatch("coaction must be M -> M (x) C");
  return EntwinedModule{std::move(e), std::move(carrier), std::move(action),
                        std::move(coaction)};
}

inline Report verify_entwined_module(const EntwinedModule& m) {
  Report rep;
  rep.subject = "entwined-module";
  const Entwining& e = m.entwining;
  const Int mod = m.carrier.modulus();
  const int rm = m.carrier.rank(), ra = e.algebra.carrier.rank(),
            rc = e.coalgebra.carrier.rank();
  ZnMatrix im = ZnMatrix::identity(mod, rm), ia = ZnMatrix::identity(mod, ra),
           ic = ZnMatrix::identity(mod, rc);
  const ZnMatrix& act = m.action.matrix();
  const ZnMatrix& rho = m.coaction.matrix();
  const ZnMatrix& P = e.psi.matrix();
  const ZnMatrix& mu = e.algebra.mult.matrix();
  const ZnMatrix& dc = e.coalgebra.comult.matrix();
  const ZnMatrix& ec = e.coalgebra.counit.matrix();

  detail::check_composite(rep, "action-associativity", m.carrier,
                          act * act.kronecker(ia), act * im.kronecker(mu),
                          {rm, ra, ra});
  if (e.algebra.unit) {
    ZnMatrix ucol(mod, ra, 1, *e.algebra.unit);
    detail::check_composite(rep, "action-unit", m.carrier,
                            act * im.kronecker(ucol), im, {rm});
  } else {
    rep.add_status("action-unit", CheckStatus::vacuous, "non-unital algebra");
  }
  detail::check_composite(rep, "coaction-coassociativity",
                          tensor(tensor(m.carrier, e.coalgebra.carrier),
                                 e.coalgebra.carrier),
                          rho.kronecker(ic) * rho, im.kronecker(dc) * rho,
                          {rm});
  detail::check_composite(rep, "coaction-counital", m.carrier,
                          im.kronecker(ec) * rho, im, {rm});
  // rho(m a) = sum m<0> a_psi (x) m<1>^psi.
  detail::check_composite(rep, "entwined-compatibility",
                          tensor(m.carrier, e.coalgebra.carrier), rho * act,
                          act.kronecker(ic) * im.kronecker(P) *
                              rho.kronecker(ia),
                          {rm, ra});
  if (!rep.ok()) return rep;

  // Install m . f = sum m<0> f(m<1>) and re-verify it as a module action
  // over the Koppinen ring.
  HomAlgebra k = koppinen_ring(e);
  const int kr = k.hom.module.rank();
  std::vector<Vec> cols;
  for (int t = 0; t < rm; ++t) {
    Vec et(rm, 0);
    et[t] = 1;
    for (int j = 0; j < kr; ++j) {
      Vec ej(kr, 0);
      ej[j] = 1;
      ZnMatrix f = k.hom.matrix_of(ej);
      cols.push_back(m.carrier.reduce(
          (act * im.kronecker(f)).apply(m.coaction.apply(et))));
    }
  }
  ZnMatrix ka = ZnMatrix::from_columns(mod, rm, cols);
  ZnMatrix ik = ZnMatrix::identity(mod, kr);
  detail::check_composite(rep, "koppinen-action-associativity", m.carrier,
                          ka * ka.kronecker(ik),
                          ka * im.kronecker(k.algebra.mult.matrix()),
                          {rm, kr, kr});
  if (k.algebra.unit) {
    ZnMatrix ucol(mod, kr, 1, *k.algebra.unit);
    detail::check_composite(rep, "koppinen-action-unital", m.carrier,
                            ka * im.kronecker(ucol), im, {rm});
  } else {
    rep.add_status("koppinen-action-unital", CheckStatus::vacuous,
                   "non-unital Koppinen ring");
  }
  return rep;
}

// The regular entwined module A (x) C of the entwining's coring.
inline EntwinedModule regular_entwined_module(const Entwining& e) {
  ACoring c = coring_from_entwining(e);
  const Int mod = c.carrier.modulus();
  ZnMatrix ia = ZnMatrix::identity(mod, e.algebra.carrier.rank());
  ModuleMap coaction(c.carrier, tensor(c.carrier, e.coalgebra.carrier),
                     ia.kronecker(e.coalgebra.comult.matrix()));
  return make_entwined_module(e, c.carrier, c.right_action,
                              std::move(coaction));
}

// For a C-subcomodule span N of M, the span N . A with restricted structure.
inline EntwinedModule entwined_subobject(const EntwinedModule& m,
                                         const Submodule& n) {
  if (!n.parent().same_as(m.carrier))
    throw SubmoduleMismatch("subobject span lives in a different module");
  const Int mod = m.carrier.modulus();
  const int rm = m.carrier.rank(), ra = m.entwining.algebra.carrier.rank(),
            rc = m.entwining.coalgebra.carrier.rank();
  // Saturate N . A under the action.
  Submodule na = n;
  for (;;) {
    std::vector<Vec> next = na.generators();
    for (const Vec& g : na.generators())
      for (int s = 0; s < ra; ++s) {
        Vec a(ra, 0);
        a[s] = 1;
        next.push_back(m.action.apply(tensor_elem(
            m.carrier, m.entwining.algebra.carrier, g, a)));
      }
    Submodule grown(m.carrier, next);
    if (grown == na) break;
    na = grown;
  }
  auto pres = na.presented();
  const FPModule& p = pres.module;
  const int k = p.rank();
  // Restricted action.
  std::vector<Vec> act_cols;
  for (int t = 0; t < k; ++t)
    for (int s = 0; s < ra; ++s) {
      Vec et(k, 0), a(ra, 0);
      et[t] = 1;
      a[s] = 1;
      Vec img = m.action.apply(tensor_elem(
          m.carrier, m.entwining.algebra.carrier, pres.inclusion.apply(et), a));
      auto coords = na.coordinates(img);
      CORINGS_ASSERT(coords.has_value(), "N . A must be action-stable");
      act_cols.push_back(p.reduce(*coords));
    }
  ModuleMap act(tensor(p, m.entwining.algebra.carrier), p,
                ZnMatrix::from_columns(mod, k, act_cols));
  // Restricted coaction: solve rho(v) = (iota (x) id) y.
  ZnMatrix ic = ZnMatrix::identity(mod, rc);
  ZnMatrix inc_c = pres.inclusion.matrix().kronecker(ic);
  FPModule amb = tensor(m.carrier, m.entwining.coalgebra.carrier);
  std::vector<Vec> co_cols;
  for (int t = 0; t < k; ++t) {
    Vec et(k, 0);
    et[t] = 1;
    Vec b = m.coaction.apply(pres.inclusion.apply(et));
    auto y = detail::solve_mod(inc_c, amb, b);
    if (!y) throw SubmoduleMismatch("span is not a subcomodule");
    co_cols.push_back(tensor(p, m.entwining.coalgebra.carrier).reduce(*y));
  }
  ModuleMap co(p, tensor(p, m.entwining.coalgebra.carrier),
               ZnMatrix::from_columns(mod, k * rc, co_cols));
  return make_entwined_module(m.entwining, p, act, co);
}

// ---------------------------------------------------------------------------
// Smash rings A #op T
// ---------------------------------------------------------------------------

struct SmashRing {
  Submodule t_sub;        // T inside Hom(C, R)
  FPModule t_module;      // presentation of T
  ModuleMap t_inclusion;  // T -> Hom(C, R)
  HomModule dual;         // Hom(C, R)
  Algebra algebra;        // on A (x) T
  ModuleMap unit_embed;   // A -> A (x) T, a -> a # eps
  ModuleMap beta;         // A (x) T -> Koppinen carrier, a # f -> a f(.)
  HomAlgebra koppinen;
  Report report;
};

inline SmashRing smash_ring(const DKStructure& d, const Submodule& t) {
  const Int mod = d.h.carrier().modulus();
  const FPModule& am = d.a.algebra.carrier;
  const FPModule& cm = d.c.coalgebra.carrier;
  const int ra = am.rank(), rc = cm.rank(), rh = d.h.carrier().rank();
  HomModule dualh = hom_module(cm, FPModule::ring(mod));
  if (!t.parent().same_as(dualh.module))
    throw SubmoduleMismatch("T must live inside Hom(C, R)");
  const ZnMatrix& dc = d.c.coalgebra.comult.matrix();
  const ZnMatrix& actC = d.c.action.matrix();
  ZnMatrix ic = ZnMatrix::identity(mod, rc);

  auto row_of = [&](const Vec& hom_coords) {
    return dualh.matrix_of(hom_coords);  // 1 x rc
  };
  auto conv = [&](const ZnMatrix& f, const ZnMatrix& g) {
    return f.kronecker(g) * dc;  // (f * g)(c) = sum f(c1) g(c2)
  };
  auto h_hit = [&](int q, const ZnMatrix& f) {  // (h_q f)(c) = f(c . h_q)
    ZnMatrix qcol(mod, rh, 1);
    qcol.at(q, 0) = 1;
    return f * actC * ic.kronecker(qcol);
  };

  // Preconditions: eps in T; T closed under convolution and the H-action.
  auto eps = t.coordinates(dualh.coords_of(d.c.coalgebra.counit.matrix()));
  if (!eps) throw NotSubalgebra("counit is not in T");
  std::vector<Vec> gens = t.generators();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = 0; j < gens.size(); ++j) {
      ZnMatrix prod = conv(row_of(gens[i]), row_of(gens[j]));
      if (!t.contains(dualh.coords_of(prod)))
        throw NotSubalgebra("T is not convolution-closed at generator pair (" +
                            std::to_string(i) + "," + std::to_string(j) + ")");
    }
  for (int q = 0; q < rh; ++q)
    for (size_t j = 0; j < gens.size(); ++j)
      if (!t.contains(dualh.coords_of(h_hit(q, row_of(gens[j])))))
        throw NotSubalgebra("T is not H-stable at (h_" + std::to_string(q) +
                            ", generator " + std::to_string(j) + ")");

  auto pres = t.presented();
  const FPModule& tm = pres.module;
  const int kt = tm.rank();
  auto t_row = [&](const Vec& coords) {
    return row_of(pres.inclusion.apply(coords));
  };
  auto t_coords = [&](const ZnMatrix& f) {
    auto c = t.coordinates(dualh.coords_of(f));
    CORINGS_ASSERT(c.has_value(), "smash product left T");
    return tm.reduce(*c);
  };

  FPModule carrier = tensor(am, tm);
  RingContext R(mod);
  const ZnMatrix& rhoA = d.a.coaction.matrix();
  std::vector<Vec> mult_cols;
  for (int i = 0; i < ra; ++i)
    for (int k1 = 0; k1 < kt; ++k1)
      for (int j = 0; j < ra; ++j)
        for (int l = 0; l < kt; ++l) {
          // (a_i # t_k1) . (a_j # t_l) = sum a_i<0> a_j # (a_i<1> t_l) * t_k1.
          Vec out(static_cast<size_t>(ra) * kt, 0);
          Vec w = rhoA.column(i);  // coefficients of a_i<0> (x) a_i<1>
          Vec ek(kt, 0), el(kt, 0);
          ek[k1] = 1;
          el[l] = 1;
          for (int p = 0; p < ra; ++p)
            for (int q = 0; q < rh; ++q) {
              Int coef = w[static_cast<size_t>(p) * rh + q];
              if (coef == 0) continue;
              Vec ep(ra, 0), ej(ra, 0);
              ep[p] = 1;
              ej[j] = 1;
              Vec ab = d.a.algebra.multiply(ep, ej);
              Vec tt = t_coords(conv(h_hit(q, t_row(el)), t_row(ek)));
              for (int x = 0; x < ra; ++x)
                for (int y = 0; y < kt; ++y) {
                  size_t idx = static_cast<size_t>(x) * kt + y;
                  out[idx] = R.add(out[idx], R.mul(coef, R.mul(ab[x], tt[y])));
                }
            }
          mult_cols.push_back(carrier.reduce(out));
        }
  ModuleMap mult(tensor(carrier, carrier), carrier,
                 ZnMatrix::from_columns(mod, carrier.rank(), mult_cols));
  std::optional<Vec> unit;
  if (d.a.algebra.unit)
    unit = tensor_elem(am, tm, *d.a.algebra.unit, tm.reduce(*eps));
  Algebra alg{carrier, mult, unit};

  Report rep;
  rep.subject = "smash-ring";
  rep.merge(verify_algebra(alg), "algebra");

  // a -> a # eps is an algebra morphism.
  std::vector<Vec> embed_cols;
  for (int i = 0; i < ra; ++i) {
    Vec ei(ra, 0);
    ei[i] = 1;
    embed_cols.push_back(tensor_elem(am, tm, ei, tm.reduce(*eps)));
  }
  ModuleMap embed(am, carrier,
                  ZnMatrix::from_columns(mod, carrier.rank(), embed_cols));
  bool emb_ok = true;
  for (int i = 0; i < ra && emb_ok; ++i)
    for (int j = 0; j < ra && emb_ok; ++j) {
      Vec ei(ra, 0), ej(ra, 0);
      ei[i] = 1;
      ej[j] = 1;
      Vec lhs = embed.apply(d.a.algebra.multiply(ei, ej));
      Vec rhs = alg.multiply(embed.apply(ei), embed.apply(ej));
      if (!carrier.equal(lhs, rhs)) {
        emb_ok = false;
        rep.add("embedding-multiplicative", false,
                "basis (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  if (emb_ok) rep.add("embedding-multiplicative", true);

  // beta : a # f -> [c -> a f(c)] into the Koppinen ring.
  HomAlgebra kop = koppinen_ring(dk_to_entwining(d));
  std::vector<Vec> beta_cols;
  for (int i = 0; i < ra; ++i)
    for (int k1 = 0; k1 < kt; ++k1) {
      Vec ei(ra, 0), ek(kt, 0);
      ei[i] = 1;
      ek[k1] = 1;
      beta_cols.push_back(
          kop.hom.coords_of(detail::outer(R, ei, t_row(ek).row(0))));
    }
  ModuleMap beta(carrier, kop.hom.module,
                 ZnMatrix::from_columns(mod, kop.hom.module.rank(), beta_cols));
  bool beta_ok = true;
  const int cr = carrier.rank();
  for (int i = 0; i < cr && beta_ok; ++i)
    for (int j = 0; j < cr && beta_ok; ++j) {
      Vec ei(cr, 0), ej(cr, 0);
      ei[i] = 1;
      ej[j] = 1;
      Vec lhs = beta.apply(alg.multiply(ei, ej));
      Vec rhs = kop.algebra.multiply(beta.apply(ei), beta.apply(ej));
      if (!kop.hom.module.equal(lhs, rhs)) {
        beta_ok = false;
        rep.add("beta-multiplicative", false,
                "basis (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  if (beta_ok) rep.add("beta-multiplicative", true);
  rep.add("beta-unit",
          unit && kop.algebra.unit &&
              kop.hom.module.equal(beta.apply(*unit), *kop.algebra.unit));
  rep.add_status("t-pure", is_pure_submodule(t, dualh.module)
                               ? CheckStatus::pass
                               : CheckStatus::flagged,
                 "purity of T inside Hom(C, R)");
  return SmashRing{t,
                   tm,
                   pres.inclusion,
                   std::move(dualh),
                   std::move(alg),
                   std::move(embed),
                   std::move(beta),
                   std::move(kop),
                   std::move(rep)};
}

// Density of beta(A #op T) in Hom(C, A); at finite scale this is image
// equality, reported with an explicit caveat.
inline Report beta_density(const DKStructure& d, const SmashRing& s) {
  Report rep;
  rep.subject = "beta-density";
  const FPModule& hom = s.koppinen.hom.module;
  if (hom.rank() == 0) {
    rep.add_status("dense", CheckStatus::vacuous, "zero-dimensional Hom(C, A)");
    rep.add_status("finite-scale-caveat", CheckStatus::flagged,
                   "density collapses to image equality at finite scale");
    return rep;
  }
  Submodule image = image_of_map(s.beta);
  bool dense = (image == Submodule::full(hom));
  std::string note;
  if (!dense) {
    // Orthogonal witness in A (x) C: a tensor on which every image element
    // a f(.) evaluates to zero while some f in Hom(C, A) does not.
    const Int mod = hom.modulus();
    const FPModule& am = d.a.algebra.carrier;
    const int ra = am.rank(), rc = d.c.coalgebra.carrier.rank();
    ZnMatrix ia = ZnMatrix::identity(mod, ra);
    const ZnMatrix& mu = d.a.algebra.mult.matrix();
    auto phi_of = [&](const Vec& g) {  // ra x (ra rc)
      return mu * ia.kronecker(s.koppinen.hom.matrix_of(g));
    };
    std::vector<Vec> gens = image.generators();
    if (gens.empty()) {
      note = "image is zero";
    } else {
      ZnMatrix stacked = phi_of(gens[0]);
      for (size_t i = 1; i < gens.size(); ++i)
        stacked = stacked.vconcat(phi_of(gens[i]));
      ZnMatrix ker = kernel(stacked);
      for (int j = 0; j < ker.cols() && note.empty(); ++j) {
        Vec v = ker.column(j);
        for (int g = 0; g < hom.rank(); ++g) {
          Vec eg(hom.rank(), 0);
          eg[g] = 1;
          Vec img = phi_of(eg).apply(v);
          if (!am.is_zero(img)) {
            note = "witness tensor separates Hom(C, A) from the image";
            break;
          }
        }
      }
    }
  }
  rep.add("dense", dense, note);
  rep.add_status("finite-scale-caveat", CheckStatus::flagged,
                 "density collapses to image equality at finite scale");
  return rep;
}

// ---------------------------------------------------------------------------
// Rational parts over A #op T versus over C
// ---------------------------------------------------------------------------

// T with the opposite convolution product, measuring into *C.
inline MeasuringPairing t_measuring_pairing(const DKStructure& d,
                                            const SmashRing& s) {
  const Int mod = s.t_module.modulus();
  const int kt = s.t_module.rank();
  const ZnMatrix& dc = d.c.coalgebra.comult.matrix();
  auto t_row = [&](const Vec& coords) {
    return s.dual.matrix_of(s.t_inclusion.apply(coords));
  };
  auto t_coords = [&](const ZnMatrix& f) {
    auto back = s.t_sub.coordinates(s.dual.coords_of(f));
    CORINGS_ASSERT(back.has_value(), "functional left T");
    return s.t_module.reduce(*back);
  };
  std::vector<Vec> cols;
  for (int i = 0; i < kt; ++i)
    for (int j = 0; j < kt; ++j) {
      Vec ei(kt, 0), ej(kt, 0);
      ei[i] = 1;
      ej[j] = 1;
      // f . g := g * f (opposite convolution), matching m -> m (1 # f).
      cols.push_back(t_coords(t_row(ej).kronecker(t_row(ei)) * dc));
    }
  ModuleMap mult(tensor(s.t_module, s.t_module), s.t_module,
                 ZnMatrix::from_columns(mod, kt, cols));
  Vec eps = t_coords(d.c.coalgebra.counit.matrix());
  Algebra t_op{s.t_module, mult, eps};
  ACoring cc = coring_from_coalgebra(d.c.coalgebra);
  DualRing dual = dual_ring(cc, DualSide::left);
  std::vector<Vec> kcols;
  for (int i = 0; i < kt; ++i) {
    Vec ei(kt, 0);
    ei[i] = 1;
    kcols.push_back(dual.coords_of(t_row(ei)));
  }
  ModuleMap kappa(s.t_module, dual.carrier,
                  ZnMatrix::from_columns(mod, dual.carrier.rank(), kcols));
  return make_measuring_pairing(std::move(t_op), std::move(cc),
                                std::move(kappa));
}

// Rat over C through T versus Rat over A (x) C through A #op T.
inline Report dk_rat_equality(const AModule& m, const DKStructure& d,
                              const SmashRing& s) {
  if (!m.acting.carrier.same_as(s.algebra.carrier))
    throw CrossModuleError("module is not over this smash ring");
  Report rep;
  rep.subject = "dk-rat-equality";
  const Int mod = m.carrier.modulus();
  const int rm = m.carrier.rank(), rc = d.c.coalgebra.carrier.rank();
  const int ra = d.a.algebra.carrier.rank(), kt = s.t_module.rank();
  const int cr = s.algebra.carrier.rank();
  RingContext R(mod);

  // Compatibility hypothesis: (a # eps)(1 # f) = sum a<0> # (a<1> f) holds
  // identically in A #op T; checked on the basis.
  {
    bool ok = true;
    const ZnMatrix& rhoA = d.a.coaction.matrix();
    const int rh = d.h.carrier().rank();
    const ZnMatrix& actC = d.c.action.matrix();
    ZnMatrix ic = ZnMatrix::identity(mod, rc);
    for (int i = 0; i < ra && ok; ++i)
      for (int l = 0; l < kt && ok; ++l) {
        Vec ei(ra, 0), el(kt, 0);
        ei[i] = 1;
        el[l] = 1;
        Vec lhs = s.algebra.multiply(
            s.unit_embed.apply(ei),
            tensor_elem(d.a.algebra.carrier, s.t_module, *d.a.algebra.unit,
                        el));
        Vec rhs(static_cast<size_t>(cr), 0);
        Vec w = rhoA.column(i);
        for (int p = 0; p < ra; ++p)
          for (int q = 0; q < rh; ++q) {
            Int coef = w[static_cast<size_t>(p) * rh + q];
            if (coef == 0) continue;
            ZnMatrix qcol(mod, rh, 1);
            qcol.at(q, 0) = 1;
            ZnMatrix hit =
                s.dual.matrix_of(s.t_inclusion.apply(el)) * actC *
                ic.kronecker(qcol);
            auto back = s.t_sub.coordinates(s.dual.coords_of(hit));
            CORINGS_ASSERT(back.has_value(), "T is not H-stable");
            Vec tt = s.t_module.reduce(*back);
            for (int y = 0; y < kt; ++y) {
              size_t idx = static_cast<size_t>(p) * kt + y;
              rhs[idx] = R.add(rhs[idx], R.mul(coef, tt[y]));
            }
          }
        if (!s.algebra.carrier.equal(lhs, rhs)) {
          ok = false;
          rep.add("compatibility-hypothesis", false,
                  "basis (" + std::to_string(i) + "," + std::to_string(l) +
                      ")");
        }
      }
    if (ok) rep.add("compatibility-hypothesis", true);
  }

  // Leg A: restrict M to T (m . f := m (1 # f)) and take Rat over C.
  MeasuringPairing mp = t_measuring_pairing(d, s);
  std::vector<Vec> tact_cols;
  for (int t = 0; t < rm; ++t)
    for (int j = 0; j < kt; ++j) {
      Vec et(rm, 0), ej(kt, 0);
      et[t] = 1;
      ej[j] = 1;
      Vec u = tensor_elem(d.a.algebra.carrier, s.t_module, *d.a.algebra.unit,
                          ej);
      tact_cols.push_back(m.act(et, u));
    }
  AModule mt = make_amodule(
      mp.acting, m.carrier,
      ModuleMap(tensor(m.carrier, s.t_module), m.carrier,
                ZnMatrix::from_columns(mod, rm, tact_cols)));
  RationalPart leg_a = rat(mt, mp);

  // Leg B: Rat over the coring A (x) C, through the smash ring directly.
  HomModule hom = hom_module(s.algebra.carrier, m.carrier);
  std::vector<Vec> rho_cols;
  for (int t = 0; t < rm; ++t) {
    Vec et(rm, 0);
    et[t] = 1;
    ZnMatrix f(mod, rm, cr);
    for (int u = 0; u < cr; ++u) {
      Vec eu(cr, 0);
      eu[u] = 1;
      Vec img = m.act(et, eu);
      for (int i = 0; i < rm; ++i) f.at(i, u) = img[i];
    }
    rho_cols.push_back(hom.coords_of(f));
  }
  ModuleMap rho(m.carrier, hom.module,
                ZnMatrix::from_columns(mod, hom.module.rank(), rho_cols));
  // alpha(m (x) c)(a # f) = f(c) . (m (a # eps)).
  auto t_row = [&](int k1) {
    Vec e(kt, 0);
    e[k1] = 1;
    return s.dual.matrix_of(s.t_inclusion.apply(e));
  };
  std::vector<Vec> al_cols;
  for (int t = 0; t < rm; ++t)
    for (int j = 0; j < rc; ++j) {
      Vec et(rm, 0);
      et[t] = 1;
      ZnMatrix f(mod, rm, cr);
      for (int p = 0; p < ra; ++p) {
        Vec ep(ra, 0);
        ep[p] = 1;
        Vec ma = m.act(et, s.unit_embed.apply(ep));
        for (int k1 = 0; k1 < kt; ++k1) {
          Int coef = t_row(k1).at(0, j);
          for (int i = 0; i < rm; ++i)
            f.at(i, p * kt + k1) = R.mul(coef, ma[i]);
        }
      }
      al_cols.push_back(hom.coords_of(f));
    }
  ModuleMap alpha(tensor(m.carrier, d.c.coalgebra.carrier), hom.module,
                  ZnMatrix::from_columns(mod, hom.module.rank(), al_cols));
  if (!kernel_of_map(alpha).is_zero())
    throw AmbiguousCoaction("alpha over the smash ring is not injective");
  Submodule leg_b = preimage(rho, image_of_map(alpha));

  rep.add("rational-parts-equal", leg_a.submodule == leg_b);

  // Membership: M is entwined exactly when it is all rational.
  if (leg_a.submodule == Submodule::full(m.carrier)) {
    std::vector<Vec> a_cols;
    for (int t = 0; t < rm; ++t)
      for (int p = 0; p < ra; ++p) {
        Vec et(rm, 0), ep(ra, 0);
        et[t] = 1;
        ep[p] = 1;
        a_cols.push_back(m.act(et, s.unit_embed.apply(ep)));
      }
    ModuleMap a_act(tensor(m.carrier, d.a.algebra.carrier), m.carrier,
                    ZnMatrix::from_columns(mod, rm, a_cols));
    // Ambient coaction from the rational comodule on the full submodule.
    ZnMatrix ic = ZnMatrix::identity(mod, rc);
    ZnMatrix inc = leg_a.inclusion.matrix();
    std::vector<Vec> co_cols;
    bool built = true;
    for (int t = 0; t < rm && built; ++t) {
      Vec et(rm, 0);
      et[t] = 1;
      auto coords = leg_a.submodule.coordinates(et);
      if (!coords) {
        built = false;
        break;
      }
      Vec inner = leg_a.comodule.coaction.apply(
          leg_a.module.carrier.reduce(*coords));
      co_cols.push_back(tensor(m.carrier, d.c.coalgebra.carrier)
                            .reduce(inc.kronecker(ic).apply(inner)));
    }
    if (built) {
      ModuleMap co(m.carrier, tensor(m.carrier, d.c.coalgebra.carrier),
                   ZnMatrix::from_columns(mod, rm * rc, co_cols));
      EntwinedModule em = make_entwined_module(dk_to_entwining(d), m.carrier,
                                               a_act, co);
      rep.add("entwined-membership", verify_entwined_module(em).ok(),
              "rational modules are entwined");
    } else {
      rep.add("entwined-membership", false, "coaction not recoverable");
    }
  } else {
    rep.add_status("entwined-membership", CheckStatus::vacuous,
                   "M is not all rational");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Grouplike coinvariants
// ---------------------------------------------------------------------------

struct GrouplikeCoinvariants {
  Submodule coinvariants;
  bool induction_surjective = false;
};

inline GrouplikeCoinvariants grouplike_coinvariants(const Comodule& m,
                                                    const Vec& x) {
  const ACoring& c = m.coring;
  const Int mod = c.carrier.modulus();
  const int rc = c.carrier.rank(), ra = c.base.carrier.rank(),
            rm = m.carrier.rank();
  RingContext R(mod);
  // Grouplike: Delta(x) = x (x)_A x and eps(x) = 1.
  Vec xx(static_cast<size_t>(rc) * rc, 0);
  for (int i = 0; i < rc; ++i)
    for (int j = 0; j < rc; ++j)
      xx[static_cast<size_t>(i) * rc + j] = R.mul(x[i], x[j]);
  if (c.cc.lift(c.comult.apply(x)) != c.cc.lift(xx))
    throw NotGrouplike("comultiplication of x is not x (x) x");
  if (!c.base.unit ||
      !c.base.carrier.equal(c.counit.apply(x), *c.base.unit))
    throw NotGrouplike("counit of x is not 1");

  // Coinvariants: rho(m) = m (x) x in M (x)_A C.
  ZnMatrix xcol(mod, rc, 1);
  for (int i = 0; i < rc; ++i) xcol.at(i, 0) = x[i];
  ZnMatrix diff = m.coaction.matrix() -
                  ZnMatrix::identity(mod, rm).kronecker(xcol);
  Submodule coin = kernel_of_map(ModuleMap(m.carrier, m.mc.quotient, diff));

  // Psi : coinvariants (x) A -> M surjective?
  std::vector<Vec> span;
  for (const Vec& g : coin.generators())
    for (int s = 0; s < ra; ++s) {
      Vec a(ra, 0);
      a[s] = 1;
      span.push_back(m.right_action.apply(
          tensor_elem(m.carrier, c.base.carrier, g, a)));
    }
  bool surj = (Submodule(m.carrier, span) == Submodule::full(m.carrier));
  return GrouplikeCoinvariants{std::move(coin), surj};
}

// ---------------------------------------------------------------------------
// Induced functors and the adjunction
// ---------------------------------------------------------------------------

// N (x) A for a C-comodule N over R.
inline EntwinedModule induced_comodule_functor(const FPModule& n,
                                               const ModuleMap& coaction,
                                               const Entwining& e) {
  if (!coaction.dom().same_as(n) ||
      !coaction.cod().same_as(tensor(n, e.coalgebra.carrier)))
    throw DimensionMismatch("coaction must be N -> N (x) C");
  const Int mod = n.modulus();
  const int rn = n.rank(), ra = e.algebra.carrier.rank();
  ZnMatrix in = ZnMatrix::identity(mod, rn), ia = ZnMatrix::identity(mod, ra);
  FPModule na = tensor(n, e.algebra.carrier);
  ModuleMap act(tensor(na, e.algebra.carrier), na,
                in.kronecker(e.algebra.mult.matrix()));
  ModuleMap co(na, tensor(na, e.coalgebra.carrier),
               in.kronecker(e.psi.matrix()) * coaction.matrix().kronecker(ia));
  return make_entwined_module(e, na, act, co);
}

// N (x) C for a right A-module N.
inline EntwinedModule induced_module_functor(const FPModule& n,
                                             const ModuleMap& action,
                                             const Entwining& e) {
  if (!action.dom().same_as(tensor(n, e.algebra.carrier)) ||
      !action.cod().same_as(n))
    throw DimensionMismatch("action must be N (x) A -> N");
  const Int mod = n.modulus();
  const int rn = n.rank(), rc = e.coalgebra.carrier.rank();
  ZnMatrix in = ZnMatrix::identity(mod, rn), ic = ZnMatrix::identity(mod, rc);
  FPModule nc = tensor(n, e.coalgebra.carrier);
  ModuleMap act(tensor(nc, e.algebra.carrier), nc,
                action.matrix().kronecker(ic) * in.kronecker(e.psi.matrix()));
  ModuleMap co(nc, tensor(nc, e.coalgebra.carrier),
               in.kronecker(e.coalgebra.comult.matrix()));
  return make_entwined_module(e, nc, act, co);
}

namespace detail {

// Solutions of several simultaneous linear conditions on hom coordinates,
// each taken modulo the relations of its own codomain.
inline std::vector<Vec> joint_solutions(
    const HomModule& hom,
    const std::vector<std::pair<std::vector<ZnMatrix>, const FPModule*>>&
        blocks) {
  const Int mod = hom.module.modulus();
  const int k = static_cast<int>(hom.gens.size());
  if (k == 0) return {};
  int total = 0;
  for (const auto& [mats, cod] : blocks) {
    (void)cod;
    total += mats[0].rows() * mats[0].cols();
  }
  std::vector<Vec> cols(k);
  for (int i = 0; i < k; ++i) cols[i].reserve(total);
  std::vector<Vec> allow;
  int offset = 0;
  for (const auto& [mats, cod] : blocks) {
    const int rows = mats[0].rows(), colsn = mats[0].cols();
    for (int i = 0; i < k; ++i) {
      const auto& raw = mats[i].raw();
      cols[i].insert(cols[i].end(), raw.begin(), raw.end());
    }
    for (int j = 0; j < colsn; ++j)
      for (int l = 0; l < cod->relations().cols(); ++l) {
        Vec z(static_cast<size_t>(total), 0);
        for (int i = 0; i < rows; ++i)
          z[offset + static_cast<size_t>(i) * colsn + j] =
              cod->relations().at(i, l);
        allow.push_back(std::move(z));
      }
    offset += rows * colsn;
  }
  ZnMatrix flat = ZnMatrix::from_columns(mod, total, cols);
  ZnMatrix allowm = ZnMatrix::from_columns(mod, total, allow);
  ZnMatrix K = kernel(flat.hconcat(allowm));
  std::vector<Vec> out;
  for (int j = 0; j < K.cols(); ++j) {
    Vec full_col = K.column(j);
    out.emplace_back(full_col.begin(), full_col.begin() + k);
  }
  return out;
}

}  // namespace detail

// Hom sets Hom_A^C(N (x) A, M) and Hom^C(N, M) with the unit bijection
// g -> g(- (x) 1) and its inverse f -> [n (x) a -> f(n) a].
inline Report adjunction_check(const FPModule& n, const ModuleMap& n_coaction,
                               const EntwinedModule& m, Int max_card = 4096) {
  Report rep;
  rep.subject = "adjunction";
  const Entwining& e = m.entwining;
  if (!e.algebra.unit) throw BadInput("adjunction needs a unital algebra");
  EntwinedModule na = induced_comodule_functor(n, n_coaction, e);
  const Int mod = n.modulus();
  const int rn = n.rank(), ra = e.algebra.carrier.rank(),
            rc = e.coalgebra.carrier.rank(), rm = m.carrier.rank();
  ZnMatrix ia = ZnMatrix::identity(mod, ra), ic = ZnMatrix::identity(mod, rc);

  // Hom_A^C(N (x) A, M): colinear and A-linear.
  HomModule h1 = hom_module(na.carrier, m.carrier);
  std::vector<ZnMatrix> colin1, alin1;
  for (const ZnMatrix& g : h1.gens) {
    colin1.push_back(m.coaction.matrix() * g -
                     g.kronecker(ic) * na.coaction.matrix());
    alin1.push_back(g * na.action.matrix() -
                    m.action.matrix() * g.kronecker(ia));
  }
  FPModule mc = tensor(m.carrier, e.coalgebra.carrier);
  Submodule hom1(h1.module,
                 detail::joint_solutions(
                     h1, {{colin1, &mc}, {alin1, &m.carrier}}));

  // Hom^C(N, M): colinear only.
  HomModule h2 = hom_module(n, m.carrier);
  std::vector<ZnMatrix> colin2;
  for (const ZnMatrix& g : h2.gens)
    colin2.push_back(m.coaction.matrix() * g -
                     g.kronecker(ic) * n_coaction.matrix());
  Submodule hom2(h2.module, detail::joint_solutions(h2, {{colin2, &mc}}));

  rep.add("hom-set-cardinality",
          hom1.cardinality(max_card) == hom2.cardinality(max_card),
          std::to_string(hom1.cardinality(max_card)) + " maps each way");

  ZnMatrix ucol(mod, ra, 1, *e.algebra.unit);
  auto down = [&](const Vec& g_coords) {  // g -> g(- (x) 1)
    ZnMatrix g = h1.matrix_of(g_coords);
    return h2.coords_of(g * ZnMatrix::identity(mod, rn).kronecker(ucol));
  };
  auto up = [&](const Vec& f_coords) {  // f -> [n (x) a -> f(n) a]
    ZnMatrix f = h2.matrix_of(f_coords);
    return h1.coords_of(m.action.matrix() * f.kronecker(ia));
  };

  bool maps_into = true, round = true;
  auto p1 = hom1.presented();
  for (const Vec& coeffs : p1.module.elements(max_card)) {
    Vec g = p1.inclusion.apply(coeffs);
    Vec f = down(g);
    if (!hom2.contains(f)) maps_into = false;
    if (!h1.module.equal(up(f), h1.module.reduce(g))) round = false;
  }
  auto p2 = hom2.presented();
  for (const Vec& coeffs : p2.module.elements(max_card)) {
    Vec f = p2.inclusion.apply(coeffs);
    Vec g = up(f);
    if (!hom1.contains(g)) maps_into = false;
    if (!h2.module.equal(down(g), h2.module.reduce(f))) round = false;
  }
  rep.add("maps-land-in-hom-sets", maps_into);
  rep.add("round-trips-identity", round);
  (void)rm;
  return rep;
}

// ---------------------------------------------------------------------------
// Yetter-Drinfel'd structures as Doi-Koppinen over K^op (x) H
// ---------------------------------------------------------------------------

inline DKStructure yetter_drinfeld_builder(const Bialgebra& k,
                                           const Bialgebra& h,
                                           const Algebra& a,
                                           const ModuleMap& a_coaction,
                                           const Coalgebra& c,
                                           const ModuleMap& c_action) {
  Bialgebra kop{opposite_algebra(k.algebra), k.coalgebra};
  Bialgebra g = tensor_bialgebra(kop, h);
  return make_dk(HComoduleAlgebra{a, g, a_coaction},
                 HModuleCoalgebra{c, g, c_action});
}

}  // namespace corings

#endif  // CORINGS_ENTWINE_HPP
