#ifndef CORINGS_PAIRING_HPP
#define CORINGS_PAIRING_HPP

// Bilinear pairings, the weak linear topology at finite scale (orthogonals,
// closures, density), the C-adic filter of a measuring pairing, and the
// coincidence law connecting the two topologies.

#include <corings/coring.hpp>

namespace corings {

// ---------------------------------------------------------------------------
// Pairing
// ---------------------------------------------------------------------------

// A bilinear form V x W -> R, stored as a module map on the tensor product
// so that well-definedness modulo relations is checked at construction.
struct Pairing {
  FPModule v, w;
  ModuleMap eval;  // tensor(v, w) -> R

  Int form(const Vec& x, const Vec& y) const {
    return eval.apply(tensor_elem(v, w, x, y))[0];
  }
  // kappa(x) as a functional row on W.
  ZnMatrix kappa_row(const Vec& x) const {
    ZnMatrix r(v.modulus(), 1, w.rank());
    for (int j = 0; j < w.rank(); ++j) {
      Vec e(w.rank(), 0);
      e[j] = 1;
      r.at(0, j) = form(x, e);
    }
    return r;
  }
  // chi(y) as a functional row on V.
  ZnMatrix chi_row(const Vec& y) const {
    ZnMatrix r(v.modulus(), 1, v.rank());
    for (int i = 0; i < v.rank(); ++i) {
      Vec e(v.rank(), 0);
      e[i] = 1;
      r.at(0, i) = form(e, y);
    }
    return r;
  }
};

inline Pairing make_pairing(FPModule v, FPModule w, ModuleMap eval) {
  if (!eval.dom().same_as(tensor(v, w)) || eval.cod().rank() != 1)
    throw DimensionMismatch("pairing evaluation must be tensor(V,W) -> R");
  return Pairing{std::move(v), std::move(w), std::move(eval)};
}

// X^perp in W: everything annihilated by all of X.
inline Submodule orthogonal_in_w(const Pairing& p, const Submodule& x) {
  if (!x.parent().same_as(p.v)) throw SubmoduleMismatch("orthogonal: X not in V");
  std::vector<Vec> rows;
  for (const auto& g : x.generators()) rows.push_back(p.kappa_row(g).row(0));
  if (rows.empty()) return Submodule::full(p.w);
  ZnMatrix m(p.v.modulus(), static_cast<int>(rows.size()), p.w.rank());
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < p.w.rank(); ++j) m.at(static_cast<int>(i), j) = rows[i][j];
  ZnMatrix K = kernel(m);
  std::vector<Vec> gens;
  for (int j = 0; j < K.cols(); ++j) gens.push_back(K.column(j));
  return Submodule(p.w, gens);
}

// K^perp in V.
inline Submodule orthogonal_in_v(const Pairing& p, const Submodule& k) {
  if (!k.parent().same_as(p.w)) throw SubmoduleMismatch("orthogonal: K not in W");
  std::vector<Vec> rows;
  for (const auto& g : k.generators()) rows.push_back(p.chi_row(g).row(0));
  if (rows.empty()) return Submodule::full(p.v);
  ZnMatrix m(p.v.modulus(), static_cast<int>(rows.size()), p.v.rank());
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < p.v.rank(); ++j) m.at(static_cast<int>(i), j) = rows[i][j];
  ZnMatrix K = kernel(m);
  std::vector<Vec> gens;
  for (int j = 0; j < K.cols(); ++j) gens.push_back(K.column(j));
  return Submodule(p.v, gens);
}

// F^perp in V for a finite subset F of W.
inline Submodule finite_orthogonal(const Pairing& p,
                                   const std::vector<Vec>& f) {
  return orthogonal_in_v(p, Submodule(p.w, f));
}

inline Submodule kernel_kappa(const Pairing& p) {
  return orthogonal_in_v(p, Submodule::full(p.w));
}

// Closure in the weak topology. W is a finite set, so the intersection over
// finite subsets F of X + F^perp is attained at F = W.
inline Submodule closure(const Pairing& p, const Submodule& x) {
  return x.plus(kernel_kappa(p));
}

// X dense in Y (for X <= Y): Y lies in the closure of X.
inline bool is_dense_in(const Pairing& p, const Submodule& x,
                        const Submodule& y) {
  return closure(p, x).contains(y);
}

// X-bar = X^perp-perp for every submodule (R QF), plus the density leg
// "X dense in Y iff X^perp = Y^perp". The noetherian/artinian legs of the
// orthogonal-closure lemma degenerate over finite rings and are reported
// vacuous with a note.
inline Report double_orthogonal_law(const Pairing& p, Int max_card = 4096) {
  Report rep;
  rep.subject = "double orthogonal law";
  // Exhaustive over the submodule lattice of V, with member sets and the
  // vanishing locus of the form held as bitsets so the quadratic density
  // sweep stays cheap.
  detail::SubmoduleLattice lv = detail::submodule_lattice(p.v, max_card);
  const std::vector<Vec> welems = p.w.elements(max_card);
  const int nv = lv.size();
  const int nw = static_cast<int>(welems.size());
  const int vwords = lv.words, wwords = (nw + 63) / 64;
  std::vector<std::vector<uint64_t>> vzero(
      nv, std::vector<uint64_t>(wwords, 0));
  std::vector<std::vector<uint64_t>> wzero(
      nw, std::vector<uint64_t>(vwords, 0));
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nw; ++j)
      if (p.form(lv.elems[i], welems[j]) == 0) {
        vzero[i][j >> 6] |= uint64_t{1} << (j & 63);
        wzero[j][i >> 6] |= uint64_t{1} << (i & 63);
      }
  auto all_ones = [](int count, int words) {
    std::vector<uint64_t> b(words, ~uint64_t{0});
    if (count & 63) b[words - 1] = (uint64_t{1} << (count & 63)) - 1;
    return b;
  };
  std::vector<uint64_t> ke = all_ones(nv, vwords);
  for (int j = 0; j < nw; ++j)
    for (int t = 0; t < vwords; ++t) ke[t] &= wzero[j][t];
  std::vector<int> ke_members;
  for (int i = 0; i < nv; ++i)
    if ((ke[i >> 6] >> (i & 63)) & 1) ke_members.push_back(i);

  const size_t count = lv.members.size();
  std::vector<std::vector<uint64_t>> orth(count), clos(count);
  for (size_t s = 0; s < count; ++s) {
    std::vector<uint64_t> o = all_ones(nw, wwords);
    std::vector<uint64_t> c(vwords, 0);
    for (int i = 0; i < nv; ++i) {
      if (!lv.member(s, i)) continue;
      for (int t = 0; t < wwords; ++t) o[t] &= vzero[i][t];
      for (int k : ke_members) {
        int sum = lv.index_of_sum(k, i);
        c[sum >> 6] |= uint64_t{1} << (sum & 63);
      }
    }
    orth[s] = std::move(o);
    clos[s] = std::move(c);
  }
  bool law = true, density = true;
  std::string law_w, dens_w;
  for (size_t i = 0; i < count && law; ++i) {
    std::vector<uint64_t> oo = all_ones(nv, vwords);
    for (int j = 0; j < nw; ++j)
      if ((orth[i][j >> 6] >> (j & 63)) & 1)
        for (int t = 0; t < vwords; ++t) oo[t] &= wzero[j][t];
    if (oo != clos[i]) {
      law = false;
      law_w = "submodule #" + std::to_string(i);
    }
  }
  auto subset = [](const std::vector<uint64_t>& a,
                   const std::vector<uint64_t>& b) {
    for (size_t t = 0; t < a.size(); ++t)
      if (a[t] & ~b[t]) return false;
    return true;
  };
  for (size_t i = 0; i < count && density; ++i)
    for (size_t j = 0; j < count && density; ++j) {
      if (!subset(lv.members[i], lv.members[j])) continue;  // need X <= Y
      bool dense = subset(lv.members[j], clos[i]);
      bool orth_eq = orth[i] == orth[j];
      if (dense != orth_eq) {
        density = false;
        dens_w = "pair (#" + std::to_string(i) + ",#" + std::to_string(j) + ")";
      }
    }
  rep.add("closure-equals-double-orthogonal", law, law_w);
  rep.add("dense-iff-equal-orthogonals", density, dens_w);
  rep.add_status("noetherian-leg", CheckStatus::vacuous,
                 "every submodule of a finite module is cofinite");
  rep.add_status("artinian-leg", CheckStatus::vacuous,
                 "every submodule of a finite module is cofinite");
  return rep;
}

// (V' (x) V, W (x) W') with <v'(x)v, w(x)w'> = <v,w><v',w'>.
inline Pairing tensor_pairing(const Pairing& p, const Pairing& pp) {
  if (p.v.modulus() != pp.v.modulus())
    throw DimensionMismatch("tensor pairing over mismatched moduli");
  const Int mod = p.v.modulus();
  RingContext R(mod);
  FPModule v = tensor(pp.v, p.v);
  FPModule w = tensor(p.w, pp.w);
  ZnMatrix e(mod, 1, v.rank() * w.rank());
  for (int a = 0; a < pp.v.rank(); ++a)
    for (int b = 0; b < p.v.rank(); ++b)
      for (int c = 0; c < p.w.rank(); ++c)
        for (int d = 0; d < pp.w.rank(); ++d) {
          Vec ea(pp.v.rank(), 0), eb(p.v.rank(), 0), ec(p.w.rank(), 0),
              ed(pp.w.rank(), 0);
          ea[a] = 1;
          eb[b] = 1;
          ec[c] = 1;
          ed[d] = 1;
          int vi = a * p.v.rank() + b;
          int wi = c * pp.w.rank() + d;
          e.at(0, vi * w.rank() + wi) =
              R.mul(p.form(eb, ec), pp.form(ea, ed));
        }
  return make_pairing(v, w, ModuleMap(tensor(v, w), FPModule::ring(mod), e));
}

// ---------------------------------------------------------------------------
// Measuring pairings
// ---------------------------------------------------------------------------

// An algebra morphism kappa: A -> (*C, star_l) with kappa(1) = eps, checked
// at construction.
struct MeasuringPairing {
  Algebra acting;   // A
  ACoring coring;   // C
  DualRing dual;    // dual_ring(C, left)
  ModuleMap kappa;  // acting.carrier -> dual.carrier

  // <a, -> as a functional C -> base of the coring.
  ZnMatrix eval_row(const Vec& a) const {
    return dual.matrix_of(kappa.apply(a));
  }
};

inline MeasuringPairing make_measuring_pairing(Algebra acting, ACoring coring,
                                               ModuleMap kappa,
                                               bool skip_coring_verify = false) {
  DualRing d = dual_ring(coring, DualSide::left, skip_coring_verify);
  if (!kappa.dom().same_as(acting.carrier) || !kappa.cod().same_as(d.carrier))
    throw DimensionMismatch("kappa must map the acting algebra into *C");
  // Morphism of rings into (*C, star_l).
  const int ra = acting.carrier.rank();
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < ra; ++j) {
      Vec ei(ra, 0), ej(ra, 0);
      ei[i] = 1;
      ej[j] = 1;
      Vec lhs = kappa.apply(acting.multiply(ei, ej));
      Vec rhs = d.algebra.multiply(kappa.apply(ei), kappa.apply(ej));
      if (!d.carrier.equal(lhs, rhs))
        throw AxiomViolation("kappa is not multiplicative at basis (" +
                             std::to_string(i) + "," + std::to_string(j) + ")");
    }
  if (acting.unit &&
      !d.carrier.equal(kappa.apply(*acting.unit), *d.algebra.unit))
    throw AxiomViolation("kappa(1) != eps");
  return MeasuringPairing{std::move(acting), std::move(coring), std::move(d),
                          std::move(kappa)};
}

// The underlying R-pairing (acting, carrier) for a base-R coring.
inline Pairing pairing_of(const MeasuringPairing& p) {
  const FPModule& base = p.coring.base.carrier;
  if (base.rank() != 1 || base.relations().cols() != 0)
    throw UnsupportedBase("scalar pairing needs a base-R coring");
  const Int mod = base.modulus();
  const FPModule& v = p.acting.carrier;
  const FPModule& w = p.coring.carrier;
  ZnMatrix e(mod, 1, v.rank() * w.rank());
  for (int t = 0; t < v.rank(); ++t) {
    Vec a(v.rank(), 0);
    a[t] = 1;
    ZnMatrix row = p.eval_row(a);
    for (int j = 0; j < w.rank(); ++j) e.at(0, t * w.rank() + j) = row.at(0, j);
  }
  return make_pairing(v, w, ModuleMap(tensor(v, w), FPModule::ring(mod), e));
}

// c <- a := sum c1 <a, c2> (the right action of A on C).
inline Vec hit_action(const MeasuringPairing& p, const Vec& c, const Vec& a) {
  const FPModule& cm = p.coring.carrier;
  const int rc = cm.rank();
  ZnMatrix row = p.eval_row(a);  // functional C -> base
  // c1 (x) <a, c2>, then the right base action.
  Vec lifted = p.coring.cc.lift(p.coring.comult.apply(c));
  ZnMatrix collapse = p.coring.right_action.matrix() *
                      ZnMatrix::identity(cm.modulus(), rc).kronecker(row);
  return cm.reduce(collapse.apply(lifted));
}

// (0_C : F) = {a : c <- a = 0 for all c in F}, a right ideal of A.
inline Submodule cadic_neighborhood(const MeasuringPairing& p,
                                    const std::vector<Vec>& f) {
  const FPModule& am = p.acting.carrier;
  const int ra = am.rank();
  const int rc = p.coring.carrier.rank();
  if (f.empty()) return Submodule::full(am);
  ZnMatrix m(am.modulus(), static_cast<int>(f.size()) * rc, ra);
  for (int t = 0; t < ra; ++t) {
    Vec a(ra, 0);
    a[t] = 1;
    for (size_t s = 0; s < f.size(); ++s) {
      Vec img = hit_action(p, f[s], a);
      for (int i = 0; i < rc; ++i)
        m.at(static_cast<int>(s) * rc + i, t) = img[i];
    }
  }
  ZnMatrix K = kernel(m);
  std::vector<Vec> gens;
  for (int j = 0; j < K.cols(); ++j) gens.push_back(K.column(j));
  Submodule ideal(am, gens);
  // Right-ideal sanity: closed under right multiplication by basis elements.
  for (const auto& g : ideal.generators())
    for (int b = 0; b < ra; ++b) {
      Vec eb(ra, 0);
      eb[b] = 1;
      CORINGS_ASSERT(ideal.contains(p.acting.multiply(g, eb)),
                     "(0:F) must be a right ideal");
    }
  return ideal;
}

// The weak linear topology of the pairing and the C-adic topology coincide:
// (0:K) <= K^perp for every f.g. K <= C, and for each finite F the span K of
// the right tensor factors of Delta(F) satisfies K^perp <= (0:F).
inline Report topology_coincidence(const MeasuringPairing& p,
                                   Int max_card = 4096) {
  Report rep;
  rep.subject = "weak topology vs C-adic topology";
  Pairing pr = pairing_of(p);
  const FPModule& cm = p.coring.carrier;
  const int rc = cm.rank();

  bool leg1 = true;
  std::string w1;
  auto subs = all_submodules(cm, max_card);
  for (size_t i = 0; i < subs.size(); ++i) {
    Submodule cadic = cadic_neighborhood(p, subs[i].generators());
    Submodule orth = orthogonal_in_v(pr, subs[i]);
    if (!orth.contains(cadic)) {
      leg1 = false;
      w1 = "K = submodule #" + std::to_string(i);
      break;
    }
  }
  rep.add("cadic-inside-orthogonal", leg1, w1);

  // F corpus: each basis singleton, plus the full basis.
  std::vector<std::vector<Vec>> fs;
  for (int i = 0; i < rc; ++i) {
    Vec e(rc, 0);
    e[i] = 1;
    fs.push_back({e});
  }
  {
    std::vector<Vec> all;
    for (int i = 0; i < rc; ++i) {
      Vec e(rc, 0);
      e[i] = 1;
      all.push_back(e);
    }
    fs.push_back(all);
  }
  bool leg2 = true;
  std::string w2;
  for (size_t s = 0; s < fs.size() && leg2; ++s) {
    std::vector<Vec> right_factors;
    for (const auto& c : fs[s]) {
      Vec lifted = p.coring.cc.lift(p.coring.comult.apply(c));
      for (int i = 0; i < rc; ++i) {
        Vec w(rc, 0);
        bool nz = false;
        for (int j = 0; j < rc; ++j) {
          w[j] = lifted[static_cast<size_t>(i) * rc + j];
          nz = nz || w[j] != 0;
        }
        if (nz) right_factors.push_back(std::move(w));
      }
    }
    Submodule k(cm, right_factors);
    Submodule orth = orthogonal_in_v(pr, k);
    Submodule cadic = cadic_neighborhood(p, fs[s]);
    if (!cadic.contains(orth)) {
      leg2 = false;
      w2 = "F = corpus entry #" + std::to_string(s);
    }
  }
  rep.add("orthogonal-inside-cadic", leg2, w2);
  return rep;
}

// Ke(theta^*(X)) = theta^{-1}(Ke(X)) for theta: W' -> W and X a submodule of
// the coordinates of dual(W).
inline Report ke_pullback_law(const ModuleMap& theta, const HomModule& dual_w,
                              const Submodule& x) {
  if (!dual_w.dom.same_as(theta.cod()))
    throw SubmoduleMismatch("dual module does not match the codomain");
  if (!x.parent().same_as(dual_w.module))
    throw SubmoduleMismatch("X must live in the dual coordinates");
  Report rep;
  rep.subject = "kernel pullback law";
  const Int mod = theta.dom().modulus();
  auto joint_kernel = [&](const std::vector<ZnMatrix>& rows,
                          const FPModule& space) {
    if (rows.empty()) return Submodule::full(space);
    ZnMatrix m(mod, static_cast<int>(rows.size()), space.rank());
    for (size_t i = 0; i < rows.size(); ++i)
      for (int j = 0; j < space.rank(); ++j)
        m.at(static_cast<int>(i), j) = rows[i].at(0, j);
    ZnMatrix K = kernel(m);
    std::vector<Vec> gens;
    for (int j = 0; j < K.cols(); ++j) gens.push_back(K.column(j));
    return Submodule(space, gens);
  };
  std::vector<ZnMatrix> fr, fr_pulled;
  for (const auto& g : x.generators()) {
    ZnMatrix f = dual_w.matrix_of(g);
    fr.push_back(f);
    fr_pulled.push_back(f * theta.matrix());
  }
  Submodule lhs = joint_kernel(fr_pulled, theta.dom());
  Submodule rhs = preimage(theta, joint_kernel(fr, theta.cod()));
  rep.add("ke-pullback", lhs == rhs);
  return rep;
}

}  // namespace corings

#endif  // CORINGS_PAIRING_HPP
