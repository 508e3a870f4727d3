#ifndef CORINGS_FPMOD_HPP
#define CORINGS_FPMOD_HPP

// Finitely presented Z/n-modules: canonical element forms, maps with
// construction-time well-definedness checks, submodules with exact
// membership, Hom / tensor / dual, kernels, images, preimages, and the
// projectivity and Cohn-purity tests.

#include <corings/zn.hpp>

#include <cassert>
#include <map>
#include <memory>
#include <set>

#define CORINGS_ASSERT(cond, msg) \
  do {                            \
    if (!(cond)) throw corings::Error(std::string("internal invariant: ") + (msg)); \
  } while (0)

namespace corings {

// ---------------------------------------------------------------------------
// FPModule
// ---------------------------------------------------------------------------

namespace detail {

struct FPModuleData {
  Int mod;
  int rank;
  ZnMatrix relations;  // rank x k, columns are relators
  // Canonical-form reducer: for each coordinate i, g[i] is the generator of
  // the ideal of values the relation span can add to coordinate i once
  // coordinates < i are frozen, and v[i] is a span element with v[i][i] = g[i]
  // and zeros above. Reduction yields the lexicographically least coset
  // representative; canonical forms are exactly the vectors with
  // x[i] in [0, g[i]).
  std::vector<Int> red_g;
  std::vector<Vec> red_v;
  std::vector<Int> invariants;  // decompose(M), divisor chain, 1s dropped
};

}  // namespace detail

class FPModule {
 public:
  FPModule() : d_(nullptr) {}

  static FPModule presented(Int mod, int rank, const ZnMatrix& relations) {
    if (relations.rows() != rank)
      throw DimensionMismatch("relations must have one row per generator");
    if (relations.modulus() != mod) throw BaseMismatch("relations modulus");
    auto d = std::make_shared<detail::FPModuleData>();
    d->mod = mod;
    d->rank = rank;
    d->relations = relations;
    build_reducer(*d);
    build_invariants(*d);
    FPModule m;
    m.d_ = std::move(d);
    return m;
  }

  static FPModule free(Int mod, int rank) {
    return presented(mod, rank, ZnMatrix(mod, rank, 0));
  }
  // The ground ring as a module over itself.
  static FPModule ring(Int mod) { return free(mod, 1); }
  // Z/d as a Z/n-module (one generator, relation d*g).
  static FPModule cyclic(Int mod, Int d) {
    return presented(mod, 1, ZnMatrix(mod, 1, 1, {d}));
  }

  bool valid() const { return d_ != nullptr; }
  Int modulus() const { return d_->mod; }
  RingContext ctx() const { return RingContext(d_->mod); }
  int rank() const { return d_->rank; }
  const ZnMatrix& relations() const { return d_->relations; }
  const std::vector<Int>& invariants() const { return d_->invariants; }

  // Canonical (lex-least) representative of x modulo the relation span.
  Vec reduce(Vec x) const {
    if (static_cast<int>(x.size()) != d_->rank)
      throw DimensionMismatch("element length vs ambient rank");
    RingContext R(d_->mod);
    for (auto& c : x) c = R.norm(c);
    for (int i = 0; i < d_->rank; ++i) {
      Int g = d_->red_g[i];
      if (g == 0 || x[i] < g) continue;
      Int q = x[i] / g;
      const Vec& v = d_->red_v[i];
      for (int k = i; k < d_->rank; ++k) x[k] = R.sub(x[k], R.mul(q, v[k]));
    }
    return x;
  }

  bool is_zero(const Vec& x) const { return vec_is_zero(reduce(x)); }
  bool equal(const Vec& x, const Vec& y) const { return reduce(x) == reduce(y); }

  // Number of elements; saturates at `cap` to avoid overflow on big tensors.
  Int cardinality(Int cap = kCardCap) const {
    Int c = 1;
    for (int i = 0; i < d_->rank; ++i) {
      Int g = d_->red_g[i] == 0 ? 1 : d_->red_g[i];
      if (c > cap / std::max<Int>(g, 1)) return cap;
      c *= g;
    }
    return c;
  }

  // All elements, in canonical form, lexicographic order.
  std::vector<Vec> elements(Int max_card = 1 << 20) const {
    if (cardinality(max_card + 1) > max_card)
      throw EnumerationTooLarge("module has more than " +
                                std::to_string(max_card) + " elements");
    std::vector<Vec> out;
    Vec x(d_->rank, 0);
    for (;;) {
      out.push_back(x);
      int i = d_->rank - 1;
      for (; i >= 0; --i) {
        Int g = d_->red_g[i] == 0 ? 1 : d_->red_g[i];
        if (++x[i] < g) break;
        x[i] = 0;
      }
      if (i < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool same_as(const FPModule& o) const {
    return d_ == o.d_ ||
           (d_->mod == o.d_->mod && d_->rank == o.d_->rank &&
            d_->relations == o.d_->relations);
  }
  bool operator==(const FPModule& o) const { return same_as(o); }

  static constexpr Int kCardCap = Int(1) << 60;

 private:
  // Column echelon with torsion continuation (Howell-style): after it, the
  // pivot columns v_i (leading entry red_g[i] | n at row i, zeros above)
  // generate the same span as the input relations, every span element whose
  // first i coordinates vanish lies in the span of pivots >= i, and the
  // stored relations are replaced by this canonical generating set.
  static void build_reducer(detail::FPModuleData& d) {
    RingContext R(d.mod);
    const Int n = d.mod;
    std::vector<Vec> active;
    for (int j = 0; j < d.relations.cols(); ++j) {
      Vec c = d.relations.column(j);
      if (!vec_is_zero(c)) active.push_back(std::move(c));
    }
    std::sort(active.begin(), active.end());
    active.erase(std::unique(active.begin(), active.end()), active.end());
    d.red_g.assign(d.rank, n);
    d.red_v.assign(d.rank, {});
    std::vector<int> pivot_rows;
    for (int i = 0; i < d.rank && !active.empty(); ++i) {
      int p = -1;
      for (size_t j = 0; j < active.size(); ++j) {
        if (active[j][i] == 0) continue;
        if (p < 0) {
          p = static_cast<int>(j);
          continue;
        }
        Int a = active[p][i], b = active[j][i];
        if (b % a == 0) {  // plain elimination keeps the pivot intact
          Int q = b / a;
          for (int t = i; t < d.rank; ++t)
            active[j][t] = R.sub(active[j][t], R.mul(q, active[p][t]));
        } else {
          Int g, x, y;
          detail::ext_gcd(a, b, g, x, y);
          Int u = -(b / g), w = a / g;  // unimodular second row
          for (int t = i; t < d.rank; ++t) {
            Int s1 = active[p][t], s2 = active[j][t];
            active[p][t] = R.norm(x * s1 + y * s2);
            active[j][t] = R.norm(u * s1 + w * s2);
          }
        }
      }
      if (p < 0) continue;
      Vec piv = active[p];
      active.erase(active.begin() + p);
      Int g = std::gcd(piv[i], n);
      if (g < n) {
        Int u = detail::unit_normalizer(piv[i], n);
        for (auto& e : piv) e = R.mul(u, e);
        d.red_g[i] = g;
        d.red_v[i] = piv;
        pivot_rows.push_back(i);
        Vec tors = piv;  // (n/g) . pivot re-enters with a zero at row i
        for (auto& e : tors) e = R.mul(n / g, e);
        if (!vec_is_zero(tors)) active.push_back(std::move(tors));
      }
      // Drop columns that became zero.
      active.erase(std::remove_if(active.begin(), active.end(), vec_is_zero),
                   active.end());
    }
    // Canonicalize: reduce sub-pivot entries of each pivot by later pivots.
    for (auto it = pivot_rows.rbegin(); it != pivot_rows.rend(); ++it) {
      Vec& v = d.red_v[*it];
      for (int k = *it + 1; k < d.rank; ++k) {
        if (d.red_g[k] >= n || v[k] < d.red_g[k]) continue;
        Int q = v[k] / d.red_g[k];
        for (int t = k; t < d.rank; ++t)
          v[t] = R.sub(v[t], R.mul(q, d.red_v[k][t]));
      }
    }
    // Replace the stored relations with the canonical pivot columns.
    std::vector<Vec> canon;
    for (int i : pivot_rows) canon.push_back(d.red_v[i]);
    d.relations = ZnMatrix::from_columns(n, d.rank, canon);
  }

  static void build_invariants(detail::FPModuleData& d) {
    SmithForm f = smith_normal_form(d.relations);
    const Int n = d.mod;
    const int m = std::min(d.relations.rows(), d.relations.cols());
    for (int t = 0; t < m; ++t) {
      Int g = std::gcd(f.S.at(t, t), n);  // cokernel summand Z/g
      if (g > 1) d.invariants.push_back(g);
    }
    for (int t = m; t < d.rank; ++t) d.invariants.push_back(n);
    std::sort(d.invariants.begin(), d.invariants.end());
  }

  std::shared_ptr<const detail::FPModuleData> d_;
};

inline std::vector<Int> decompose(const FPModule& m) { return m.invariants(); }

// Invariant-factor test: a f.p. Z/n-module is projective iff every factor d
// splits n coprimely, i.e. gcd(d, n/d) = 1 (then Z/d is a direct ring factor
// of Z/n, hence projective).
inline bool is_projective(const FPModule& m) {
  const Int n = m.modulus();
  for (Int d : m.invariants())
    if (std::gcd(d, n / d) != 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Element handle
// ---------------------------------------------------------------------------

// A module element that knows its parent; mixing parents is an error rather
// than a coercion.
struct Elem {
  FPModule parent;
  Vec v;  // canonical form

  Elem(FPModule p, Vec x) : parent(std::move(p)), v(parent.reduce(std::move(x))) {}

  Elem operator+(const Elem& o) const {
    check(o);
    return Elem(parent, vec_add(parent.ctx(), v, o.v));
  }
  Elem operator-(const Elem& o) const {
    check(o);
    return Elem(parent, vec_sub(parent.ctx(), v, o.v));
  }
  Elem scaled(Int c) const { return Elem(parent, vec_scale(parent.ctx(), c, v)); }
  bool operator==(const Elem& o) const { check(o); return v == o.v; }
  bool is_zero() const { return vec_is_zero(v); }

 private:
  void check(const Elem& o) const {
    if (!parent.same_as(o.parent))
      throw CrossModuleError("elements of different modules combined");
  }
};

// ---------------------------------------------------------------------------
// ModuleMap
// ---------------------------------------------------------------------------

class ModuleMap {
 public:
  ModuleMap() = default;

  ModuleMap(FPModule dom, FPModule cod, ZnMatrix matrix)
      : dom_(std::move(dom)), cod_(std::move(cod)), a_(std::move(matrix)) {
    if (a_.rows() != cod_.rank() || a_.cols() != dom_.rank())
      throw DimensionMismatch("map matrix " + a_.shape() + " vs " +
                              std::to_string(cod_.rank()) + "x" +
                              std::to_string(dom_.rank()));
    if (a_.modulus() != dom_.modulus() || dom_.modulus() != cod_.modulus())
      throw BaseMismatch("map over mismatched moduli");
    // Well-definedness: relators of the domain must land in the relation
    // span of the codomain.
    const ZnMatrix& R = dom_.relations();
    for (int j = 0; j < R.cols(); ++j)
      if (!cod_.is_zero(a_.apply(R.column(j))))
        throw AxiomViolation("map not well-defined on domain relator " +
                             std::to_string(j));
  }

  static ModuleMap identity(const FPModule& m) {
    return ModuleMap(m, m, ZnMatrix::identity(m.modulus(), m.rank()));
  }
  static ModuleMap zero(const FPModule& dom, const FPModule& cod) {
    return ModuleMap(dom, cod, ZnMatrix(dom.modulus(), cod.rank(), dom.rank()));
  }

  const FPModule& dom() const { return dom_; }
  const FPModule& cod() const { return cod_; }
  const ZnMatrix& matrix() const { return a_; }

  Vec apply(const Vec& x) const { return cod_.reduce(a_.apply(x)); }
  Elem apply(const Elem& x) const {
    if (!x.parent.same_as(dom_)) throw CrossModuleError("apply: wrong parent");
    return Elem(cod_, a_.apply(x.v));
  }

  // Composition (*this) after g.
  ModuleMap after(const ModuleMap& g) const {
    if (!g.cod_.same_as(dom_)) throw DimensionMismatch("composition mismatch");
    return ModuleMap(g.dom_, cod_, a_ * g.a_);
  }
  ModuleMap operator*(const ModuleMap& g) const { return after(g); }

  ModuleMap operator+(const ModuleMap& g) const {
    require_parallel(g);
    return ModuleMap(dom_, cod_, a_ + g.a_);
  }
  ModuleMap operator-(const ModuleMap& g) const {
    require_parallel(g);
    return ModuleMap(dom_, cod_, a_ - g.a_);
  }

  // Equality as maps: columnwise difference lies in the codomain relations.
  bool equals(const ModuleMap& g) const {
    require_parallel(g);
    ZnMatrix d = a_ - g.a_;
    for (int j = 0; j < d.cols(); ++j)
      if (!cod_.is_zero(d.column(j))) return false;
    return true;
  }

  // First ambient basis index where the two maps differ (for witnesses).
  int first_difference(const ModuleMap& g) const {
    require_parallel(g);
    ZnMatrix d = a_ - g.a_;
    for (int j = 0; j < d.cols(); ++j)
      if (!cod_.is_zero(d.column(j))) return j;
    return -1;
  }

  bool is_zero_map() const {
    for (int j = 0; j < a_.cols(); ++j)
      if (!cod_.is_zero(a_.column(j))) return false;
    return true;
  }

 private:
  void require_parallel(const ModuleMap& g) const {
    if (!dom_.same_as(g.dom_) || !cod_.same_as(g.cod_))
      throw DimensionMismatch("maps not parallel");
  }

  FPModule dom_, cod_;
  ZnMatrix a_;
};

// ---------------------------------------------------------------------------
// Tensor products
// ---------------------------------------------------------------------------

// M (x) N with basis index (i, j) -> i * N.rank + j (Kronecker convention).
inline FPModule tensor(const FPModule& m, const FPModule& n) {
  if (m.modulus() != n.modulus()) throw BaseMismatch("tensor over mismatched moduli");
  const Int mod = m.modulus();
  const int p = m.rank(), q = n.rank();
  std::vector<Vec> rels;
  for (int s = 0; s < m.relations().cols(); ++s) {
    Vec u = m.relations().column(s);
    for (int j = 0; j < q; ++j) {
      Vec col(static_cast<size_t>(p) * q, 0);
      for (int i = 0; i < p; ++i) col[static_cast<size_t>(i) * q + j] = u[i];
      rels.push_back(std::move(col));
    }
  }
  for (int s = 0; s < n.relations().cols(); ++s) {
    Vec v = n.relations().column(s);
    for (int i = 0; i < p; ++i) {
      Vec col(static_cast<size_t>(p) * q, 0);
      for (int j = 0; j < q; ++j) col[static_cast<size_t>(i) * q + j] = v[j];
      rels.push_back(std::move(col));
    }
  }
  return FPModule::presented(mod, p * q,
                             ZnMatrix::from_columns(mod, p * q, rels));
}

inline Vec tensor_elem(const FPModule& m, const FPModule& n, const Vec& x,
                       const Vec& y) {
  RingContext R(m.modulus());
  Vec out(static_cast<size_t>(m.rank()) * n.rank(), 0);
  for (int i = 0; i < m.rank(); ++i)
    for (int j = 0; j < n.rank(); ++j)
      out[static_cast<size_t>(i) * n.rank() + j] = R.mul(x[i], y[j]);
  return out;
}

inline ModuleMap tensor_map(const ModuleMap& f, const ModuleMap& g) {
  return ModuleMap(tensor(f.dom(), g.dom()), tensor(f.cod(), g.cod()),
                   f.matrix().kronecker(g.matrix()));
}

// The twist M (x) N -> N (x) M, m(x)n -> n(x)m.
inline ModuleMap twist_map(const FPModule& m, const FPModule& n) {
  const Int mod = m.modulus();
  ZnMatrix t(mod, n.rank() * m.rank(), m.rank() * n.rank());
  for (int i = 0; i < m.rank(); ++i)
    for (int j = 0; j < n.rank(); ++j)
      t.at(j * m.rank() + i, i * n.rank() + j) = 1;
  return ModuleMap(tensor(m, n), tensor(n, m), t);
}

// Direct sum with the two injections (projections derivable).
struct DirectSum {
  FPModule module;
  ModuleMap inj1, inj2, proj1, proj2;
};

inline DirectSum direct_sum(const FPModule& m, const FPModule& n) {
  if (m.modulus() != n.modulus()) throw BaseMismatch("direct_sum moduli");
  const Int mod = m.modulus();
  const int p = m.rank(), q = n.rank();
  ZnMatrix rel(mod, p + q, m.relations().cols() + n.relations().cols());
  for (int j = 0; j < m.relations().cols(); ++j)
    for (int i = 0; i < p; ++i) rel.at(i, j) = m.relations().at(i, j);
  for (int j = 0; j < n.relations().cols(); ++j)
    for (int i = 0; i < q; ++i)
      rel.at(p + i, m.relations().cols() + j) = n.relations().at(i, j);
  FPModule s = FPModule::presented(mod, p + q, rel);
  ZnMatrix i1(mod, p + q, p), i2(mod, p + q, q), p1(mod, p, p + q),
      p2(mod, q, p + q);
  for (int i = 0; i < p; ++i) i1.at(i, i) = 1, p1.at(i, i) = 1;
  for (int i = 0; i < q; ++i) i2.at(p + i, i) = 1, p2.at(i, p + i) = 1;
  return DirectSum{s, ModuleMap(m, s, i1), ModuleMap(n, s, i2),
                   ModuleMap(s, m, p1), ModuleMap(s, n, p2)};
}

// ---------------------------------------------------------------------------
// Submodules
// ---------------------------------------------------------------------------

class Submodule {
 public:
  Submodule(FPModule parent, std::vector<Vec> generators)
      : parent_(std::move(parent)) {
    for (auto& g : generators) {
      Vec r = parent_.reduce(g);
      if (!vec_is_zero(r)) gens_.push_back(std::move(r));
    }
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  }

  static Submodule zero(const FPModule& m) { return Submodule(m, {}); }
  static Submodule full(const FPModule& m) {
    std::vector<Vec> gens;
    for (int i = 0; i < m.rank(); ++i) {
      Vec e(m.rank(), 0);
      e[i] = 1;
      gens.push_back(e);
    }
    return Submodule(m, gens);
  }

  const FPModule& parent() const { return parent_; }
  const std::vector<Vec>& generators() const { return gens_; }

  // Generators and parent relators as one matrix (the full ambient span).
  ZnMatrix span_matrix() const {
    ZnMatrix g = ZnMatrix::from_columns(parent_.modulus(), parent_.rank(), gens_);
    return g.hconcat(parent_.relations());
  }

  bool contains(const Vec& x) const {
    return image_membership(span_matrix(), parent_.reduce(x));
  }
  bool contains(const Submodule& o) const {
    require_same_parent(o);
    return std::all_of(o.gens_.begin(), o.gens_.end(),
                       [&](const Vec& g) { return contains(g); });
  }
  bool operator==(const Submodule& o) const {
    return contains(o) && o.contains(*this);
  }

  bool is_zero() const { return gens_.empty(); }
  bool is_full() const { return contains(full(parent_)); }

  Submodule plus(const Submodule& o) const {
    require_same_parent(o);
    std::vector<Vec> gens = gens_;
    gens.insert(gens.end(), o.gens_.begin(), o.gens_.end());
    return Submodule(parent_, gens);
  }

  Submodule intersect(const Submodule& o) const {
    require_same_parent(o);
    // Solve G1 a = G2 b (mod relations): kernel of [G1 | -G2 | R].
    const Int mod = parent_.modulus();
    ZnMatrix g1 = ZnMatrix::from_columns(mod, parent_.rank(), gens_);
    ZnMatrix g2 = ZnMatrix::from_columns(mod, parent_.rank(), o.gens_);
    ZnMatrix neg = g2.scaled(mod - 1);
    ZnMatrix big = g1.hconcat(neg).hconcat(parent_.relations());
    ZnMatrix K = kernel(big);
    std::vector<Vec> gens;
    for (int j = 0; j < K.cols(); ++j) {
      Vec full_col = K.column(j);
      Vec a(full_col.begin(), full_col.begin() + g1.cols());
      gens.push_back(g1.apply(a));
    }
    return Submodule(parent_, gens);
  }

  // Induced presentation: one generator per stored generator, relations =
  // all combinations falling into the parent's relation span; plus the
  // inclusion map back into the parent.
  struct Presented {
    FPModule module;
    ModuleMap inclusion;
  };
  Presented presented() const {
    const Int mod = parent_.modulus();
    const int k = static_cast<int>(gens_.size());
    ZnMatrix g = ZnMatrix::from_columns(mod, parent_.rank(), gens_);
    ZnMatrix K = kernel(g.hconcat(parent_.relations()));
    ZnMatrix rel = K.submatrix(0, 0, k, K.cols());
    FPModule m = FPModule::presented(mod, k, rel);
    return Presented{m, ModuleMap(m, parent_, g)};
  }

  Int cardinality(Int cap = FPModule::kCardCap) const {
    return presented().module.cardinality(cap);
  }

  // Coordinates of x in terms of the stored generators, if x is a member.
  std::optional<Vec> coordinates(const Vec& x) const {
    auto sol = solve_linear(span_matrix(), parent_.reduce(x));
    if (!sol) return std::nullopt;
    return Vec(sol->begin(), sol->begin() + gens_.size());
  }

 private:
  void require_same_parent(const Submodule& o) const {
    if (!parent_.same_as(o.parent_))
      throw SubmoduleMismatch("submodules of different parents");
  }

  FPModule parent_;
  std::vector<Vec> gens_;
};

// Quotient M / S: same ambient generators, enlarged relations.
struct Quotient {
  FPModule module;
  ModuleMap projection;
};

inline Quotient quotient(const FPModule& m, const Submodule& s) {
  if (!s.parent().same_as(m)) throw SubmoduleMismatch("quotient by foreign submodule");
  ZnMatrix rel = m.relations();
  if (!s.generators().empty())
    rel = rel.hconcat(
        ZnMatrix::from_columns(m.modulus(), m.rank(), s.generators()));
  FPModule q = FPModule::presented(m.modulus(), m.rank(), rel);
  return Quotient{q, ModuleMap(m, q, ZnMatrix::identity(m.modulus(), m.rank()))};
}

inline Submodule kernel_of_map(const ModuleMap& f) {
  ZnMatrix big = f.matrix().hconcat(f.cod().relations());
  ZnMatrix K = kernel(big);
  std::vector<Vec> gens;
  for (int j = 0; j < K.cols(); ++j) {
    Vec full_col = K.column(j);
    gens.emplace_back(full_col.begin(), full_col.begin() + f.dom().rank());
  }
  return Submodule(f.dom(), gens);
}

inline Submodule image_of_map(const ModuleMap& f) {
  std::vector<Vec> gens;
  for (int j = 0; j < f.dom().rank(); ++j) gens.push_back(f.matrix().column(j));
  return Submodule(f.cod(), gens);
}

inline Submodule preimage(const ModuleMap& f, const Submodule& s) {
  if (!s.parent().same_as(f.cod()))
    throw SubmoduleMismatch("preimage: submodule not in codomain");
  ZnMatrix big = f.matrix().hconcat(s.span_matrix());
  ZnMatrix K = kernel(big);
  std::vector<Vec> gens;
  for (int j = 0; j < K.cols(); ++j) {
    Vec full_col = K.column(j);
    gens.emplace_back(full_col.begin(), full_col.begin() + f.dom().rank());
  }
  return Submodule(f.dom(), gens);
}

inline bool is_injective(const ModuleMap& f) {
  return kernel_of_map(f).is_zero();
}
inline bool is_surjective(const ModuleMap& f) {
  return image_of_map(f).is_full();
}
inline bool is_bijective(const ModuleMap& f) {
  return is_injective(f) && is_surjective(f);
}

// Two-sided inverse of a bijective map (solves on ambient basis vectors).
inline ModuleMap inverse_of(const ModuleMap& f) {
  const FPModule& m = f.dom();
  const FPModule& n = f.cod();
  ZnMatrix big = f.matrix().hconcat(n.relations());
  std::vector<Vec> cols;
  for (int j = 0; j < n.rank(); ++j) {
    Vec e(n.rank(), 0);
    e[j] = 1;
    auto sol = solve_linear(big, e);
    if (!sol) throw AxiomViolation("inverse_of: map is not surjective");
    cols.emplace_back(sol->begin(), sol->begin() + m.rank());
  }
  ModuleMap inv(n, m, ZnMatrix::from_columns(m.modulus(), m.rank(), cols));
  if (!inv.after(f).equals(ModuleMap::identity(m)) ||
      !f.after(inv).equals(ModuleMap::identity(n)))
    throw AxiomViolation("inverse_of: map is not bijective");
  return inv;
}

// ---------------------------------------------------------------------------
// Hom modules
// ---------------------------------------------------------------------------

// Hom(M, N) presented as an FPModule whose elements biject with well-defined
// maps M -> N; carries evaluation both ways (coords <-> concrete matrix).
struct HomModule {
  FPModule dom, cod;
  FPModule module;                 // presentation of Hom(M, N)
  std::vector<ZnMatrix> gens;      // generating maps, cod.rank x dom.rank
  ZnMatrix flat;                   // columns = flattened generators
  ZnMatrix zero_span;              // flattened span of maps equal to zero

  ZnMatrix matrix_of(const Vec& coords) const {
    RingContext R = module.ctx();
    ZnMatrix t(dom.modulus(), cod.rank(), dom.rank());
    for (size_t k = 0; k < gens.size(); ++k) {
      if (R.norm(coords[k]) == 0) continue;
      t = t + gens[k].scaled(coords[k]);
    }
    return t;
  }
  ModuleMap map_of(const Vec& coords) const {
    return ModuleMap(dom, cod, matrix_of(coords));
  }
  // Coordinates of a concrete map matrix; error if it is not well-defined.
  Vec coords_of(const ZnMatrix& t) const {
    Vec b(t.raw().begin(), t.raw().end());
    auto sol = solve_linear(flat.hconcat(zero_span), b);
    if (!sol)
      throw AxiomViolation("coords_of: matrix is not a module map M -> N");
    Vec c(sol->begin(), sol->begin() + gens.size());
    return module.reduce(c);
  }
  Vec coords_of(const ModuleMap& f) const { return coords_of(f.matrix()); }
};

inline HomModule hom_module(const FPModule& m, const FPModule& n) {
  if (m.modulus() != n.modulus()) throw BaseMismatch("hom over mismatched moduli");
  const Int mod = m.modulus();
  const int p = n.rank(), q = m.rank();
  const int s = m.relations().cols(), t = n.relations().cols();
  // Unknown T is p x q, flattened row-major: T[i][j] at i*q + j.
  // Constraints: for each domain relator r^sigma: T r^sigma in span(R_N).
  ZnMatrix phi(mod, s * p, p * q);
  for (int sg = 0; sg < s; ++sg) {
    Vec r = m.relations().column(sg);
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < q; ++j) phi.at(sg * p + i, i * q + j) = r[j];
  }
  ZnMatrix allow(mod, s * p, s * t);
  for (int sg = 0; sg < s; ++sg)
    for (int l = 0; l < t; ++l)
      for (int i = 0; i < p; ++i)
        allow.at(sg * p + i, sg * t + l) = n.relations().at(i, l);
  ZnMatrix K = kernel(phi.hconcat(allow));

  HomModule h;
  h.dom = m;
  h.cod = n;
  std::vector<Vec> flat_cols;
  for (int j = 0; j < K.cols(); ++j) {
    Vec full_col = K.column(j);
    Vec x(full_col.begin(), full_col.begin() + p * q);
    if (vec_is_zero(x)) continue;
    flat_cols.push_back(std::move(x));
  }
  std::sort(flat_cols.begin(), flat_cols.end());
  flat_cols.erase(std::unique(flat_cols.begin(), flat_cols.end()),
                  flat_cols.end());
  h.flat = ZnMatrix::from_columns(mod, p * q, flat_cols);
  for (const auto& c : flat_cols)
    h.gens.push_back(ZnMatrix(mod, p, q, c));
  // Maps equal to zero: every column in span(R_N).
  std::vector<Vec> zcols;
  for (int j = 0; j < q; ++j)
    for (int l = 0; l < t; ++l) {
      Vec z(static_cast<size_t>(p) * q, 0);
      for (int i = 0; i < p; ++i) z[static_cast<size_t>(i) * q + j] =
          n.relations().at(i, l);
      zcols.push_back(std::move(z));
    }
  h.zero_span = ZnMatrix::from_columns(mod, p * q, zcols);
  // Relations among generators: combinations that are zero as maps.
  ZnMatrix rk = kernel(h.flat.hconcat(h.zero_span));
  ZnMatrix rel = rk.submatrix(0, 0, static_cast<int>(h.gens.size()), rk.cols());
  h.module = FPModule::presented(mod, static_cast<int>(h.gens.size()), rel);
  return h;
}

inline HomModule dual(const FPModule& m) {
  return hom_module(m, FPModule::ring(m.modulus()));
}

// ---------------------------------------------------------------------------
// Purity
// ---------------------------------------------------------------------------

// Cohn purity over Z/n: N <= M is pure iff N (x) Z/d -> M (x) Z/d stays
// injective for every divisor d of n (cyclics exhaust f.p. modules here).
inline bool is_pure_submodule(const Submodule& s, const FPModule& m) {
  if (!s.parent().same_as(m)) throw SubmoduleMismatch("purity: wrong parent");
  auto pres = s.presented();
  const Int n = m.modulus();
  for (Int d : RingContext(n).divisors()) {
    if (d == 1) continue;
    FPModule zd = FPModule::cyclic(n, d);
    ModuleMap f = tensor_map(pres.inclusion, ModuleMap::identity(zd));
    if (!is_injective(f)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Submodule enumeration (for exhaustive laws on small modules)
// ---------------------------------------------------------------------------

namespace detail {

// The full submodule lattice of a small module, with each submodule's member
// set as a bitset over the element list. Enumeration walks the lattice
// upward: since the ambient group is abelian, the submodule generated by S
// and an extra element e is the union of the translates S + k*e, so member
// sets close in O(ord(e) * |elements|) without any linear algebra.
struct SubmoduleLattice {
  std::vector<Vec> elems;              // canonical elements of the module
  std::vector<uint32_t> add;           // add[i * n + j] = index of e_i + e_j
  int zero_index = 0;
  int words = 0;                       // 64-bit words per member bitset
  std::vector<Submodule> subs;
  std::vector<std::vector<uint64_t>> members;  // parallel to subs

  int size() const { return static_cast<int>(elems.size()); }
  int index_of_sum(int i, int j) const {
    return static_cast<int>(add[static_cast<size_t>(i) * elems.size() + j]);
  }
  bool member(size_t s, int i) const {
    return (members[s][i >> 6] >> (i & 63)) & 1;
  }
};

inline SubmoduleLattice submodule_lattice(const FPModule& m,
                                          Int max_card = 4096) {
  SubmoduleLattice lat;
  lat.elems = m.elements(max_card);
  const int n = lat.size();
  lat.words = (n + 63) / 64;
  std::map<Vec, int> idx;
  for (int i = 0; i < n; ++i) idx[lat.elems[i]] = i;
  RingContext R(m.modulus());
  lat.add.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      uint32_t s = static_cast<uint32_t>(
          idx.at(m.reduce(vec_add(R, lat.elems[i], lat.elems[j]))));
      lat.add[static_cast<size_t>(i) * n + j] = s;
      lat.add[static_cast<size_t>(j) * n + i] = s;
    }
  lat.zero_index = idx.at(m.reduce(Vec(m.rank(), 0)));

  auto set_bit = [](std::vector<uint64_t>& b, int i) {
    b[i >> 6] |= uint64_t{1} << (i & 63);
  };
  std::set<std::vector<uint64_t>> seen;
  std::vector<std::vector<Vec>> genlists;
  std::vector<uint64_t> zero(lat.words, 0);
  set_bit(zero, lat.zero_index);
  seen.insert(zero);
  lat.members.push_back(zero);
  genlists.push_back({});
  for (size_t s = 0; s < lat.members.size(); ++s) {
    const std::vector<uint64_t> cur = lat.members[s];
    const std::vector<Vec> gens = genlists[s];
    for (int e = 0; e < n; ++e) {
      if ((cur[e >> 6] >> (e & 63)) & 1) continue;
      std::vector<uint64_t> bigger = cur;
      for (int mult = e; mult != lat.zero_index;
           mult = lat.index_of_sum(mult, e))
        for (int i = 0; i < n; ++i)
          if ((cur[i >> 6] >> (i & 63)) & 1)
            set_bit(bigger, lat.index_of_sum(mult, i));
      if (seen.insert(bigger).second) {
        lat.members.push_back(std::move(bigger));
        std::vector<Vec> g2 = gens;
        g2.push_back(lat.elems[e]);
        genlists.push_back(std::move(g2));
      }
    }
  }
  for (const auto& g : genlists) lat.subs.emplace_back(m, g);
  return lat;
}

}  // namespace detail

inline std::vector<Submodule> all_submodules(const FPModule& m,
                                             Int max_card = 4096) {
  return detail::submodule_lattice(m, max_card).subs;
}

}  // namespace corings

#endif  // CORINGS_FPMOD_HPP
