#ifndef CORINGS_EXAMPLES_HPP
#define CORINGS_EXAMPLES_HPP

// A named catalogue of worked structures, each emitted as a structure
// document (see io.hpp).  Every emitted document passes its verifications on
// load, and emission is deterministic, so the catalogue doubles as the
// golden-file corpus.

#include <corings/io.hpp>

namespace corings {
namespace exdetail {

inline Json new_doc(Int mod) {
  Json doc = Json::object();
  doc["ring"] = Json{{"mod", std::to_string(mod)}};
  doc["modules"] = Json::object();
  doc["maps"] = Json::object();
  doc["structures"] = Json::object();
  // Every catalogue document may use the ground ring as a codomain.
  doc["modules"]["scalars"] =
      Json{{"rank", 1}, {"relations", Json::array()}};
  return doc;
}

inline void put_module(Json& doc, const std::string& name,
                       const FPModule& m) {
  Json rels = Json::array();
  const ZnMatrix& r = m.relations();
  for (int c = 0; c < r.cols(); ++c)
    rels.push_back(ioutil::json_vec(r.column(c)));
  doc["modules"][name] = Json{{"rank", m.rank()},
                              {"relations", std::move(rels)}};
}

inline void put_map(Json& doc, const std::string& name,
                    const std::vector<std::string>& dom,
                    const std::vector<std::string>& cod, const ZnMatrix& m) {
  Json dj = Json::array(), cj = Json::array();
  for (const auto& n : dom) dj.push_back(n);
  for (const auto& n : cod) cj.push_back(n);
  doc["maps"][name] = Json{{"domain", std::move(dj)},
                           {"codomain", std::move(cj)},
                           {"matrix", ioutil::json_matrix(m)}};
}

inline void put_algebra(Json& doc, const std::string& name,
                        const std::string& carrier, const Algebra& a) {
  put_map(doc, name + "_mult", {carrier, carrier}, {carrier},
          a.mult.matrix());
  Json spec = Json{{"type", "algebra"},
                   {"carrier", carrier},
                   {"mult", name + "_mult"}};
  if (a.unit) spec["unit"] = ioutil::json_vec(*a.unit);
  doc["structures"][name] = std::move(spec);
}

inline void put_coalgebra(Json& doc, const std::string& name,
                          const std::string& carrier, const Coalgebra& c) {
  put_map(doc, name + "_comult", {carrier}, {carrier, carrier},
          c.comult.matrix());
  put_map(doc, name + "_counit", {carrier}, {"scalars"},
          c.counit.matrix());
  doc["structures"][name] = Json{{"type", "coalgebra"},
                                 {"carrier", carrier},
                                 {"comult", name + "_comult"},
                                 {"counit", name + "_counit"}};
}

inline void put_bialgebra(Json& doc, const std::string& name,
                          const Bialgebra& b) {
  put_module(doc, name, b.carrier());
  put_algebra(doc, name + "_alg", name, b.algebra);
  put_coalgebra(doc, name + "_coalg", name, b.coalgebra);
  doc["structures"][name] = Json{{"type", "bialgebra"},
                                 {"algebra", name + "_alg"},
                                 {"coalgebra", name + "_coalg"}};
}

inline Json dk_doc(const DKStructure& d) {
  Json doc = new_doc(d.h.carrier().modulus());
  put_bialgebra(doc, "H", d.h);
  put_module(doc, "A", d.a.algebra.carrier);
  put_algebra(doc, "A_alg", "A", d.a.algebra);
  put_map(doc, "A_coaction", {"A"}, {"A", "H"}, d.a.coaction.matrix());
  put_module(doc, "C", d.c.coalgebra.carrier);
  put_coalgebra(doc, "C_coalg", "C", d.c.coalgebra);
  put_map(doc, "C_action", {"C", "H"}, {"C"}, d.c.action.matrix());
  doc["structures"]["dk"] = Json{{"type", "dk"},
                                 {"bialgebra", "H"},
                                 {"algebra", "A_alg"},
                                 {"coaction", "A_coaction"},
                                 {"coalgebra", "C_coalg"},
                                 {"action", "C_action"}};
  return doc;
}

inline void put_scalar_coring(Json& doc, const std::string& name,
                              const ACoring& cor,
                              const std::string& carrier) {
  put_algebra(doc, name + "_base", "scalars", cor.base);
  put_map(doc, name + "_left", {"scalars", carrier}, {carrier},
          cor.left_action.matrix());
  put_map(doc, name + "_right", {carrier, "scalars"}, {carrier},
          cor.right_action.matrix());
  put_map(doc, name + "_comult", {carrier}, {carrier, carrier},
          cor.comult.matrix());
  put_map(doc, name + "_counit", {carrier}, {"scalars"},
          cor.counit.matrix());
  doc["structures"][name] = Json{{"type", "coring"},
                                 {"base", name + "_base"},
                                 {"carrier", carrier},
                                 {"left_action", name + "_left"},
                                 {"right_action", name + "_right"},
                                 {"comult", name + "_comult"},
                                 {"counit", name + "_counit"}};
}

// Z/n[t]/(t^2), basis {1, t}.
inline Algebra dual_numbers(Int mod) {
  FPModule a = FPModule::free(mod, 2);
  ZnMatrix mu(mod, 2, 4);
  mu.at(0, 0) = 1;
  mu.at(1, 1) = 1;
  mu.at(1, 2) = 1;
  return Algebra{a, ModuleMap(tensor(a, a), a, mu), Vec{1, 0}};
}

inline DKStructure hopf_modules_dk(Int mod) {
  Bialgebra h = group_algebra(mod, FiniteGroup::cyclic(2));
  return make_dk(HComoduleAlgebra{h.algebra, h, h.coalgebra.comult},
                 HModuleCoalgebra{h.coalgebra, h, h.algebra.mult});
}

inline DKStructure relative_hopf_dk(Int mod) {
  FiniteGroup g = FiniteGroup::cyclic(2);
  Bialgebra h = group_algebra(mod, g);
  return make_dk(graded_algebra(mod, g, dual_numbers(mod), {0, 1}),
                 HModuleCoalgebra{h.coalgebra, h, h.algebra.mult});
}

inline DKStructure doi_dk(Int mod) {
  FiniteGroup g = FiniteGroup::cyclic(2);
  Bialgebra h = group_algebra(mod, g);
  return make_dk(HComoduleAlgebra{h.algebra, h, h.coalgebra.comult},
                 gset_module_coalgebra(mod, g, GSet::regular(g)));
}

inline DKStructure long_dimodule_dk(Int mod) {
  Bialgebra h = group_algebra(mod, FiniteGroup::cyclic(1));
  Algebra a = ring_algebra(mod);
  ModuleMap co = ModuleMap::identity(a.carrier);
  Coalgebra c{a.carrier, ModuleMap::identity(a.carrier),
              ModuleMap::identity(a.carrier)};
  return make_dk(HComoduleAlgebra{a, h, co},
                 HModuleCoalgebra{c, h, ModuleMap::identity(a.carrier)});
}

inline DKStructure gset_graded_dk(Int mod) {
  FiniteGroup g = FiniteGroup::cyclic(2);
  return make_dk(graded_algebra(mod, g, dual_numbers(mod), {0, 1}),
                 gset_module_coalgebra(mod, g, GSet::regular(g)));
}

inline DKStructure yetter_drinfeld_dk(Int mod) {
  Bialgebra h = group_algebra(mod, FiniteGroup::cyclic(2));
  Algebra a = h.algebra;
  ZnMatrix co(mod, 2 * 4, 2);
  for (int i = 0; i < 2; ++i) co.at(i * 4 + (i * 2 + i), i) = 1;
  FPModule g4 = FPModule::free(mod, 4);
  ModuleMap coaction(a.carrier, tensor(a.carrier, g4), co);
  Coalgebra c = h.coalgebra;
  ZnMatrix act(mod, 2, 2 * 4);
  for (int x = 0; x < 2; ++x)
    for (int k = 0; k < 2; ++k)
      for (int l = 0; l < 2; ++l)
        act.at((x + k + l) % 2, x * 4 + k * 2 + l) = 1;
  ModuleMap action(tensor(c.carrier, g4), c.carrier, act);
  return yetter_drinfeld_builder(h, h, a, coaction, c, action);
}

}  // namespace exdetail

inline std::vector<std::string> example_names() {
  return {"coseparable-matrix-z4",
          "doi-c2-z4",
          "eps-only-c2-z4",
          "group-algebra-c2-z4",
          "gset-coalgebra-orbit2-z4",
          "gset-graded-c2-orbit2-z4",
          "hopf-modules-c2-z4",
          "long-dimodule-min",
          "matrix-coalgebra-2-z6",
          "projection-cstar-r-z4",
          "regular-comodule-c2-z4",
          "relative-hopf-c2-z4",
          "sign-alt-dk-z4",
          "twist-entwining-c2-z4",
          "yetter-drinfeld-c2-z4"};
}

namespace exdetail {

inline Json example_json(const std::string& name) {
  using namespace exdetail;
  if (name == "matrix-coalgebra-2-z6") {
    Coalgebra c = matrix_coalgebra(6, 2);
    Json doc = new_doc(6);
    put_module(doc, "C", c.carrier);
    put_coalgebra(doc, "C_coalg", "C", c);
    return doc;
  }
  if (name == "group-algebra-c2-z4") {
    Json doc = new_doc(4);
    put_bialgebra(doc, "H", group_algebra(4, FiniteGroup::cyclic(2)));
    return doc;
  }
  if (name == "gset-coalgebra-orbit2-z4") {
    Coalgebra c = gset_coalgebra(4, 2);
    Json doc = new_doc(4);
    put_module(doc, "C", c.carrier);
    put_coalgebra(doc, "C_coalg", "C", c);
    return doc;
  }
  if (name == "hopf-modules-c2-z4") return dk_doc(hopf_modules_dk(4));
  if (name == "relative-hopf-c2-z4") return dk_doc(relative_hopf_dk(4));
  if (name == "doi-c2-z4") return dk_doc(doi_dk(4));
  if (name == "long-dimodule-min") return dk_doc(long_dimodule_dk(4));
  if (name == "gset-graded-c2-orbit2-z4") return dk_doc(gset_graded_dk(4));
  if (name == "yetter-drinfeld-c2-z4") return dk_doc(yetter_drinfeld_dk(4));
  if (name == "twist-entwining-c2-z4") {
    Bialgebra h = group_algebra(4, FiniteGroup::cyclic(2));
    Json doc = new_doc(4);
    put_module(doc, "A", h.algebra.carrier);
    put_algebra(doc, "A_alg", "A", h.algebra);
    put_module(doc, "C", h.coalgebra.carrier);
    put_coalgebra(doc, "C_coalg", "C", h.coalgebra);
    put_map(doc, "psi", {"C", "A"}, {"A", "C"},
            twist_map(h.coalgebra.carrier, h.algebra.carrier).matrix());
    doc["structures"]["E"] = Json{{"type", "entwining"},
                                  {"algebra", "A_alg"},
                                  {"coalgebra", "C_coalg"},
                                  {"psi", "psi"},
                                  {"handed", "right-right"}};
    return doc;
  }
  if (name == "sign-alt-dk-z4") {
    Bialgebra h = group_algebra(4, FiniteGroup::cyclic(2));
    Algebra a2 = group_algebra(4, FiniteGroup::cyclic(2)).algebra;
    ZnMatrix act(4, 2, 4);
    act.at(0, 0) = 1;
    act.at(1, 2) = 1;
    act.at(0, 1) = 1;
    act.at(1, 3) = 3;  // u_g . u_g = -u_g
    Coalgebra c = matrix_coalgebra(4, 2);
    ZnMatrix co(4, 8, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        co.at((i * 2 + j) * 2 + ((j - i + 2) % 2), i * 2 + j) = 1;
    Json doc = new_doc(4);
    put_bialgebra(doc, "H", h);
    put_module(doc, "A", a2.carrier);
    put_algebra(doc, "A_alg", "A", a2);
    put_map(doc, "A_action", {"A", "H"}, {"A"}, act);
    put_module(doc, "C", c.carrier);
    put_coalgebra(doc, "C_coalg", "C", c);
    put_map(doc, "C_coaction", {"C"}, {"C", "H"}, co);
    doc["structures"]["alt_dk"] = Json{{"type", "alt_dk"},
                                       {"bialgebra", "H"},
                                       {"algebra", "A_alg"},
                                       {"action", "A_action"},
                                       {"coalgebra", "C_coalg"},
                                       {"coaction", "C_coaction"}};
    return doc;
  }
  if (name == "coseparable-matrix-z4") {
    Coalgebra c = matrix_coalgebra(4, 2);
    ACoring cor = coring_from_coalgebra(c);
    Json doc = new_doc(4);
    put_module(doc, "C", c.carrier);
    put_coalgebra(doc, "C_coalg", "C", c);
    put_scalar_coring(doc, "coring", cor, "C");
    // The cointegral gamma(e_ab (x) e_cd) = [a=d][b=c][b=0].
    ZnMatrix gamma(4, 1, 16);
    for (int aa = 0; aa < 2; ++aa)
      for (int b = 0; b < 2; ++b)
        for (int cc = 0; cc < 2; ++cc)
          for (int dd = 0; dd < 2; ++dd)
            if (aa == dd && b == cc && b == 0)
              gamma.at(0, (aa * 2 + b) * 4 + (cc * 2 + dd)) = 1;
    put_map(doc, "gamma", {"C", "C"}, {"scalars"}, gamma);
    return doc;
  }
  if (name == "regular-comodule-c2-z4") {
    Coalgebra c = group_algebra(4, FiniteGroup::cyclic(2)).coalgebra;
    ACoring cor = coring_from_coalgebra(c);
    Json doc = new_doc(4);
    put_module(doc, "C", c.carrier);
    put_scalar_coring(doc, "coring", cor, "C");
    put_map(doc, "M_right_action", {"C", "scalars"}, {"C"},
            ZnMatrix::identity(4, 2));
    doc["structures"]["M"] = Json{{"type", "comodule"},
                                  {"coring", "coring"},
                                  {"carrier", "C"},
                                  {"right_action", "M_right_action"},
                                  {"coaction", "coring_comult"}};
    return doc;
  }
  if (name == "eps-only-c2-z4") {
    Coalgebra c = group_algebra(4, FiniteGroup::cyclic(2)).coalgebra;
    ACoring cor = coring_from_coalgebra(c);
    DualRing d = dual_ring(cor, DualSide::left);
    Json doc = new_doc(4);
    put_module(doc, "C", c.carrier);
    put_scalar_coring(doc, "coring", cor, "C");
    put_module(doc, "Cdual", d.carrier);
    Algebra eps_line = ring_algebra(4);
    put_module(doc, "Aeps", eps_line.carrier);
    put_algebra(doc, "A_alg", "Aeps", eps_line);
    Vec eps = d.coords_of(c.counit.matrix());
    ZnMatrix kap(4, d.carrier.rank(), 1);
    for (int i = 0; i < d.carrier.rank(); ++i) kap.at(i, 0) = eps[i];
    put_map(doc, "kappa", {"Aeps"}, {"Cdual"}, kap);
    doc["structures"]["P"] = Json{{"type", "pairing"},
                                  {"acting", "A_alg"},
                                  {"coring", "coring"},
                                  {"kappa", "kappa"}};
    return doc;
  }
  if (name == "projection-cstar-r-z4") {
    Coalgebra c = group_algebra(4, FiniteGroup::cyclic(2)).coalgebra;
    ACoring cor = coring_from_coalgebra(c);
    DualRing d = dual_ring(cor, DualSide::left);
    const int rt = d.carrier.rank();
    FPModule carrier = FPModule::free(4, rt + 1);
    ZnMatrix mult(4, rt + 1, (rt + 1) * (rt + 1));
    for (int i = 0; i <= rt; ++i)
      for (int j = 0; j <= rt; ++j) {
        Vec prod(static_cast<size_t>(rt) + 1, 0);
        if (i < rt && j < rt) {
          Vec ei(static_cast<size_t>(rt), 0), ej(static_cast<size_t>(rt), 0);
          ei[i] = 1;
          ej[j] = 1;
          Vec q = d.algebra.multiply(ei, ej);
          for (int k = 0; k < rt; ++k) prod[k] = q[k];
        } else if (i == rt && j == rt) {
          prod[rt] = 1;
        }
        for (int k = 0; k <= rt; ++k) mult.at(k, i * (rt + 1) + j) = prod[k];
      }
    Vec unit(static_cast<size_t>(rt) + 1, 0);
    for (int k = 0; k < rt; ++k) unit[k] = (*d.algebra.unit)[k];
    unit[rt] = 1;
    Algebra a{carrier, ModuleMap(tensor(carrier, carrier), carrier, mult),
              unit};
    Json doc = new_doc(4);
    put_module(doc, "C", c.carrier);
    put_scalar_coring(doc, "coring", cor, "C");
    put_module(doc, "Cdual", d.carrier);
    put_module(doc, "A", carrier);
    put_algebra(doc, "A_alg", "A", a);
    ZnMatrix kap(4, rt, rt + 1);
    for (int k = 0; k < rt; ++k) kap.at(k, k) = 1;
    put_map(doc, "kappa", {"A"}, {"Cdual"}, kap);
    doc["structures"]["P"] = Json{{"type", "pairing"},
                                  {"acting", "A_alg"},
                                  {"coring", "coring"},
                                  {"kappa", "kappa"}};
    doc["structures"]["M"] = Json{{"type", "module"},
                                  {"algebra", "A_alg"},
                                  {"carrier", "A"},
                                  {"action", "A_alg_mult"}};
    return doc;
  }
  std::string names;
  for (const auto& n : example_names()) names += " " + n;
  throw UnknownExample("no example \"" + name + "\"; available:" + names);
}

}  // namespace exdetail

inline StructureDocument emit_example(const std::string& name) {
  return load_json(exdetail::example_json(name));
}

}  // namespace corings

#endif  // CORINGS_EXAMPLES_HPP
