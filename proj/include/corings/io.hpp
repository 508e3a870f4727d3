#ifndef CORINGS_IO_HPP
#define CORINGS_IO_HPP

// Structure-file ingestion and emission.  A document is JSON with four
// sections: ring (the modulus), modules (named presentations), maps (named
// matrices with module-name domain/codomain lists, tensored left to right),
// and structures (typed bundles referencing the above by name).  Matrix and
// vector entries are decimal strings so large moduli survive any JSON
// implementation; load() is lenient and also accepts plain numbers.
//
// Loading resolves every reference and, unless suppressed, runs the matching
// verify_* on each bundle; the merged report is kept on the document.
// Saving always writes the canonical form (fixed key order, two-space
// indent), so save . load is byte-identical modulo that canonicalisation.

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <corings/entwine.hpp>
#include <corings/rational.hpp>

namespace corings {

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error("ParseError: " + msg) {}
};
struct UnresolvedReference : Error {
  explicit UnresolvedReference(const std::string& msg)
      : Error("UnresolvedReference: " + msg) {}
};
struct VerificationFailed : Error {
  explicit VerificationFailed(const std::string& msg)
      : Error("VerificationFailed: " + msg) {}
};
struct UnknownExample : Error {
  explicit UnknownExample(const std::string& msg)
      : Error("UnknownExample: " + msg) {}
};

using Json = nlohmann::ordered_json;

namespace ioutil {

inline Int parse_scalar(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return j.get<Int>();
  if (j.is_string()) {
    try {
      size_t used = 0;
      Int v = std::stoll(j.get<std::string>(), &used);
      if (used != j.get<std::string>().size())
        throw ParseError(where + ": trailing characters in integer");
      return v;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError(where + ": not an integer: " + j.dump());
    }
  }
  throw ParseError(where + ": expected an integer, got " + j.dump());
}

inline ZnMatrix parse_matrix(Int mod, int rows, int cols, const Json& j,
                             const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw ParseError(where + ": expected " + std::to_string(rows) + " rows");
  ZnMatrix m(mod, rows, cols);
  for (int r = 0; r < rows; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw ParseError(where + ": row " + std::to_string(r) + " needs " +
                       std::to_string(cols) + " entries");
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = parse_scalar(row[c], where);
  }
  return m;
}

inline Json json_matrix(const ZnMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c)
      row.push_back(std::to_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json json_vec(const Vec& v) {
  Json out = Json::array();
  for (Int x : v) out.push_back(std::to_string(x));
  return out;
}

inline Vec parse_vec(Int mod, int rank, const Json& j,
                     const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != rank)
    throw ParseError(where + ": expected a vector of length " +
                     std::to_string(rank));
  Vec v(static_cast<size_t>(rank), 0);
  for (int i = 0; i < rank; ++i) {
    Int x = parse_scalar(j[i], where) % mod;
    v[i] = x < 0 ? x + mod : x;
  }
  return v;
}

inline const Json& field(const Json& j, const std::string& key,
                         const std::string& where) {
  if (!j.contains(key))
    throw ParseError(where + ": missing field \"" + key + "\"");
  return j.at(key);
}

inline std::string name_field(const Json& j, const std::string& key,
                              const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_string())
    throw ParseError(where + ": field \"" + key + "\" must be a name");
  return v.get<std::string>();
}

}  // namespace ioutil

// enforce: verify every bundle and throw VerificationFailed on the first
// failing one.  collect: verify everything, record failures in the document
// report, and keep going.  skip: no verification at all.
enum class VerifyMode { enforce, collect, skip };

struct MapEntry {
  std::vector<std::string> domain, codomain;  // module names, tensored
  ModuleMap map;
};

struct StructureDocument {
  Int mod = 0;
  std::map<std::string, FPModule> modules;
  std::map<std::string, MapEntry> maps;
  std::map<std::string, Json> structure_specs;  // canonical field order

  std::map<std::string, Algebra> algebras;
  std::map<std::string, Coalgebra> coalgebras;
  std::map<std::string, Bialgebra> bialgebras;
  std::map<std::string, ACoring> corings;
  std::map<std::string, Entwining> entwinings;
  std::map<std::string, DKStructure> dks;
  std::map<std::string, AltDKStructure> alt_dks;
  std::map<std::string, MeasuringPairing> pairings;
  std::map<std::string, Comodule> comodules;
  std::map<std::string, AModule> amodules;

  Report verification;  // merged per-bundle reports, prefixed by name
};

namespace detail {

inline FPModule resolve_span(const StructureDocument& d,
                             const std::vector<std::string>& names,
                             const std::string& where) {
  if (names.empty())
    throw ParseError(where + ": empty domain/codomain list");
  FPModule out;
  bool first = true;
  for (const auto& n : names) {
    auto it = d.modules.find(n);
    if (it == d.modules.end())
      throw UnresolvedReference(where + ": unknown module \"" + n + "\"");
    out = first ? it->second : tensor(out, it->second);
    first = false;
  }
  return out;
}

inline const ModuleMap& resolve_map(const StructureDocument& d,
                                    const std::string& name,
                                    const std::string& where) {
  auto it = d.maps.find(name);
  if (it == d.maps.end())
    throw UnresolvedReference(where + ": unknown map \"" + name + "\"");
  return it->second.map;
}

inline const FPModule& resolve_module(const StructureDocument& d,
                                      const std::string& name,
                                      const std::string& where) {
  auto it = d.modules.find(name);
  if (it == d.modules.end())
    throw UnresolvedReference(where + ": unknown module \"" + name + "\"");
  return it->second;
}

// Run one bundle verification; record it, and in enforce mode throw.
inline void record(StructureDocument& d, const std::string& name,
                   const Report& rep, VerifyMode mode) {
  d.verification.merge(rep, name);
  if (mode == VerifyMode::enforce && !rep.ok())
    throw VerificationFailed("structure \"" + name + "\" fails: " +
                             rep.to_text());
}

// Attempt to build one structure bundle.  Returns false when the bundle
// references another structure that has not been built yet (retry later).
inline bool build_structure(StructureDocument& d, const std::string& name,
                            const Json& spec, VerifyMode mode) {
  const bool no_verify = mode == VerifyMode::skip;
  using ioutil::field;
  using ioutil::name_field;
  const std::string where = "structures." + name;
  const std::string type = name_field(spec, "type", where);

  auto algebra_ref = [&](const std::string& key,
                         const Algebra** out) -> bool {
    auto it = d.algebras.find(name_field(spec, key, where));
    if (it == d.algebras.end()) return false;
    *out = &it->second;
    return true;
  };
  auto coalgebra_ref = [&](const std::string& key,
                           const Coalgebra** out) -> bool {
    auto it = d.coalgebras.find(name_field(spec, key, where));
    if (it == d.coalgebras.end()) return false;
    *out = &it->second;
    return true;
  };
  auto bialgebra_ref = [&](const std::string& key,
                           const Bialgebra** out) -> bool {
    auto it = d.bialgebras.find(name_field(spec, key, where));
    if (it == d.bialgebras.end()) return false;
    *out = &it->second;
    return true;
  };

  if (type == "algebra") {
    const FPModule& carrier =
        resolve_module(d, name_field(spec, "carrier", where), where);
    const ModuleMap& mult =
        resolve_map(d, name_field(spec, "mult", where), where);
    Algebra a{carrier, mult, std::nullopt};
    if (spec.contains("unit"))
      a.unit = ioutil::parse_vec(d.mod, carrier.rank(), spec.at("unit"),
                                 where + ".unit");
    if (!no_verify) record(d, name, verify_algebra(a), mode);
    d.algebras.emplace(name, std::move(a));
    return true;
  }
  if (type == "coalgebra") {
    const FPModule& carrier =
        resolve_module(d, name_field(spec, "carrier", where), where);
    Coalgebra c{carrier,
                resolve_map(d, name_field(spec, "comult", where), where),
                resolve_map(d, name_field(spec, "counit", where), where)};
    if (!no_verify) record(d, name, verify_coalgebra(c), mode);
    d.coalgebras.emplace(name, std::move(c));
    return true;
  }
  if (type == "bialgebra") {
    const Algebra* a = nullptr;
    const Coalgebra* c = nullptr;
    if (!algebra_ref("algebra", &a) || !coalgebra_ref("coalgebra", &c))
      return false;
    Bialgebra b{*a, *c};
    if (!no_verify) record(d, name, verify_bialgebra(b), mode);
    d.bialgebras.emplace(name, std::move(b));
    return true;
  }
  if (type == "coring") {
    const Algebra* base = nullptr;
    if (!algebra_ref("base", &base)) return false;
    ACoring c = make_coring(
        *base, resolve_module(d, name_field(spec, "carrier", where), where),
        resolve_map(d, name_field(spec, "left_action", where), where),
        resolve_map(d, name_field(spec, "right_action", where), where),
        resolve_map(d, name_field(spec, "comult", where), where),
        resolve_map(d, name_field(spec, "counit", where), where));
    if (!no_verify) record(d, name, verify_coring(c), mode);
    d.corings.emplace(name, std::move(c));
    return true;
  }
  if (type == "entwining") {
    const Algebra* a = nullptr;
    const Coalgebra* c = nullptr;
    if (!algebra_ref("algebra", &a) || !coalgebra_ref("coalgebra", &c))
      return false;
    const std::string handed = name_field(spec, "handed", where);
    if (handed != "right-right" && handed != "left-right")
      throw ParseError(where + ": handed must be right-right or left-right");
    Entwining e = make_entwining(
        *a, *c, resolve_map(d, name_field(spec, "psi", where), where),
        handed == "left-right" ? Handed::left_right : Handed::right_right);
    if (!no_verify) record(d, name, verify_entwining(e), mode);
    d.entwinings.emplace(name, std::move(e));
    return true;
  }
  if (type == "dk") {
    const Bialgebra* h = nullptr;
    const Algebra* a = nullptr;
    const Coalgebra* c = nullptr;
    if (!bialgebra_ref("bialgebra", &h) || !algebra_ref("algebra", &a) ||
        !coalgebra_ref("coalgebra", &c))
      return false;
    HComoduleAlgebra ca{*a, *h,
                        resolve_map(d, name_field(spec, "coaction", where),
                                    where)};
    HModuleCoalgebra mc{*c, *h,
                        resolve_map(d, name_field(spec, "action", where),
                                    where)};
    if (no_verify) {
      d.dks.emplace(name, DKStructure{*h, ca, mc});
    } else {
      try {
        d.dks.emplace(name, make_dk(ca, mc));
        d.verification.add(name + ".doi-koppinen", true);
      } catch (const AxiomViolation& e) {
        if (mode == VerifyMode::enforce)
          throw VerificationFailed("structure \"" + name + "\" fails: " +
                                   e.what());
        d.verification.add_status(name + ".doi-koppinen", CheckStatus::fail,
                                  e.what());
        d.dks.emplace(name, DKStructure{*h, ca, mc});
      }
    }
    return true;
  }
  if (type == "alt_dk") {
    const Bialgebra* h = nullptr;
    const Algebra* a = nullptr;
    const Coalgebra* c = nullptr;
    if (!bialgebra_ref("bialgebra", &h) || !algebra_ref("algebra", &a) ||
        !coalgebra_ref("coalgebra", &c))
      return false;
    HModuleAlgebra ma{*a, *h,
                      resolve_map(d, name_field(spec, "action", where),
                                  where)};
    HComoduleCoalgebra cc{*c, *h,
                          resolve_map(d, name_field(spec, "coaction", where),
                                      where)};
    if (no_verify) {
      d.alt_dks.emplace(name, AltDKStructure{*h, ma, cc});
    } else {
      try {
        d.alt_dks.emplace(name, make_alt_dk(ma, cc));
        d.verification.add(name + ".alternative-doi-koppinen", true);
      } catch (const AxiomViolation& e) {
        if (mode == VerifyMode::enforce)
          throw VerificationFailed("structure \"" + name + "\" fails: " +
                                   e.what());
        d.verification.add_status(name + ".alternative-doi-koppinen",
                                  CheckStatus::fail, e.what());
        d.alt_dks.emplace(name, AltDKStructure{*h, ma, cc});
      }
    }
    return true;
  }
  if (type == "pairing") {
    const Algebra* a = nullptr;
    if (!algebra_ref("acting", &a)) return false;
    auto cit = d.corings.find(name_field(spec, "coring", where));
    if (cit == d.corings.end()) return false;
    const ModuleMap& kappa =
        resolve_map(d, name_field(spec, "kappa", where), where);
    if (no_verify) {
      DualRing dr = dual_ring(cit->second, DualSide::left, true);
      d.pairings.emplace(name, MeasuringPairing{*a, cit->second,
                                                std::move(dr), kappa});
    } else {
      try {
        d.pairings.emplace(
            name, make_measuring_pairing(*a, cit->second, kappa, true));
        d.verification.add(name + ".measuring", true);
      } catch (const AxiomViolation& e) {
        if (mode == VerifyMode::enforce)
          throw VerificationFailed("structure \"" + name + "\" fails: " +
                                   e.what());
        d.verification.add_status(name + ".measuring", CheckStatus::fail,
                                  e.what());
        DualRing dr = dual_ring(cit->second, DualSide::left, true);
        d.pairings.emplace(name, MeasuringPairing{*a, cit->second,
                                                  std::move(dr), kappa});
      }
    }
    return true;
  }
  if (type == "comodule") {
    auto cit = d.corings.find(name_field(spec, "coring", where));
    if (cit == d.corings.end()) return false;
    Comodule m = make_comodule(
        cit->second,
        resolve_module(d, name_field(spec, "carrier", where), where),
        resolve_map(d, name_field(spec, "right_action", where), where),
        resolve_map(d, name_field(spec, "coaction", where), where));
    if (!no_verify) record(d, name, verify_comodule(m), mode);
    d.comodules.emplace(name, std::move(m));
    return true;
  }
  if (type == "module") {
    const Algebra* a = nullptr;
    if (!algebra_ref("algebra", &a)) return false;
    const FPModule& carrier =
        resolve_module(d, name_field(spec, "carrier", where), where);
    const ModuleMap& action =
        resolve_map(d, name_field(spec, "action", where), where);
    try {
      d.amodules.emplace(name, make_amodule(*a, carrier, action, !no_verify));
      if (!no_verify) d.verification.add(name + ".module", true);
    } catch (const AxiomViolation& e) {
      if (mode == VerifyMode::enforce)
        throw VerificationFailed("structure \"" + name + "\" fails: " +
                                 e.what());
      d.verification.add_status(name + ".module", CheckStatus::fail,
                                e.what());
      d.amodules.emplace(name, make_amodule(*a, carrier, action, false));
    }
    return true;
  }
  throw ParseError(where + ": unknown structure type \"" + type + "\"");
}

// Rebuild the spec with the canonical key order for its type.
inline Json canonical_spec(const Json& spec, const std::string& where) {
  const std::string type = ioutil::name_field(spec, "type", where);
  std::vector<std::string> keys;
  if (type == "algebra")
    keys = {"carrier", "mult", "unit"};
  else if (type == "coalgebra")
    keys = {"carrier", "comult", "counit"};
  else if (type == "bialgebra")
    keys = {"algebra", "coalgebra"};
  else if (type == "coring")
    keys = {"base", "carrier", "left_action", "right_action", "comult",
            "counit"};
  else if (type == "entwining")
    keys = {"algebra", "coalgebra", "psi", "handed"};
  else if (type == "dk")
    keys = {"bialgebra", "algebra", "coaction", "coalgebra", "action"};
  else if (type == "alt_dk")
    keys = {"bialgebra", "algebra", "action", "coalgebra", "coaction"};
  else if (type == "pairing")
    keys = {"acting", "coring", "kappa"};
  else if (type == "comodule")
    keys = {"coring", "carrier", "right_action", "coaction"};
  else if (type == "module")
    keys = {"algebra", "carrier", "action"};
  else
    throw ParseError(where + ": unknown structure type \"" + type + "\"");
  Json out = Json::object();
  out["type"] = type;
  for (const auto& k : keys)
    if (spec.contains(k)) out[k] = spec.at(k);
  return out;
}

}  // namespace detail

inline StructureDocument load_json(const Json& j,
                                   VerifyMode mode = VerifyMode::enforce) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  StructureDocument d;
  d.verification.subject = "structure document";
  d.mod = ioutil::parse_scalar(
      ioutil::field(ioutil::field(j, "ring", "document"), "mod", "ring"),
      "ring.mod");
  if (d.mod < 2)
    throw ParseError("ring.mod: modulus must be at least 2, got " +
                     std::to_string(d.mod));

  if (j.contains("modules")) {
    if (!j.at("modules").is_object())
      throw ParseError("modules must be an object");
    for (const auto& [name, mj] : j.at("modules").items()) {
      const std::string where = "modules." + name;
      Int rank = ioutil::parse_scalar(ioutil::field(mj, "rank", where),
                                      where + ".rank");
      if (rank < 0) throw ParseError(where + ": negative rank");
      const Json& rels = ioutil::field(mj, "relations", where);
      if (!rels.is_array()) throw ParseError(where + ": relations");
      // Relations are stored as a list of relator columns.
      ZnMatrix rel(d.mod, static_cast<int>(rank),
                   static_cast<int>(rels.size()));
      for (size_t c = 0; c < rels.size(); ++c) {
        Vec col = ioutil::parse_vec(d.mod, static_cast<int>(rank), rels[c],
                                    where + ".relations");
        for (int r = 0; r < static_cast<int>(rank); ++r)
          rel.at(r, static_cast<int>(c)) = col[r];
      }
      d.modules.emplace(name, FPModule::presented(d.mod,
                                                  static_cast<int>(rank),
                                                  rel));
    }
  }

  if (j.contains("maps")) {
    if (!j.at("maps").is_object()) throw ParseError("maps must be an object");
    for (const auto& [name, mj] : j.at("maps").items()) {
      const std::string where = "maps." + name;
      auto names = [&](const char* key) {
        const Json& v = ioutil::field(mj, key, where);
        if (!v.is_array())
          throw ParseError(where + ": " + key + " must be a name list");
        std::vector<std::string> out;
        for (const auto& n : v) {
          if (!n.is_string()) throw ParseError(where + ": " + key);
          out.push_back(n.get<std::string>());
        }
        return out;
      };
      MapEntry e{names("domain"), names("codomain"),
                 ModuleMap::identity(FPModule::ring(d.mod))};
      FPModule dom = detail::resolve_span(d, e.domain, where);
      FPModule cod = detail::resolve_span(d, e.codomain, where);
      try {
        e.map = ModuleMap(dom, cod,
                          ioutil::parse_matrix(d.mod, cod.rank(), dom.rank(),
                                               ioutil::field(mj, "matrix",
                                                             where),
                                               where + ".matrix"));
      } catch (const DimensionMismatch& ex) {
        throw ParseError(where + ": " + ex.what());
      }
      d.maps.emplace(name, std::move(e));
    }
  }

  if (j.contains("structures")) {
    if (!j.at("structures").is_object())
      throw ParseError("structures must be an object");
    for (const auto& [name, sj] : j.at("structures").items())
      d.structure_specs.emplace(
          name, detail::canonical_spec(sj, "structures." + name));
    // Structures may reference each other; iterate to a fixpoint.
    std::map<std::string, Json> pending = d.structure_specs;
    while (!pending.empty()) {
      bool progress = false;
      for (auto it = pending.begin(); it != pending.end();) {
        if (detail::build_structure(d, it->first, it->second, mode)) {
          it = pending.erase(it);
          progress = true;
        } else {
          ++it;
        }
      }
      if (!progress)
        throw UnresolvedReference("structures." + pending.begin()->first +
                                  ": unresolved structure reference");
    }
  }
  return d;
}

inline StructureDocument load_string(const std::string& text,
                                     VerifyMode mode = VerifyMode::enforce) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": malformed JSON");
  }
  return load_json(j, mode);
}

inline StructureDocument load(const std::string& path,
                              VerifyMode mode = VerifyMode::enforce) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BadInput("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_string(ss.str(), mode);
}

inline Json to_json(const StructureDocument& d) {
  Json j = Json::object();
  j["format"] = "corings-structure";
  j["version"] = 1;
  j["ring"] = Json{{"mod", std::to_string(d.mod)}};
  Json mods = Json::object();
  for (const auto& [name, m] : d.modules) {
    Json rels = Json::array();
    const ZnMatrix& r = m.relations();
    for (int c = 0; c < r.cols(); ++c)
      rels.push_back(ioutil::json_vec(r.column(c)));
    mods[name] = Json{{"rank", m.rank()}, {"relations", std::move(rels)}};
  }
  j["modules"] = std::move(mods);
  Json maps = Json::object();
  for (const auto& [name, e] : d.maps) {
    Json dom = Json::array(), cod = Json::array();
    for (const auto& n : e.domain) dom.push_back(n);
    for (const auto& n : e.codomain) cod.push_back(n);
    maps[name] = Json{{"domain", std::move(dom)},
                      {"codomain", std::move(cod)},
                      {"matrix", ioutil::json_matrix(e.map.matrix())}};
  }
  j["maps"] = std::move(maps);
  Json structs = Json::object();
  for (const auto& [name, spec] : d.structure_specs) structs[name] = spec;
  j["structures"] = std::move(structs);
  return j;
}

inline std::string render(const StructureDocument& d) {
  return to_json(d).dump(2) + "\n";
}

inline void save(const StructureDocument& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw BadInput("cannot write " + path);
  out << render(d);
}

// ---------------------------------------------------------------------------
// Report rendering (text and JSON), shared by the CLI and the golden tests.
// ---------------------------------------------------------------------------

inline Json report_json(const Report& rep) {
  Json j = Json::object();
  j["schema"] = 1;
  j["tool"] = "corings";
  j["tool_version"] = kToolVersion;
  j["subject"] = rep.subject;
  Json checks = Json::array();
  for (const auto& it : rep.items) {
    Json c = Json::object();
    c["name"] = it.name;
    c["status"] = to_string(it.status);
    if (!it.witness.empty()) c["witness"] = it.witness;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  j["ok"] = rep.ok();
  return j;
}

inline std::string report_text(const Report& rep) {
  return "corings " + std::string(kToolVersion) + "\n" + rep.to_text();
}

inline std::string render_report(const Report& rep, const std::string& fmt) {
  if (fmt == "json") return report_json(rep).dump(2) + "\n";
  if (fmt == "text") return report_text(rep);
  throw BadInput("unknown report format \"" + fmt + "\"");
}

}  // namespace corings

#endif  // CORINGS_IO_HPP
