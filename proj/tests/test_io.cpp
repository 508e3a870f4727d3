// Structure documents: loading, saving, canonicalisation, the example
// catalogue with its golden files, and the command-line driver.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <corings/cli.hpp>

#ifndef CORINGS_GOLDEN_DIR
#define CORINGS_GOLDEN_DIR "tests/golden"
#endif

using namespace corings;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) {
  return slurp(std::string(CORINGS_GOLDEN_DIR) + "/" + name);
}

struct CliResult {
  int code;
  std::string out, err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_doc(const std::string& name) {
  std::string path = "io_test_" + name + ".json";
  save(emit_example(name), path);
  return path;
}

// A document whose coalgebra bundle has a broken counit: the counit row
// (1, 0) kills the second grouplike, so the counit axiom fails.
const char* kBrokenDoc = R"({
  "ring": {"mod": "4"},
  "modules": {"C": {"rank": 2, "relations": []}, "scalars": {"rank": 1, "relations": []}},
  "maps": {
    "comult": {"domain": ["C"], "codomain": ["C", "C"],
               "matrix": [["1","0"],["0","0"],["0","0"],["0","1"]]},
    "counit": {"domain": ["C"], "codomain": ["scalars"],
               "matrix": [["1","0"]]}
  },
  "structures": {"C_coalg": {"type": "coalgebra", "carrier": "C",
                             "comult": "comult", "counit": "counit"}}
})";

}  // namespace

TEST_CASE("every example emits, verifies, and round-trips byte-identically") {
  for (const auto& n : example_names()) {
    StructureDocument d = emit_example(n);
    CHECK(d.verification.ok());
    std::string once = render(d);
    CHECK(render(load_string(once)) == once);
  }
}

TEST_CASE("emitted examples match their golden files") {
  for (const auto& n : example_names())
    CHECK(render(emit_example(n)) == golden(n + ".json"));
}

TEST_CASE("emission is deterministic across repeated runs") {
  for (const auto& n : {"hopf-modules-c2-z4", "projection-cstar-r-z4"})
    CHECK(render(emit_example(n)) == render(emit_example(n)));
}

TEST_CASE("canonicalisation: shuffled keys reload to the same bytes") {
  std::string canon = render(emit_example("group-algebra-c2-z4"));
  Json j = Json::parse(canon);
  // Rebuild with every object's keys reversed.
  std::function<Json(const Json&)> shuffle = [&](const Json& v) -> Json {
    if (v.is_object()) {
      std::vector<std::pair<std::string, Json>> items;
      for (const auto& [k, val] : v.items()) items.emplace_back(k, val);
      Json out = Json::object();
      for (auto it = items.rbegin(); it != items.rend(); ++it)
        out[it->first] = shuffle(it->second);
      return out;
    }
    return v;
  };
  std::string scrambled = shuffle(j).dump(2);
  CHECK(scrambled != canon);
  CHECK(render(load_string(scrambled)) == canon);
}

TEST_CASE("parse errors carry line and column") {
  try {
    load_string("{\n  \"ring\": {\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(load_string("{\"ring\": {\"mod\": \"1\"}}"), ParseError);
  CHECK_THROWS_AS(load_string("{\"ring\": {\"mod\": \"x\"}}"), ParseError);
  CHECK_THROWS_AS(load_string("[1, 2]"), ParseError);
}

TEST_CASE("dangling references are rejected") {
  CHECK_THROWS_AS(
      load_string(R"({"ring": {"mod": "4"},
                      "modules": {"A": {"rank": 1, "relations": []}},
                      "maps": {"m": {"domain": ["B"], "codomain": ["A"],
                                     "matrix": [["1"]]}}})"),
      UnresolvedReference);
  CHECK_THROWS_AS(
      load_string(R"({"ring": {"mod": "4"},
                      "modules": {"A": {"rank": 1, "relations": []}},
                      "maps": {},
                      "structures": {"X": {"type": "bialgebra",
                                           "algebra": "nope",
                                           "coalgebra": "nada"}}})"),
      UnresolvedReference);
}

TEST_CASE("verification failures: enforce throws, collect records, skip skips") {
  CHECK_THROWS_AS(load_string(kBrokenDoc), VerificationFailed);
  StructureDocument collected = load_string(kBrokenDoc, VerifyMode::collect);
  CHECK_FALSE(collected.verification.ok());
  StructureDocument skipped = load_string(kBrokenDoc, VerifyMode::skip);
  CHECK(skipped.verification.items.empty());
  CHECK(skipped.coalgebras.count("C_coalg") == 1);
}

TEST_CASE("unknown example names list the catalogue") {
  try {
    emit_example("nope");
    FAIL("expected UnknownExample");
  } catch (const UnknownExample& e) {
    CHECK(std::string(e.what()).find("hopf-modules-c2-z4") !=
          std::string::npos);
  }
}

TEST_CASE("cli: verify exits 0 on a good document, 1 on a broken one") {
  std::string good = temp_doc("hopf-modules-c2-z4");
  CliResult r = cli({"verify", good});
  CHECK(r.code == 0);
  CHECK(r.out.find("OK") != std::string::npos);

  std::ofstream("io_test_broken.json") << kBrokenDoc;
  CliResult b = cli({"verify", "io_test_broken.json"});
  CHECK(b.code == 1);
  CHECK(b.out.find("[fail]") != std::string::npos);
  // report always exits 0; --no-verify skips the checks entirely.
  CHECK(cli({"report", "io_test_broken.json"}).code == 0);
  CHECK(cli({"verify", "io_test_broken.json", "--no-verify"}).code == 0);
}

TEST_CASE("cli: verify report matches its golden file") {
  std::string path = temp_doc("hopf-modules-c2-z4");
  CliResult r = cli({"verify", path, "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out == golden("report-verify-hopf.json"));
}

TEST_CASE("cli: alpha diagnoses the density leg") {
  std::string path = temp_doc("eps-only-c2-z4");
  CliResult r = cli({"alpha", path});
  CHECK(r.code == 1);
  CHECK(r.out == golden("report-alpha-eps-only.txt"));
  CHECK(r.out.find("density-leg") != std::string::npos);
}

TEST_CASE("cli: rat lists the rational generators of *C x R") {
  std::string path = temp_doc("projection-cstar-r-z4");
  CliResult r = cli({"rat", path, "--pairing", "P", "--module", "M"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rat-generators") != std::string::npos);
  CHECK(r.out.find("(0,1,0)") != std::string::npos);
  CHECK(r.out.find("(1,0,0)") != std::string::npos);
  CHECK(r.out.find("(0,0,1)") == std::string::npos);
}

TEST_CASE("cli: build subcommands succeed on the catalogue") {
  CHECK(cli({"build", "coring", temp_doc("coseparable-matrix-z4"),
             "--coalgebra", "C_coalg", "--cointegral", "gamma"})
            .code == 0);
  CHECK(cli({"build", "koppinen", temp_doc("twist-entwining-c2-z4")}).code ==
        0);
  CHECK(cli({"build", "smash", temp_doc("hopf-modules-c2-z4")}).code == 0);
  CHECK(cli({"build", "dual", temp_doc("coseparable-matrix-z4"), "--side",
             "right"})
            .code == 0);
  CHECK(cli({"build", "tensor-pairing", temp_doc("projection-cstar-r-z4"),
             "--pairing", "P"})
            .code == 0);
}

TEST_CASE("cli: topology subcommands") {
  std::string proj = temp_doc("projection-cstar-r-z4");
  CHECK(cli({"topology", "coincide", proj}).code == 0);
  CliResult cl = cli({"topology", "closure", proj, "--gens", "1,0,0"});
  CHECK(cl.code == 0);
  // ker kappa is the R factor, so the closure picks up (0,0,1).
  CHECK(cl.out.find("(0,0,1)") != std::string::npos);
  CliResult de = cli({"topology", "density", temp_doc("eps-only-c2-z4")});
  CHECK(de.code == 1);
  CHECK(de.out.find("kappa-image-dense") != std::string::npos);
}

TEST_CASE("cli: dk to-entwining verifies the induced structures") {
  for (const auto& n : {"hopf-modules-c2-z4", "doi-c2-z4",
                        "gset-graded-c2-orbit2-z4", "long-dimodule-min",
                        "relative-hopf-c2-z4", "yetter-drinfeld-c2-z4"}) {
    CliResult r = cli({"dk", "to-entwining", temp_doc(n)});
    CHECK(r.code == 0);
  }
}

TEST_CASE("cli: examples list and emit") {
  CliResult ls = cli({"examples", "list"});
  CHECK(ls.code == 0);
  for (const auto& n : example_names())
    CHECK(ls.out.find(n) != std::string::npos);
  CliResult em = cli({"examples", "emit", "matrix-coalgebra-2-z6"});
  CHECK(em.code == 0);
  CHECK(em.out == golden("matrix-coalgebra-2-z6.json"));
  CHECK(cli({"examples", "emit", "nope"}).code == 2);
}

TEST_CASE("cli: input errors exit 2") {
  CHECK(cli({"verify", "no_such_file.json"}).code == 2);
  CHECK(cli({"rat", temp_doc("projection-cstar-r-z4"), "--pairing", "nope",
             "--module", "M"})
            .code == 2);
  CHECK(cli({"bogus-subcommand"}).code == 2);
}

TEST_CASE("cli: identical invocations are byte-identical") {
  std::string path = temp_doc("projection-cstar-r-z4");
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", path, "--format", "json", "--seed", "7"},
           {"rat", path, "--pairing", "P", "--module", "M", "--seed", "7"},
           {"topology", "coincide", path}}) {
    CliResult a = cli(args), b = cli(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
