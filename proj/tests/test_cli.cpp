#include <sstream>

#include "doctest.h"
#include "iwahori/cli.hpp"
#include "iwahori/json_io.hpp"
#include "iwahori/reps.hpp"
#include "oracles.hpp"

using namespace iwahori;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "iwahori");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(std::move(args));
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("round trips: root data and generators") {
  for (auto t : oracle::simple_types(5)) {
    const auto rd = RootDatum::adjoint(build_root_system(t));
    const auto j = to_json(rd, 3);
    const auto rs = root_system_from_json(json::parse(j.dump()));
    CHECK(rs.roots() == rd.system().roots());
    CHECK(rs.components() == rd.system().components());

    for (int p : {3, 5}) {
      const auto g = theorem_generators(rd, p);
      CHECK(generator_spec_from_json(json::parse(to_json(g, rd.system()).dump()), rd.system()) == g);
      const auto m = frattini_module(rd, p);
      CHECK(frattini_module_from_json(json::parse(to_json(m).dump())) == m);
    }
  }
  const auto pgl3 = RootDatum::adjoint(build_root_system(CartanType::A, 2));
  const auto g = theorem_generators(pgl3, 3);
  CHECK(g.count(GeneratorFamily::Semisimple) == 1);
  CHECK(generator_spec_from_json(to_json(g, pgl3.system()), pgl3.system()) == g);

  auto bad = to_json(g, pgl3.system());
  bad["generators"][1]["root"] = {5, 5};
  CHECK_THROWS_AS(generator_spec_from_json(bad, pgl3.system()), DomainError);
  CHECK_THROWS_AS(generator_spec_from_json(json{{"p", 3}}, pgl3.system()), DomainError);
}

TEST_CASE("round trips: commutators, matrices, reports") {
  const auto rs = build_root_system(CartanType::G, 2);
  const auto sc = StructureConstants::compute(rs);
  for (int a = 0; a < rs.num_positive(); ++a)
    for (int b = 0; b < rs.num_positive(); ++b) {
      if (a == b || rs.norm2(a) > rs.norm2(b)) continue;
      const auto e = commutator_expansion(sc, a, b);
      CHECK(commutator_from_json(json::parse(to_json(e, rs).dump()), rs) == e);
    }

  for (const auto& [gen, m] : natural_sl_generators(3, 3, 2)) {
    (void)gen;
    CHECK(mod_matrix_from_json(json::parse(to_json(m).dump())) == m);
  }
  CHECK(to_json(ModMatrix::identity(2, 9))["rows"] == json::parse("[[1,0],[0,1]]"));

  const auto sl2 = RootDatum::simply_connected(build_root_system(CartanType::A, 1));
  const auto v = verify_generation(sl2, 3, 2);
  CHECK(verification_report_from_json(json::parse(to_json(v).dump())) == v);

  CriterionOptions opts;
  opts.check_regular = true;
  for (auto [t, p] : std::vector<std::pair<SimpleType, long>>{{{CartanType::G, 2}, 13}, {{CartanType::G, 2}, 3},
                                                              {{CartanType::E, 6}, 83}, {{CartanType::A, 2}, 3}}) {
    const auto r = criterion(RootDatum::adjoint(build_root_system(t)), p, opts);
    CHECK(criterion_report_from_json(json::parse(to_json(r).dump())) == r);
  }
}

TEST_CASE("cli: documented examples") {
  auto j = run_json({"gens", "--group", "SL", "--rank", "2", "--p", "5"});
  CHECK(j["generators"].size() == 2);
  CHECK(j["generators"][0] == json::parse(R"({"kind":"unipotent","family":"simple","component":0,"root":[1],"arg":"1"})"));
  CHECK(j["generators"][1]["arg"] == "p");

  j = run_json({"gens", "--group", "PGL", "--rank", "3", "--p", "3"});
  CHECK(j["generators"][0]["kind"] == "semisimple");
  CHECK(j["generators"][0]["arg"] == "1+p");

  auto r = run({"frattini-module", "--type", "B", "--rank", "2", "--p", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("multiplicity_free=false") != std::string::npos);

  j = run_json({"galois", "--type", "E8", "--p", "251", "--check-regular"});
  CHECK(j["regular"] == true);
  CHECK(j["holds"] == true);
  REQUIRE(!j["witness"].is_null());
  CHECK(j["witness"]["phi"].size() == 9);
  CHECK(j["witness"]["phi_last"] == j["witness"]["phi"][8]);

  j = run_json({"galois", "--type", "G2", "--p", "3"});
  CHECK(j["bg_holds"] == false);

  j = run_json({"roots", "--type", "B3"});
  CHECK(j["components"][0]["highest_root"] == json::parse("[1,2,2]"));
  CHECK(j["roots"].size() == 9);

  j = run_json({"chevalley", "--type", "G2", "--alpha", "1,0", "--beta", "0,1"});
  CHECK(j["expansions"][0]["rs"] == json::parse("[1,3]"));
  CHECK(j["expansions"][0]["terms"].size() == 4);
}

TEST_CASE("cli: exit codes and validation") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 1);
  CHECK(run({"gens", "--type", "A2"}).code == 1);                    // --p missing
  CHECK(run({"gens", "--type", "A2", "--p", "9"}).code == 1);        // not prime
  CHECK(run({"gens", "--type", "A2", "--p", "3", "--frob"}).code == 1);
  CHECK(run({"roots", "--type", "H3"}).code == 1);
  CHECK(run({"roots", "--group", "SL", "--type", "B", "--rank", "3"}).code == 1);
  CHECK(run({"galois", "--group", "sc", "--type", "A2", "--p", "5"}).code == 1);
  CHECK(run({"galois", "--type", "A8", "--p", "3"}).code == 0);     // B(G) holds, pigeonhole
  CHECK(run({"galois", "--type", "A9", "--p", "11"}).code == 1);    // search guard
  CHECK(run({"verify", "--group", "PGL", "--rank", "3", "--p", "3", "--bound", "100"}).code == 2);
  CHECK(run({"verify", "--experiment", "hasse", "--type", "E8"}).code == 0);
}

TEST_CASE("cli: deterministic output") {
  const std::vector<std::string> args = {"chevalley", "--type", "B2", "--samples", "20", "--p", "5", "--seed", "11"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("20/20") != std::string::npos);
  const auto g1 = run({"verify", "--group", "SL", "--rank", "2", "--p", "3", "--json"});
  CHECK(g1.out == run({"verify", "--group", "SL", "--rank", "2", "--p", "3", "--json"}).out);
}
