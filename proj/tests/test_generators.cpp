#include <set>

#include "doctest.h"
#include "iwahori/error.hpp"
#include "iwahori/generators.hpp"
#include "oracles.hpp"

using namespace iwahori;

namespace {

RootDatum sl(int n) { return RootDatum::simply_connected(build_root_system(CartanType::A, n - 1)); }
RootDatum pgl(int n) { return RootDatum::adjoint(build_root_system(CartanType::A, n - 1)); }

// Not multiplicity free exactly for p = 3 and A1, B, C, F4, G2.
bool expected_free(SimpleType t, int p) {
  if (p != 3) return true;
  if (t.type == CartanType::A) return t.rank != 1;
  return t.type == CartanType::D || t.type == CartanType::E;
}

}  // namespace

TEST_CASE("generator lists") {
  auto g = theorem_generators(sl(2), 5);
  REQUIRE(g.size() == 2);
  CHECK(g.generators[0].family == GeneratorFamily::SimpleUnipotent);
  CHECK(g.generators[0].root == 0);
  CHECK(!g.generators[0].arg_is_p);
  CHECK(g.generators[1].family == GeneratorFamily::LowestUnipotent);
  CHECK(g.generators[1].root == 1);
  CHECK(g.generators[1].arg_is_p);

  const auto g2 = RootDatum::adjoint(build_root_system(CartanType::G, 2));
  g = theorem_generators(g2, 3);
  REQUIRE(g.size() == 4);
  const auto& rs = g2.system();
  CHECK(rs.root(g.generators[0].root).coeffs == std::vector<int>{1, 0});
  CHECK(rs.root(g.generators[1].root).coeffs == std::vector<int>{0, 1});
  CHECK(rs.root(g.generators[2].root).coeffs == std::vector<int>{-3, -2});
  CHECK(rs.root(g.generators[3].root).coeffs == std::vector<int>{1, 1});
  CHECK(theorem_generators(g2, 5).size() == 3);

  g = theorem_generators(pgl(3), 3);
  CHECK(g.size() == 4);
  CHECK(g.count(GeneratorFamily::Semisimple) == 1);
  CHECK_THROWS_AS(theorem_generators(sl(2), 2), DomainError);
  CHECK_THROWS_AS(theorem_generators(sl(2), 9), DomainError);
}

TEST_CASE("generator count formula across presets") {
  std::vector<RootDatum> data;
  for (int n = 2; n <= 5; ++n) {
    data.push_back(sl(n));
    data.push_back(pgl(n));
    data.push_back(RootDatum::general_linear(n));
  }
  for (auto t : oracle::simple_types(5)) {
    data.push_back(RootDatum::adjoint(build_root_system(t)));
    data.push_back(RootDatum::simply_connected(build_root_system(t)));
  }
  const SimpleType prod[] = {{CartanType::G, 2}, {CartanType::A, 2}, {CartanType::G, 2}};
  data.push_back(RootDatum::adjoint(RootSystem::build(prod)));
  for (const auto& rd : data)
    for (int p : {3, 5, 7, 11}) {
      const auto& rs = rd.system();
      const long expected = oracle::s_dimension(rd, p) + rs.rank() + rs.num_components() +
                            (p == 3 ? static_cast<long>(rs.g2_components().size()) : 0);
      const auto spec = theorem_generators(rd, p);
      CHECK(static_cast<long>(spec.size()) == expected);
      CHECK((spec.count(GeneratorFamily::G2Extra) > 0) == (p == 3 && !rs.g2_components().empty()));
      CHECK(frattini_module(rd, p).dimension() == spec.size());
    }
}

TEST_CASE("Frattini module characters") {
  auto m = frattini_module(RootDatum::adjoint(build_root_system(CartanType::B, 2)), 3);
  REQUIRE(m.characters.size() == 3);
  CHECK(m.characters[2] == std::vector<long>{1, 0});
  CHECK(m.characters[2] == m.characters[0]);

  m = frattini_module(pgl(3), 3);
  CHECK(m.trivial_rank == 1);
  CHECK(m.characters == std::vector<std::vector<long>>{{1, 0}, {0, 1}, {1, 1}});

  m = frattini_module(sl(2), 5);
  CHECK(m.characters == std::vector<std::vector<long>>{{1}, {3}});
}

TEST_CASE("multiplicity-free classification") {
  CHECK_FALSE(is_multiplicity_free(RootDatum::adjoint(build_root_system(CartanType::G, 2)), 3));
  CHECK_FALSE(is_multiplicity_free(RootDatum::adjoint(build_root_system(CartanType::A, 1)), 3));
  CHECK(is_multiplicity_free(RootDatum::adjoint(build_root_system(CartanType::B, 3)), 5));
  for (auto t : oracle::simple_types(8))
    for (int p : {3, 5, 7}) {
      CAPTURE(to_string(t));
      CAPTURE(p);
      CHECK(is_multiplicity_free(RootDatum::adjoint(build_root_system(t)), p) == expected_free(t, p));
    }
  const SimpleType prod[] = {{CartanType::A, 2}, {CartanType::A, 2}};
  CHECK_THROWS_AS(is_multiplicity_free(RootDatum::adjoint(RootSystem::build(prod)), 5), DomainError);
}
