#include <random>

#include "doctest.h"
#include "iwahori/error.hpp"
#include "iwahori/reps.hpp"
#include "oracles.hpp"

using namespace iwahori;

namespace {

using Dense = std::vector<std::vector<long>>;

Dense dense(const SparseMatrix& s, int n) {
  Dense d(n, std::vector<long>(n, 0));
  for (const auto& e : s.entries) d[e.row][e.col] += e.val;
  return d;
}

Dense bracket(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense r(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
      if (b[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) r[i][j] -= b[i][k] * a[k][j];
    }
  return r;
}

}  // namespace

TEST_CASE("natural SL matrices") {
  const NaturalSL rep(2, 3, 2);
  auto m = rep.x(0, 1);
  CHECK(m.a == std::vector<long>{1, 1, 0, 1});
  m = rep.coroot(0, 4);
  CHECK(m.a == std::vector<long>{4, 0, 0, 7});
  const auto gens = natural_sl_generators(3, 3, 2);
  REQUIRE(gens.size() == 3);
  CHECK(gens[2].second(2, 0) == 3);
  Generator s{GeneratorFamily::Semisimple, -1, -1, false, {1, 0}};
  CHECK_THROWS_AS(rep.realize(s), DomainError);
  CHECK_THROWS_AS(NaturalSL(1, 3, 2), DomainError);
  CHECK_THROWS_AS(NaturalSL(2, 2, 2), DomainError);
}

TEST_CASE("adjoint representation is a Lie algebra homomorphism") {
  for (auto t : {SimpleType{CartanType::A, 2}, SimpleType{CartanType::B, 3}, SimpleType{CartanType::C, 3},
                 SimpleType{CartanType::D, 4}, SimpleType{CartanType::G, 2}, SimpleType{CartanType::F, 4}}) {
    CAPTURE(to_string(t));
    for (const auto& rd : {RootDatum::adjoint(build_root_system(t)), RootDatum::simply_connected(build_root_system(t))}) {
      const AdjointRep rep(rd, 3, 1);
      const auto& rs = rep.system();
      const int n = rep.dimension();
      CHECK(n == rd.lattice_rank() + rs.num_roots());
      std::vector<Dense> ad;
      for (int g = 0; g < rs.num_roots(); ++g) ad.push_back(dense(rep.ad(g), n));
      for (int a = 0; a < rs.num_roots(); ++a)
        for (int b = 0; b < rs.num_roots(); ++b) {
          if (a == b) continue;
          const auto br = bracket(ad[a], ad[b]);
          Dense expect(n, std::vector<long>(n, 0));
          if (b == rs.negative(a)) {
            // ad of the coroot h: multiplication by <gamma, h> on X_gamma.
            const auto h = rd.coroot_in_Mdual(a);
            for (int g = 0; g < rs.num_roots(); ++g) {
              const int pos = rep.position(g);
              expect[pos][pos] = RootDatum::pair(rd.root_in_M(g), h);
            }
          } else if (const auto s = rs.sum(a, b)) {
            for (int i = 0; i < n; ++i)
              for (int j = 0; j < n; ++j) expect[i][j] = rep.constants().N(a, b) * ad[*s][i][j];
          }
          CHECK(br == expect);
        }
    }
  }
}

TEST_CASE("root subgroups in the adjoint representation") {
  std::mt19937_64 rng(5);
  for (auto t : {SimpleType{CartanType::A, 2}, SimpleType{CartanType::B, 2}, SimpleType{CartanType::G, 2}}) {
    const AdjointRep rep(RootDatum::adjoint(build_root_system(t)), 3, 2);
    const long q = rep.modulus();
    for (int g = 0; g < rep.system().num_roots(); ++g) {
      CHECK(rep.x(g, 0).is_identity());
      CHECK((rep.x(g, 1) * rep.x(g, -1)).is_identity());
      const long s = rng() % q, u = rng() % q;
      CHECK(rep.x(g, s) * rep.x(g, u) == rep.x(g, s + u));
    }
  }
}

TEST_CASE("torus action") {
  const AdjointRep a1(RootDatum::adjoint(build_root_system(CartanType::A, 1)), 5, 2);
  // alpha^vee in the adjoint coweight lattice is 2 * (fundamental coweight).
  const auto co = a1.datum().coroot_in_Mdual(0);
  const auto m = a1.torus(std::vector<long>(co.begin(), co.end()), 6);
  CHECK(m(a1.position(0), a1.position(0)) == 11);
  CHECK(m(a1.position(1), a1.position(1)) == mod_inverse(11, 25));

  std::mt19937_64 rng(9);
  for (auto t : {SimpleType{CartanType::A, 2}, SimpleType{CartanType::G, 2}}) {
    const auto rd = RootDatum::adjoint(build_root_system(t));
    const AdjointRep rep(rd, 3, 3);
    const long q = rep.modulus();
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<long> s(rd.lattice_rank());
      for (auto& x : s) x = static_cast<long>(rng() % 7) - 3;
      const auto h = rep.torus(s, 4);
      for (int g = 0; g < rd.system().num_roots(); ++g) {
        const long u = rng() % q;
        const long scale = mod_pow(4, RootDatum::pair(rd.root_in_M(g), s), q);
        CHECK(h * rep.x(g, u) * h.inverse() == rep.x(g, scale * u % q));
      }
    }
  }
}

TEST_CASE("collection agrees with adjoint matrices") {
  std::mt19937_64 rng(21);
  for (auto t : {SimpleType{CartanType::A, 3}, SimpleType{CartanType::B, 2}, SimpleType{CartanType::G, 2},
                 SimpleType{CartanType::C, 3}}) {
    CAPTURE(to_string(t));
    for (long p : {3L, 5L}) {
      const AdjointRep rep(RootDatum::adjoint(build_root_system(t)), p, 2);
      const UnipotentGroup U(rep.constants(), p, 2);
      const int npos = rep.system().num_positive();
      for (int trial = 0; trial < 40; ++trial) {
        std::vector<Letter> letters;
        auto m = ModMatrix::identity(rep.dimension(), rep.modulus());
        for (int k = 0; k < 8; ++k) {
          Letter l{static_cast<int>(rng() % npos), static_cast<long>(rng() % rep.modulus())};
          letters.push_back(l);
          m = m * rep.x(l.root, l.t);
        }
        CHECK(rep.evaluate(U.collect(letters)) == m);
      }
    }
  }
}

TEST_CASE("Iwahori classification") {
  const NaturalSL rep(2, 5, 2);
  CHECK(reduce_and_classify(ModMatrix::identity(2, 25), 5) == IwahoriClass::InI1);
  CHECK(reduce_and_classify(rep.coroot(0, 2), 5) == IwahoriClass::InI);
  CHECK(reduce_and_classify(rep.x(1, 1), 5) == IwahoriClass::Outside);
  CHECK(reduce_and_classify(rep.x(1, 5), 5) == IwahoriClass::InI1);
  CHECK_THROWS_AS(reduce_and_classify(rep.x(1, 1), 5, RepKind::Adjoint), DomainError);
}

TEST_CASE("Iwahori LDU factorization") {
  auto id = ldu_factor(ModMatrix::identity(3, 27), 3);
  CHECK(id.lower.is_identity());
  CHECK(id.diagonal.is_identity());
  CHECK(id.upper.is_identity());

  const NaturalSL sl2(2, 3, 3);
  const auto lo = sl2.x(1, 3), d = sl2.coroot(0, 4), up = sl2.x(0, 1);
  const auto f = ldu_factor(lo * d * up, 3);
  CHECK(f.lower == lo);
  CHECK(f.diagonal == d);
  CHECK(f.upper == up);

  std::mt19937_64 rng(2);
  const auto gens = natural_sl_generators(3, 3, 2);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = ModMatrix::identity(3, 9);
    for (int k = 0; k < 10; ++k) m = m * gens[rng() % gens.size()].second;
    const auto l = ldu_factor(m, 3);
    CHECK(l.lower * l.diagonal * l.upper == m);
    for (int i = 0; i < 3; ++i) {
      CHECK(l.lower(i, i) == 1);
      CHECK(l.upper(i, i) == 1);
      for (int j = 0; j < i; ++j) {
        CHECK(l.lower(i, j) % 3 == 0);
        CHECK(l.upper(i, j) == 0);
        CHECK(l.diagonal(i, j) == 0);
      }
    }
  }
  CHECK_THROWS_AS(ldu_factor(sl2.x(1, 1), 3), DomainError);
}
