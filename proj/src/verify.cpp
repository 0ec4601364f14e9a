#include "iwahori/verify.hpp"

#include <functional>

#include "iwahori/chevalley.hpp"
#include "iwahori/error.hpp"
#include "iwahori/reps.hpp"

namespace iwahori {

namespace {

struct MatMul {
  ModMatrix operator()(const ModMatrix& a, const ModMatrix& b) const { return a * b; }
};

using MatrixBuilder = SubgroupBuilder<ModMatrix, ModMatrixHash, MatMul>;

struct WordHash {
  std::size_t operator()(const UnipotentWord& w) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (long x : w.t) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

std::size_t word_span_order(const UnipotentGroup& U, const std::vector<UnipotentWord>& gens, std::size_t bound) {
  auto mul = [&U](const UnipotentWord& a, const UnipotentWord& b) { return U.multiply(a, b); };
  return bfs_closure<UnipotentWord, WordHash>(gens, U.identity(), mul, bound).size();
}

}  // namespace

FiniteMatrixGroup bfs_closure(const std::vector<ModMatrix>& gens, std::size_t bound, Execution exec) {
  if (gens.empty()) throw DomainError("closure needs at least one generator");
  for (const auto& g : gens)
    if (g.modulus != gens[0].modulus || g.n != gens[0].n) throw DomainError("generators of mixed shape or modulus");
  auto c = bfs_closure<ModMatrix, ModMatrixHash>(gens, ModMatrix::identity(gens[0].n, gens[0].modulus), MatMul{},
                                                 bound, exec);
  return {gens, std::move(c.elements), gens[0].modulus, c.depth};
}

std::optional<int> p_log(std::size_t n, long p) {
  int e = 0;
  while (n > 1 && n % static_cast<std::size_t>(p) == 0) {
    n /= static_cast<std::size_t>(p);
    ++e;
  }
  return n == 1 ? std::optional<int>(e) : std::nullopt;
}

int frattini_rank(const FiniteMatrixGroup& g, long p, Execution exec) {
  const auto order_exp = p_log(g.order(), p);
  if (!order_exp) throw DomainError("group order is not a power of p");
  const auto& gens = g.generators;
  MatrixBuilder phi(ModMatrix::identity(gens[0].n, g.modulus), MatMul{}, g.order(), exec);
  std::vector<ModMatrix> seeds;
  for (const auto& x : gens) seeds.push_back(x.pow(p));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) seeds.push_back(commutator(gens[i], gens[j]));
  phi.add_generators(seeds);
  // Normal closure: conjugate each generator of Phi by each generator of G.
  std::vector<ModMatrix> inv;
  for (const auto& x : gens) inv.push_back(x.inverse());
  for (std::size_t i = 0; i < phi.generators().size(); ++i) {
    const ModMatrix y = phi.generators()[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      auto c = inv[j] * y * gens[j];
      if (!phi.contains(c)) phi.add_generator(c);
    }
  }
  const auto phi_exp = p_log(phi.size(), p);
  ensure(phi_exp.has_value() && *phi_exp <= *order_exp, "Frattini subgroup order is not a p-power divisor");
  return *order_exp - *phi_exp;
}

VerificationReport verify_generation(const RootDatum& rd, int p, int k, const VerifyOptions& opts) {
  if (k < 1) throw DomainError("level must be positive");
  const auto& rs = rd.system();
  const auto spec = theorem_generators(rd, p);
  VerificationReport rep;
  rep.p = p;
  rep.k = k;
  rep.generator_count = spec.size();

  std::vector<ModMatrix> gens;
  const bool natural = rd.preset() == IsogenyPreset::SimplyConnected && rs.num_components() == 1 &&
                       rs.components()[0].type.type == CartanType::A;
  if (natural) {
    rep.representation = "natural";
    const NaturalSL nat(rs.rank() + 1, p, k);
    for (const auto& g : spec.generators) gens.push_back(nat.realize(g));
  } else {
    rep.representation = "adjoint";
    const AdjointRep adj(rd, p, k);
    for (const auto& g : spec.generators) gens.push_back(adj.realize(g));
    if (rd.preset() != IsogenyPreset::Adjoint) {
      rep.faithful = false;
      rep.notes.push_back("adjoint representation of a non-adjoint datum: central elements are invisible, order check not applicable");
    }
  }

  // |I(1) mod p^k| = p^{(k-1) dim G + |R+|}
  const long e = static_cast<long>(k - 1) * rd.dimension() + rs.num_positive();
  std::size_t expected = 1;
  bool fits = true;
  for (long i = 0; i < e && fits; ++i) fits = !__builtin_mul_overflow(expected, static_cast<std::size_t>(p), &expected);
  if (fits) rep.expected_order = expected;

  FiniteMatrixGroup full;
  try {
    full = bfs_closure(gens, opts.bound, opts.exec);
    rep.achieved_order = full.order();
  } catch (const ResourceError& err) {
    rep.conclusive = false;
    rep.achieved_order = err.reached();
    rep.notes.push_back("element bound reached; verification inconclusive");
    return rep;
  }

  if (opts.drop_one) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (opts.only_drop && *opts.only_drop != i) continue;
      DropOneResult d;
      d.dropped = i;
      d.generator = describe(spec.generators[i], rs);
      std::vector<ModMatrix> rest;
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (j != i) rest.push_back(gens[j]);
      if (rest.empty()) {
        d.order = 1;
      } else {
        try {
          d.order = bfs_closure(rest, opts.bound, opts.exec).order();
        } catch (const ResourceError& err) {
          d.conclusive = false;
          d.order = err.reached();
        }
      }
      d.proper = d.conclusive && d.order < full.order();
      d.index = d.conclusive && d.order ? full.order() / d.order : 0;
      rep.drop_one.push_back(d);
    }
    if (opts.only_drop && rep.drop_one.empty()) throw DomainError("--drop index out of range");
  }
  if (opts.frattini && p_log(full.order(), p)) rep.frattini_rank = frattini_rank(full, p, opts.exec);

  bool ok = rep.conclusive && rep.faithful && rep.expected_order && rep.achieved_order == *rep.expected_order;
  for (const auto& d : rep.drop_one) ok = ok && d.conclusive && d.proper;
  if (rep.frattini_rank) ok = ok && static_cast<std::size_t>(*rep.frattini_rank) == rep.generator_count;
  rep.pass = ok;
  return rep;
}

// ---------------------------------------------------------------------------

G2SpanReport verify_g2_span(int p, int k) {
  if (p != 3 && p != 5) throw DomainError("the G2 span check runs at p = 3 or p = 5");
  if (k < 1) throw DomainError("level must be positive");
  const auto rs = build_root_system(CartanType::G, 2);
  const auto sc = StructureConstants::compute(rs);
  auto idx = [&rs](int a, int b) {
    const int v[] = {a, b};
    return *rs.find(v);
  };
  G2SpanReport r;
  r.p = p;
  r.k = k;

  // (a), (b): inside U(F_p) by collection.
  const UnipotentGroup U(sc, p, 1);
  r.unipotent_order = static_cast<std::size_t>(checked_pow(p, rs.num_positive()));
  r.simple_span_order = word_span_order(U, {U.letter(idx(1, 0), 1), U.letter(idx(0, 1), 1)}, r.unipotent_order);
  r.index = r.unipotent_order / r.simple_span_order;
  if (p == 3)
    r.with_delta_order = word_span_order(U, {U.letter(idx(1, 0), 1), U.letter(idx(0, 1), 1), U.letter(idx(1, 1), 1)},
                                         r.unipotent_order);

  // The graded pairing [x_beta, x_{3alpha+beta}].
  const auto c = U.commutator(U.letter(idx(0, 1), 1), U.letter(idx(3, 1), 1));
  r.erratum_support_ok = U.letters(c).size() == 1 && U.letters(c)[0].root == idx(3, 2);

  // (c): commutator identities with a negative root, in the adjoint representation mod p^k.
  const AdjointRep adj(RootDatum::adjoint(rs), p, k);
  const long q = adj.modulus();
  struct Display {
    std::string name;
    std::pair<int, int> B, A;
    std::vector<std::pair<int, int>> rhs;
  };
  const std::vector<Display> displays = {
      {"[x_{-2b-3a}(pv) : x_{b}(u)]", {-3, -2}, {0, 1}, {{-3, -1}}},
      {"[x_{-2b-3a}(pv) : x_{b+3a}(u)]", {-3, -2}, {3, 1}, {{0, -1}}},
      {"[x_{-2b-3a}(pv) : x_{b+2a}(u)]", {-3, -2}, {2, 1}, {{-1, -1}, {1, 0}, {3, 1}, {0, -1}}},
      {"[x_{-b-3a}(pv) : x_{a}(u)]", {-3, -1}, {1, 0}, {{-2, -1}, {-1, -1}, {0, -1}, {-3, -2}}},
      {"[x_{-b-3a}(pv) : x_{b+2a}(u)]", {-3, -1}, {2, 1}, {{-1, 0}, {1, 1}, {3, 2}, {0, 1}}},
  };
  bool identities_ok = true;
  for (const auto& d : displays) {
    IdentityCheck chk;
    chk.name = d.name;
    const int B = idx(d.B.first, d.B.second), A = idx(d.A.first, d.A.second);
    const auto terms = commutator_terms(sc, A, B);
    bool shape = terms.size() == d.rhs.size();
    for (std::size_t i = 0; shape && i < terms.size(); ++i) {
      shape = terms[i].root == idx(d.rhs[i].first, d.rhs[i].second) && (terms[i].coeff == 1 || terms[i].coeff == -1);
      chk.coefficients.push_back(terms[i].coeff);
    }
    bool eq = shape;
    for (long u = 0; eq && u < q; ++u)
      for (long v = 0; eq && v < q; ++v) {
        const long pv = p * v % q;
        const auto lhs = adj.x(B, pv) * adj.x(A, u) * adj.x(B, -pv) * adj.x(A, -u);
        auto rhs = ModMatrix::identity(adj.dimension(), q);
        for (const auto& t : terms) {
          long val = mod_reduce(t.coeff, q);
          for (int e = 0; e < t.i; ++e) val = val * u % q;
          for (int e = 0; e < t.j; ++e) val = val * pv % q;
          rhs = rhs * adj.x(t.root, val);
        }
        eq = lhs == rhs;
      }
    chk.holds = eq;
    identities_ok = identities_ok && eq;
    r.identities.push_back(std::move(chk));
  }

  const bool span_ok = p == 3 ? r.index == 3 && r.with_delta_order == r.unipotent_order : r.index == 1;
  r.pass = span_ok && identities_ok && r.erratum_support_ok;
  return r;
}

bool verify_torus_identity(long p, int k) {
  if (k < 2) throw DomainError("the torus identity is checked for k >= 2");
  const long q = checked_pow(p, k);
  auto mat = [q](long a, long b, long c, long d) {
    ModMatrix m = ModMatrix::zero(2, q);
    m(0, 0) = mod_reduce(a, q);
    m(0, 1) = mod_reduce(b, q);
    m(1, 0) = mod_reduce(c, q);
    m(1, 1) = mod_reduce(d, q);
    return m;
  };
  for (long x = 1; x < q; x += p) {
    const long xi = mod_inverse(x, q);
    const auto prod = mat(1, 0, xi - 1, 1) * mat(1, 1, 0, 1) * mat(1, 0, x - 1, 1) * mat(1, -xi, 0, 1);
    if (prod != mat(x, 0, 0, xi)) return false;
  }
  return true;
}

HasseResult hasse_experiment(SimpleType t) {
  const auto rs = build_root_system(t);
  HasseResult h{t, 0, {}};
  const int top = rs.highest_root(0);
  for (int g = 0; g < rs.num_positive(); ++g) {
    if (g == top) continue;
    ++h.checked;
    bool found = false;
    for (int a = 0; a < rs.rank() && !found; ++a) found = rs.sum(g, a).has_value();
    if (!found) h.counterexamples.push_back(g);
  }
  return h;
}

}  // namespace iwahori
