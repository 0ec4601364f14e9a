#include "iwahori/reps.hpp"

#include <map>

#include "iwahori/error.hpp"

namespace iwahori {

namespace {

long modulus_for(long p, int k) {
  if (p < 3 || !is_prime(p)) throw DomainError("p must be an odd prime");
  if (k < 1) throw DomainError("level must be positive");
  const long q = checked_pow(p, k);
  if (q >= (1L << 31)) throw DomainError("modulus p^k too large for 64-bit products");
  return q;
}

long checked_mul(long a, long b) {
  long r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("overflow in divided power", 0);
  return r;
}

long checked_add(long a, long b) {
  long r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceError("overflow in divided power", 0);
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------

NaturalSL::NaturalSL(int n, long p, int k)
    : n_(n), p_(p), q_(modulus_for(p, k)), rs_(build_root_system(CartanType::A, n - 1, RootSystemOptions{std::max(12, n)})) {
  if (n < 2) throw DomainError("SL_n needs n >= 2");
}

std::pair<int, int> NaturalSL::root_indices(int root) const {
  const auto& c = rs_.root(root).coeffs;
  int first = -1, last = -1;
  for (int i = 0; i < static_cast<int>(c.size()); ++i)
    if (c[static_cast<std::size_t>(i)] != 0) {
      if (first < 0) first = i;
      last = i;
    }
  return rs_.is_positive(root) ? std::pair{first, last + 1} : std::pair{last + 1, first};
}

ModMatrix NaturalSL::x(int root, long t) const {
  auto m = ModMatrix::identity(n_, q_);
  const auto [i, j] = root_indices(root);
  m(i, j) = mod_reduce(t, q_);
  return m;
}

ModMatrix NaturalSL::coroot(int root, long x) const {
  auto m = ModMatrix::identity(n_, q_);
  const auto [i, j] = root_indices(root);
  m(i, i) = mod_reduce(x, q_);
  m(j, j) = mod_inverse(x, q_);
  return m;
}

ModMatrix NaturalSL::realize(const Generator& g) const {
  if (!g.is_unipotent()) throw DomainError("semisimple generators need the adjoint representation");
  return x(g.root, g.arg_is_p ? p_ : 1);
}

std::vector<std::pair<Generator, ModMatrix>> natural_sl_generators(int n, long p, int k) {
  const NaturalSL rep(n, p, k);
  const auto spec = theorem_generators(RootDatum::simply_connected(rep.system()), static_cast<int>(p));
  std::vector<std::pair<Generator, ModMatrix>> out;
  for (const auto& g : spec.generators) out.emplace_back(g, rep.realize(g));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

using Columns = std::vector<std::map<int, long>>;

SparseMatrix from_columns(const Columns& c) {
  SparseMatrix s;
  for (int j = 0; j < static_cast<int>(c.size()); ++j)
    for (const auto& [i, v] : c[static_cast<std::size_t>(j)])
      if (v != 0) s.entries.push_back({i, j, v});
  return s;
}

}  // namespace

AdjointRep::AdjointRep(RootDatum rd, long p, int k)
    : rd_(std::move(rd)), sc_(StructureConstants::compute(rd_.system())), p_(p), q_(modulus_for(p, k)),
      dim_(rd_.dimension()) {
  const auto& rs = rd_.system();
  const int n = rd_.lattice_rank();
  const int nr = rs.num_roots();
  divided_.resize(static_cast<std::size_t>(nr));
  for (int g = 0; g < nr; ++g) {
    // ad X_g: h -> -<g, h> X_g, X_{-g} -> g^vee, X_b -> N_{g,b} X_{g+b}.
    Columns ad(static_cast<std::size_t>(dim_));
    const auto root = rd_.root_in_M(g);
    for (int i = 0; i < n; ++i)
      if (root[static_cast<std::size_t>(i)] != 0) ad[static_cast<std::size_t>(i)][position(g)] = -root[static_cast<std::size_t>(i)];
    const auto co = rd_.coroot_in_Mdual(g);
    for (int i = 0; i < n; ++i)
      if (co[static_cast<std::size_t>(i)] != 0) ad[static_cast<std::size_t>(position(rs.negative(g)))][i] = co[static_cast<std::size_t>(i)];
    for (int b = 0; b < nr; ++b) {
      const auto s = rs.sum(g, b);
      if (s) ad[static_cast<std::size_t>(position(b))][position(*s)] = sc_.N(g, b);
    }

    auto& out = divided_[static_cast<std::size_t>(g)];
    SparseMatrix id;
    for (int i = 0; i < dim_; ++i) id.entries.push_back({i, i, 1});
    out.push_back(id);
    out.push_back(from_columns(ad));
    Columns power = ad;
    for (int m = 2; m <= 4; ++m) {
      Columns next(static_cast<std::size_t>(dim_));
      for (int j = 0; j < dim_; ++j)
        for (const auto& [kk, v] : power[static_cast<std::size_t>(j)])
          for (const auto& [i, w] : ad[static_cast<std::size_t>(kk)]) {
            auto& slot = next[static_cast<std::size_t>(j)][i];
            slot = checked_add(slot, checked_mul(v, w));
          }
      power = std::move(next);
      long fact = 1;
      for (int f = 2; f <= m; ++f) fact *= f;
      Columns div = power;
      for (auto& col : div)
        for (auto& [i, v] : col) {
          if (v % fact != 0)
            throw InvariantViolation("divided power (ad X)^" + std::to_string(m) + "/" + std::to_string(m) +
                                     "! is not integral; structure constants are inconsistent");
          v /= fact;
        }
      out.push_back(from_columns(div));
    }
    // Chains have at most four roots, so the fifth power vanishes.
    for (int j = 0; j < dim_; ++j) {
      std::map<int, long> col;
      for (const auto& [kk, v] : power[static_cast<std::size_t>(j)])
        for (const auto& [i, w] : ad[static_cast<std::size_t>(kk)]) col[i] += v * w;
      for (const auto& [i, v] : col) {
        (void)i;
        ensure(v == 0, "ad X is not nilpotent of order 5");
      }
    }
  }
}

int AdjointRep::position(int root) const {
  const auto& rs = rd_.system();
  const int n = rd_.lattice_rank(), npos = rs.num_positive();
  return rs.is_positive(root) ? n + npos + root : n + (npos - 1 - (root - npos));
}

ModMatrix AdjointRep::x(int root, long t) const {
  auto m = ModMatrix::zero(dim_, q_);
  t = mod_reduce(t, q_);
  long tm = 1;
  for (const auto& d : divided_[static_cast<std::size_t>(root)]) {
    if (tm != 0)
      for (const auto& e : d.entries) m(e.row, e.col) = mod_reduce(m(e.row, e.col) + mod_reduce(e.val, q_) * tm, q_);
    tm = tm * t % q_;
  }
  return m;
}

ModMatrix AdjointRep::torus(const std::vector<long>& cochar, long x) const {
  if (static_cast<int>(cochar.size()) != rd_.lattice_rank()) throw DomainError("cocharacter of wrong rank");
  auto m = ModMatrix::identity(dim_, q_);
  for (int g = 0; g < rd_.system().num_roots(); ++g) {
    const int pos = position(g);
    m(pos, pos) = mod_pow(x, RootDatum::pair(rd_.root_in_M(g), cochar), q_);
  }
  return m;
}

ModMatrix AdjointRep::realize(const Generator& g) const {
  if (!g.is_unipotent()) return torus(g.cochar, 1 + p_);
  return x(g.root, g.arg_is_p ? p_ : 1);
}

ModMatrix AdjointRep::evaluate(const UnipotentWord& w) const {
  auto m = ModMatrix::identity(dim_, q_);
  for (std::size_t i = 0; i < w.t.size(); ++i)
    if (w.t[i] != 0) m = m * x(static_cast<int>(i), w.t[i]);
  return m;
}

std::vector<std::pair<Generator, ModMatrix>> adjoint_generators(const RootDatum& rd, long p, int k) {
  const AdjointRep rep(rd, p, k);
  const auto spec = theorem_generators(rd, static_cast<int>(p));
  std::vector<std::pair<Generator, ModMatrix>> out;
  for (const auto& g : spec.generators) out.emplace_back(g, rep.realize(g));
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(IwahoriClass c) {
  switch (c) {
    case IwahoriClass::InI1: return "I(1)";
    case IwahoriClass::InI: return "I";
    case IwahoriClass::Outside: return "outside";
  }
  return "?";
}

IwahoriClass reduce_and_classify(const ModMatrix& m, long p, RepKind kind) {
  if (kind != RepKind::NaturalSL) throw DomainError("classification is only available for the natural representation");
  if (m.modulus % p != 0) throw DomainError("modulus is not a power of p");
  bool unipotent = true;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) {
      const long r = m(i, j) % p;
      if (i > j && r != 0) return IwahoriClass::Outside;
      if (i == j && r != 1) unipotent = false;
    }
  return unipotent ? IwahoriClass::InI1 : IwahoriClass::InI;
}

LDU ldu_factor(const ModMatrix& m, long p) {
  if (reduce_and_classify(m, p) == IwahoriClass::Outside) throw DomainError("matrix is not in the Iwahori subgroup");
  const int n = m.n;
  const long q = m.modulus;
  auto L = ModMatrix::identity(n, q);
  auto Up = ModMatrix::zero(n, q);
  for (int k = 0; k < n; ++k) {
    for (int j = k; j < n; ++j) {
      long s = m(k, j);
      for (int t = 0; t < k; ++t) s -= L(k, t) * Up(t, j) % q;
      Up(k, j) = mod_reduce(s, q);
    }
    if (Up(k, k) % p == 0) throw InvariantViolation("non-unit pivot in an Iwahori element");
    const long inv = mod_inverse(Up(k, k), q);
    for (int i = k + 1; i < n; ++i) {
      long s = m(i, k);
      for (int t = 0; t < k; ++t) s -= L(i, t) * Up(t, k) % q;
      L(i, k) = mod_reduce(s, q) * inv % q;
    }
  }
  auto D = ModMatrix::identity(n, q);
  auto U = ModMatrix::identity(n, q);
  for (int i = 0; i < n; ++i) {
    D(i, i) = Up(i, i);
    const long inv = mod_inverse(Up(i, i), q);
    for (int j = i + 1; j < n; ++j) U(i, j) = Up(i, j) * inv % q;
  }
  return {L, D, U};
}

}  // namespace iwahori
