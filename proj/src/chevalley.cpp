#include "iwahori/chevalley.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <utility>

#include "iwahori/error.hpp"

namespace iwahori {

long checked_pow(long base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(r, base, &r)) throw ResourceError("integer overflow in power", i);
  }
  return r;
}

StructureConstants StructureConstants::compute(const RootSystem& rs) {
  StructureConstants sc;
  sc.rs_ = rs;
  const int npos = rs.num_positive();
  const std::size_t nr = static_cast<std::size_t>(rs.num_roots());
  // Positive pairs, filled in height order.
  std::vector<long> P(static_cast<std::size_t>(npos) * static_cast<std::size_t>(npos), 0);
  auto pos_at = [&](int x, int y) -> long& { return P[static_cast<std::size_t>(x) * static_cast<std::size_t>(npos) + static_cast<std::size_t>(y)]; };

  auto same_sign = [&](int x, int y) -> long {
    if (rs.is_positive(x)) return x < y ? pos_at(x, y) : -pos_at(y, x);
    const int a = rs.negative(x), b = rs.negative(y);
    return -(a < b ? pos_at(a, b) : -pos_at(b, a));
  };
  // N_{x,y}/(z,z) = N_{y,z}/(x,x) = N_{z,x}/(y,y) with x + y + z = 0.
  auto get = [&](int x, int y) -> long {
    const auto s = rs.sum(x, y);
    if (!s) return 0;
    if (rs.is_positive(x) == rs.is_positive(y)) return same_sign(x, y);
    const int z = rs.negative(*s);
    long num;
    long den;
    if (rs.is_positive(y) == rs.is_positive(z)) {
      num = rs.norm2(z) * same_sign(y, z);
      den = rs.norm2(x);
    } else {
      num = rs.norm2(z) * same_sign(z, x);
      den = rs.norm2(y);
    }
    ensure(num % den == 0, "non-integral structure constant");
    return num / den;
  };

  for (int xi = 0; xi < npos; ++xi) {
    if (rs.root(xi).height < 2) continue;
    std::vector<std::pair<int, int>> special;
    for (int g = 0; g < xi; ++g) {
      const auto d = rs.sum(xi, rs.negative(g));
      if (d && rs.is_positive(*d) && g < *d) special.emplace_back(g, *d);
    }
    ensure(!special.empty(), "positive root without a decomposition");
    const auto [a, b] = special.front();
    long r = 1;
    for (auto cur = rs.sum(b, rs.negative(a)); cur; cur = rs.sum(*cur, rs.negative(a))) ++r;
    pos_at(a, b) = r;
    sc.extraspecial_.push_back({xi, a, b});

    for (std::size_t k = 1; k < special.size(); ++k) {
      const auto [g, d] = special[k];
      // Four-root identity applied to alpha + beta - gamma - delta = 0.
      long num = 0, den = 1;
      auto add = [&](long n, long dd) {
        num = num * dd + n * den;
        den *= dd;
        const long c = std::gcd(num, den);
        if (c > 1) { num /= c; den /= c; }
      };
      if (const auto bg = rs.sum(b, rs.negative(g))) add(get(b, rs.negative(g)) * get(a, rs.negative(d)), rs.norm2(*bg));
      if (const auto ag = rs.sum(a, rs.negative(g))) add(get(rs.negative(g), a) * get(b, rs.negative(d)), rs.norm2(*ag));
      num *= rs.norm2(xi);
      den *= pos_at(a, b);
      ensure(den != 0 && num % den == 0, "non-integral structure constant");
      pos_at(g, d) = num / den;
      ensure(pos_at(g, d) != 0, "vanishing structure constant");
    }
  }

  sc.n_.assign(nr * nr, 0);
  for (std::size_t x = 0; x < nr; ++x)
    for (std::size_t y = 0; y < nr; ++y)
      sc.n_[x * nr + y] = static_cast<int>(get(static_cast<int>(x), static_cast<int>(y)));
  return sc;
}

namespace {

// M_{r,s,i} = N_{r,s} N_{r,r+s} ... N_{r,(i-1)r+s} / i!
long chain_product(const StructureConstants& sc, int r, int s, int i) {
  const auto& rs = sc.system();
  long prod = 1;
  long fact = 1;
  int cur = s;
  for (int k = 0; k < i; ++k) {
    const int n = sc.N(r, cur);
    if (n == 0) return 0;
    prod *= n;
    fact *= k + 1;
    if (k + 1 < i) {
      const auto nx = rs.sum(r, cur);
      if (!nx) return 0;
      cur = *nx;
    }
  }
  ensure(prod % fact == 0, "non-integral commutator coefficient");
  return prod / fact;
}

std::optional<int> combination(const RootSystem& rs, int a, int b, int i, int j) {
  std::vector<int> v(static_cast<std::size_t>(rs.rank()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = i * rs.root(a).coeffs[k] + j * rs.root(b).coeffs[k];
  return rs.find(v);
}

}  // namespace

std::vector<CommutatorTerm> commutator_terms(const StructureConstants& sc, int alpha, int beta) {
  const auto& rs = sc.system();
  if (alpha == beta || alpha == rs.negative(beta)) throw DomainError("commutator of proportional roots");
  std::vector<CommutatorTerm> out;
  if (rs.root(alpha).component != rs.root(beta).component) return out;
  for (int total = 2; total <= 5; ++total)
    for (int i = total - 1; i >= 1; --i) {
      const int j = total - i;
      const auto g = combination(rs, alpha, beta, i, j);
      if (!g) continue;
      long c = 0;
      if (j == 1) {
        c = chain_product(sc, alpha, beta, i);
      } else if (i == 1) {
        c = (j % 2 ? -1 : 1) * chain_product(sc, beta, alpha, j);
      } else if (i == 3 && j == 2) {
        const long m = chain_product(sc, *rs.sum(alpha, beta), alpha, 2);
        ensure(m % 3 == 0, "non-integral C_32");
        c = m / 3;
      } else if (i == 2 && j == 3) {
        const long m = chain_product(sc, *rs.sum(alpha, beta), beta, 2);
        ensure((2 * m) % 3 == 0, "non-integral C_23");
        c = -2 * m / 3;
      } else {
        throw InvariantViolation("unexpected commutator pattern");
      }
      // Carter's C_ij with (t, u) -> (-u, -v): sign (-1)^j.
      if (j % 2) c = -c;
      ensure(c != 0, "vanishing commutator coefficient");
      out.push_back({*g, i, j, c});
    }
  // Ordered by i+j, then i.
  std::stable_sort(out.begin(), out.end(), [](const CommutatorTerm& x, const CommutatorTerm& y) {
    return x.i + x.j != y.i + y.j ? x.i + x.j < y.i + y.j : x.i < y.i;
  });
  return out;
}

CommutatorExpansion commutator_expansion(const StructureConstants& sc, int alpha, int beta) {
  const auto& rs = sc.system();
  if (alpha == beta || alpha == rs.negative(beta)) throw DomainError("commutator of proportional roots");
  if (rs.root(alpha).component == rs.root(beta).component && rs.norm2(alpha) > rs.norm2(beta))
    throw DomainError("commutator_expansion expects ||alpha|| <= ||beta||");
  CommutatorExpansion e{alpha, beta, {1, 0}, commutator_terms(sc, alpha, beta)};
  if (rs.root(alpha).component == rs.root(beta).component) e.chain = root_chain(rs, beta, alpha);
  return e;
}

bool matches_table_row(const CommutatorExpansion& e) {
  using Row = std::map<std::pair<int, int>, long>;
  static const std::map<std::pair<int, int>, Row> table = {
      {{1, 1}, {{{1, 1}, 1}}},
      {{1, 2}, {{{1, 1}, 1}, {{2, 1}, 1}}},
      {{1, 3}, {{{1, 1}, 1}, {{2, 1}, 1}, {{3, 1}, 1}, {{3, 2}, 1}}},
      {{2, 1}, {{{1, 1}, 2}}},
      {{2, 2}, {{{1, 1}, 2}, {{2, 1}, 3}, {{1, 2}, 3}}},
      {{3, 1}, {{{1, 1}, 3}}},
  };
  Row got;
  for (const auto& t : e.terms) got[{t.i, t.j}] = t.coeff < 0 ? -t.coeff : t.coeff;
  if (e.chain.s == 0) return got.empty();
  const auto it = table.find({e.chain.r, e.chain.s});
  return it != table.end() && it->second == got;
}

Filtration unipotent_filtration(const RootSystem& rs) {
  Filtration f;
  int hmax = 0;
  for (int i = 0; i < rs.num_positive(); ++i) hmax = std::max(hmax, rs.root(i).height);
  for (int h = 1; h <= hmax; ++h) {
    std::vector<int> level;
    for (int i = 0; i < rs.num_positive(); ++i)
      if (rs.root(i).height >= h) level.push_back(i);
    f.levels.push_back(std::move(level));
  }
  return f;
}

// ---------------------------------------------------------------------------

UnipotentGroup::UnipotentGroup(StructureConstants sc, long p, int k, int max_height)
    : sc_(std::move(sc)), p_(p), q_(0), max_height_(max_height), npos_(sc_.system().num_positive()) {
  if (p < 3 || !is_prime(p)) throw DomainError("modulus must be a power of an odd prime");
  if (k < 1) throw DomainError("level must be positive");
  q_ = checked_pow(p, k);
  if (q_ > (1L << 30)) throw DomainError("modulus too large for word arithmetic");
  terms_.resize(static_cast<std::size_t>(npos_) * static_cast<std::size_t>(npos_));
  for (int c = 0; c < npos_; ++c)
    for (int b = 0; b < npos_; ++b)
      if (b != c) terms_[static_cast<std::size_t>(c * npos_ + b)] = commutator_terms(sc_, b, c);
}

UnipotentWord UnipotentGroup::identity() const { return {q_, std::vector<long>(static_cast<std::size_t>(npos_), 0)}; }

UnipotentWord UnipotentGroup::letter(int root, long t) const {
  auto w = identity();
  mul_letter(w, root, t);
  return w;
}

void UnipotentGroup::mul_letter(UnipotentWord& w, int b, long t) const {
  if (b < 0 || b >= npos_) throw DomainError("letter outside the positive roots");
  t = reduce(t);
  if (t == 0) return;
  if (max_height_ > 0 && system().root(b).height > max_height_) return;
  std::vector<Letter> tail;
  for (int c = b + 1; c < npos_; ++c) {
    auto& x = w.t[static_cast<std::size_t>(c)];
    if (x != 0) {
      tail.push_back({c, x});
      x = 0;
    }
  }
  auto& wb = w.t[static_cast<std::size_t>(b)];
  wb = reduce(wb + t);
  // x_c(u) x_b(t) = x_b(t) x_c(u) [x_c(-u) : x_b(-t)]
  const long U = reduce(-t);
  for (const auto& [c, u] : tail) {
    mul_letter(w, c, u);
    const long V = reduce(-u);
    for (const auto& term : terms_[static_cast<std::size_t>(c * npos_ + b)]) {
      long val = reduce(term.coeff);
      for (int e = 0; e < term.i; ++e) val = val * U % q_;
      for (int e = 0; e < term.j; ++e) val = val * V % q_;
      mul_letter(w, term.root, val);
    }
  }
}

UnipotentWord UnipotentGroup::multiply(const UnipotentWord& a, const UnipotentWord& b) const {
  auto w = a;
  for (int i = 0; i < npos_; ++i)
    if (b.t[static_cast<std::size_t>(i)] != 0) mul_letter(w, i, b.t[static_cast<std::size_t>(i)]);
  return w;
}

UnipotentWord UnipotentGroup::inverse(const UnipotentWord& a) const {
  auto w = identity();
  for (int i = npos_ - 1; i >= 0; --i)
    if (a.t[static_cast<std::size_t>(i)] != 0) mul_letter(w, i, -a.t[static_cast<std::size_t>(i)]);
  return w;
}

UnipotentWord UnipotentGroup::commutator(const UnipotentWord& a, const UnipotentWord& b) const {
  return multiply(multiply(a, b), multiply(inverse(a), inverse(b)));
}

UnipotentWord UnipotentGroup::collect(std::span<const Letter> letters) const {
  auto w = identity();
  for (const auto& l : letters) mul_letter(w, l.root, l.t);
  return w;
}

std::vector<Letter> UnipotentGroup::letters(const UnipotentWord& w) const {
  std::vector<Letter> out;
  for (int i = 0; i < npos_; ++i)
    if (w.t[static_cast<std::size_t>(i)] != 0) out.push_back({i, w.t[static_cast<std::size_t>(i)]});
  return out;
}

UnipotentWord collect_product(const StructureConstants& sc, std::span<const Letter> letters, long p, int k) {
  return UnipotentGroup(sc, p, k).collect(letters);
}

}  // namespace iwahori
