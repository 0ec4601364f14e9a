#include "iwahori/rootdata.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "iwahori/error.hpp"
#include "iwahori/smith.hpp"

namespace iwahori {

namespace {

using Edge = std::pair<int, int>;

// Cartan matrix A_ij = <alpha_i, alpha_j^vee> in Bourbaki numbering (0-based).
std::vector<int> cartan_matrix(SimpleType t) {
  const int l = t.rank;
  std::vector<int> a(static_cast<std::size_t>(l * l), 0);
  auto at = [&](int i, int j) -> int& { return a[static_cast<std::size_t>(i * l + j)]; };
  for (int i = 0; i < l; ++i) at(i, i) = 2;
  auto link = [&](int i, int j) { at(i, j) = at(j, i) = -1; };
  switch (t.type) {
    case CartanType::A:
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      break;
    case CartanType::B:  // alpha_l short
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      at(l - 2, l - 1) = -2;
      break;
    case CartanType::C:  // alpha_l long
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      at(l - 1, l - 2) = -2;
      break;
    case CartanType::D:
      for (int i = 0; i + 2 < l; ++i) link(i, i + 1);
      link(l - 3, l - 1);
      break;
    case CartanType::E:
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < l; ++i) link(i, i + 1);
      break;
    case CartanType::F:  // alpha_1, alpha_2 long
      link(0, 1);
      link(1, 2);
      link(2, 3);
      at(1, 2) = -2;
      break;
    case CartanType::G:  // alpha_1 short
      at(0, 1) = -1;
      at(1, 0) = -3;
      break;
  }
  return a;
}

void validate(SimpleType t, const RootSystemOptions& opts) {
  const int l = t.rank;
  bool ok = false;
  switch (t.type) {
    case CartanType::A: ok = l >= 1; break;
    case CartanType::B:
    case CartanType::C: ok = l >= 2; break;
    case CartanType::D: ok = l >= 4; break;
    case CartanType::E: ok = l >= 6 && l <= 8; break;
    case CartanType::F: ok = l == 4; break;
    case CartanType::G: ok = l == 2; break;
  }
  if (!ok) throw DomainError("invalid simple type " + to_string(t));
  if (l > opts.max_rank)
    throw DomainError("rank " + std::to_string(l) + " exceeds the configured cap of " +
                      std::to_string(opts.max_rank));
}

}  // namespace

SimpleType parse_simple_type(std::string_view label, std::optional<int> rank) {
  if (label.empty()) throw DomainError("empty type label");
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  if (c < 'A' || c > 'G') throw DomainError("unknown type letter '" + std::string(label) + "'");
  SimpleType t{static_cast<CartanType>(c), 0};
  if (label.size() > 1) {
    int r = 0;
    for (char d : label.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(d)))
        throw DomainError("malformed type label '" + std::string(label) + "'");
      r = r * 10 + (d - '0');
      if (r > 10000) throw DomainError("rank too large");
    }
    if (rank && *rank != r) throw DomainError("type label and rank disagree");
    t.rank = r;
  } else {
    if (!rank) throw DomainError("missing rank for type " + std::string(label));
    t.rank = *rank;
  }
  return t;
}

std::string to_string(SimpleType t) {
  return std::string(1, static_cast<char>(t.type)) + std::to_string(t.rank);
}

std::string to_string(IsogenyPreset p) {
  switch (p) {
    case IsogenyPreset::SimplyConnected: return "simply-connected";
    case IsogenyPreset::Adjoint: return "adjoint";
    case IsogenyPreset::GeneralLinear: return "general-linear";
    case IsogenyPreset::Explicit: return "explicit";
  }
  return "?";
}

RootSystem RootSystem::build(std::span<const SimpleType> comps, RootSystemOptions opts) {
  if (comps.empty()) throw DomainError("a root system needs at least one component");
  RootSystem rs;
  for (const auto& t : comps) {
    validate(t, opts);
    rs.components_.push_back({t, rs.rank_});
    rs.rank_ += t.rank;
  }
  const int l = rs.rank_;
  rs.cartan_.assign(static_cast<std::size_t>(l * l), 0);
  rs.simple_norm2_.assign(static_cast<std::size_t>(l), 0);

  std::vector<std::vector<int>> positives;
  std::vector<int> comp_of;
  for (int c = 0; c < rs.num_components(); ++c) {
    const auto& [t, off] = rs.components_[static_cast<std::size_t>(c)];
    const auto local = cartan_matrix(t);
    const int k = t.rank;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        rs.cartan_[static_cast<std::size_t>((off + i) * l + off + j)] =
            local[static_cast<std::size_t>(i * k + j)];

    // Relative squared lengths by propagation along the Dynkin diagram:
    // A_ij * L_j = A_ji * L_i.
    std::vector<long> len(static_cast<std::size_t>(k), 0);
    len[0] = 6;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          const int aij = local[static_cast<std::size_t>(i * k + j)];
          const int aji = local[static_cast<std::size_t>(j * k + i)];
          if (i == j || aij == 0 || len[static_cast<std::size_t>(i)] == 0 ||
              len[static_cast<std::size_t>(j)] != 0)
            continue;
          len[static_cast<std::size_t>(j)] = len[static_cast<std::size_t>(i)] * aji / aij;
          changed = true;
        }
    }
    long g = 0;
    for (long v : len) g = std::gcd(g, v);
    for (int i = 0; i < k; ++i)
      rs.simple_norm2_[static_cast<std::size_t>(off + i)] =
          static_cast<int>(len[static_cast<std::size_t>(i)] / g);

    // Positive roots by height: beta + alpha_j is a root iff
    // (number of downward steps) - <beta, alpha_j^vee> > 0.
    std::map<std::vector<int>, int> known;
    std::vector<std::vector<int>> layer;
    for (int i = 0; i < k; ++i) {
      std::vector<int> v(static_cast<std::size_t>(k), 0);
      v[static_cast<std::size_t>(i)] = 1;
      layer.push_back(v);
    }
    std::vector<std::vector<int>> local_pos;
    while (!layer.empty()) {
      for (auto& v : layer) {
        known.emplace(v, 1);
        local_pos.push_back(v);
      }
      std::vector<std::vector<int>> next;
      for (const auto& v : layer) {
        for (int j = 0; j < k; ++j) {
          int down = 0;
          auto w = v;
          while (true) {
            w[static_cast<std::size_t>(j)] -= 1;
            if (!known.count(w)) break;
            ++down;
          }
          int pair = 0;
          for (int i = 0; i < k; ++i)
            pair += v[static_cast<std::size_t>(i)] * local[static_cast<std::size_t>(i * k + j)];
          if (down - pair > 0) {
            auto u = v;
            u[static_cast<std::size_t>(j)] += 1;
            if (!known.count(u) && std::find(next.begin(), next.end(), u) == next.end())
              next.push_back(u);
          }
        }
      }
      layer = std::move(next);
    }
    for (const auto& v : local_pos) {
      std::vector<int> g_coeffs(static_cast<std::size_t>(l), 0);
      std::copy(v.begin(), v.end(), g_coeffs.begin() + off);
      positives.push_back(std::move(g_coeffs));
      comp_of.push_back(c);
    }
  }

  std::vector<std::size_t> order(positives.size());
  std::iota(order.begin(), order.end(), 0);
  auto height = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const int hx = height(positives[x]), hy = height(positives[y]);
    if (hx != hy) return hx < hy;
    return positives[x] > positives[y];
  });

  const int npos = static_cast<int>(positives.size());
  rs.num_positive_ = npos;
  rs.roots_.resize(static_cast<std::size_t>(2 * npos));
  for (int i = 0; i < npos; ++i) {
    const std::size_t src = order[static_cast<std::size_t>(i)];
    Root& r = rs.roots_[static_cast<std::size_t>(i)];
    r.component = comp_of[src];
    r.coeffs = positives[src];
    r.height = height(r.coeffs);
    Root& n = rs.roots_[static_cast<std::size_t>(i + npos)];
    n.component = r.component;
    n.coeffs = r.coeffs;
    for (int& x : n.coeffs) x = -x;
    n.height = -r.height;
  }

  rs.norm2_.resize(rs.roots_.size());
  for (std::size_t i = 0; i < rs.roots_.size(); ++i) {
    const auto& v = rs.roots_[i].coeffs;
    rs.norm2_[i] = static_cast<int>(rs.inner2(v, v) / 2);
  }
  std::vector<int> longest(static_cast<std::size_t>(rs.num_components()), 0);
  for (std::size_t i = 0; i < rs.roots_.size(); ++i) {
    auto& m = longest[static_cast<std::size_t>(rs.roots_[i].component)];
    m = std::max(m, rs.norm2_[i]);
  }
  for (std::size_t i = 0; i < rs.roots_.size(); ++i)
    rs.roots_[i].length = rs.norm2_[i] == longest[static_cast<std::size_t>(rs.roots_[i].component)]
                              ? LengthClass::Long
                              : LengthClass::Short;

  rs.highest_.assign(static_cast<std::size_t>(rs.num_components()), -1);
  for (int i = 0; i < npos; ++i) rs.highest_[static_cast<std::size_t>(rs.roots_[static_cast<std::size_t>(i)].component)] = i;

  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < rs.roots_.size(); ++i) index.emplace(rs.roots_[i].coeffs, static_cast<int>(i));
  const std::size_t nr = rs.roots_.size();
  rs.sum_.assign(nr * nr, -1);
  std::vector<int> tmp(static_cast<std::size_t>(l));
  for (std::size_t a = 0; a < nr; ++a)
    for (std::size_t b = 0; b < nr; ++b) {
      if (rs.roots_[a].component != rs.roots_[b].component) continue;
      for (int i = 0; i < l; ++i)
        tmp[static_cast<std::size_t>(i)] = rs.roots_[a].coeffs[static_cast<std::size_t>(i)] +
                                           rs.roots_[b].coeffs[static_cast<std::size_t>(i)];
      auto it = index.find(tmp);
      if (it != index.end()) rs.sum_[a * nr + b] = it->second;
    }
  return rs;
}

std::vector<int> RootSystem::simple_roots(int c) const {
  const auto& comp = components_.at(static_cast<std::size_t>(c));
  std::vector<int> out(static_cast<std::size_t>(comp.type.rank));
  std::iota(out.begin(), out.end(), comp.offset);
  return out;
}

std::optional<int> RootSystem::delta(int c) const {
  const auto& comp = components_.at(static_cast<std::size_t>(c));
  if (comp.type.type != CartanType::G) return std::nullopt;
  return sum(comp.offset, comp.offset + 1);
}

std::vector<int> RootSystem::g2_components() const {
  std::vector<int> out;
  for (int c = 0; c < num_components(); ++c)
    if (components_[static_cast<std::size_t>(c)].type.type == CartanType::G) out.push_back(c);
  return out;
}

std::optional<int> RootSystem::find(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) != rank_) return std::nullopt;
  for (std::size_t i = 0; i < roots_.size(); ++i)
    if (std::equal(coeffs.begin(), coeffs.end(), roots_[i].coeffs.begin())) return static_cast<int>(i);
  return std::nullopt;
}

long RootSystem::inner2(std::span<const int> a, std::span<const int> b) const {
  // 2 (alpha_i, alpha_j) = A_ij * L_j
  long s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      s += static_cast<long>(a[static_cast<std::size_t>(i)]) * b[static_cast<std::size_t>(j)] *
           cartan(i, j) * simple_norm2_[static_cast<std::size_t>(j)];
  }
  return s;
}

int RootSystem::pairing(int beta, int alpha) const {
  const long num = inner2(root(beta).coeffs, root(alpha).coeffs);
  const long den = norm2(alpha);
  ensure(num % den == 0, "non-integral Cartan integer");
  return static_cast<int>(num / den);
}

std::vector<int> RootSystem::coroot_coeffs(int i) const {
  const auto& c = root(i).coeffs;
  std::vector<int> out(static_cast<std::size_t>(rank_));
  const int n = norm2(i);
  for (int j = 0; j < rank_; ++j) {
    const int v = c[static_cast<std::size_t>(j)] * simple_norm2_[static_cast<std::size_t>(j)];
    ensure(v % n == 0, "non-integral coroot");
    out[static_cast<std::size_t>(j)] = v / n;
  }
  return out;
}

std::vector<int> RootSystem::weight_coords(std::span<const int> coeffs) const {
  std::vector<int> w(static_cast<std::size_t>(rank_), 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) w[static_cast<std::size_t>(j)] += coeffs[static_cast<std::size_t>(i)] * cartan(i, j);
  return w;
}

RootSystem build_root_system(CartanType type, int rank, RootSystemOptions opts) {
  return build_root_system(SimpleType{type, rank}, opts);
}

RootSystem build_root_system(SimpleType type, RootSystemOptions opts) {
  const SimpleType one[] = {type};
  return RootSystem::build(one, opts);
}

RootChain root_chain(const RootSystem& rs, int beta, int alpha) {
  if (beta == alpha || beta == rs.negative(alpha))
    throw DomainError("root_chain: proportional roots");
  RootChain ch{1, 0};
  const auto& b = rs.root(beta).coeffs;
  const auto& a = rs.root(alpha).coeffs;
  std::vector<int> v(b.size());
  for (int k = 1;; ++k) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = b[i] - k * a[i];
    if (!rs.find(v)) break;
    ch.r = k + 1;
  }
  for (int k = 1;; ++k) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = b[i] + k * a[i];
    if (!rs.find(v)) break;
    ch.s = k;
  }
  return ch;
}

// ---------------------------------------------------------------------------

long RootDatum::pair(std::span<const int> m, std::span<const long> mdual) {
  long s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += m[i] * mdual[i];
  return s;
}

long RootDatum::pair(std::span<const int> m, std::span<const int> mdual) {
  long s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += static_cast<long>(m[i]) * mdual[i];
  return s;
}

namespace {

std::vector<RootDatum::Block> component_blocks(const RootSystem& rs) {
  std::vector<RootDatum::Block> out;
  for (const auto& c : rs.components()) out.push_back({c.offset, c.type.rank, c.offset, c.type.rank});
  return out;
}

}  // namespace

RootDatum RootDatum::simply_connected(RootSystem rs) {
  RootDatum d;
  d.preset_ = IsogenyPreset::SimplyConnected;
  d.n_ = rs.rank();
  for (int i = 0; i < rs.num_roots(); ++i) {
    for (int w : rs.weight_coords(rs.root(i).coeffs)) d.roots_.push_back(w);
    for (int c : rs.coroot_coeffs(i)) d.coroots_.push_back(c);
  }
  d.blocks_ = component_blocks(rs);
  d.system_ = std::move(rs);
  return d;
}

RootDatum RootDatum::adjoint(RootSystem rs) {
  RootDatum d;
  d.preset_ = IsogenyPreset::Adjoint;
  d.n_ = rs.rank();
  for (int i = 0; i < rs.num_roots(); ++i) {
    for (int c : rs.root(i).coeffs) d.roots_.push_back(c);
    for (int j = 0; j < rs.rank(); ++j) d.coroots_.push_back(rs.pairing(j, i));
  }
  d.blocks_ = component_blocks(rs);
  d.system_ = std::move(rs);
  return d;
}

RootDatum RootDatum::general_linear(int n, RootSystemOptions opts) {
  if (n < 2) throw DomainError("GL_n needs n >= 2");
  RootDatum d;
  d.preset_ = IsogenyPreset::GeneralLinear;
  d.system_ = build_root_system(CartanType::A, n - 1, opts);
  d.n_ = n;
  for (int i = 0; i < d.system_.num_roots(); ++i) {
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    const auto& c = d.system_.root(i).coeffs;
    for (int j = 0; j < n - 1; ++j) {
      v[static_cast<std::size_t>(j)] += c[static_cast<std::size_t>(j)];
      v[static_cast<std::size_t>(j + 1)] -= c[static_cast<std::size_t>(j)];
    }
    d.roots_.insert(d.roots_.end(), v.begin(), v.end());
    d.coroots_.insert(d.coroots_.end(), v.begin(), v.end());
  }
  d.blocks_ = {{0, n, 0, n - 1}};
  return d;
}

RootDatum RootDatum::explicit_lattice(RootSystem rs, const std::vector<std::vector<int>>& basis) {
  const int l = rs.rank();
  if (static_cast<int>(basis.size()) != l) throw DomainError("explicit lattice: need rank-many basis vectors");
  for (const auto& b : basis)
    if (static_cast<int>(b.size()) != l) throw DomainError("explicit lattice: basis vector of wrong length");

  // Solve x * B = w over Q for each root and demand integrality.
  std::vector<mpq_class> Bq(static_cast<std::size_t>(l * l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) Bq[static_cast<std::size_t>(i * l + j)] = basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  // Invert B by Gauss-Jordan.
  std::vector<mpq_class> inv(static_cast<std::size_t>(l * l));
  for (int i = 0; i < l; ++i) inv[static_cast<std::size_t>(i * l + i)] = 1;
  auto at = [l](std::vector<mpq_class>& m, int i, int j) -> mpq_class& { return m[static_cast<std::size_t>(i * l + j)]; };
  for (int col = 0; col < l; ++col) {
    int piv = -1;
    for (int r = col; r < l; ++r)
      if (at(Bq, r, col) != 0) { piv = r; break; }
    if (piv < 0) throw DomainError("explicit lattice: basis is not of full rank");
    for (int j = 0; j < l; ++j) {
      std::swap(at(Bq, col, j), at(Bq, piv, j));
      std::swap(at(inv, col, j), at(inv, piv, j));
    }
    const mpq_class d = at(Bq, col, col);
    for (int j = 0; j < l; ++j) { at(Bq, col, j) /= d; at(inv, col, j) /= d; }
    for (int r = 0; r < l; ++r) {
      if (r == col || at(Bq, r, col) == 0) continue;
      const mpq_class f = at(Bq, r, col);
      for (int j = 0; j < l; ++j) { at(Bq, r, j) -= f * at(Bq, col, j); at(inv, r, j) -= f * at(inv, col, j); }
    }
  }

  RootDatum d;
  d.preset_ = IsogenyPreset::Explicit;
  d.n_ = l;
  for (int i = 0; i < rs.num_roots(); ++i) {
    const auto w = rs.weight_coords(rs.root(i).coeffs);
    for (int k = 0; k < l; ++k) {
      mpq_class x = 0;
      for (int j = 0; j < l; ++j) x += w[static_cast<std::size_t>(j)] * at(inv, j, k);
      if (x.get_den() != 1) throw DomainError("explicit lattice does not contain the root lattice");
      d.roots_.push_back(static_cast<int>(x.get_num().get_si()));
    }
    const auto cc = rs.coroot_coeffs(i);
    for (int k = 0; k < l; ++k) {
      long s = 0;
      for (int j = 0; j < l; ++j) s += static_cast<long>(basis[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) * cc[static_cast<std::size_t>(j)];
      d.coroots_.push_back(static_cast<int>(s));
    }
  }
  d.blocks_ = {{0, l, 0, l}};
  d.system_ = std::move(rs);
  return d;
}

namespace {

// Coroot inclusion matrix of one block: columns are the simple coroots.
MpzMatrix coroot_block(const RootDatum& rd, const RootDatum::Block& b) {
  MpzMatrix C(static_cast<std::size_t>(b.lattice_size), static_cast<std::size_t>(b.simple_size));
  for (int j = 0; j < b.simple_size; ++j) {
    const auto v = rd.coroot_in_Mdual(b.simple_offset + j);
    for (int i = 0; i < b.lattice_size; ++i)
      C(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v[static_cast<std::size_t>(b.lattice_offset + i)];
  }
  return C;
}

}  // namespace

std::vector<long> cocharacter_quotient_invariants(const RootDatum& rd) {
  std::vector<long> out;
  for (const auto& b : rd.blocks()) {
    const auto snf = smith_normal_form(coroot_block(rd, b));
    for (int i = 0; i < b.lattice_size; ++i) {
      const long d = i < static_cast<int>(snf.diagonal.size()) ? snf.diagonal[static_cast<std::size_t>(i)].get_si() : 0;
      if (d != 1) out.push_back(d);
    }
  }
  return out;
}

CocharacterSet pro_p_basis_S(const RootDatum& rd, int p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) throw DomainError("p must be an odd prime");
  CocharacterSet out;
  out.p = p;
  for (const auto& b : rd.blocks()) {
    const auto snf = smith_normal_form(coroot_block(rd, b));
    for (int i = 0; i < b.lattice_size; ++i) {
      const mpz_class d = i < static_cast<int>(snf.diagonal.size()) ? snf.diagonal[static_cast<std::size_t>(i)] : mpz_class(0);
      if (d % p != 0) continue;
      std::vector<long> s(static_cast<std::size_t>(rd.lattice_rank()), 0);
      for (int r = 0; r < b.lattice_size; ++r) {
        mpz_class x = snf.left_inverse(static_cast<std::size_t>(r), static_cast<std::size_t>(i));
        mpz_class red;
        mpz_fdiv_r_ui(red.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p));
        s[static_cast<std::size_t>(b.lattice_offset + r)] = red.get_si();
      }
      out.S.push_back(std::move(s));
    }
  }
  return out;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace iwahori
