#include "iwahori/galois.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "iwahori/bernoulli.hpp"
#include "iwahori/error.hpp"

namespace iwahori {

namespace {

void require_odd_prime(long p) { require(p >= 3 && p % 2 == 1 && is_prime(p), "p must be an odd prime"); }

bool is_exceptional(CartanType t) {
  return t == CartanType::E || t == CartanType::F || t == CartanType::G;
}

}  // namespace

bool OmegaChars::is_allowed(long chi) const { return std::binary_search(allowed.begin(), allowed.end(), chi); }

OmegaChars omega_chars(long p, bool include_trivial) {
  require_odd_prime(p);
  OmegaChars c;
  c.p = p;
  c.modulus = p - 1;
  for (long i = 1; i < c.modulus; i += 2) c.odd.push_back(i);
  c.includes_trivial = include_trivial;
  if (include_trivial) c.allowed.push_back(0);
  c.allowed.insert(c.allowed.end(), c.odd.begin(), c.odd.end());
  return c;
}

OmegaChars omega_chars(const RootDatum& rd, long p) {
  require_odd_prime(p);
  return omega_chars(p, pro_p_basis_S(rd, static_cast<int>(p)).size() == 0);
}

std::optional<std::string> assignment_violation(const CharacterAssignment& a, const OmegaChars& chars) {
  if (a.modulus != chars.modulus) return "modulus mismatch";
  if (a.phi.size() != a.n.size() + 1) return "need l+1 characters for l coefficients";
  for (std::size_t i = 0; i < a.phi.size(); ++i) {
    if (!chars.is_allowed(a.phi[i])) return "phi_" + std::to_string(i + 1) + " = " + std::to_string(a.phi[i]) + " not allowed";
    for (std::size_t j = 0; j < i; ++j)
      if (a.phi[i] == a.phi[j])
        return "phi_" + std::to_string(j + 1) + " = phi_" + std::to_string(i + 1) + " = " + std::to_string(a.phi[i]);
  }
  long s = a.phi.back();
  for (std::size_t i = 0; i < a.n.size(); ++i) s = (s + a.n[i] * a.phi[i]) % a.modulus;
  if (s != 0) return "weighted product is chi_" + std::to_string(s) + ", not trivial";
  return std::nullopt;
}

std::vector<int> highest_root_coefficients(SimpleType t) {
  const auto rs = build_root_system(t);
  return rs.root(rs.highest_root(0)).coeffs;
}

ThresholdConstant threshold_constant(SimpleType t) {
  ThresholdConstant c;
  const long l = t.rank;
  if (is_exceptional(t.type)) {
    const auto n = highest_root_coefficients(t);
    long r = 0;
    for (long i = 1; i <= l; ++i) r += (2 * i - 1) * n[static_cast<std::size_t>(i - 1)];
    c.p_1_mod_4 = c.p_3_mod_4 = r + 2 * l;
    c.exceptional = true;
  } else {
    c.p_1_mod_4 = 2 * l + 3;
    c.p_3_mod_4 = 2 * l + 5;
  }
  return c;
}

long threshold_for(SimpleType t, long p) {
  const auto c = threshold_constant(t);
  return p % 4 == 1 ? c.p_1_mod_4 : c.p_3_mod_4;
}

CharacterAssignment constructive_assignment(SimpleType t, long p) {
  require_odd_prime(p);
  const long bound = threshold_for(t, p);
  if (p < bound)
    throw DomainError("constructive assignment for " + to_string(t) + " needs p >= " + std::to_string(bound) +
                      "; use search_assignment");
  CharacterAssignment a;
  a.modulus = p - 1;
  a.n = highest_root_coefficients(t);
  const int l = t.rank;
  a.phi.assign(static_cast<std::size_t>(l + 1), -1);
  auto phi = [&](int i) -> long& { return a.phi[static_cast<std::size_t>(i - 1)]; };

  long next_odd = 1;
  // Next unused pair {chi, chi^-1} of distinct odd characters.
  auto pair = [&](int i, int j) {
    phi(i) = next_odd;
    phi(j) = a.modulus - next_odd;
    next_odd += 2;
  };
  auto pairs_on = [&](int from, int to) {
    for (int i = from; i < to; i += 2) pair(i, i + 1);
  };

  switch (t.type) {
    case CartanType::A:
      if (l % 2 == 0) {
        pairs_on(1, l);
        phi(l + 1) = 0;
      } else {
        pairs_on(1, l + 1);
      }
      break;
    case CartanType::B:
      if (l % 2 == 1) {
        pair(1, l + 1);
        pairs_on(2, l);
      } else {
        phi(2) = 0;
        pair(1, l + 1);
        pairs_on(3, l);
      }
      break;
    case CartanType::C:
      // alpha_max = 2 alpha_1 + ... + 2 alpha_{l-1} + alpha_l: B with the ends swapped.
      if (l % 2 == 1) {
        pair(l, l + 1);
        pairs_on(1, l - 1);
      } else {
        phi(l - 1) = 0;
        pair(l, l + 1);
        pairs_on(1, l - 2);
      }
      break;
    case CartanType::D:
      if (l % 2 == 1) {
        pair(l - 1, l);
        pair(1, l + 1);
        pairs_on(2, l - 2);
      } else {
        phi(2) = 0;
        pair(1, l - 1);
        pair(l, l + 1);
        pairs_on(3, l - 2);
      }
      break;
    case CartanType::E:
    case CartanType::F:
    case CartanType::G: {
      long r = 0;
      for (int i = 1; i <= l; ++i) {
        phi(i) = 2 * i - 1;
        r += (2 * i - 1) * a.n[static_cast<std::size_t>(i - 1)];
      }
      phi(l + 1) = ((-r) % a.modulus + a.modulus) % a.modulus;
      break;
    }
  }

  if (const auto bad = assignment_violation(a, omega_chars(p, true)))
    throw InvariantViolation("constructive assignment for " + to_string(t) + " at p = " + std::to_string(p) +
                             " is invalid: " + *bad);
  return a;
}

namespace {

struct SubtreeResult {
  std::optional<std::vector<long>> phi;
  bool exhausted = false;
};

// reach[d][f]: residues of sum_{i >= d} w_i phi_i (phi_{l+1} has weight 1)
// over allowed values, nonzero ones repeated freely and 0 used at most once
// when f is set. A necessary condition for completing a partial tuple.
using Reach = std::vector<std::array<std::vector<char>, 2>>;

Reach reachability(const std::vector<int>& n, const OmegaChars& chars) {
  const std::size_t l = n.size();
  const long m = chars.modulus;
  Reach reach(l + 2);
  for (auto& f : reach[l + 1]) f.assign(static_cast<std::size_t>(m), 0);
  reach[l + 1][0][0] = reach[l + 1][1][0] = 1;
  for (std::size_t d = l + 1; d-- > 0;) {
    const long w = d < l ? n[d] : 1;
    for (int f = 0; f < 2; ++f) {
      auto& cur = reach[d][static_cast<std::size_t>(f)];
      cur.assign(static_cast<std::size_t>(m), 0);
      const auto& nxt = reach[d + 1][static_cast<std::size_t>(f)];
      for (long a : chars.allowed) {
        if (a == 0) continue;
        for (long r = 0; r < m; ++r)
          if (nxt[static_cast<std::size_t>(r)]) cur[static_cast<std::size_t>((r + w * a) % m)] = 1;
      }
      if (f == 1 && chars.includes_trivial)
        for (long r = 0; r < m; ++r) cur[static_cast<std::size_t>(r)] |= reach[d + 1][0][static_cast<std::size_t>(r)];
    }
  }
  return reach;
}

// Depth-first over distinct tuples (phi_1..phi_l) in lexicographic order with
// phi_1 fixed; phi_{l+1} is forced by the product condition.
SubtreeResult search_subtree(const std::vector<int>& n, const OmegaChars& chars, const Reach& reach,
                             std::size_t first, std::uint64_t budget) {
  const std::size_t l = n.size();
  const long m = chars.modulus;
  const auto& vals = chars.allowed;
  std::vector<long> phi(l + 1);
  std::vector<char> used(vals.size(), 0);
  std::uint64_t nodes = 0;
  SubtreeResult out;

  auto feasible = [&](std::size_t depth, long partial, bool zero_used) {
    const int f = chars.includes_trivial && !zero_used ? 1 : 0;
    return reach[depth][static_cast<std::size_t>(f)][static_cast<std::size_t>((m - partial) % m)] != 0;
  };

  auto dfs = [&](auto&& self, std::size_t depth, long partial, bool zero_used) -> bool {
    if (++nodes > budget) {
      out.exhausted = true;
      return true;
    }
    if (!feasible(depth, partial, zero_used)) return false;
    if (depth == l) {
      const long last = (m - partial) % m;
      const auto it = std::lower_bound(vals.begin(), vals.end(), last);
      if (it == vals.end() || *it != last || used[static_cast<std::size_t>(it - vals.begin())]) return false;
      phi[l] = last;
      out.phi = phi;
      return true;
    }
    for (std::size_t k = 0; k < vals.size(); ++k) {
      if (used[k]) continue;
      used[k] = 1;
      phi[depth] = vals[k];
      const bool stop = self(self, depth + 1, (partial + n[depth] * vals[k]) % m, zero_used || vals[k] == 0);
      used[k] = 0;
      if (stop) return true;
    }
    return false;
  };
  phi[0] = vals[first];
  used[first] = 1;
  dfs(dfs, 1, (n[0] * phi[0]) % m, phi[0] == 0);
  return out;
}

}  // namespace

std::optional<CharacterAssignment> search_assignment(SimpleType t, const OmegaChars& chars, SearchOptions opts) {
  require(t.rank <= 8, "character search limited to rank <= 8");
  const auto n = highest_root_coefficients(t);
  if (chars.allowed.size() < n.size() + 1) return std::nullopt;  // pigeonhole

  const auto reach = reachability(n, chars);
  const std::size_t width = chars.allowed.size();
  std::vector<SubtreeResult> results(width);
  if (opts.exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(width); ++i)
      results[static_cast<std::size_t>(i)] = search_subtree(n, chars, reach, static_cast<std::size_t>(i), opts.node_budget);
  }
  for (std::size_t i = 0; i < width; ++i) {
    if (opts.exec == Execution::Serial) results[i] = search_subtree(n, chars, reach, i, opts.node_budget);
    if (results[i].exhausted) throw ResourceError("character search exceeded its node budget", i);
    if (results[i].phi) return CharacterAssignment{chars.modulus, *results[i].phi, n};
  }
  return std::nullopt;
}

bool condition_B(SimpleType t, long p) {
  if (p != 3) return true;
  switch (t.type) {
    case CartanType::A: return t.rank != 1;
    case CartanType::B:
    case CartanType::C:
    case CartanType::F:
    case CartanType::G: return false;
    default: return true;
  }
}

CriterionReport criterion(const RootDatum& rd, long p, CriterionOptions opts) {
  require(rd.system().num_components() == 1, "criterion needs a simple root datum");
  require(rd.preset() == IsogenyPreset::Adjoint, "criterion needs the adjoint datum");
  require_odd_prime(p);
  CriterionReport rep;
  rep.type = rd.system().components()[0].type;
  rep.p = p;
  rep.threshold = threshold_constant(rep.type);
  const auto chars = omega_chars(rd, p);
  rep.s_empty = chars.includes_trivial;
  rep.bg_holds = condition_B(rep.type, p);
  if (opts.check_regular) rep.regular = is_regular_prime(p);
  if (!rep.bg_holds) {
    rep.notes.push_back("B(G) fails at p = 3 for " + to_string(rep.type));
    return rep;
  }

  if (p >= threshold_for(rep.type, p)) {
    try {
      auto a = constructive_assignment(rep.type, p);
      if (!assignment_violation(a, chars)) {
        rep.witness = std::move(a);
        rep.method = "constructive";
      } else {
        rep.notes.push_back("constructive assignment not allowed for this S; searching");
      }
    } catch (const InvariantViolation& e) {
      rep.notes.push_back(e.what());
    }
  }
  if (!rep.witness) {
    rep.witness = search_assignment(rep.type, chars, opts.search);
    if (rep.witness) rep.method = "search";
  }
  rep.impossible = !rep.witness;
  rep.holds = rep.witness.has_value();
  if (rep.regular && !*rep.regular) {
    rep.notes.push_back("p is irregular, so Q(mu_p) is not p-rational and the criterion does not apply");
    rep.holds = false;
  }
  return rep;
}

}  // namespace iwahori
