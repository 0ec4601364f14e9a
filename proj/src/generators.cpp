#include "iwahori/generators.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "iwahori/error.hpp"

namespace iwahori {

std::string to_string(GeneratorFamily f) {
  switch (f) {
    case GeneratorFamily::Semisimple: return "semisimple";
    case GeneratorFamily::SimpleUnipotent: return "simple";
    case GeneratorFamily::LowestUnipotent: return "lowest";
    case GeneratorFamily::G2Extra: return "g2-extra";
  }
  return "?";
}

std::string describe(const Generator& g, const RootSystem& rs) {
  std::ostringstream os;
  if (!g.is_unipotent()) {
    os << "s(1+p), s = (";
    for (std::size_t i = 0; i < g.cochar.size(); ++i) os << (i ? "," : "") << g.cochar[i];
    os << ")";
    return os.str();
  }
  os << "x_(";
  const auto& c = rs.root(g.root).coeffs;
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ")(" << (g.arg_is_p ? "p" : "1") << ")";
  return os.str();
}

std::size_t GeneratorSpec::count(GeneratorFamily f) const {
  return static_cast<std::size_t>(
      std::count_if(generators.begin(), generators.end(), [f](const Generator& g) { return g.family == f; }));
}

GeneratorSpec theorem_generators(const RootDatum& rd, int p) {
  if (p < 3 || !is_prime(p)) throw DomainError("p must be an odd prime");
  const auto& rs = rd.system();
  GeneratorSpec spec;
  spec.p = p;
  for (auto& s : pro_p_basis_S(rd, p).S) {
    Generator g{GeneratorFamily::Semisimple, -1, -1, false, std::move(s)};
    spec.generators.push_back(std::move(g));
  }
  for (int c = 0; c < rs.num_components(); ++c)
    for (int a : rs.simple_roots(c)) spec.generators.push_back({GeneratorFamily::SimpleUnipotent, c, a, false, {}});
  for (int c = 0; c < rs.num_components(); ++c)
    spec.generators.push_back({GeneratorFamily::LowestUnipotent, c, rs.negative(rs.highest_root(c)), true, {}});
  if (p == 3)
    for (int d : rs.g2_components()) spec.generators.push_back({GeneratorFamily::G2Extra, d, *rs.delta(d), false, {}});
  return spec;
}

FrattiniModule frattini_module(const RootDatum& rd, int p) {
  const auto spec = theorem_generators(rd, p);
  const auto& rs = rd.system();
  FrattiniModule m;
  m.p = p;
  m.trivial_rank = spec.count(GeneratorFamily::Semisimple);
  const long mod = p - 1;
  for (const auto& g : spec.generators) {
    if (!g.is_unipotent()) continue;
    std::vector<long> chi;
    for (int c : rs.root(g.root).coeffs) chi.push_back(((c % mod) + mod) % mod);
    m.characters.push_back(std::move(chi));
  }
  return m;
}

bool is_multiplicity_free(const RootDatum& rd, int p) {
  if (rd.system().num_components() != 1) throw DomainError("multiplicity freeness is decided for simple groups only");
  const auto m = frattini_module(rd, p);
  std::map<std::vector<long>, std::size_t> classes;
  if (m.trivial_rank > 0) classes[std::vector<long>(static_cast<std::size_t>(rd.system().rank()), 0)] = m.trivial_rank;
  for (const auto& chi : m.characters) classes[chi] += 1;
  return std::all_of(classes.begin(), classes.end(), [](const auto& kv) { return kv.second == 1; });
}

}  // namespace iwahori
