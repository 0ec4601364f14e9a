#pragma once

// The minimal topological generating set of I(1) and the torus characters on
// its Frattini quotient.

#include <string>
#include <vector>

#include "iwahori/rootdata.hpp"

namespace iwahori {

enum class GeneratorFamily { Semisimple, SimpleUnipotent, LowestUnipotent, G2Extra };

std::string to_string(GeneratorFamily f);

/// Either s(1+p) for a cocharacter s, or x_root(1) / x_root(p).
struct Generator {
  GeneratorFamily family;
  int component = -1;
  int root = -1;
  bool arg_is_p = false;
  std::vector<long> cochar;

  bool is_unipotent() const { return family != GeneratorFamily::Semisimple; }
  friend bool operator==(const Generator&, const Generator&) = default;
};

std::string describe(const Generator& g, const RootSystem& rs);

struct GeneratorSpec {
  int p = 0;
  std::vector<Generator> generators;

  std::size_t size() const { return generators.size(); }
  std::size_t count(GeneratorFamily f) const;
  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

/// Families in order: s(1+p) for s in S, x_alpha(1) for simple alpha,
/// x_{-alpha_max}(p) per component, and x_delta(1) per G2 component when p = 3.
GeneratorSpec theorem_generators(const RootDatum& rd, int p);

struct FrattiniModule {
  int p = 0;
  std::size_t trivial_rank = 0;
  /// Simple-root coefficient vectors reduced mod p - 1, one per unipotent generator.
  std::vector<std::vector<long>> characters;

  std::size_t dimension() const { return trivial_rank + characters.size(); }
  friend bool operator==(const FrattiniModule&, const FrattiniModule&) = default;
};

FrattiniModule frattini_module(const RootDatum& rd, int p);

/// The trivial summands count towards the zero class.
bool is_multiplicity_free(const RootDatum& rd, int p);

}  // namespace iwahori
