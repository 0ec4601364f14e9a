#pragma once

// Root systems in simple-root coordinates, root data for the usual isogeny
// presets, and the lattice quotient (M^vee / ZR^vee) (x) F_p.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace iwahori {

enum class CartanType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
  CartanType type;
  int rank;

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

/// Accepts "G2", "E8", "b3" or a bare letter together with `rank`.
SimpleType parse_simple_type(std::string_view label, std::optional<int> rank = std::nullopt);
std::string to_string(SimpleType t);

enum class LengthClass { Short, Long };

struct Root {
  int component = 0;
  /// Coefficients over the full simple-root basis (zero outside the component).
  std::vector<int> coeffs;
  int height = 0;
  LengthClass length = LengthClass::Long;
  friend bool operator==(const Root&, const Root&) = default;
};

struct Component {
  SimpleType type;
  int offset = 0;  ///< index of the first simple root of this component
  friend bool operator==(const Component&, const Component&) = default;
};

struct RootSystemOptions {
  int max_rank = 12;  ///< per-component cap for the classical series
};

/// Positive roots occupy indices [0, N) ordered by height and then by
/// descending coefficient vector, so the simple roots are 0..rank-1 in
/// Bourbaki order. The negative of root i < N has index i + N.
class RootSystem {
 public:
  static RootSystem build(std::span<const SimpleType> components, RootSystemOptions opts = {});

  int rank() const { return rank_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_positive_; }
  int dimension() const { return rank_ + num_roots(); }

  const std::vector<Component>& components() const { return components_; }
  int num_components() const { return static_cast<int>(components_.size()); }

  const Root& root(int i) const { return roots_.at(static_cast<std::size_t>(i)); }
  const std::vector<Root>& roots() const { return roots_; }
  bool is_positive(int i) const { return i < num_positive_; }
  int negative(int i) const { return i < num_positive_ ? i + num_positive_ : i - num_positive_; }

  /// Indices of the simple roots of component c.
  std::vector<int> simple_roots(int c) const;
  int highest_root(int c) const { return highest_.at(static_cast<std::size_t>(c)); }
  /// Sum of the two simple roots of a G2 component, empty otherwise.
  std::optional<int> delta(int c) const;
  std::vector<int> g2_components() const;

  std::optional<int> find(std::span<const int> coeffs) const;
  /// Index of a + b when it is a root.
  std::optional<int> sum(int a, int b) const {
    int s = sum_[static_cast<std::size_t>(a) * roots_.size() + static_cast<std::size_t>(b)];
    return s < 0 ? std::nullopt : std::optional<int>(s);
  }

  /// Cartan integer A_ij = <alpha_i, alpha_j^vee>.
  int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * rank_ + j)]; }
  /// <beta, alpha^vee> for roots given by index.
  int pairing(int beta, int alpha) const;
  /// Squared length, normalized so the shortest root of each component has 1.
  int norm2(int i) const { return norm2_[static_cast<std::size_t>(i)]; }
  /// alpha^vee expressed over the simple coroots.
  std::vector<int> coroot_coeffs(int i) const;
  /// alpha expressed over the fundamental weights.
  std::vector<int> weight_coords(std::span<const int> coeffs) const;

  /// Inner product of two coefficient vectors (same normalization as norm2).
  /// Returned doubled so it is always integral.
  long inner2(std::span<const int> a, std::span<const int> b) const;

 private:
  int rank_ = 0;
  int num_positive_ = 0;
  std::vector<Component> components_;
  std::vector<int> cartan_;         // rank x rank
  std::vector<int> simple_norm2_;   // per simple root
  std::vector<Root> roots_;
  std::vector<int> norm2_;
  std::vector<int> highest_;
  std::vector<int> sum_;            // roots x roots, -1 when not a root
};

RootSystem build_root_system(CartanType type, int rank, RootSystemOptions opts = {});
RootSystem build_root_system(SimpleType type, RootSystemOptions opts = {});

/// The alpha-chain through beta is beta-(r-1)alpha, ..., beta+s alpha.
struct RootChain {
  int r = 1;
  int s = 0;
  friend bool operator==(const RootChain&, const RootChain&) = default;
};

RootChain root_chain(const RootSystem& rs, int beta, int alpha);

// ---------------------------------------------------------------------------

enum class IsogenyPreset { SimplyConnected, Adjoint, GeneralLinear, Explicit };

std::string to_string(IsogenyPreset p);

/// (M, R, M^vee, R^vee) with M = Z^n and the dot pairing.
class RootDatum {
 public:
  static RootDatum simply_connected(RootSystem rs);
  static RootDatum adjoint(RootSystem rs);
  /// GL_n with M = Z^n, roots e_i - e_j.
  static RootDatum general_linear(int n, RootSystemOptions opts = {});
  /// M spanned by the rows of `basis`, given in fundamental-weight
  /// coordinates. M must contain ZR.
  static RootDatum explicit_lattice(RootSystem rs, const std::vector<std::vector<int>>& basis);

  const RootSystem& system() const { return system_; }
  IsogenyPreset preset() const { return preset_; }
  int lattice_rank() const { return n_; }
  /// dim G = rank(M) + |R|.
  int dimension() const { return n_ + system_.num_roots(); }

  std::span<const int> root_in_M(int i) const {
    return {roots_.data() + static_cast<std::size_t>(i * n_), static_cast<std::size_t>(n_)};
  }
  std::span<const int> coroot_in_Mdual(int i) const {
    return {coroots_.data() + static_cast<std::size_t>(i * n_), static_cast<std::size_t>(n_)};
  }
  static long pair(std::span<const int> m, std::span<const long> mdual);
  static long pair(std::span<const int> m, std::span<const int> mdual);

  /// Coordinate ranges along which the lattices split:
  /// (first M coordinate, count, first simple root, count).
  struct Block {
    int lattice_offset, lattice_size, simple_offset, simple_size;
  };
  const std::vector<Block>& blocks() const { return blocks_; }

 private:
  RootSystem system_;
  IsogenyPreset preset_ = IsogenyPreset::Adjoint;
  int n_ = 0;
  std::vector<int> roots_;
  std::vector<int> coroots_;
  std::vector<Block> blocks_;
};

/// Lifts S of an F_p-basis of (M^vee / ZR^vee) (x) F_p.
struct CocharacterSet {
  int p = 0;
  std::vector<std::vector<long>> S;
  std::size_t size() const { return S.size(); }
};

CocharacterSet pro_p_basis_S(const RootDatum& rd, int p);

/// Invariant factors of M^vee / ZR^vee (zero entries for the free part).
std::vector<long> cocharacter_quotient_invariants(const RootDatum& rd);

bool is_prime(long n);

}  // namespace iwahori
