#pragma once

// Breadth-first enumeration of finite groups given by generators, with an
// OpenMP level-synchronous variant that discovers elements in the same order.

#include <omp.h>

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

#include "iwahori/error.hpp"

namespace iwahori {

enum class Execution { Serial, Parallel };

/// The subgroup generated by a growing list of generators, enumerated in
/// breadth-first order (right multiplication by generators).
template <class T, class Hash, class Mul>
class SubgroupBuilder {
 public:
  SubgroupBuilder(T identity, Mul mul, std::size_t bound, Execution exec = Execution::Serial)
      : mul_(std::move(mul)), bound_(bound), exec_(exec) {
    insert(std::move(identity));
  }

  const std::vector<T>& elements() const { return elements_; }
  const std::vector<T>& generators() const { return gens_; }
  std::size_t size() const { return elements_.size(); }
  int depth() const { return depth_; }
  bool contains(const T& x) const { return index_.count(x) != 0; }

  /// Returns false when y already lies in the subgroup.
  bool add_generator(const T& y) {
    const bool fresh = !contains(y);
    add_generators(std::vector<T>{y});
    return fresh;
  }

  void add_generators(const std::vector<T>& ys) {
    gens_.insert(gens_.end(), ys.begin(), ys.end());
    // Old elements are closed under the old generators; only ys are new to them.
    std::vector<T> frontier;
    const std::size_t old = elements_.size();
    for (std::size_t i = 0; i < old; ++i)
      for (const auto& y : ys) {
        T z = mul_(elements_[i], y);
        if (!contains(z)) {
          insert(z);
          frontier.push_back(std::move(z));
        }
      }
    if (!frontier.empty()) ++depth_;
    while (!frontier.empty()) {
      frontier = exec_ == Execution::Parallel ? expand_parallel(frontier) : expand_serial(frontier);
      if (!frontier.empty()) ++depth_;
    }
  }

 private:
  void insert(T x) {
    if (elements_.size() >= bound_) throw ResourceError("closure exceeded the element bound", elements_.size());
    index_.emplace(x, elements_.size());
    elements_.push_back(std::move(x));
  }

  std::vector<T> expand_serial(const std::vector<T>& frontier) {
    std::vector<T> next;
    for (const auto& f : frontier)
      for (const auto& g : gens_) {
        T z = mul_(f, g);
        if (!contains(z)) {
          insert(z);
          next.push_back(std::move(z));
        }
      }
    return next;
  }

  // Products are formed in parallel and prefiltered against the current set;
  // insertion stays serial and in (frontier, generator) order.
  std::vector<T> expand_parallel(const std::vector<T>& frontier) {
    const std::size_t ng = gens_.size();
    const std::size_t total = frontier.size() * ng;
    std::vector<T> products(total);
    std::vector<char> fresh(total, 0);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(total); ++idx) {
      const std::size_t u = static_cast<std::size_t>(idx);
      T z = mul_(frontier[u / ng], gens_[u % ng]);
      if (!contains(z)) {
        products[u] = std::move(z);
        fresh[u] = 1;
      }
    }
    std::vector<T> next;
    for (std::size_t u = 0; u < total; ++u) {
      if (!fresh[u] || contains(products[u])) continue;
      insert(products[u]);
      next.push_back(std::move(products[u]));
    }
    return next;
  }

  Mul mul_;
  std::size_t bound_;
  Execution exec_;
  int depth_ = 0;
  std::vector<T> gens_;
  std::vector<T> elements_;
  std::unordered_map<T, std::size_t, Hash> index_;
};

template <class T>
struct Closure {
  std::vector<T> elements;
  int depth = 0;
  std::size_t size() const { return elements.size(); }
};

/// All products of the generators; throws ResourceError past `bound` elements.
template <class T, class Hash, class Mul>
Closure<T> bfs_closure(const std::vector<T>& gens, const T& identity, Mul mul, std::size_t bound,
                       Execution exec = Execution::Serial) {
  if (bound < 1) throw DomainError("element bound must be positive");
  SubgroupBuilder<T, Hash, Mul> b(identity, std::move(mul), bound, exec);
  b.add_generators(gens);
  return {b.elements(), b.depth()};
}

}  // namespace iwahori
