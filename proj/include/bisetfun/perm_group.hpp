#ifndef BISETFUN_PERM_GROUP_HPP
#define BISETFUN_PERM_GROUP_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "bisetfun/perm.hpp"

namespace bisetfun {

/// Deterministic stabilizer chain (Schreier-Sims). Base points are chosen
/// as the smallest moved point of the generator that forces a new level, so
/// two builds from the same generator list agree exactly.
class StabChain {
public:
  struct Level {
    unsigned base = 0;
    std::vector<Perm> gens;                 // strong generators new at this level
    std::vector<unsigned> orbit;            // insertion (BFS) order, orbit[0] == base
    std::map<unsigned, Perm> transversal;   // point -> rep with rep(base) == point
  };

  StabChain() = default;
  StabChain(unsigned degree, const std::vector<Perm> &generators);

  unsigned long long order() const;
  bool contains(const Perm &p) const;
  const std::vector<Level> &levels() const { return levels_; }
  unsigned degree() const { return degree_; }

  /// All group elements, canonically sorted.
  std::vector<Perm> enumerate() const;

private:
  // Residue of sifting p through levels [start, end); second = level at
  // which sifting got stuck (levels_.size() on full sift).
  std::pair<Perm, std::size_t> sift(Perm p, std::size_t start) const;
  void rebuild_orbit(std::size_t i);
  std::vector<Perm> gens_from(std::size_t i) const;

  unsigned degree_ = 0;
  std::vector<Level> levels_;
};

inline constexpr unsigned long long kDefaultElementCacheLimit = 20000;

/// A finite permutation group given by generators, with exact order and
/// membership through its stabilizer chain. Groups at or below the element
/// cache limit also carry their full, canonically sorted element list,
/// which backs all the subgroup-level machinery. Immutable once built.
class PermGroup {
public:
  PermGroup() = default;
  PermGroup(unsigned degree, std::vector<Perm> generators,
            unsigned long long element_cache_limit = kDefaultElementCacheLimit);

  static PermGroup trivial(unsigned degree);

  /// Builds a group directly from its full, sorted element list (must be
  /// closed under composition). Picks a small generating set greedily.
  static PermGroup from_elements(unsigned degree, std::vector<Perm> elements);

  unsigned degree() const { return degree_; }
  unsigned long long order() const { return order_; }
  const std::vector<Perm> &generators() const { return gens_; }
  const StabChain &chain() const { return chain_; }

  bool contains(const Perm &p) const;
  bool contains_group(const PermGroup &other) const;   // other <= this
  bool is_normal_in(const PermGroup &ambient) const;   // this normal in ambient

  bool has_elements() const { return !elements_.empty() || order_ == 0; }
  /// Sorted element list; throws limit_error when the group exceeded the
  /// cache limit at construction.
  const std::vector<Perm> &elements() const;
  /// Index of p in the sorted element list.
  std::size_t element_index(const Perm &p) const;

  /// Flattened sorted element list; canonical identity key for subgroup
  /// dedup and ordering.
  std::vector<unsigned> key() const;

  /// Same group as a set of permutations (degrees must match).
  friend bool operator==(const PermGroup &a, const PermGroup &b);

private:
  unsigned degree_ = 0;
  std::vector<Perm> gens_;
  StabChain chain_;
  unsigned long long order_ = 1;
  std::vector<Perm> elements_; // sorted; empty when above the cache limit
};

/// Brute-force closure of a set of permutations; sorted result. Test oracle
/// grade but also used for small subgroup arithmetic.
std::vector<Perm> closure(unsigned degree, const std::vector<Perm> &seed);

} // namespace bisetfun

#endif
