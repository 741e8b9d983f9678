#ifndef BISETFUN_LATTICE_HPP
#define BISETFUN_LATTICE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "bisetfun/perm_group.hpp"

namespace bisetfun {

inline constexpr unsigned long long kDefaultLatticeLimit = 5040;

/// Every subgroup of an ambient group, closed under ambient conjugation,
/// in canonical order (by order, then element key), with conjugacy classes
/// and maximal-subgroup adjacency.
class SubgroupLattice {
public:
  const PermGroup &ambient() const { return ambient_; }
  std::size_t size() const { return subgroups_.size(); }
  const PermGroup &subgroup(std::size_t i) const { return subgroups_[i]; }
  const std::vector<PermGroup> &subgroups() const { return subgroups_; }

  /// Index of the given subgroup; nullopt if absent (i.e. not a subgroup).
  std::optional<std::size_t> find(const PermGroup &sub) const;
  std::size_t index_of(const PermGroup &sub) const; // throws input_error

  std::size_t class_rep(std::size_t i) const { return class_rep_[i]; }
  /// Conjugacy classes of subgroups; each class lists member indices, the
  /// representative (smallest) first.
  const std::vector<std::vector<std::size_t>> &classes() const { return classes_; }

  /// Indices of the maximal proper subgroups of member i.
  const std::vector<std::size_t> &maximal_subgroups_of(std::size_t i) const {
    return maximal_of_[i];
  }
  bool contains_in(std::size_t sub, std::size_t super) const {
    return contains_[super][sub];
  }

  std::size_t trivial_index() const { return 0; }
  std::size_t ambient_index() const { return subgroups_.size() - 1; }

  friend SubgroupLattice subgroup_lattice(const PermGroup &, unsigned long long);

private:
  PermGroup ambient_;
  std::vector<PermGroup> subgroups_;
  std::map<std::vector<unsigned>, std::size_t> by_key_;
  std::vector<std::size_t> class_rep_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::vector<bool>> contains_;   // contains_[i][j]: j <= i
  std::vector<std::vector<std::size_t>> maximal_of_;
};

/// Enumerates all subgroups of G by generator-extension BFS from the cyclic
/// subgroups. Throws limit_error when |G| exceeds the limit.
SubgroupLattice subgroup_lattice(const PermGroup &G,
                                 unsigned long long limit = kDefaultLatticeLimit);

/// All members of the lattice that are normal in T (T given by index).
std::vector<std::size_t> normal_subgroups(const SubgroupLattice &lat, std::size_t T);

/// Frattini subgroup of member T: intersection of its maximal subgroups.
std::size_t frattini(const SubgroupLattice &lat, std::size_t T);

/// Commutator subgroup (normal closure of generator commutators).
PermGroup derived_subgroup(const PermGroup &G);

/// Centre of G.
PermGroup centre(const PermGroup &G);

} // namespace bisetfun

#endif
