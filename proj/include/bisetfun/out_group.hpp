#ifndef BISETFUN_OUT_GROUP_HPP
#define BISETFUN_OUT_GROUP_HPP

#include <cstdint>
#include <vector>

#include "bisetfun/isomorphism.hpp"
#include "bisetfun/perm_group.hpp"

namespace bisetfun {

/// Out(H) = Aut(H)/Inn(H), materialized: the full automorphism list (as
/// element-index maps over the sorted elements of H), the Inn-coset of each
/// automorphism, canonically ordered coset representatives (identity coset
/// first, index 0), and the Out multiplication table.
class OutGroup {
public:
  using AutMap = std::vector<unsigned>; // element-index map on sorted elements of H

  const PermGroup &base() const { return base_; }
  unsigned long long aut_order() const { return automorphisms_.size(); }
  unsigned out_order() const { return static_cast<unsigned>(reps_.size()); }

  const std::vector<AutMap> &automorphisms() const { return automorphisms_; }
  /// The representative automorphism of Out-class i (lex-smallest member).
  const AutMap &rep(unsigned i) const { return automorphisms_[reps_[i]]; }

  unsigned multiply(unsigned a, unsigned b) const { return mult_table_[a][b]; }
  unsigned inverse(unsigned a) const;
  const std::vector<std::vector<unsigned>> &mult_table() const { return mult_table_; }

  /// Out-class index of an automorphism given as an element-index map.
  unsigned outer_class(const AutMap &phi) const;

  /// Out-class of the automorphism x -> g x g^-1 as a GroupIso.
  unsigned outer_class(const GroupIso &phi) const;

  /// (phi o psi)(x) = phi(psi(x)), as element-index maps.
  static AutMap compose(const AutMap &phi, const AutMap &psi);

  friend OutGroup out_group(const PermGroup &, unsigned long long);

private:
  PermGroup base_;
  std::vector<AutMap> automorphisms_;   // sorted lexicographically
  std::vector<unsigned> coset_of_;      // automorphism -> Out-class index
  std::vector<std::size_t> reps_;       // Out-class -> automorphism index
  std::vector<std::vector<unsigned>> mult_table_;
};

OutGroup out_group(const PermGroup &H, unsigned long long limit = kDefaultIsoLimit);

} // namespace bisetfun

#endif
