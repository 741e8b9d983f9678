#ifndef BISETFUN_COSETS_HPP
#define BISETFUN_COSETS_HPP

#include <vector>

#include "bisetfun/perm.hpp"
#include "bisetfun/perm_group.hpp"

namespace bisetfun {

struct DoubleCosetDecomposition {
  std::vector<Perm> representatives;          // canonically smallest per coset
  std::vector<unsigned long long> sizes;      // sum to |G|
};

/// {g in G : g T g^-1 = T}. Requires T <= G and G's element cache.
PermGroup normalizer(const PermGroup &G, const PermGroup &T);

/// Left coset representatives of T in G, canonically smallest in each gT,
/// in increasing order.
std::vector<Perm> coset_reps(const PermGroup &G, const PermGroup &T);

/// One representative per double coset BgT, canonically smallest, in
/// increasing order.
DoubleCosetDecomposition double_coset_reps(const PermGroup &G, const PermGroup &B,
                                           const PermGroup &T);

/// Subgroup generated by {g t g^-1 : t in T}; same order as T.
PermGroup conjugate_subgroup(const PermGroup &T, const Perm &g);

/// Elements common to A and B (both must carry element caches); sorted.
std::vector<Perm> intersect_elements(const PermGroup &A, const PermGroup &B);

/// Set product S·X = {s x} of two subgroup element lists; sorted.
std::vector<Perm> product_set(const std::vector<Perm> &S, const std::vector<Perm> &X);

} // namespace bisetfun

#endif
