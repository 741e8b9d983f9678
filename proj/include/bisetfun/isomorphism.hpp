#ifndef BISETFUN_ISOMORPHISM_HPP
#define BISETFUN_ISOMORPHISM_HPP

#include <functional>
#include <optional>
#include <vector>

#include "bisetfun/perm_group.hpp"

namespace bisetfun {

inline constexpr unsigned long long kDefaultIsoLimit = 720;

/// A group isomorphism between two permutation groups, materialized as a
/// full element-level bijection (plus the generator images defining it).
class GroupIso {
public:
  GroupIso() = default;
  GroupIso(const PermGroup &from, const PermGroup &to,
           std::vector<Perm> from_elems, std::vector<Perm> images);

  const PermGroup &from() const { return from_; }
  const PermGroup &to() const { return to_; }
  const std::vector<Perm> &gen_images() const { return gen_images_; }

  Perm apply(const Perm &x) const;
  Perm apply_inverse(const Perm &y) const;

private:
  PermGroup from_, to_;
  std::vector<Perm> from_elems_; // sorted
  std::vector<Perm> images_;     // parallel to from_elems_
  std::vector<std::size_t> by_image_; // indices of from_elems_ sorted by image
  std::vector<Perm> gen_images_;
};

/// First isomorphism A -> B in canonical search order, if any. The search
/// maps a greedy generating sequence of A onto same-order elements of B,
/// pruned by order census and abelianness.
std::optional<GroupIso> find_isomorphism(const PermGroup &A, const PermGroup &B,
                                         unsigned long long limit = kDefaultIsoLimit);

/// Calls fn for every isomorphism A -> B, in canonical search order.
/// Returning false from fn stops the enumeration.
void for_each_isomorphism(const PermGroup &A, const PermGroup &B,
                          const std::function<bool(const GroupIso &)> &fn,
                          unsigned long long limit = kDefaultIsoLimit);

} // namespace bisetfun

#endif
