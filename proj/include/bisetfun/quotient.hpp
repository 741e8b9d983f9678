#ifndef BISETFUN_QUOTIENT_HPP
#define BISETFUN_QUOTIENT_HPP

#include <vector>

#include "bisetfun/perm_group.hpp"

namespace bisetfun {

/// T/S as a faithful permutation group on the [T:S] left cosets of S,
/// with the projection T -> T/S and a canonical lift back.
class QuotientGroup {
public:
  QuotientGroup() = default;
  QuotientGroup(const PermGroup &T, const PermGroup &S); // throws if S not normal in T

  const PermGroup &source_top() const { return T_; }
  const PermGroup &source_kernel() const { return S_; }
  const PermGroup &perm_rep() const { return rep_; }
  const std::vector<Perm> &coset_reps() const { return coset_reps_; }

  /// Image of t in the quotient (a permutation of the cosets).
  Perm project(const Perm &t) const;

  /// Canonically smallest t in T with project(t) == q.
  Perm lift(const Perm &q) const;

private:
  unsigned coset_of(const Perm &t) const;

  PermGroup T_, S_;
  PermGroup rep_;
  std::vector<Perm> coset_reps_;
  // parallel, sorted by element: every element of T with its coset index
  std::vector<Perm> t_elems_;
  std::vector<unsigned> t_coset_;
  // canonical lift per quotient element, sorted by quotient element
  std::vector<Perm> q_elems_;
  std::vector<Perm> q_lift_;
};

QuotientGroup quotient(const PermGroup &T, const PermGroup &S);

} // namespace bisetfun

#endif
