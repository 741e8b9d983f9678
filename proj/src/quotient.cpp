#include "bisetfun/quotient.hpp"

#include <algorithm>

#include "bisetfun/cosets.hpp"
#include "bisetfun/errors.hpp"

namespace bisetfun {

QuotientGroup::QuotientGroup(const PermGroup &T, const PermGroup &S) : T_(T), S_(S) {
  if (!S.is_normal_in(T))
    throw input_error("quotient: kernel is not a normal subgroup");
  coset_reps_ = bisetfun::coset_reps(T, S);
  const unsigned qdeg = static_cast<unsigned>(coset_reps_.size());

  t_elems_ = T.elements();
  t_coset_.assign(t_elems_.size(), 0);
  for (unsigned c = 0; c < qdeg; ++c) {
    for (const Perm &s : S.elements()) {
      Perm x = coset_reps_[c] * s;
      auto it = std::lower_bound(t_elems_.begin(), t_elems_.end(), x);
      t_coset_[static_cast<std::size_t>(it - t_elems_.begin())] = c;
    }
  }

  std::vector<Perm> rep_gens;
  for (const Perm &g : T.generators())
    rep_gens.push_back(project(g));
  rep_ = PermGroup(qdeg, std::move(rep_gens));
  if (rep_.order() != T.order() / S.order())
    throw internal_error("quotient: coset action is not faithful");

  // canonical lift: smallest preimage of each quotient element
  for (const Perm &t : t_elems_) {
    Perm q = project(t);
    auto it = std::lower_bound(q_elems_.begin(), q_elems_.end(), q);
    if (it == q_elems_.end() || *it != q) {
      q_lift_.insert(q_lift_.begin() + (it - q_elems_.begin()), t);
      q_elems_.insert(it, q);
    }
  }
}

unsigned QuotientGroup::coset_of(const Perm &t) const {
  auto it = std::lower_bound(t_elems_.begin(), t_elems_.end(), t);
  if (it == t_elems_.end() || *it != t)
    throw input_error("quotient projection: element not in the source group");
  return t_coset_[static_cast<std::size_t>(it - t_elems_.begin())];
}

Perm QuotientGroup::project(const Perm &t) const {
  std::vector<unsigned> im(coset_reps_.size());
  for (unsigned c = 0; c < coset_reps_.size(); ++c)
    im[c] = coset_of(t * coset_reps_[c]);
  return Perm(std::move(im));
}

Perm QuotientGroup::lift(const Perm &q) const {
  auto it = std::lower_bound(q_elems_.begin(), q_elems_.end(), q);
  if (it == q_elems_.end() || *it != q)
    throw input_error("quotient lift: not an element of the quotient");
  return q_lift_[static_cast<std::size_t>(it - q_elems_.begin())];
}

QuotientGroup quotient(const PermGroup &T, const PermGroup &S) {
  return QuotientGroup(T, S);
}

} // namespace bisetfun
