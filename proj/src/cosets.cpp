#include "bisetfun/cosets.hpp"

#include <algorithm>
#include <set>

#include "bisetfun/errors.hpp"

namespace bisetfun {

namespace {

void require_subgroup(const PermGroup &G, const PermGroup &T, const char *what) {
  if (!G.contains_group(T))
    throw input_error(std::string(what) + ": not a subgroup of the ambient group");
}

} // namespace

PermGroup normalizer(const PermGroup &G, const PermGroup &T) {
  require_subgroup(G, T, "normalizer");
  std::vector<Perm> result;
  for (const Perm &g : G.elements()) {
    bool ok = true;
    for (const Perm &t : T.generators()) {
      if (!T.contains(conjugate(t, g))) {
        ok = false;
        break;
      }
    }
    if (ok)
      result.push_back(g);
  }
  return PermGroup::from_elements(G.degree(), std::move(result));
}

std::vector<Perm> coset_reps(const PermGroup &G, const PermGroup &T) {
  require_subgroup(G, T, "coset_reps");
  const auto &elems = G.elements();
  std::vector<bool> used(elems.size(), false);
  std::vector<Perm> reps;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (used[i])
      continue;
    reps.push_back(elems[i]);
    for (const Perm &t : T.elements())
      used[G.element_index(elems[i] * t)] = true;
  }
  return reps;
}

DoubleCosetDecomposition double_coset_reps(const PermGroup &G, const PermGroup &B,
                                           const PermGroup &T) {
  require_subgroup(G, B, "double_coset_reps");
  require_subgroup(G, T, "double_coset_reps");
  const auto &elems = G.elements();
  std::vector<bool> used(elems.size(), false);
  DoubleCosetDecomposition dec;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (used[i])
      continue;
    dec.representatives.push_back(elems[i]);
    unsigned long long size = 0;
    for (const Perm &b : B.elements()) {
      Perm bg = b * elems[i];
      for (const Perm &t : T.elements()) {
        std::size_t j = G.element_index(bg * t);
        if (!used[j]) {
          used[j] = true;
          ++size;
        }
      }
    }
    dec.sizes.push_back(size);
  }
  return dec;
}

PermGroup conjugate_subgroup(const PermGroup &T, const Perm &g) {
  if (g.degree() != T.degree())
    throw input_error("conjugate_subgroup: degree mismatch");
  if (T.has_elements()) {
    std::vector<Perm> conj;
    conj.reserve(T.elements().size());
    Perm gi = g.inverse();
    for (const Perm &t : T.elements())
      conj.push_back(g * t * gi);
    return PermGroup::from_elements(T.degree(), std::move(conj));
  }
  std::vector<Perm> gens;
  for (const Perm &t : T.generators())
    gens.push_back(conjugate(t, g));
  return PermGroup(T.degree(), std::move(gens));
}

std::vector<Perm> intersect_elements(const PermGroup &A, const PermGroup &B) {
  std::vector<Perm> out;
  const auto &small = A.order() <= B.order() ? A : B;
  const auto &big = A.order() <= B.order() ? B : A;
  for (const Perm &p : small.elements())
    if (big.contains(p))
      out.push_back(p);
  return out;
}

std::vector<Perm> product_set(const std::vector<Perm> &S, const std::vector<Perm> &X) {
  std::set<Perm> out;
  for (const Perm &s : S)
    for (const Perm &x : X)
      out.insert(s * x);
  return {out.begin(), out.end()};
}

} // namespace bisetfun
