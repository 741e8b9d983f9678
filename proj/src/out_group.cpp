#include "bisetfun/out_group.hpp"

#include <algorithm>

#include "bisetfun/errors.hpp"
#include "bisetfun/lattice.hpp"

namespace bisetfun {

OutGroup::AutMap OutGroup::compose(const AutMap &phi, const AutMap &psi) {
  AutMap out(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i)
    out[i] = phi[psi[i]];
  return out;
}

unsigned OutGroup::outer_class(const AutMap &phi) const {
  auto it = std::lower_bound(automorphisms_.begin(), automorphisms_.end(), phi);
  if (it == automorphisms_.end() || *it != phi)
    throw input_error("outer_class: map is not an automorphism of the base group");
  return coset_of_[static_cast<std::size_t>(it - automorphisms_.begin())];
}

unsigned OutGroup::outer_class(const GroupIso &phi) const {
  const auto &elems = base_.elements();
  AutMap m(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i)
    m[i] = static_cast<unsigned>(base_.element_index(phi.apply(elems[i])));
  return outer_class(m);
}

unsigned OutGroup::inverse(unsigned a) const {
  for (unsigned b = 0; b < out_order(); ++b)
    if (mult_table_[a][b] == 0)
      return b;
  throw internal_error("out group multiplication table has no inverse");
}

OutGroup out_group(const PermGroup &H, unsigned long long limit) {
  OutGroup out;
  out.base_ = H;
  const auto &elems = H.elements();
  const std::size_t n = elems.size();

  for_each_isomorphism(H, H, [&](const GroupIso &iso) {
    OutGroup::AutMap m(n);
    for (std::size_t i = 0; i < n; ++i)
      m[i] = static_cast<unsigned>(H.element_index(iso.apply(elems[i])));
    out.automorphisms_.push_back(std::move(m));
    return true;
  }, limit);
  std::sort(out.automorphisms_.begin(), out.automorphisms_.end());
  out.automorphisms_.erase(
      std::unique(out.automorphisms_.begin(), out.automorphisms_.end()),
      out.automorphisms_.end());

  // inner automorphisms
  std::vector<OutGroup::AutMap> inner;
  for (const Perm &g : elems) {
    OutGroup::AutMap m(n);
    Perm gi = g.inverse();
    for (std::size_t i = 0; i < n; ++i)
      m[i] = static_cast<unsigned>(H.element_index(g * elems[i] * gi));
    inner.push_back(std::move(m));
  }
  std::sort(inner.begin(), inner.end());
  inner.erase(std::unique(inner.begin(), inner.end()), inner.end());

  // |Aut| = |Out| * |H/Z(H)|, checked below
  const std::size_t inn_order = inner.size();
  if (out.automorphisms_.size() % inn_order != 0)
    throw internal_error("automorphism enumeration incomplete: |Inn| does not "
                         "divide |Aut|");

  // Inn-cosets: walk automorphisms in lex order; each unassigned one is the
  // canonical representative of a fresh coset.
  const std::size_t aut_n = out.automorphisms_.size();
  out.coset_of_.assign(aut_n, static_cast<unsigned>(-1));
  auto index_of_aut = [&](const OutGroup::AutMap &m) {
    auto it = std::lower_bound(out.automorphisms_.begin(), out.automorphisms_.end(), m);
    if (it == out.automorphisms_.end() || *it != m)
      throw internal_error("automorphism set not closed under composition");
    return static_cast<std::size_t>(it - out.automorphisms_.begin());
  };
  for (std::size_t i = 0; i < aut_n; ++i) {
    if (out.coset_of_[i] != static_cast<unsigned>(-1))
      continue;
    unsigned cls = static_cast<unsigned>(out.reps_.size());
    out.reps_.push_back(i);
    for (const auto &inn : inner)
      out.coset_of_[index_of_aut(OutGroup::compose(out.automorphisms_[i], inn))] = cls;
  }

  const unsigned m = out.out_order();
  unsigned long long z = centre(H).order();
  if (out.aut_order() != static_cast<unsigned long long>(m) * (H.order() / z))
    throw internal_error("automorphism count inconsistent with |Out|*|Inn|");

  out.mult_table_.assign(m, std::vector<unsigned>(m));
  for (unsigned a = 0; a < m; ++a)
    for (unsigned b = 0; b < m; ++b)
      out.mult_table_[a][b] = out.coset_of_[index_of_aut(OutGroup::compose(
          out.automorphisms_[out.reps_[a]], out.automorphisms_[out.reps_[b]]))];

  if (out.mult_table_[0] != [&] {
        std::vector<unsigned> id(m);
        for (unsigned i = 0; i < m; ++i)
          id[i] = i;
        return id;
      }())
    throw internal_error("identity Out-class is not the table identity");
  return out;
}

} // namespace bisetfun
