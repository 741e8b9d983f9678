#include "bisetfun/lattice.hpp"

#include <algorithm>
#include <map>

#include "bisetfun/errors.hpp"

namespace bisetfun {

namespace {

std::vector<unsigned> flat_key(const std::vector<Perm> &elems) {
  std::vector<unsigned> k;
  if (elems.empty())
    return k;
  k.reserve(elems.size() * elems[0].degree());
  for (const Perm &p : elems)
    k.insert(k.end(), p.images().begin(), p.images().end());
  return k;
}

std::vector<Perm> conjugated_sorted(const std::vector<Perm> &elems, const Perm &g) {
  Perm gi = g.inverse();
  std::vector<Perm> out;
  out.reserve(elems.size());
  for (const Perm &p : elems)
    out.push_back(g * p * gi);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

SubgroupLattice subgroup_lattice(const PermGroup &G, unsigned long long limit) {
  if (G.order() > limit)
    throw limit_error("group too large for subgroup enumeration: order " +
                      std::to_string(G.order()) + " exceeds the lattice limit " +
                      std::to_string(limit));
  const auto &elems = G.elements();
  const unsigned degree = G.degree();

  // subgroup -> (elements, small generator list), keyed by element list
  struct Entry {
    std::vector<Perm> elements;
    std::vector<Perm> gens;
  };
  std::map<std::vector<Perm>, std::size_t> seen;
  std::vector<Entry> found;
  auto add = [&](std::vector<Perm> closed, std::vector<Perm> gens) -> bool {
    auto it = seen.find(closed);
    if (it != seen.end())
      return false;
    seen.emplace(closed, found.size());
    found.push_back(Entry{std::move(closed), std::move(gens)});
    return true;
  };

  add({Perm(degree)}, {});
  for (const Perm &x : elems)
    if (!x.is_identity())
      add(closure(degree, {x}), {x});

  // generator-extension BFS; one extension per double coset A g A
  for (std::size_t w = 0; w < found.size(); ++w) {
    if (found[w].elements.size() == G.order())
      continue;
    std::vector<Perm> a_elems = found[w].elements;   // copy: found may grow
    std::vector<Perm> a_gens = found[w].gens;
    std::vector<bool> used(elems.size(), false);
    for (const Perm &a : a_elems)
      used[G.element_index(a)] = true;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (used[i])
        continue;
      const Perm &g = elems[i];
      for (const Perm &a1 : a_elems) {
        Perm t = a1 * g;
        for (const Perm &a2 : a_elems)
          used[G.element_index(t * a2)] = true;
      }
      std::vector<Perm> gens = a_gens;
      gens.push_back(g);
      std::vector<Perm> closed = closure(degree, gens);
      add(std::move(closed), std::move(gens));
    }
  }

  // canonical order: by order, then element key
  std::vector<std::size_t> perm_idx(found.size());
  for (std::size_t i = 0; i < perm_idx.size(); ++i)
    perm_idx[i] = i;
  std::sort(perm_idx.begin(), perm_idx.end(), [&](std::size_t a, std::size_t b) {
    if (found[a].elements.size() != found[b].elements.size())
      return found[a].elements.size() < found[b].elements.size();
    return found[a].elements < found[b].elements;
  });

  SubgroupLattice lat;
  lat.ambient_ = G;
  lat.subgroups_.reserve(found.size());
  std::map<std::vector<Perm>, std::size_t> final_index;
  for (std::size_t rank = 0; rank < perm_idx.size(); ++rank) {
    const Entry &e = found[perm_idx[rank]];
    final_index.emplace(e.elements, rank);
    lat.subgroups_.push_back(PermGroup::from_elements(degree, e.elements));
    lat.by_key_.emplace(flat_key(e.elements), rank);
  }

  const std::size_t n = lat.subgroups_.size();

  // conjugacy classes: orbit closure under ambient generators
  lat.class_rep_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (lat.class_rep_[i] != n)
      continue;
    std::vector<std::size_t> orbit{i};
    lat.class_rep_[i] = i;
    for (std::size_t q = 0; q < orbit.size(); ++q) {
      for (const Perm &g : G.generators()) {
        auto img = conjugated_sorted(lat.subgroups_[orbit[q]].elements(), g);
        std::size_t j = final_index.at(img);
        if (lat.class_rep_[j] == n) {
          lat.class_rep_[j] = i;
          orbit.push_back(j);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    lat.classes_.push_back(std::move(orbit));
  }

  // containment and maximal-subgroup adjacency
  lat.contains_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (lat.subgroups_[j].order() > lat.subgroups_[i].order() ||
          lat.subgroups_[i].order() % lat.subgroups_[j].order() != 0)
        continue;
      lat.contains_[i][j] = lat.subgroups_[i].contains_group(lat.subgroups_[j]);
    }
  }
  lat.maximal_of_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || !lat.contains_[i][j])
        continue;
      bool maximal = true;
      for (std::size_t k = 0; k < n && maximal; ++k)
        if (k != i && k != j && lat.contains_[i][k] && lat.contains_[k][j])
          maximal = false;
      if (maximal)
        lat.maximal_of_[i].push_back(j);
    }
  }
  return lat;
}

std::optional<std::size_t> SubgroupLattice::find(const PermGroup &sub) const {
  auto it = by_key_.find(sub.key());
  if (it == by_key_.end())
    return std::nullopt;
  return it->second;
}

std::size_t SubgroupLattice::index_of(const PermGroup &sub) const {
  auto idx = find(sub);
  if (!idx)
    throw input_error("subgroup is not a member of the lattice");
  return *idx;
}

std::vector<std::size_t> normal_subgroups(const SubgroupLattice &lat, std::size_t T) {
  const PermGroup &t = lat.subgroup(T);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (!lat.contains_in(i, T))
      continue;
    if (lat.subgroup(i).is_normal_in(t))
      out.push_back(i);
  }
  return out;
}

std::size_t frattini(const SubgroupLattice &lat, std::size_t T) {
  const auto &maximals = lat.maximal_subgroups_of(T);
  if (maximals.empty())
    return T; // trivial group
  std::vector<Perm> inter = lat.subgroup(maximals[0]).elements();
  for (std::size_t m = 1; m < maximals.size(); ++m) {
    const PermGroup &M = lat.subgroup(maximals[m]);
    std::vector<Perm> next;
    for (const Perm &p : inter)
      if (M.contains(p))
        next.push_back(p);
    inter = std::move(next);
  }
  return lat.index_of(PermGroup::from_elements(lat.ambient().degree(), inter));
}

PermGroup derived_subgroup(const PermGroup &G) {
  const unsigned degree = G.degree();
  std::vector<Perm> seed;
  for (const Perm &a : G.generators())
    for (const Perm &b : G.generators())
      seed.push_back(a.inverse() * b.inverse() * a * b);
  std::vector<Perm> elems = closure(degree, seed);
  // normal closure under the ambient generators
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Perm &g : G.generators()) {
      for (const Perm &s : std::vector<Perm>(seed)) {
        Perm c = conjugate(s, g);
        if (!std::binary_search(elems.begin(), elems.end(), c)) {
          seed.push_back(c);
          elems = closure(degree, seed);
          grew = true;
        }
      }
    }
  }
  return PermGroup::from_elements(degree, std::move(elems));
}

PermGroup centre(const PermGroup &G) {
  std::vector<Perm> z;
  for (const Perm &x : G.elements()) {
    bool central = true;
    for (const Perm &g : G.generators()) {
      if (x * g != g * x) {
        central = false;
        break;
      }
    }
    if (central)
      z.push_back(x);
  }
  return PermGroup::from_elements(G.degree(), std::move(z));
}

} // namespace bisetfun
