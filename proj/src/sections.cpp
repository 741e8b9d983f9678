#include "bisetfun/sections.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bisetfun/cosets.hpp"
#include "bisetfun/errors.hpp"

namespace bisetfun {

Section make_section(const PermGroup &T, const PermGroup &S) {
  return Section{T, S, QuotientGroup(T, S)};
}

bool preceq(const Section &a, const Section &b) {
  if (a.T.degree() != b.T.degree())
    throw input_error("preceq: sections of different ambient degrees");
  if (!b.T.contains_group(a.T))
    return false;
  // VS = T and V cap S = U, as exact element sets
  if (product_set(a.T.elements(), b.S.elements()) != b.T.elements())
    return false;
  return intersect_elements(a.T, b.S) == a.S.elements();
}

std::optional<Linking> linked(const Section &a, const Section &b) {
  // a = (B,A), b = (T,S); linked iff |B/A| = |T/S|, S(B cap T) = T and
  // S(A cap T) = S (Lemma equivalence; the butterfly collapses).
  if (a.T.degree() != b.T.degree())
    throw input_error("linked: sections of different ambient degrees");
  if (a.T.order() / a.S.order() != b.T.order() / b.S.order())
    return std::nullopt;
  std::vector<Perm> bt = intersect_elements(a.T, b.T);
  if (product_set(b.S.elements(), bt) != b.T.elements())
    return std::nullopt;
  std::vector<Perm> at = intersect_elements(a.S, b.T);
  if (product_set(b.S.elements(), at) != b.S.elements())
    return std::nullopt;

  // induced isomorphism T/S -> B/A: xS -> xA for x in B cap T. Every coset
  // of S in T meets B cap T because S(B cap T) = T.
  const std::vector<Perm> &from_elems = b.quot.perm_rep().elements();
  std::vector<Perm> images;
  images.reserve(from_elems.size());
  for (const Perm &q : from_elems) {
    const Perm *x = nullptr;
    for (const Perm &c : bt) {
      if (b.quot.project(c) == q) {
        x = &c;
        break;
      }
    }
    if (!x)
      throw internal_error("linking: coset of S misses B cap T despite "
                           "S(B cap T) = T");
    images.push_back(a.quot.project(*x));
  }
  return Linking{b, a,
                 GroupIso(b.quot.perm_rep(), a.quot.perm_rep(), from_elems,
                          std::move(images))};
}

bool is_minimal(const Section &sec, const SubgroupLattice &lattice) {
  std::size_t t = lattice.index_of(sec.T);
  std::size_t s = lattice.index_of(sec.S);
  return lattice.contains_in(s, frattini(lattice, t));
}

PermGroup section_normalizer(const PermGroup &G, const Section &sec) {
  PermGroup nt = normalizer(G, sec.T);
  return normalizer(nt, sec.S);
}

std::vector<std::pair<Perm, unsigned>>
gamma_map(const Section &sec, const GroupIso &sigma, const OutGroup &out,
          const std::vector<Perm> &nbar_reps) {
  const auto &h_elems = out.base().elements();
  std::vector<std::pair<Perm, unsigned>> gamma;
  gamma.reserve(nbar_reps.size());
  for (const Perm &g : nbar_reps) {
    Perm gi = g.inverse();
    OutGroup::AutMap m(h_elems.size());
    for (std::size_t i = 0; i < h_elems.size(); ++i) {
      Perm t = sec.quot.lift(sigma.apply(h_elems[i]));
      Perm image = sigma.apply_inverse(sec.quot.project(g * t * gi));
      m[i] = static_cast<unsigned>(out.base().element_index(image));
    }
    gamma.emplace_back(g, out.outer_class(m));
  }
  return gamma;
}

std::vector<std::pair<Perm, unsigned>> gamma_map(const PermGroup &G,
                                                 const Section &sec,
                                                 const GroupIso &sigma,
                                                 const OutGroup &out) {
  PermGroup n = section_normalizer(G, sec);
  return gamma_map(sec, sigma, out, coset_reps(n, sec.T));
}

bool is_expansive(const PermGroup &G, const PermGroup &S,
                  const SubgroupLattice &lattice) {
  PermGroup N = normalizer(G, S);
  if (N.order() == G.order())
    return true; // S normal: no g outside N_G(S)
  std::size_t s_idx = lattice.index_of(S);
  std::vector<std::size_t> normals = normal_subgroups(lattice, lattice.index_of(N));

  // the defining condition is constant on (N,N) double cosets
  auto dc = double_coset_reps(G, N, N);
  for (const Perm &g : dc.representatives) {
    if (N.contains(g))
      continue;
    std::vector<Perm> x = product_set(
        S.elements(), intersect_elements(conjugate_subgroup(S, g), N));
    bool has_core = false;
    for (std::size_t m : normals) {
      const PermGroup &M = lattice.subgroup(m);
      if (M.order() <= S.order() || !lattice.contains_in(s_idx, m) ||
          M.order() > x.size())
        continue;
      bool inside = true;
      for (const Perm &p : M.elements()) {
        if (!std::binary_search(x.begin(), x.end(), p)) {
          inside = false;
          break;
        }
      }
      if (inside) {
        has_core = true;
        break;
      }
    }
    if (!has_core)
      return false;
  }
  return true;
}

namespace {

// index of the conjugate g . subgroup(i) . g^-1 in the lattice
std::size_t conj_index(const SubgroupLattice &lat, std::size_t i, const Perm &g) {
  const auto &el = lat.subgroup(i).elements();
  Perm gi = g.inverse();
  std::vector<Perm> img;
  img.reserve(el.size());
  for (const Perm &p : el)
    img.push_back(g * p * gi);
  std::sort(img.begin(), img.end());
  return lat.index_of(PermGroup::from_elements(lat.ambient().degree(), std::move(img)));
}

} // namespace

std::vector<SectionOrbit>
enumerate_section_orbits(const PermGroup &G, const PermGroup &H,
                         const SubgroupLattice &lattice, const OutGroup &out,
                         unsigned long long iso_limit) {
  const unsigned long long h = H.order();
  using Pair = std::pair<std::size_t, std::size_t>;

  std::set<Pair> pending;
  for (std::size_t ti = 0; ti < lattice.size(); ++ti) {
    const PermGroup &T = lattice.subgroup(ti);
    if (T.order() % h != 0)
      continue;
    for (std::size_t si = 0; si < lattice.size(); ++si) {
      if (!lattice.contains_in(si, ti))
        continue;
      const PermGroup &S = lattice.subgroup(si);
      if (S.order() * h != T.order() || !S.is_normal_in(T))
        continue;
      pending.emplace(ti, si);
    }
  }

  // conjugation by an ambient generator, memoized per lattice member
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> conj_cache;
  auto conj = [&](std::size_t i, std::size_t gen) {
    auto it = conj_cache.find({i, gen});
    if (it != conj_cache.end())
      return it->second;
    std::size_t j = conj_index(lattice, i, G.generators()[gen]);
    conj_cache.emplace(std::make_pair(i, gen), j);
    return j;
  };

  std::vector<SectionOrbit> orbits;
  while (!pending.empty()) {
    Pair start = *pending.begin(); // smallest remaining pair: the orbit rep
    std::vector<Pair> orbit{start};
    pending.erase(pending.begin());
    for (std::size_t q = 0; q < orbit.size(); ++q) {
      for (std::size_t k = 0; k < G.generators().size(); ++k) {
        Pair img{conj(orbit[q].first, k), conj(orbit[q].second, k)};
        if (pending.erase(img))
          orbit.push_back(img);
      }
    }

    Section rep = make_section(lattice.subgroup(start.first),
                               lattice.subgroup(start.second));
    auto sigma = find_isomorphism(H, rep.quot.perm_rep(), iso_limit);
    if (!sigma)
      continue; // quotient has the right order but the wrong type

    SectionOrbit so;
    so.rep = std::move(rep);
    so.sigma = std::move(*sigma);
    so.orbit_size = orbit.size();
    so.normalizer = section_normalizer(G, so.rep);
    if (so.orbit_size * so.normalizer.order() != G.order())
      throw internal_error("section orbit size inconsistent with |G : N_G(T,S)|");
    so.nbar_reps = coset_reps(so.normalizer, so.rep.T);
    so.gamma = gamma_map(so.rep, so.sigma, out, so.nbar_reps);
    if (so.gamma.empty() || so.gamma[0].second != 0)
      throw internal_error("gamma map does not send the trivial coset to the "
                           "identity Out class");
    so.minimal = is_minimal(so.rep, lattice);
    orbits.push_back(std::move(so));
  }
  return orbits;
}

} // namespace bisetfun
