#include "bisetfun/evaluator.hpp"

#include <algorithm>

#include "bisetfun/cosets.hpp"
#include "bisetfun/errors.hpp"

namespace bisetfun {

FormalSum pairing_element(const PermGroup &G, const SectionOrbit &orbB,
                          const SectionOrbit &orbT, const OutGroup &out) {
  const Section &b = orbB.rep; // (B, A)
  const Section &t = orbT.rep; // (T, S)
  const auto &h_elems = out.base().elements();

  FormalSum u;
  auto dc = double_coset_reps(G, b.T, t.T);
  for (const Perm &g : dc.representatives) {
    Section conj = make_section(conjugate_subgroup(t.T, g),
                                conjugate_subgroup(t.S, g));
    auto link = linked(b, conj);
    if (!link)
      continue;
    // sigma_B^-1 . phi . Conj_g . sigma_T as an automorphism of H
    Perm gi = g.inverse();
    OutGroup::AutMap m(h_elems.size());
    for (std::size_t i = 0; i < h_elems.size(); ++i) {
      Perm x = t.quot.lift(orbT.sigma.apply(h_elems[i]));
      Perm q = conj.quot.project(g * x * gi);
      Perm image = orbB.sigma.apply_inverse(link->induced_iso.apply(q));
      m[i] = static_cast<unsigned>(out.base().element_index(image));
    }
    u.add(out.outer_class(m));
  }
  return u;
}

PairingMatrix pairing_matrix(const PermGroup &G,
                             const std::vector<SectionOrbit> &orbits,
                             const KModule &V, const OutGroup &out) {
  const std::size_t m = orbits.size();
  const std::size_t n = V.dim();
  PairingMatrix pm;
  pm.blocks.assign(m, std::vector<Matrix>(m));
  pm.assembled = Matrix(m * n, m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      pm.blocks[i][j] = act(V, pairing_element(G, orbits[i], orbits[j], out));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          pm.assembled.at(i * n + r, j * n + c) = pm.blocks[i][j].at(r, c);
    }
  }
  return pm;
}

FormalSum gamma_sum(const SectionOrbit &orbit) {
  FormalSum u;
  for (const auto &[g, cls] : orbit.gamma)
    u.add(cls);
  return u;
}

std::optional<std::size_t>
closed_formula_dim(const std::vector<SectionOrbit> &orbits, const KModule &V) {
  std::size_t total = 0;
  for (const auto &o : orbits) {
    if (!o.minimal)
      return std::nullopt;
    total += trace_image_dim(V, gamma_sum(o));
  }
  return total;
}

std::size_t lower_bound_dim(const std::vector<SectionOrbit> &orbits,
                            const KModule &V) {
  std::size_t total = 0;
  for (const auto &o : orbits)
    if (o.minimal)
      total += trace_image_dim(V, gamma_sum(o));
  return total;
}

EvaluationReport evaluate(const PermGroup &G, const PermGroup &H,
                          const KModule &V, const SubgroupLattice &lattice,
                          const OutGroup &out, bool verify,
                          unsigned long long iso_limit) {
  EvaluationReport rep;
  rep.orbits = enumerate_section_orbits(G, H, lattice, out, iso_limit);

  bool all_minimal = true;
  for (std::size_t i = 0; i < rep.orbits.size(); ++i) {
    const auto &o = rep.orbits[i];
    std::size_t trace = trace_image_dim(V, gamma_sum(o));
    rep.per_orbit_traces.push_back({i, o.minimal, trace});
    if (o.minimal)
      rep.lower_bound += trace;
    else
      all_minimal = false;
  }

  if (rep.orbits.empty()) {
    rep.dim = 0;
    rep.method = "empty-sigma";
  } else {
    std::optional<std::size_t> rank_dim;
    if (!all_minimal || verify) {
      PairingMatrix pm = pairing_matrix(G, rep.orbits, V, out);
      rank_dim = rank(pm.assembled, V.field());
      bool all_zero = true;
      for (const auto &row : pm.blocks)
        for (const Matrix &blk : row)
          if (!blk.is_zero())
            all_zero = false;
      // Vanishing criterion: the form is zero iff every block acts as zero
      if ((*rank_dim == 0) != all_zero)
        throw internal_error("assembled rank and per-block vanishing disagree");
    }
    if (all_minimal) {
      std::size_t cf = 0;
      for (const auto &t : rep.per_orbit_traces)
        cf += t.trace_dim;
      if (rank_dim && *rank_dim != cf)
        throw internal_error(
            "closed formula (" + std::to_string(cf) +
            ") disagrees with the rank formula (" + std::to_string(*rank_dim) +
            ")");
      rep.dim = cf;
      rep.method = "closed-formula";
    } else {
      rep.dim = *rank_dim;
      rep.method = "rank-formula";
    }
  }

  rep.vanishes = rep.dim == 0;
  if (rep.dim < rep.lower_bound)
    throw internal_error("evaluation dimension fell below the minimal-section "
                         "lower bound");

  rep.certificates = certificates(G, H, V, lattice, out, rep.orbits, iso_limit);
  for (const Certificate &c : rep.certificates)
    if (c.nonvanishing && rep.vanishes)
      throw internal_error("certificate '" + c.name +
                           "' asserts nonvanishing but the evaluation is zero");
  return rep;
}

std::size_t evaluation_dim(const PermGroup &G, const PermGroup &H,
                           const KModule &V, const SubgroupLattice &lattice,
                           const OutGroup &out) {
  return evaluate(G, H, V, lattice, out).dim;
}

} // namespace bisetfun
