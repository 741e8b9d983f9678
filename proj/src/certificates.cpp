#include <algorithm>
#include <numeric>

#include "bisetfun/cosets.hpp"
#include "bisetfun/errors.hpp"
#include "bisetfun/evaluator.hpp"
#include "bisetfun/quotient.hpp"

namespace bisetfun {

namespace {

bool is_prime_power(unsigned long long n, unsigned long long &p) {
  if (n < 2)
    return false;
  for (unsigned long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      while (n % d == 0)
        n /= d;
      return n == 1;
    }
  }
  p = n;
  return true;
}

unsigned long long log_base(unsigned long long n, unsigned long long p) {
  unsigned long long e = 0;
  while (n > 1) {
    n /= p;
    ++e;
  }
  return e;
}

// largest rank of an elementary abelian section, for a p-group
unsigned long long sectional_rank(const SubgroupLattice &lat,
                                  unsigned long long p) {
  unsigned long long best = 0;
  for (std::size_t t1 = 0; t1 < lat.size(); ++t1) {
    const PermGroup &T1 = lat.subgroup(t1);
    PermGroup der = derived_subgroup(T1);
    for (std::size_t t2 = 0; t2 < lat.size(); ++t2) {
      if (!lat.contains_in(t2, t1))
        continue;
      const PermGroup &T2 = lat.subgroup(t2);
      unsigned long long idx = T1.order() / T2.order();
      unsigned long long rank = log_base(idx, p);
      if (idx == 1 || rank <= best)
        continue;
      if (!T2.contains_group(der))
        continue; // quotient not abelian
      bool exponent_p = true;
      for (const Perm &g : T1.generators()) {
        Perm gp = g;
        for (unsigned long long i = 1; i < p; ++i)
          gp = gp * g;
        if (!T2.contains(gp)) {
          exponent_p = false;
          break;
        }
      }
      if (exponent_p)
        best = rank;
    }
  }
  return best;
}

} // namespace

std::vector<Certificate>
certificates(const PermGroup &G, const PermGroup &H, const KModule &V,
             const SubgroupLattice &lattice, const OutGroup &out,
             const std::vector<SectionOrbit> &orbits,
             unsigned long long iso_limit) {
  std::vector<Certificate> fired;
  auto class_reps = [&]() {
    std::vector<std::size_t> reps;
    for (const auto &cls : lattice.classes())
      reps.push_back(cls[0]);
    return reps;
  }();

  // (a) H isomorphic to a quotient G/N
  for (std::size_t n : normal_subgroups(lattice, lattice.ambient_index())) {
    const PermGroup &N = lattice.subgroup(n);
    if (G.order() != H.order() * N.order())
      continue;
    if (find_isomorphism(H, quotient(G, N).perm_rep(), iso_limit)) {
      fired.push_back({"quotient", true,
                       "G/N is isomorphic to H for a normal subgroup N of "
                       "order " +
                           std::to_string(N.order())});
      break;
    }
  }

  // (b) H a subquotient of the abelianization G/[G,G]
  {
    PermGroup gab = quotient(G, derived_subgroup(G)).perm_rep();
    if (gab.order() % H.order() == 0) {
      bool sub = false;
      auto ab_lat = subgroup_lattice(gab);
      for (const auto &cls : ab_lat.classes()) {
        const PermGroup &X = ab_lat.subgroup(cls[0]);
        if (X.order() == H.order() &&
            find_isomorphism(H, X, iso_limit)) {
          sub = true;
          break;
        }
      }
      if (sub)
        fired.push_back({"abelianized", true,
                         "H embeds in the abelianization of order " +
                             std::to_string(gab.order())});
    }
  }

  // (c) a section orbit whose conjugates by g outside T are never linked
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const Section &sec = orbits[i].rep;
    bool never = true;
    auto dc = double_coset_reps(G, sec.T, sec.T);
    for (const Perm &g : dc.representatives) {
      if (sec.T.contains(g))
        continue;
      Section conj = make_section(conjugate_subgroup(sec.T, g),
                                  conjugate_subgroup(sec.S, g));
      if (linked(sec, conj)) {
        never = false;
        break;
      }
    }
    if (never) {
      fired.push_back({"never-linked", true,
                       "orbit " + std::to_string(i) + " with |T| = " +
                           std::to_string(sec.T.order()) +
                           " has no linked conjugate outside T"});
      break;
    }
  }

  // (d) H isomorphic to a self-normalizing subgroup
  for (std::size_t r : class_reps) {
    const PermGroup &T = lattice.subgroup(r);
    if (T.order() != H.order())
      continue;
    if (normalizer(G, T).order() == T.order() &&
        find_isomorphism(H, T, iso_limit)) {
      fired.push_back({"self-normalizing", true,
                       "a self-normalizing subgroup of order " +
                           std::to_string(T.order()) + " is isomorphic to H"});
      break;
    }
  }

  // (e) H isomorphic to N_G(S)/S for an expansive S
  for (std::size_t r : class_reps) {
    const PermGroup &S = lattice.subgroup(r);
    PermGroup N = normalizer(G, S);
    if (N.order() != S.order() * H.order())
      continue;
    if (find_isomorphism(H, quotient(N, S).perm_rep(), iso_limit) &&
        is_expansive(G, S, lattice)) {
      fired.push_back({"expansive", true,
                       "S of order " + std::to_string(S.order()) +
                           " is expansive with N_G(S)/S isomorphic to H"});
      break;
    }
  }

  // (f) a minimal orbit with nonzero relative trace
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (!orbits[i].minimal)
      continue;
    std::size_t t = trace_image_dim(V, gamma_sum(orbits[i]));
    if (t > 0) {
      fired.push_back({"trace-witness", true,
                       "minimal orbit " + std::to_string(i) +
                           " has trace dimension " + std::to_string(t)});
      break;
    }
  }

  // (g) minimal orbit with inner-acting normalizer and |N-bar| nonzero in k
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const auto &o = orbits[i];
    if (!o.minimal)
      continue;
    bool inner = std::all_of(o.gamma.begin(), o.gamma.end(),
                             [](const auto &e) { return e.second == 0; });
    unsigned long long nbar = o.nbar_reps.size();
    bool unit = V.field().is_rational() || nbar % V.field().characteristic != 0;
    if (inner && unit) {
      fired.push_back({"inner-normalizer", true,
                       "minimal orbit " + std::to_string(i) +
                           " acts by inner automorphisms and |N-bar| = " +
                           std::to_string(nbar) + " is invertible in k"});
      break;
    }
  }

  // (h) unique section orbit: dim equals its trace dim
  if (orbits.size() == 1) {
    std::size_t t = trace_image_dim(V, gamma_sum(orbits[0]));
    fired.push_back({"unique-section", false,
                     "single orbit: the evaluation is the relative trace of "
                     "dimension " +
                         std::to_string(t)});
  }

  // (i) H a normal Hall subgroup with a faithfully acting complement
  for (std::size_t n : normal_subgroups(lattice, lattice.ambient_index())) {
    const PermGroup &N = lattice.subgroup(n);
    unsigned long long y_order = G.order() / N.order();
    if (N.order() != H.order() || std::gcd(N.order(), y_order) != 1 ||
        y_order == 1)
      continue;
    if (!find_isomorphism(H, N, iso_limit))
      continue;
    // a complement Y, faithful on N: no nontrivial y centralizes N
    for (std::size_t r = 0; r < lattice.size(); ++r) {
      const PermGroup &Y = lattice.subgroup(r);
      if (Y.order() != y_order ||
          intersect_elements(Y, N).size() != 1)
        continue;
      bool faithful = true;
      for (const Perm &y : Y.elements()) {
        if (y.is_identity())
          continue;
        bool central = true;
        for (const Perm &x : N.generators())
          if (y * x != x * y) {
            central = false;
            break;
          }
        if (central) {
          faithful = false;
          break;
        }
      }
      if (faithful) {
        fired.push_back({"normal-hall", false,
                         "H is a normal Hall subgroup with faithful "
                         "complement of order " +
                             std::to_string(y_order) +
                             "; Tr over the complement applies"});
        break;
      }
    }
    if (!fired.empty() && fired.back().name == "normal-hall")
      break;
  }

  // (j) H a Sylow subgroup normalizing no nontrivial q-subgroup
  {
    unsigned long long p = 0;
    if (is_prime_power(H.order(), p) && G.order() % H.order() == 0 &&
        (G.order() / H.order()) % p != 0) {
      for (std::size_t r : class_reps) {
        const PermGroup &P = lattice.subgroup(r);
        if (P.order() != H.order() || !find_isomorphism(H, P, iso_limit))
          continue;
        bool clean = true;
        for (std::size_t q_idx = 0; q_idx < lattice.size() && clean; ++q_idx) {
          const PermGroup &Q = lattice.subgroup(q_idx);
          unsigned long long q = 0;
          if (Q.order() == 1 || !is_prime_power(Q.order(), q) || q == p)
            continue;
          bool normalized = true;
          for (const Perm &g : P.generators())
            if (!(conjugate_subgroup(Q, g) == Q)) {
              normalized = false;
              break;
            }
          if (normalized)
            clean = false;
        }
        if (clean) {
          fired.push_back({"sylow", false,
                           "H is a Sylow " + std::to_string(p) +
                               "-subgroup normalizing no nontrivial "
                               "q-subgroup; the section orbit is unique"});
        }
        break; // one Sylow class suffices either way
      }
    }
  }

  // (k) G and H p-groups of the same sectional rank
  {
    unsigned long long pg = 0, ph = 0;
    if (is_prime_power(G.order(), pg) && is_prime_power(H.order(), ph) &&
        pg == ph) {
      auto h_lat = subgroup_lattice(H);
      unsigned long long rg = sectional_rank(lattice, pg);
      unsigned long long rh = sectional_rank(h_lat, ph);
      if (rg == rh)
        fired.push_back({"p-sectional-rank", false,
                         "G and H are " + std::to_string(pg) +
                             "-groups of sectional rank " +
                             std::to_string(rg) +
                             "; the closed formula applies"});
    }
  }

  return fired;
}

} // namespace bisetfun
