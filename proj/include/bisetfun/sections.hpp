#ifndef BISETFUN_SECTIONS_HPP
#define BISETFUN_SECTIONS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "bisetfun/isomorphism.hpp"
#include "bisetfun/lattice.hpp"
#include "bisetfun/out_group.hpp"
#include "bisetfun/perm_group.hpp"
#include "bisetfun/quotient.hpp"

namespace bisetfun {

/// A section (T,S) of an ambient group: S normal in T, carrying its
/// quotient T/S as a concrete permutation group.
struct Section {
  PermGroup T;
  PermGroup S;
  QuotientGroup quot; // quotient for (T,S)
};

Section make_section(const PermGroup &T, const PermGroup &S);

/// One G-conjugacy orbit of sections (T,S) with T/S isomorphic to H.
struct SectionOrbit {
  Section rep;
  GroupIso sigma; // the pinned isomorphism H -> rep.quot.perm_rep()
  unsigned long long orbit_size = 0;
  bool minimal = false;
  PermGroup normalizer;        // N_G(T,S)
  std::vector<Perm> nbar_reps; // coset reps of T in N_G(T,S)
  // N_G(T,S)/T -> Out(H): one (coset rep, Out class) entry per nbar element
  std::vector<std::pair<Perm, unsigned>> gamma;
};

/// A linking between two sections, with the induced isomorphism between
/// their quotients (xS -> xA on B cap T, from = (T,S), to = (B,A)).
struct Linking {
  Section from;
  Section to;
  GroupIso induced_iso; // from.quot.perm_rep() -> to.quot.perm_rep()
};

/// One SectionOrbit per G-conjugacy class of sections with quotient
/// isomorphic to H, canonically ordered by the (T,S) lattice index pair of
/// the orbit representative (itself the smallest pair in its orbit).
std::vector<SectionOrbit>
enumerate_section_orbits(const PermGroup &G, const PermGroup &H,
                         const SubgroupLattice &lattice, const OutGroup &out,
                         unsigned long long iso_limit = kDefaultIsoLimit);

/// (V,U) preceq (T,S): VS = T and V cap S = U.
bool preceq(const Section &a, const Section &b);

/// Linking test for a = (B,A) against b = (T,S): |B/A| = |T/S|,
/// S(B cap T) = T and S(A cap T) = S. Returns the linking with the induced
/// isomorphism T/S -> B/A when the conditions hold.
std::optional<Linking> linked(const Section &a, const Section &b);

/// Minimal for preceq among sections with the same quotient: S <= Phi(T).
bool is_minimal(const Section &sec, const SubgroupLattice &lattice);

/// N_G(T,S) = N_G(T) cap N_G(S).
PermGroup section_normalizer(const PermGroup &G, const Section &sec);

/// The map N_G(T,S)/T -> Out(H): each coset rep g yields the Out class of
/// sigma^-1 . Conj_g . sigma. Multiplicities are preserved.
std::vector<std::pair<Perm, unsigned>>
gamma_map(const Section &sec, const GroupIso &sigma, const OutGroup &out,
          const std::vector<Perm> &nbar_reps);
std::vector<std::pair<Perm, unsigned>> gamma_map(const PermGroup &G,
                                                 const Section &sec,
                                                 const GroupIso &sigma,
                                                 const OutGroup &out);

/// Expansivity of S in G: for every g outside N = N_G(S), some normal
/// subgroup M of N satisfies S < M <= S(gSg^-1 cap N).
bool is_expansive(const PermGroup &G, const PermGroup &S,
                  const SubgroupLattice &lattice);

} // namespace bisetfun

#endif
