#ifndef BISETFUN_EVALUATOR_HPP
#define BISETFUN_EVALUATOR_HPP

#include <optional>
#include <string>
#include <vector>

#include "bisetfun/kmodule.hpp"
#include "bisetfun/sections.hpp"

namespace bisetfun {

/// The bilinear form realizing the evaluation: one block per ordered pair
/// of section orbits, assembled row-major by orbit then module coordinate.
struct PairingMatrix {
  std::vector<std::vector<Matrix>> blocks; // m x m grid of dim x dim
  Matrix assembled;                        // (m dim) x (m dim)
};

struct Certificate {
  std::string name;
  bool nonvanishing = false; // true: implies dim > 0; false: informational
  std::string witness;
};

struct EvaluationReport {
  std::size_t dim = 0;
  bool vanishes = true;
  std::string method; // "rank-formula" | "closed-formula" | "empty-sigma"
  std::size_t lower_bound = 0;
  struct OrbitTrace {
    std::size_t orbit = 0;
    bool minimal = false;
    std::size_t trace_dim = 0;
  };
  std::vector<OrbitTrace> per_orbit_traces;
  std::vector<Certificate> certificates;
  std::vector<SectionOrbit> orbits; // canonical order, as enumerated
};

/// The formal automorphism sum over double cosets [B\G/T] whose conjugated
/// section links to (B,A): sigma_B^-1 . phi . Conj_g . sigma_T reduced to
/// Out classes, one multiplicity per linking double coset.
FormalSum pairing_element(const PermGroup &G, const SectionOrbit &orbB,
                          const SectionOrbit &orbT, const OutGroup &out);

PairingMatrix pairing_matrix(const PermGroup &G,
                             const std::vector<SectionOrbit> &orbits,
                             const KModule &V, const OutGroup &out);

/// The trace multiset of an orbit's gamma map (one term per nbar element).
FormalSum gamma_sum(const SectionOrbit &orbit);

/// Sum of per-orbit trace dims when every orbit is minimal; absent
/// otherwise.
std::optional<std::size_t>
closed_formula_dim(const std::vector<SectionOrbit> &orbits, const KModule &V);

/// Sum of trace dims over the minimal orbits only: a guaranteed subquotient
/// dimension.
std::size_t lower_bound_dim(const std::vector<SectionOrbit> &orbits,
                            const KModule &V);

/// The certificate suite. (a)-(g) assert nonvanishing when fired; the rest
/// are informational. Orbits must come from the same enumeration run.
std::vector<Certificate>
certificates(const PermGroup &G, const PermGroup &H, const KModule &V,
             const SubgroupLattice &lattice, const OutGroup &out,
             const std::vector<SectionOrbit> &orbits,
             unsigned long long iso_limit = kDefaultIsoLimit);

/// Full evaluation: dimension of S_{H,V}(G), vanishing flag, method,
/// lower bound, traces and certificates. With verify set, the closed
/// formula (when applicable) is cross-checked against the rank formula.
EvaluationReport evaluate(const PermGroup &G, const PermGroup &H,
                          const KModule &V, const SubgroupLattice &lattice,
                          const OutGroup &out, bool verify = false,
                          unsigned long long iso_limit = kDefaultIsoLimit);

/// Shorthand for evaluate(...).dim.
std::size_t evaluation_dim(const PermGroup &G, const PermGroup &H,
                           const KModule &V, const SubgroupLattice &lattice,
                           const OutGroup &out);

} // namespace bisetfun

#endif
