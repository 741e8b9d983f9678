#include <algorithm>

#include "doctest.h"

#include "bisetfun/errors.hpp"
#include "bisetfun/evaluator.hpp"
#include "bisetfun/presets.hpp"

using namespace bisetfun;

namespace {

struct Setup {
  PermGroup G, H;
  SubgroupLattice lat;
  OutGroup out;
};

Setup setup(const std::string &g, const std::string &h) {
  PermGroup G = parse_group(g), H = parse_group(h);
  return Setup{G, H, subgroup_lattice(G), out_group(H)};
}

bool has_cert(const EvaluationReport &rep, const std::string &name) {
  return std::any_of(rep.certificates.begin(), rep.certificates.end(),
                     [&](const Certificate &c) { return c.name == name; });
}

} // namespace

TEST_CASE("pairing element of the unique A5 orbit in S5") {
  auto s = setup("S5", "A5");
  auto orbits = enumerate_section_orbits(s.G, s.H, s.lat, s.out);
  REQUIRE(orbits.size() == 1);
  FormalSum u = pairing_element(s.G, orbits[0], orbits[0], s.out);
  FormalSum expect;
  expect.add(0);
  expect.add(1);
  CHECK(u == expect);
  // unique minimal orbit: the pairing element equals the gamma multiset
  CHECK(u == gamma_sum(orbits[0]));
}

TEST_CASE("pairing element of the unique A5 orbit in SL(2,5)") {
  auto s = setup("SL(2,5)", "A5");
  CHECK(s.G.order() == 120);
  auto orbits = enumerate_section_orbits(s.G, s.H, s.lat, s.out);
  REQUIRE(orbits.size() == 1);
  CHECK(orbits[0].rep.T.order() == 120); // (G, Z)
  CHECK(orbits[0].rep.S.order() == 2);
  FormalSum u = pairing_element(s.G, orbits[0], orbits[0], s.out);
  FormalSum expect;
  expect.add(0);
  CHECK(u == expect);
}

TEST_CASE("sign evaluations at S5 and SL(2,5)") {
  auto s5 = setup("S5", "A5");
  auto sign = make_sign_module(s5.out, Field::rationals());
  auto rep = evaluate(s5.G, s5.H, sign, s5.lat, s5.out, /*verify=*/true);
  CHECK(rep.dim == 0);
  CHECK(rep.vanishes);
  CHECK(rep.method == "closed-formula");
  CHECK(rep.lower_bound == 0);

  auto sl = setup("SL(2,5)", "A5");
  auto sign2 = make_sign_module(sl.out, Field::rationals());
  auto rep2 = evaluate(sl.G, sl.H, sign2, sl.lat, sl.out, /*verify=*/true);
  CHECK(rep2.dim == 1);
  CHECK_FALSE(rep2.vanishes);
  CHECK(has_cert(rep2, "unique-section"));
}

TEST_CASE("characteristic sensitivity of the trivial module at S5") {
  auto s = setup("S5", "A5");
  auto trivQ = make_trivial_module(s.out, Field::rationals());
  auto repQ = evaluate(s.G, s.H, trivQ, s.lat, s.out, true);
  CHECK(repQ.dim == 1);

  auto triv2 = make_trivial_module(s.out, Field::prime(2));
  auto rep2 = evaluate(s.G, s.H, triv2, s.lat, s.out, true);
  CHECK(rep2.dim == 0); // {e:1, tau:1} acts as 2 = 0 in F2
}

TEST_CASE("C2 sections of C4: closed formula") {
  auto s = setup("C4", "C2");
  auto trivQ = make_trivial_module(s.out, Field::rationals());
  auto rep = evaluate(s.G, s.H, trivQ, s.lat, s.out, true);
  CHECK(rep.dim == 2);
  CHECK(rep.method == "closed-formula");
  CHECK(rep.lower_bound == 2);

  // char 2: the (C2,1) orbit has |N-bar| = 2 and traces to zero
  auto triv2 = make_trivial_module(s.out, Field::prime(2));
  auto rep2 = evaluate(s.G, s.H, triv2, s.lat, s.out, true);
  CHECK(rep2.dim == 1);
}

TEST_CASE("empty sigma") {
  auto s = setup("C4", "C3");
  auto triv = make_trivial_module(s.out, Field::rationals());
  auto rep = evaluate(s.G, s.H, triv, s.lat, s.out);
  CHECK(rep.dim == 0);
  CHECK(rep.vanishes);
  CHECK(rep.method == "empty-sigma");
  CHECK(rep.orbits.empty());
}

TEST_CASE("minimal-group identity: eval(H, H, V) = dim V") {
  for (const char *name : {"C2", "C3", "V4", "S3", "D8", "Q8", "A4"}) {
    auto s = setup(name, name);
    auto triv = make_trivial_module(s.out, Field::rationals());
    CHECK(evaluate(s.G, s.H, triv, s.lat, s.out, true).dim == 1);
  }
  // with sign where Out has order 2
  auto s = setup("C3", "C3");
  auto sign = make_sign_module(s.out, Field::rationals());
  CHECK(evaluate(s.G, s.H, sign, s.lat, s.out, true).dim == 1);
}

TEST_CASE("F21 evaluation of C7: Hall situation") {
  auto s = setup("F21", "C7");
  CHECK(s.G.order() == 21);
  CHECK(s.out.out_order() == 6);
  auto triv = make_trivial_module(s.out, Field::rationals());
  auto rep = evaluate(s.G, s.H, triv, s.lat, s.out, true);
  CHECK(rep.dim == 1);
  CHECK(has_cert(rep, "normal-hall"));
  CHECK(has_cert(rep, "unique-section"));
}

TEST_CASE("lower bound never exceeds the dimension") {
  const char *gs[] = {"S4", "D8", "A4", "C6", "D12"};
  const char *hs[] = {"C2", "C3", "V4", "S3"};
  for (const char *g : gs) {
    auto G = parse_group(g);
    auto lat = subgroup_lattice(G);
    for (const char *h : hs) {
      auto H = parse_group(h);
      auto out = out_group(H);
      for (auto k : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
        auto triv = make_trivial_module(out, k);
        auto rep = evaluate(G, H, triv, lat, out, true);
        CHECK(rep.lower_bound <= rep.dim);
        CHECK(rep.vanishes == (rep.dim == 0));
      }
    }
  }
}

TEST_CASE("certificates on characteristic cases") {
  // abelian G: abelianized and quotient certificates fire
  auto c4 = setup("C4", "C2");
  auto triv = make_trivial_module(c4.out, Field::rationals());
  auto rep = evaluate(c4.G, c4.H, triv, c4.lat, c4.out);
  CHECK(has_cert(rep, "quotient"));
  CHECK(has_cert(rep, "abelianized"));

  // D8 and V4 are 2-groups of sectional rank 2
  auto d8 = setup("D8", "V4");
  auto trivV = make_trivial_module(d8.out, Field::rationals());
  auto repD = evaluate(d8.G, d8.H, trivV, d8.lat, d8.out, true);
  CHECK(has_cert(repD, "p-sectional-rank"));
  CHECK(repD.method == "closed-formula");

  // S5 over A5: unique section, no false nonvanishing certificate on the
  // vanishing sign case (evaluate itself enforces the contract)
  auto s5 = setup("S5", "A5");
  auto sign = make_sign_module(s5.out, Field::rationals());
  auto repS = evaluate(s5.G, s5.H, sign, s5.lat, s5.out);
  CHECK(has_cert(repS, "unique-section"));
  for (const auto &c : repS.certificates)
    CHECK_FALSE(c.nonvanishing);
}

TEST_CASE("self-normalizing certificate") {
  // S3 inside S4 is self-normalizing (point stabilizer S3 = N_S4(S3))
  auto s = setup("S4", "S3");
  auto triv = make_trivial_module(s.out, Field::rationals());
  auto rep = evaluate(s.G, s.H, triv, s.lat, s.out, true);
  CHECK(has_cert(rep, "self-normalizing"));
  CHECK(rep.dim > 0);
}

TEST_CASE("sylow certificate") {
  // C3 is a Sylow 3-subgroup of S3 and normalizes no nontrivial 2-subgroup
  auto s = setup("S3", "C3");
  auto triv = make_trivial_module(s.out, Field::rationals());
  auto rep = evaluate(s.G, s.H, triv, s.lat, s.out, true);
  CHECK(has_cert(rep, "sylow"));
  CHECK(has_cert(rep, "unique-section"));
}

TEST_CASE("per-orbit traces and method bookkeeping") {
  auto s = setup("S4", "C2");
  auto triv = make_trivial_module(s.out, Field::rationals());
  auto rep = evaluate(s.G, s.H, triv, s.lat, s.out, true);
  CHECK(rep.per_orbit_traces.size() == rep.orbits.size());
  std::size_t minimal_sum = 0;
  for (const auto &t : rep.per_orbit_traces)
    if (t.minimal)
      minimal_sum += t.trace_dim;
  CHECK(minimal_sum == rep.lower_bound);
}

TEST_CASE("explicit module through an evaluation") {
  // V4 has Out(V4) isomorphic to S3; feed an explicit 2-dim F3 module
  auto s = setup("C2", "C2");
  // Out(C2) is trivial: dim-2 trivial-representation table
  std::string spec = "field F3\ndim 2\nrep 0\n1 0\n0 1\n";
  auto V = load_module(spec, s.out, Field::prime(3));
  CHECK(evaluate(s.G, s.H, V, s.lat, s.out, true).dim == 2);
}
