#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "bisetfun/cosets.hpp"
#include "bisetfun/evaluator.hpp"
#include "bisetfun/presets.hpp"

using namespace bisetfun;

namespace {

std::vector<Section> all_sections(const SubgroupLattice &lat) {
  std::vector<Section> secs;
  for (std::size_t t = 0; t < lat.size(); ++t)
    for (std::size_t s = 0; s < lat.size(); ++s) {
      if (!lat.contains_in(s, t))
        continue;
      const PermGroup &T = lat.subgroup(t);
      const PermGroup &S = lat.subgroup(s);
      if (S.is_normal_in(T))
        secs.push_back(make_section(T, S));
    }
  return secs;
}

} // namespace

TEST_CASE("linking is symmetric with mutually inverse isomorphisms") {
  for (const char *name : {"S4", "D12", "Q8", "A4", "C12"}) {
    CAPTURE(name);
    auto G = parse_group(name);
    auto lat = subgroup_lattice(G);
    auto secs = all_sections(lat);
    std::size_t linked_pairs = 0;
    for (const Section &a : secs)
      for (const Section &b : secs) {
        auto ab = linked(a, b);
        auto ba = linked(b, a);
        REQUIRE(ab.has_value() == ba.has_value());
        if (!ab)
          continue;
        ++linked_pairs;
        for (const Perm &g : b.quot.perm_rep().generators())
          REQUIRE(ba->induced_iso.apply(ab->induced_iso.apply(g)) == g);
        for (const Perm &g : a.quot.perm_rep().generators())
          REQUIRE(ab->induced_iso.apply(ba->induced_iso.apply(g)) == g);
      }
    CHECK(linked_pairs >= secs.size()); // every section links to itself
  }
}

TEST_CASE("orbit sizes partition the raw sections") {
  const std::pair<const char *, const char *> pairs[] = {
      {"S4", "C2"}, {"S4", "C4"},  {"S4", "V4"}, {"S4", "S3"},
      {"D12", "C6"}, {"A5", "S3"}, {"A5", "C5"}, {"F21", "C3"}};
  for (const auto &[g, h] : pairs) {
    CAPTURE(g);
    CAPTURE(h);
    auto G = parse_group(g);
    auto H = parse_group(h);
    auto lat = subgroup_lattice(G);
    auto out = out_group(H);
    auto orbits = enumerate_section_orbits(G, H, lat, out);

    unsigned long long via_orbits = 0;
    for (const auto &o : orbits)
      via_orbits += o.orbit_size;

    unsigned long long raw = 0;
    for (std::size_t t = 0; t < lat.size(); ++t)
      for (std::size_t s = 0; s < lat.size(); ++s) {
        if (!lat.contains_in(s, t))
          continue;
        const PermGroup &T = lat.subgroup(t);
        const PermGroup &S = lat.subgroup(s);
        if (T.order() != S.order() * H.order() || !S.is_normal_in(T))
          continue;
        if (find_isomorphism(H, quotient(T, S).perm_rep()))
          ++raw;
      }
    CHECK(via_orbits == raw);
  }
}

TEST_CASE("gamma is a homomorphism into Out") {
  const std::pair<const char *, const char *> pairs[] = {
      {"S4", "V4"}, {"S5", "A5"}, {"F21", "C7"}, {"D12", "S3"}};
  for (const auto &[g, h] : pairs) {
    CAPTURE(g);
    CAPTURE(h);
    auto G = parse_group(g);
    auto H = parse_group(h);
    auto lat = subgroup_lattice(G);
    auto out = out_group(H);
    for (const auto &o : enumerate_section_orbits(G, H, lat, out)) {
      // identity coset maps to the identity class
      CHECK(gamma_map(o.rep, o.sigma, out,
                      {Perm(G.degree())})[0]
                .second == 0);
      for (const auto &[g1, c1] : o.gamma)
        for (const auto &[g2, c2] : o.gamma) {
          auto prod = gamma_map(o.rep, o.sigma, out, {g1 * g2});
          REQUIRE(prod[0].second == out.multiply(c1, c2));
        }
    }
  }
}

TEST_CASE("lattice completeness against the generated-subgroup oracle") {
  // pair/triple closures for the small groups; every subgroup of these
  // groups is 2-generated, so pair closures alone are already exhaustive
  for (const char *name : {"A4", "S4"}) {
    CAPTURE(name);
    auto G = parse_group(name);
    auto lat = subgroup_lattice(G);
    auto found = oracles::pair_triple_subgroups(G.degree(), G.elements());
    CHECK(found.size() == lat.size());
    for (const auto &elems : found)
      REQUIRE(lat.find(PermGroup::from_elements(G.degree(), elems))
                  .has_value());
  }
  // A5 (order 60): pair closures; all subgroups of A5 are 2-generated
  {
    auto G = parse_group("A5");
    auto lat = subgroup_lattice(G);
    CHECK(lat.size() == 59);
    std::set<std::vector<Perm>> found;
    const auto &els = G.elements();
    found.insert(oracles::naive_closure(G.degree(), {}));
    for (std::size_t i = 0; i < els.size(); ++i)
      for (std::size_t j = i; j < els.size(); ++j)
        found.insert(oracles::naive_closure(G.degree(), {els[i], els[j]}));
    CHECK(found.size() == lat.size());
    for (const auto &elems : found)
      REQUIRE(lat.find(PermGroup::from_elements(G.degree(), elems))
                  .has_value());
  }
}

TEST_CASE("known subgroup counts") {
  CHECK(subgroup_lattice(parse_group("A4")).size() == 10);
  CHECK(subgroup_lattice(parse_group("S4")).size() == 30);
  CHECK(subgroup_lattice(parse_group("D12")).size() == 16);
  CHECK(subgroup_lattice(parse_group("S5")).size() == 156);
}

TEST_CASE("double cosets partition the group") {
  // S4: every pair of subgroup class representatives
  {
    auto G = parse_group("S4");
    auto lat = subgroup_lattice(G);
    for (const auto &ca : lat.classes())
      for (const auto &cb : lat.classes()) {
        const PermGroup &B = lat.subgroup(ca[0]);
        const PermGroup &T = lat.subgroup(cb[0]);
        auto dc = double_coset_reps(G, B, T);
        unsigned long long total = 0;
        std::set<Perm> seen;
        for (std::size_t r = 0; r < dc.representatives.size(); ++r) {
          std::set<Perm> coset;
          for (const Perm &b : B.elements())
            for (const Perm &t : T.elements())
              coset.insert(b * dc.representatives[r] * t);
          REQUIRE(coset.size() == dc.sizes[r]);
          REQUIRE(coset.count(dc.representatives[r]) == 1);
          total += dc.sizes[r];
          seen.insert(coset.begin(), coset.end());
        }
        REQUIRE(total == G.order());
        REQUIRE(seen.size() == G.order());
      }
  }
  // S5 (order 120): a spread of subgroup classes
  {
    auto G = parse_group("S5");
    auto lat = subgroup_lattice(G);
    std::vector<std::size_t> reps;
    for (const auto &cls : lat.classes())
      reps.push_back(cls[0]);
    std::size_t stride = std::max<std::size_t>(1, reps.size() / 6);
    for (std::size_t i = 0; i < reps.size(); i += stride)
      for (std::size_t j = 0; j < reps.size(); j += stride) {
        const PermGroup &B = lat.subgroup(reps[i]);
        const PermGroup &T = lat.subgroup(reps[j]);
        auto dc = double_coset_reps(G, B, T);
        unsigned long long total = 0;
        std::set<Perm> seen;
        for (std::size_t r = 0; r < dc.representatives.size(); ++r) {
          std::set<Perm> coset;
          for (const Perm &b : B.elements())
            for (const Perm &t : T.elements())
              coset.insert(b * dc.representatives[r] * t);
          REQUIRE(coset.size() == dc.sizes[r]);
          total += dc.sizes[r];
          seen.insert(coset.begin(), coset.end());
        }
        REQUIRE(total == G.order());
        REQUIRE(seen.size() == G.order());
      }
  }
}

TEST_CASE("evaluation reports are deterministic") {
  auto G = parse_group("S4");
  auto H = parse_group("V4");
  auto lat = subgroup_lattice(G);
  auto out = out_group(H);
  auto V = make_trivial_module(out, Field::prime(2));
  auto a = evaluate(G, H, V, lat, out, true);
  auto b = evaluate(G, H, V, lat, out, true);
  CHECK(a.dim == b.dim);
  CHECK(a.method == b.method);
  CHECK(a.lower_bound == b.lower_bound);
  REQUIRE(a.certificates.size() == b.certificates.size());
  for (std::size_t i = 0; i < a.certificates.size(); ++i) {
    CHECK(a.certificates[i].name == b.certificates[i].name);
    CHECK(a.certificates[i].witness == b.certificates[i].witness);
  }
}
