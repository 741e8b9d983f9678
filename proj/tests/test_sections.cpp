#include <algorithm>
#include <set>

#include "doctest.h"

#include "bisetfun/cosets.hpp"
#include "bisetfun/errors.hpp"
#include "bisetfun/sections.hpp"

using namespace bisetfun;

namespace {

Perm p(const std::string &cycles, unsigned degree) {
  return Perm::parse_cycles(cycles, degree);
}

PermGroup s3() { return PermGroup(3, {p("(1 2 3)", 3), p("(1 2)", 3)}); }
PermGroup c2() { return PermGroup(2, {p("(1 2)", 2)}); }
PermGroup c3() { return PermGroup(3, {p("(1 2 3)", 3)}); }
PermGroup c4() { return PermGroup(4, {p("(1 2 3 4)", 4)}); }
PermGroup d8() { return PermGroup(4, {p("(1 2 3 4)", 4), p("(2 4)", 4)}); }
PermGroup a4() { return PermGroup(4, {p("(1 2 3)", 4), p("(1 2)(3 4)", 4)}); }
PermGroup s4() { return PermGroup(4, {p("(1 2 3 4)", 4), p("(1 2)", 4)}); }
PermGroup s5() { return PermGroup(5, {p("(1 2 3 4 5)", 5), p("(1 2)", 5)}); }
PermGroup a5() { return PermGroup(5, {p("(1 2 3)", 5), p("(3 4 5)", 5)}); }

// every section of G, by direct lattice scan (no quotient-type filter)
std::vector<Section> all_sections(const SubgroupLattice &lat) {
  std::vector<Section> out;
  for (std::size_t ti = 0; ti < lat.size(); ++ti)
    for (std::size_t si = 0; si < lat.size(); ++si)
      if (lat.contains_in(si, ti) &&
          lat.subgroup(si).is_normal_in(lat.subgroup(ti)))
        out.push_back(make_section(lat.subgroup(ti), lat.subgroup(si)));
  return out;
}

// raw count of sections with T/S isomorphic to H, one iso test per pair
std::size_t raw_section_count(const SubgroupLattice &lat, const PermGroup &H) {
  std::size_t n = 0;
  for (const Section &sec : all_sections(lat))
    if (sec.T.order() == H.order() * sec.S.order() &&
        find_isomorphism(H, sec.quot.perm_rep()).has_value())
      ++n;
  return n;
}

} // namespace

TEST_CASE("section orbits of A5 in S5") {
  auto G = s5();
  auto lat = subgroup_lattice(G);
  auto out = out_group(a5());
  auto orbits = enumerate_section_orbits(G, a5(), lat, out);
  REQUIRE(orbits.size() == 1);
  CHECK(orbits[0].rep.T.order() == 60);
  CHECK(orbits[0].rep.S.order() == 1);
  CHECK(orbits[0].orbit_size == 1);
  CHECK(orbits[0].normalizer.order() == 120);
  CHECK(orbits[0].minimal);
}

TEST_CASE("section orbits of C2 in C4") {
  auto G = c4();
  auto lat = subgroup_lattice(G);
  auto out = out_group(c2());
  auto orbits = enumerate_section_orbits(G, c2(), lat, out);
  REQUIRE(orbits.size() == 2);
  std::set<std::pair<unsigned long long, unsigned long long>> pairs;
  for (const auto &o : orbits)
    pairs.emplace(o.rep.T.order(), o.rep.S.order());
  CHECK(pairs ==
        std::set<std::pair<unsigned long long, unsigned long long>>{{2, 1},
                                                                    {4, 2}});
  for (const auto &o : orbits)
    CHECK(o.minimal); // Phi(C4) = C2 and S = 1 cases both minimal
}

TEST_CASE("no C3 sections in C4") {
  auto G = c4();
  auto lat = subgroup_lattice(G);
  auto out = out_group(c3());
  CHECK(enumerate_section_orbits(G, c3(), lat, out).empty());
}

TEST_CASE("preceq") {
  auto latC4 = subgroup_lattice(c4());
  auto full = make_section(latC4.subgroup(latC4.ambient_index()),
                           latC4.subgroup(1)); // (C4, C2)
  auto low = make_section(latC4.subgroup(1), latC4.subgroup(0)); // (C2, 1)
  CHECK(preceq(full, full));
  CHECK(preceq(low, low));
  CHECK_FALSE(preceq(low, full)); // C2 * C2 = C2, not C4

  auto G = s3();
  auto latS3 = subgroup_lattice(G);
  auto t = PermGroup(3, {p("(1 2)", 3)});
  auto a3 = PermGroup(3, {p("(1 2 3)", 3)});
  auto sec_t = make_section(t, PermGroup::trivial(3));
  auto sec_g = make_section(G, a3);
  CHECK(preceq(sec_t, sec_g)); // <(1 2)> . A3 = S3, <(1 2)> cap A3 = 1
}

TEST_CASE("linked: self and C4 counterexample") {
  auto G = s3();
  auto a3 = PermGroup(3, {p("(1 2 3)", 3)});
  auto sec = make_section(G, a3);
  auto self = linked(sec, sec);
  REQUIRE(self.has_value());
  for (const Perm &x : sec.quot.perm_rep().elements())
    CHECK(self->induced_iso.apply(x) == x);

  auto latC4 = subgroup_lattice(c4());
  auto full = make_section(latC4.subgroup(latC4.ambient_index()),
                           latC4.subgroup(1));
  auto low = make_section(latC4.subgroup(1), latC4.subgroup(0));
  CHECK_FALSE(linked(full, low).has_value()); // S(B cap T) = C2 != C4
  CHECK_FALSE(linked(low, full).has_value());
}

TEST_CASE("linking symmetry and inverse isos on small groups") {
  for (auto G : {s3(), c4(), d8(), a4()}) {
    auto lat = subgroup_lattice(G);
    auto secs = all_sections(lat);
    for (const Section &a : secs) {
      for (const Section &b : secs) {
        auto ab = linked(a, b);
        auto ba = linked(b, a);
        REQUIRE(ab.has_value() == ba.has_value());
        if (!ab)
          continue;
        // mutually inverse: ab goes T/S -> B/A, ba goes B/A -> T/S
        for (const Perm &x : b.quot.perm_rep().elements())
          CHECK(ba->induced_iso.apply(ab->induced_iso.apply(x)) == x);
      }
    }
  }
}

TEST_CASE("is_minimal") {
  auto latS3 = subgroup_lattice(s3());
  auto latC4 = subgroup_lattice(c4());
  // (T, 1) is always minimal
  for (std::size_t ti = 0; ti < latS3.size(); ++ti)
    CHECK(is_minimal(make_section(latS3.subgroup(ti), PermGroup::trivial(3)),
                     latS3));
  CHECK(is_minimal(make_section(latC4.subgroup(latC4.ambient_index()),
                                latC4.subgroup(1)),
                   latC4)); // Phi(C4) = C2
  auto a3 = PermGroup(3, {p("(1 2 3)", 3)});
  CHECK_FALSE(is_minimal(make_section(s3(), a3), latS3)); // Phi(S3) = 1
}

TEST_CASE("section_normalizer") {
  auto G = s3();
  CHECK(section_normalizer(G, make_section(G, PermGroup::trivial(3))).order() ==
        6);
  auto t = PermGroup(3, {p("(1 2)", 3)});
  CHECK(section_normalizer(G, make_section(t, PermGroup::trivial(3))).order() ==
        2);
  auto G5 = s5();
  CHECK(section_normalizer(G5, make_section(a5(), PermGroup::trivial(5)))
            .order() == 120);
}

TEST_CASE("gamma_map on (A5,1) in S5 covers Out(A5)") {
  auto G = s5();
  auto lat = subgroup_lattice(G);
  auto out = out_group(a5());
  auto orbits = enumerate_section_orbits(G, a5(), lat, out);
  REQUIRE(orbits.size() == 1);
  const auto &gamma = orbits[0].gamma;
  REQUIRE(gamma.size() == 2);
  CHECK(gamma[0].second == 0);
  CHECK(gamma[1].second == 1); // the transposition coset hits the outer class
}

TEST_CASE("gamma_map trivial on abelian ambient") {
  auto G = c4();
  auto lat = subgroup_lattice(G);
  auto out = out_group(c2());
  auto orbits = enumerate_section_orbits(G, c2(), lat, out);
  for (const auto &o : orbits)
    for (const auto &[g, cls] : o.gamma)
      CHECK(cls == 0);
}

TEST_CASE("gamma_map respects Out multiplication") {
  auto G = s5();
  auto lat = subgroup_lattice(G);
  auto out = out_group(a5());
  auto orbits = enumerate_section_orbits(G, a5(), lat, out);
  const auto &o = orbits[0];
  for (const auto &[g1, c1] : o.gamma) {
    for (const auto &[g2, c2] : o.gamma) {
      auto prod = gamma_map(o.rep, o.sigma, out, {g1 * g2});
      CHECK(prod[0].second == out.multiply(c1, c2));
    }
  }
}

TEST_CASE("gamma image is independent of sigma up to Out-conjugacy") {
  auto G = s4();
  auto lat = subgroup_lattice(G);
  auto H = c2();
  auto out = out_group(H);
  auto orbits = enumerate_section_orbits(G, H, lat, out);
  for (const auto &o : orbits) {
    std::vector<GroupIso> sigmas;
    for_each_isomorphism(H, o.rep.quot.perm_rep(), [&](const GroupIso &iso) {
      sigmas.push_back(iso);
      return sigmas.size() < 2;
    });
    if (sigmas.size() < 2)
      continue;
    auto image = [&](const GroupIso &s) {
      std::set<unsigned> cls;
      for (const auto &[g, c] : gamma_map(o.rep, s, out, o.nbar_reps))
        cls.insert(c);
      return cls;
    };
    auto im1 = image(sigmas[0]), im2 = image(sigmas[1]);
    bool conjugate = false;
    for (unsigned c = 0; c < out.out_order() && !conjugate; ++c) {
      std::set<unsigned> moved;
      for (unsigned x : im1)
        moved.insert(out.multiply(out.multiply(c, x), out.inverse(c)));
      conjugate = moved == im2;
    }
    CHECK(conjugate);
  }
}

TEST_CASE("orbit partition covers the raw section count") {
  for (auto G : {s4(), d8(), a4()}) {
    auto lat = subgroup_lattice(G);
    for (auto H : {c2(), c3(), s3()}) {
      auto out = out_group(H);
      auto orbits = enumerate_section_orbits(G, H, lat, out);
      unsigned long long total = 0;
      for (const auto &o : orbits)
        total += o.orbit_size;
      CHECK(total == raw_section_count(lat, H));
    }
  }
}

TEST_CASE("is_expansive") {
  auto G = s3();
  auto lat = subgroup_lattice(G);
  // normal subgroups are expansive
  CHECK(is_expansive(G, PermGroup(3, {p("(1 2 3)", 3)}), lat));
  CHECK(is_expansive(G, G, lat));
  // the transposition subgroup of S3 is not
  CHECK_FALSE(is_expansive(G, PermGroup(3, {p("(1 2)", 3)}), lat));
  // the trivial subgroup is normal, hence (vacuously) expansive
  auto A = a5();
  auto latA = subgroup_lattice(A);
  CHECK(is_expansive(A, PermGroup::trivial(5), latA));
  // a non-normal example inside A5: a point stabilizer's Sylow 2 is
  // self-normalizing in its normalizer chain; check a concrete failure
  CHECK_FALSE(is_expansive(A, PermGroup(5, {p("(1 2 3)", 5)}), latA));
}

TEST_CASE("minimal orbits flag matches the Frattini test") {
  auto G = s4();
  auto lat = subgroup_lattice(G);
  auto out = out_group(c2());
  for (const auto &o : enumerate_section_orbits(G, c2(), lat, out)) {
    std::size_t t = lat.index_of(o.rep.T);
    CHECK(o.minimal == lat.contains_in(lat.index_of(o.rep.S), frattini(lat, t)));
  }
}
