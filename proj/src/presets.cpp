#include "bisetfun/presets.hpp"

#include <algorithm>

#include "bisetfun/errors.hpp"

namespace bisetfun {

namespace {

unsigned parse_n(const std::string &spec, std::size_t from) {
  if (from >= spec.size())
    throw input_error("group spec '" + spec + "' is missing a number");
  unsigned long n = 0;
  for (std::size_t i = from; i < spec.size(); ++i) {
    if (spec[i] < '0' || spec[i] > '9')
      throw input_error("bad number in group spec '" + spec + "'");
    n = n * 10 + static_cast<unsigned long>(spec[i] - '0');
  }
  if (n == 0)
    throw input_error("group spec '" + spec + "' needs a positive number");
  return static_cast<unsigned>(n);
}

Perm cycle(unsigned degree, std::initializer_list<unsigned> pts) {
  std::vector<unsigned> im(degree);
  for (unsigned i = 0; i < degree; ++i)
    im[i] = i;
  auto it = pts.begin();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    im[*(it + static_cast<long>(i)) - 1] = *(it + static_cast<long>(i) + 1) - 1;
  if (pts.size() >= 2)
    im[*(it + static_cast<long>(pts.size()) - 1) - 1] = *it - 1;
  return Perm(std::move(im));
}

Perm full_cycle(unsigned n) {
  std::vector<unsigned> im(n);
  for (unsigned i = 0; i < n; ++i)
    im[i] = (i + 1) % n;
  return Perm(std::move(im));
}

PermGroup symmetric(unsigned n) {
  if (n <= 1)
    return PermGroup::trivial(std::max(n, 1u));
  if (n == 2)
    return PermGroup(2, {cycle(2, {1, 2})});
  return PermGroup(n, {full_cycle(n), cycle(n, {1, 2})});
}

PermGroup alternating(unsigned n) {
  if (n <= 2)
    return PermGroup::trivial(std::max(n, 1u));
  if (n == 3)
    return PermGroup(3, {cycle(3, {1, 2, 3})});
  // A_n = <(1 2 3), c> with c the n-cycle (n odd) or (2 3 ... n) (n even)
  std::vector<unsigned> im(n);
  if (n % 2 == 1) {
    for (unsigned i = 0; i < n; ++i)
      im[i] = (i + 1) % n;
  } else {
    im[0] = 0;
    for (unsigned i = 1; i < n; ++i)
      im[i] = i % (n - 1) + 1;
  }
  return PermGroup(n, {cycle(n, {1, 2, 3}), Perm(std::move(im))});
}

PermGroup cyclic(unsigned n) {
  if (n == 1)
    return PermGroup::trivial(1);
  return PermGroup(n, {full_cycle(n)});
}

PermGroup dihedral(unsigned order) {
  if (order % 2 != 0 || order < 6)
    throw input_error("dihedral preset D<2n> needs an even order of at least 6");
  unsigned n = order / 2;
  std::vector<unsigned> refl(n);
  for (unsigned i = 0; i < n; ++i)
    refl[i] = (n - i) % n; // fixes point 1, reverses the cycle
  return PermGroup(n, {full_cycle(n), Perm(std::move(refl))});
}

PermGroup quaternion() {
  // regular representation on 1,i,j,k,-1,-i,-j,-k: left multiplication
  // by i and by j
  return PermGroup(8, {Perm::parse_cycles("(1 2 5 6)(3 4 7 8)", 8),
                       Perm::parse_cycles("(1 3 5 7)(2 8 6 4)", 8)});
}

PermGroup sl25() {
  // action on the 24 nonzero vectors of F5^2, ordered lexicographically;
  // generators [[1,1],[0,1]] and [[0,-1],[1,0]]
  std::vector<std::pair<unsigned, unsigned>> vecs;
  for (unsigned x = 0; x < 5; ++x)
    for (unsigned y = 0; y < 5; ++y)
      if (x || y)
        vecs.emplace_back(x, y);
  auto index_of = [&](unsigned x, unsigned y) {
    auto it = std::lower_bound(vecs.begin(), vecs.end(), std::make_pair(x, y));
    return static_cast<unsigned>(it - vecs.begin());
  };
  std::vector<unsigned> a(24), b(24);
  for (unsigned i = 0; i < 24; ++i) {
    auto [x, y] = vecs[i];
    a[i] = index_of((x + y) % 5, y);
    b[i] = index_of((5 - y) % 5, x);
  }
  return PermGroup(24, {Perm(std::move(a)), Perm(std::move(b))});
}

PermGroup frobenius21() {
  // C7 : C3 on the residues mod 7: translation and multiplication by 2
  return PermGroup(7, {full_cycle(7), Perm::parse_cycles("(2 3 5)(4 7 6)", 7)});
}

PermGroup klein4() {
  return PermGroup(4, {Perm::parse_cycles("(1 2)(3 4)", 4),
                       Perm::parse_cycles("(1 3)(2 4)", 4)});
}

PermGroup explicit_perm(const std::string &spec) {
  // perm:<degree>:<cycles>[;<cycles>...]
  std::size_t c1 = spec.find(':', 5);
  if (c1 == std::string::npos)
    throw input_error("explicit group spec needs the form "
                      "perm:<degree>:<cycles>[;<cycles>...]");
  unsigned long degree = std::stoul(spec.substr(5, c1 - 5));
  if (degree == 0)
    throw input_error("explicit group spec needs a positive degree");
  std::vector<Perm> gens;
  std::string rest = spec.substr(c1 + 1);
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    std::size_t semi = rest.find(';', pos);
    std::string part = rest.substr(pos, semi == std::string::npos
                                            ? std::string::npos
                                            : semi - pos);
    if (!part.empty())
      gens.push_back(Perm::parse_cycles(part, static_cast<unsigned>(degree)));
    if (semi == std::string::npos)
      break;
    pos = semi + 1;
  }
  return PermGroup(static_cast<unsigned>(degree), std::move(gens));
}

} // namespace

PermGroup parse_group(const std::string &spec) {
  if (spec.empty())
    throw input_error("empty group spec");
  if (spec.rfind("perm:", 0) == 0)
    return explicit_perm(spec);
  if (spec == "Q8")
    return quaternion();
  if (spec == "SL(2,5)")
    return sl25();
  if (spec == "F21")
    return frobenius21();
  if (spec == "V4")
    return klein4();
  switch (spec[0]) {
  case 'S':
    return symmetric(parse_n(spec, 1));
  case 'A':
    return alternating(parse_n(spec, 1));
  case 'C':
    return cyclic(parse_n(spec, 1));
  case 'D':
    return dihedral(parse_n(spec, 1));
  default:
    throw input_error("unknown group spec '" + spec + "'");
  }
}

std::vector<std::string> preset_catalog_upto(unsigned long long max_order) {
  std::vector<std::string> names;
  for (unsigned n = 1; n <= max_order; ++n)
    names.push_back("C" + std::to_string(n));
  for (unsigned o = 6; o <= max_order; o += 2)
    names.push_back("D" + std::to_string(o));
  static const std::pair<const char *, unsigned long long> rest[] = {
      {"S2", 2},  {"S3", 6},  {"S4", 24}, {"A3", 3},       {"A4", 12},
      {"A5", 60}, {"V4", 4},  {"Q8", 8},  {"F21", 21},     {"S5", 120},
      {"A6", 360}, {"SL(2,5)", 120},
  };
  for (const auto &[name, order] : rest)
    if (order <= max_order)
      names.push_back(name);
  return names;
}

} // namespace bisetfun
