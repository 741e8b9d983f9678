// Test-only brute-force oracles, kept independent of the library's
// implementation paths.
#ifndef BISETFUN_TESTS_ORACLES_HPP
#define BISETFUN_TESTS_ORACLES_HPP

#include <set>
#include <vector>

#include "bisetfun/perm.hpp"

namespace oracles {

// Closure by repeated multiplication over a std::set.
inline std::vector<bisetfun::Perm> naive_closure(unsigned degree,
                                                 const std::vector<bisetfun::Perm> &seed) {
  std::set<bisetfun::Perm> elems;
  std::vector<bisetfun::Perm> work;
  elems.insert(bisetfun::Perm(degree));
  for (const auto &g : seed)
    if (elems.insert(g).second)
      work.push_back(g);
  while (!work.empty()) {
    bisetfun::Perm p = std::move(work.back());
    work.pop_back();
    std::vector<bisetfun::Perm> cur(elems.begin(), elems.end());
    for (const auto &a : cur) {
      for (auto q : {a * p, p * a})
        if (elems.insert(q).second)
          work.push_back(std::move(q));
    }
  }
  return {elems.begin(), elems.end()};
}

// All subgroups obtainable as closures of pairs and triples of elements
// (plus cyclic ones). One-sided completeness oracle for the lattice.
inline std::set<std::vector<bisetfun::Perm>>
pair_triple_subgroups(unsigned degree, const std::vector<bisetfun::Perm> &elements) {
  std::set<std::vector<bisetfun::Perm>> found;
  found.insert(naive_closure(degree, {}));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    found.insert(naive_closure(degree, {elements[i]}));
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      found.insert(naive_closure(degree, {elements[i], elements[j]}));
      for (std::size_t k = j + 1; k < elements.size(); ++k)
        found.insert(naive_closure(degree, {elements[i], elements[j], elements[k]}));
    }
  }
  return found;
}

} // namespace oracles

#endif
