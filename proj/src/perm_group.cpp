#include "bisetfun/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "bisetfun/errors.hpp"

namespace bisetfun {

StabChain::StabChain(unsigned degree, const std::vector<Perm> &generators)
    : degree_(degree) {
  for (const Perm &g : generators) {
    if (g.degree() != degree)
      throw input_error("generator degree mismatch");
    if (g.is_identity())
      continue;
    if (levels_.empty())
      levels_.push_back(Level{g.smallest_moved_point(), {}, {}, {}});
    levels_[0].gens.push_back(g);
  }
  if (levels_.empty())
    return;

  // Fixpoint pass: close every level under its Schreier generators, pushing
  // residues down the chain (creating new levels as needed). Terminates
  // because each accepted residue strictly enlarges some level's group.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < levels_.size() && !changed; ++i) {
      rebuild_orbit(i);
      std::vector<Perm> sgens = gens_from(i);
      const std::vector<unsigned> orbit = levels_[i].orbit;
      for (std::size_t oi = 0; oi < orbit.size() && !changed; ++oi) {
        unsigned x = orbit[oi];
        Perm rx = levels_[i].transversal.at(x);
        for (const Perm &s : sgens) {
          Perm ry = levels_[i].transversal.at(s[x]);
          Perm schreier = ry.inverse() * s * rx;
          auto [res, j] = sift(std::move(schreier), i + 1);
          if (res.is_identity())
            continue;
          // push_back may reallocate levels_; restart the pass afterwards
          if (j == levels_.size())
            levels_.push_back(Level{res.smallest_moved_point(), {}, {}, {}});
          levels_[j].gens.push_back(std::move(res));
          rebuild_orbit(j);
          changed = true;
          break;
        }
      }
    }
  }
}

void StabChain::rebuild_orbit(std::size_t i) {
  Level &lvl = levels_[i];
  std::vector<Perm> sgens = gens_from(i);
  lvl.orbit.clear();
  lvl.transversal.clear();
  lvl.orbit.push_back(lvl.base);
  lvl.transversal.emplace(lvl.base, Perm(degree_));
  for (std::size_t q = 0; q < lvl.orbit.size(); ++q) {
    unsigned x = lvl.orbit[q];
    for (const Perm &s : sgens) {
      unsigned y = s[x];
      if (!lvl.transversal.count(y)) {
        lvl.orbit.push_back(y);
        lvl.transversal.emplace(y, s * lvl.transversal.at(x));
      }
    }
  }
}

std::vector<Perm> StabChain::gens_from(std::size_t i) const {
  std::vector<Perm> out;
  for (std::size_t j = i; j < levels_.size(); ++j)
    out.insert(out.end(), levels_[j].gens.begin(), levels_[j].gens.end());
  return out;
}

std::pair<Perm, std::size_t> StabChain::sift(Perm p, std::size_t start) const {
  for (std::size_t i = start; i < levels_.size(); ++i) {
    if (p.is_identity())
      return {std::move(p), levels_.size()};
    unsigned x = p[levels_[i].base];
    auto it = levels_[i].transversal.find(x);
    if (it == levels_[i].transversal.end())
      return {std::move(p), i};
    p = it->second.inverse() * p;
  }
  return {std::move(p), levels_.size()};
}

unsigned long long StabChain::order() const {
  unsigned long long n = 1;
  for (const Level &lvl : levels_)
    n *= lvl.orbit.size();
  return n;
}

bool StabChain::contains(const Perm &p) const {
  if (p.degree() != degree_)
    throw input_error("degree mismatch in membership test");
  auto [res, j] = sift(p, 0);
  return res.is_identity();
}

std::vector<Perm> StabChain::enumerate() const {
  std::vector<Perm> elems{Perm(degree_)};
  // product of transversals, deepest level first
  for (std::size_t i = levels_.size(); i-- > 0;) {
    std::vector<Perm> next;
    next.reserve(elems.size() * levels_[i].orbit.size());
    for (unsigned x : levels_[i].orbit) {
      const Perm &rep = levels_[i].transversal.at(x);
      for (const Perm &e : elems)
        next.push_back(rep * e);
    }
    elems = std::move(next);
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

PermGroup::PermGroup(unsigned degree, std::vector<Perm> generators,
                     unsigned long long element_cache_limit)
    : degree_(degree), gens_(std::move(generators)) {
  for (const Perm &g : gens_)
    if (g.degree() != degree_)
      throw input_error("generator degree mismatch");
  chain_ = StabChain(degree_, gens_);
  order_ = chain_.order();
  if (order_ <= element_cache_limit)
    elements_ = chain_.enumerate();
}

PermGroup PermGroup::trivial(unsigned degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::from_elements(unsigned degree, std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  PermGroup g;
  g.degree_ = degree;
  // greedy generating set: add elements that enlarge the generated group
  StabChain chain(degree, {});
  for (const Perm &e : elements) {
    if (chain.contains(e))
      continue;
    g.gens_.push_back(e);
    chain = StabChain(degree, g.gens_);
    if (chain.order() == elements.size())
      break;
  }
  if (chain.order() != elements.size())
    throw internal_error("from_elements: element list is not a closed group");
  g.chain_ = std::move(chain);
  g.order_ = elements.size();
  g.elements_ = std::move(elements);
  return g;
}

bool PermGroup::contains(const Perm &p) const {
  if (p.degree() != degree_)
    throw input_error("degree mismatch in membership test");
  if (order_ == 1)
    return p.is_identity();
  return chain_.contains(p);
}

bool PermGroup::contains_group(const PermGroup &other) const {
  if (other.degree_ != degree_)
    throw input_error("degree mismatch in subgroup test");
  if (other.order_ > order_ || order_ % other.order_ != 0)
    return false;
  for (const Perm &g : other.gens_)
    if (!contains(g))
      return false;
  return true;
}

bool PermGroup::is_normal_in(const PermGroup &ambient) const {
  if (!ambient.contains_group(*this))
    return false;
  for (const Perm &g : ambient.gens_)
    for (const Perm &t : gens_)
      if (!contains(conjugate(t, g)))
        return false;
  return true;
}

const std::vector<Perm> &PermGroup::elements() const {
  if (elements_.empty() && order_ != 0)
    throw limit_error("group of order " + std::to_string(order_) +
                      " exceeds the element cache limit");
  return elements_;
}

std::size_t PermGroup::element_index(const Perm &p) const {
  const auto &el = elements();
  auto it = std::lower_bound(el.begin(), el.end(), p);
  if (it == el.end() || *it != p)
    throw internal_error("element_index: permutation not in group");
  return static_cast<std::size_t>(it - el.begin());
}

std::vector<unsigned> PermGroup::key() const {
  std::vector<unsigned> k;
  k.reserve(elements().size() * degree_);
  for (const Perm &p : elements())
    k.insert(k.end(), p.images().begin(), p.images().end());
  return k;
}

bool operator==(const PermGroup &a, const PermGroup &b) {
  if (a.degree_ != b.degree_ || a.order_ != b.order_)
    return false;
  for (const Perm &g : a.gens_)
    if (!b.contains(g))
      return false;
  return true;
}

std::vector<Perm> closure(unsigned degree, const std::vector<Perm> &seed) {
  std::set<Perm> elems;
  elems.insert(Perm(degree));
  std::deque<Perm> work;
  for (const Perm &g : seed) {
    if (g.degree() != degree)
      throw input_error("degree mismatch in closure");
    if (elems.insert(g).second)
      work.push_back(g);
  }
  std::vector<Perm> gens(seed);
  while (!work.empty()) {
    Perm p = std::move(work.front());
    work.pop_front();
    for (const Perm &g : gens) {
      Perm q = p * g;
      if (elems.insert(q).second)
        work.push_back(std::move(q));
    }
  }
  return {elems.begin(), elems.end()};
}

} // namespace bisetfun
