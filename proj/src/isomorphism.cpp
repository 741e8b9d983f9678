#include "bisetfun/isomorphism.hpp"

#include <algorithm>
#include <map>

#include "bisetfun/errors.hpp"

namespace bisetfun {

GroupIso::GroupIso(const PermGroup &from, const PermGroup &to,
                   std::vector<Perm> from_elems, std::vector<Perm> images)
    : from_(from), to_(to), from_elems_(std::move(from_elems)),
      images_(std::move(images)) {
  by_image_.resize(from_elems_.size());
  for (std::size_t i = 0; i < by_image_.size(); ++i)
    by_image_[i] = i;
  std::sort(by_image_.begin(), by_image_.end(),
            [this](std::size_t a, std::size_t b) { return images_[a] < images_[b]; });
  for (const Perm &g : from_.generators())
    gen_images_.push_back(apply(g));
}

Perm GroupIso::apply(const Perm &x) const {
  auto it = std::lower_bound(from_elems_.begin(), from_elems_.end(), x);
  if (it == from_elems_.end() || *it != x)
    throw input_error("isomorphism: element not in the source group");
  return images_[static_cast<std::size_t>(it - from_elems_.begin())];
}

Perm GroupIso::apply_inverse(const Perm &y) const {
  auto it = std::lower_bound(by_image_.begin(), by_image_.end(), y,
                             [this](std::size_t i, const Perm &v) {
                               return images_[i] < v;
                             });
  if (it == by_image_.end() || images_[*it] != y)
    throw input_error("isomorphism: element not in the target group");
  return from_elems_[*it];
}

namespace {

std::map<unsigned, std::size_t> order_census(const std::vector<Perm> &elems) {
  std::map<unsigned, std::size_t> census;
  for (const Perm &p : elems)
    ++census[p.order()];
  return census;
}

bool is_abelian(const PermGroup &G) {
  const auto &gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i])
        return false;
  return true;
}

/// Greedy generating sequence: each step adds the element producing the
/// largest generated subgroup, tie broken by canonical element order.
std::vector<Perm> greedy_generators(const PermGroup &A) {
  std::vector<Perm> gens;
  unsigned long long cur_order = 1;
  while (cur_order < A.order()) {
    if (gens.size() == 3)
      throw limit_error("group is not 3-generated; automorphism search "
                        "supports at most 3 greedy generators");
    unsigned long long best_order = cur_order;
    const Perm *best = nullptr;
    for (const Perm &x : A.elements()) {
      std::vector<Perm> trial = gens;
      trial.push_back(x);
      unsigned long long o = StabChain(A.degree(), trial).order();
      if (o > best_order) {
        best_order = o;
        best = &x;
      }
    }
    gens.push_back(*best);
    cur_order = best_order;
  }
  return gens;
}

struct Search {
  const PermGroup &A, &B;
  std::vector<Perm> a_gens;
  std::vector<unsigned long long> a_partial_orders; // |<g_0..g_j>|
  std::vector<std::vector<Perm>> candidates;        // same-order elements of B
  const std::function<bool(const GroupIso &)> &fn;
  std::vector<Perm> images;
  bool stopped = false;

  // Full extension check for a complete candidate tuple.
  void try_tuple() {
    const auto &a_elems = A.elements();
    const std::size_t n = a_elems.size();
    std::vector<Perm> img(n);
    std::vector<bool> known(n, false);
    std::size_t id_idx = A.element_index(Perm(A.degree()));
    img[id_idx] = Perm(B.degree());
    known[id_idx] = true;
    std::vector<std::size_t> queue{id_idx};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Perm &a = a_elems[queue[q]];
      for (std::size_t k = 0; k < a_gens.size(); ++k) {
        std::size_t j = A.element_index(a * a_gens[k]);
        if (!known[j]) {
          img[j] = img[queue[q]] * images[k];
          known[j] = true;
          queue.push_back(j);
        }
      }
    }
    // verify multiplicativity on all (element, generator) edges
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < a_gens.size(); ++k)
        if (img[A.element_index(a_elems[i] * a_gens[k])] != img[i] * images[k])
          return;
    // bijectivity
    std::vector<Perm> image_sorted = img;
    std::sort(image_sorted.begin(), image_sorted.end());
    if (std::adjacent_find(image_sorted.begin(), image_sorted.end()) !=
        image_sorted.end())
      return;
    GroupIso iso(A, B, a_elems, std::move(img));
    if (!fn(iso))
      stopped = true;
  }

  void extend(std::size_t k) {
    if (stopped)
      return;
    if (k == a_gens.size()) {
      try_tuple();
      return;
    }
    for (const Perm &h : candidates[k]) {
      images[k] = h;
      // prune: generated-subgroup orders must match along the sequence
      std::vector<Perm> partial(images.begin(), images.begin() + k + 1);
      if (StabChain(B.degree(), partial).order() != a_partial_orders[k])
        continue;
      extend(k + 1);
      if (stopped)
        return;
    }
  }
};

} // namespace

void for_each_isomorphism(const PermGroup &A, const PermGroup &B,
                          const std::function<bool(const GroupIso &)> &fn,
                          unsigned long long limit) {
  if (A.order() > limit || B.order() > limit)
    throw limit_error("group of order " +
                      std::to_string(std::max(A.order(), B.order())) +
                      " exceeds the isomorphism search limit " + std::to_string(limit));
  if (A.order() != B.order())
    return;
  if (A.order() == 1) {
    fn(GroupIso(A, B, {Perm(A.degree())}, {Perm(B.degree())}));
    return;
  }
  if (is_abelian(A) != is_abelian(B))
    return;
  if (order_census(A.elements()) != order_census(B.elements()))
    return;

  std::vector<Perm> a_gens = greedy_generators(A);
  std::vector<unsigned long long> partial_orders;
  for (std::size_t k = 0; k < a_gens.size(); ++k)
    partial_orders.push_back(
        StabChain(A.degree(), {a_gens.begin(), a_gens.begin() + k + 1}).order());

  std::vector<std::vector<Perm>> candidates(a_gens.size());
  for (std::size_t k = 0; k < a_gens.size(); ++k) {
    unsigned want = a_gens[k].order();
    for (const Perm &h : B.elements())
      if (h.order() == want)
        candidates[k].push_back(h);
  }

  Search s{A, B, std::move(a_gens), std::move(partial_orders),
           std::move(candidates), fn, {}, false};
  s.images.resize(s.a_gens.size());
  s.extend(0);
}

std::optional<GroupIso> find_isomorphism(const PermGroup &A, const PermGroup &B,
                                         unsigned long long limit) {
  std::optional<GroupIso> result;
  for_each_isomorphism(
      A, B,
      [&](const GroupIso &iso) {
        result = iso;
        return false;
      },
      limit);
  return result;
}

} // namespace bisetfun
