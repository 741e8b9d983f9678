#include "bisetfun/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "bisetfun/errors.hpp"

namespace bisetfun {

Perm::Perm(unsigned degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Perm::Perm(std::vector<unsigned> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (unsigned x : images_) {
    if (x >= images_.size() || seen[x])
      throw input_error("permutation image array is not a bijection");
    seen[x] = true;
  }
}

bool Perm::is_identity() const {
  for (unsigned i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

unsigned Perm::smallest_moved_point() const {
  for (unsigned i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return i;
  return degree();
}

unsigned Perm::order() const {
  // lcm of cycle lengths
  unsigned n = degree();
  std::vector<bool> seen(n, false);
  unsigned long long result = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (seen[i])
      continue;
    unsigned len = 0;
    for (unsigned j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, static_cast<unsigned long long>(len));
  }
  return static_cast<unsigned>(result);
}

Perm Perm::inverse() const {
  std::vector<unsigned> inv(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i)
    inv[images_[i]] = i;
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

Perm operator*(const Perm &p, const Perm &q) {
  if (p.degree() != q.degree())
    throw input_error("degree mismatch in permutation composition");
  std::vector<unsigned> im(p.degree());
  for (unsigned i = 0; i < p.degree(); ++i)
    im[i] = p.images_[q.images_[i]];
  Perm r;
  r.images_ = std::move(im);
  return r;
}

std::string Perm::to_cycle_string() const {
  unsigned n = degree();
  std::vector<bool> seen(n, false);
  std::ostringstream out;
  bool any = false;
  for (unsigned i = 0; i < n; ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    any = true;
    out << '(';
    bool first = true;
    for (unsigned j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first)
        out << ' ';
      out << (j + 1);
      first = false;
    }
    out << ')';
  }
  if (!any)
    return "()";
  return out.str();
}

Perm Perm::parse_cycles(const std::string &text, unsigned degree) {
  std::vector<unsigned> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  bool saw_cycle = false;
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw input_error("expected '(' in cycle notation: " + text);
    ++pos;
    std::vector<unsigned> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw input_error("expected point or ')' in cycle notation: " + text);
      unsigned long v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<unsigned long>(text[pos] - '0');
        ++pos;
      }
      if (v < 1 || v > degree)
        throw input_error("point out of range [1," + std::to_string(degree) +
                          "] in cycle notation: " + text);
      cycle.push_back(static_cast<unsigned>(v - 1));
      skip_ws();
    }
    if (pos >= text.size())
      throw input_error("unterminated cycle in: " + text);
    ++pos; // ')'
    saw_cycle = true;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      unsigned from = cycle[i];
      unsigned to = cycle[(i + 1) % cycle.size()];
      if (im[from] != from)
        throw input_error("point repeated across cycles in: " + text);
      im[from] = to;
    }
    skip_ws();
  }
  if (!saw_cycle)
    throw input_error("empty permutation string (write \"()\" for the identity)");
  return Perm(std::move(im));
}

Perm conjugate(const Perm &p, const Perm &g) { return g * p * g.inverse(); }

} // namespace bisetfun
